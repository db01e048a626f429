"""Circuits of value-controlled single-qutrit gates on a statevector.

Controlled gates are applied by amplitude-index filtering: the 3x3 block
acts only on the slice of the state tensor where every control qutrit
equals its required value.  The full 3^q x 3^q operator is never built.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import ParseError, ShapeError
from .gates import GateSpec
from .ternary import Statevector, index_from_trits, statevector_zero, trits_from_index


@dataclass(frozen=True)
class ControlSpec:
    """Require register position `qutrit` to equal `value` (0, 1 or 2)."""

    qutrit: int
    value: int

    def __post_init__(self):
        if self.qutrit < 0:
            raise ValueError(f"control qutrit must be >= 0, got {self.qutrit}")
        if self.value not in (0, 1, 2):
            raise ValueError(f"control value must be 0, 1 or 2, got {self.value}")


@dataclass(frozen=True)
class CircuitOp:
    gate: GateSpec
    target: int
    controls: tuple[ControlSpec, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "controls", tuple(self.controls))
        if self.target < 0:
            raise ValueError(f"target must be >= 0, got {self.target}")
        positions = [c.qutrit for c in self.controls]
        if self.target in positions:
            raise ValueError(f"target {self.target} also appears as a control")
        if len(set(positions)) != len(positions):
            raise ValueError(f"duplicate control qutrits in {positions}")


@dataclass(frozen=True)
class Circuit:
    num_qutrits: int
    ops: tuple[CircuitOp, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))
        if self.num_qutrits < 1:
            raise ValueError("circuit needs at least one qutrit")
        for op in self.ops:
            _check_op_bounds(op, self.num_qutrits)


@dataclass
class ShotHistogram:
    """Counts of measured basis states, keyed by trit string (MSB first)."""

    num_qutrits: int
    counts: dict[str, int]
    shots: int

    def __post_init__(self):
        for state, count in self.counts.items():
            if len(state) != self.num_qutrits:
                raise ShapeError(
                    f"state {state!r} has length {len(state)}, "
                    f"expected {self.num_qutrits}"
                )
            index_from_trits(state)
            if count < 0:
                raise ValueError(f"negative count for state {state!r}")
        if sum(self.counts.values()) != self.shots:
            raise ValueError("histogram counts do not sum to shots")

    def to_probabilities(self) -> np.ndarray:
        """Empirical probability per basis index (count / shots)."""
        probs = np.zeros(3**self.num_qutrits)
        for state, count in self.counts.items():
            probs[index_from_trits(state)] = count / self.shots
        return probs


def _check_op_bounds(op: CircuitOp, num_qutrits: int):
    if op.target >= num_qutrits:
        raise ValueError(f"target {op.target} out of range for {num_qutrits} qutrits")
    for c in op.controls:
        if c.qutrit >= num_qutrits:
            raise ValueError(
                f"control qutrit {c.qutrit} out of range for {num_qutrits} qutrits"
            )


def apply_op(state: Statevector, op: CircuitOp) -> Statevector:
    """Apply one (possibly controlled) gate, returning a new statevector."""
    q = state.num_qutrits
    _check_op_bounds(op, q)
    gate = op.gate.matrix()
    tensor = state.amplitudes.reshape((3,) * q)
    out = tensor.copy()
    index = [slice(None)] * q
    for c in op.controls:
        index[c.qutrit] = c.value
    # After fixing the control axes, the target axis shifts left by the
    # number of controls that precede it.
    axis = op.target - sum(1 for c in op.controls if c.qutrit < op.target)
    block = np.moveaxis(tensor[tuple(index)], axis, 0)
    rotated = np.tensordot(gate, block, axes=(1, 0))
    out[tuple(index)] = np.moveaxis(rotated, 0, axis)
    return Statevector(q, out.reshape(-1))


def run(circuit: Circuit) -> Statevector:
    """Execute all ops on the all-|0> state."""
    state = statevector_zero(circuit.num_qutrits)
    for op in circuit.ops:
        state = apply_op(state, op)
    return state


def probabilities(state: Statevector) -> np.ndarray:
    """|amplitude|^2 per basis index, ascending index order."""
    return np.abs(state.amplitudes) ** 2


def sample(state: Statevector, shots: int, seed: int) -> ShotHistogram:
    """Multinomial draw from the state's outcome distribution.

    Identical (state, shots, seed) triples give identical histograms.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    probs = probabilities(state)
    probs = probs / probs.sum()
    rng = np.random.default_rng(seed)
    drawn = rng.multinomial(shots, probs)
    q = state.num_qutrits
    counts = {
        trits_from_index(i, q): int(c) for i, c in enumerate(drawn) if c > 0
    }
    return ShotHistogram(q, counts, shots)


# --- circuit JSON ---------------------------------------------------------

def circuit_to_json(circuit: Circuit) -> str:
    doc = {
        "num_qutrits": circuit.num_qutrits,
        "ops": [
            {
                "gate": op.gate.kind,
                "subspace": list(op.gate.subspace) if op.gate.subspace else None,
                "params": list(op.gate.params),
                "target": op.target,
                "controls": [{"q": c.qutrit, "v": c.value} for c in op.controls],
            }
            for op in circuit.ops
        ],
    }
    return json.dumps(doc, indent=1)


def circuit_from_json(text: str) -> Circuit:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid circuit JSON: {exc}") from exc
    try:
        ops = []
        for entry in doc["ops"]:
            gate = GateSpec(
                entry["gate"],
                tuple(entry["subspace"]) if entry["subspace"] is not None else None,
                tuple(entry["params"]),
            )
            controls = tuple(
                ControlSpec(c["q"], c["v"]) for c in entry["controls"]
            )
            ops.append(CircuitOp(gate, entry["target"], controls))
        return Circuit(doc["num_qutrits"], tuple(ops))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"invalid circuit JSON structure: {exc}") from exc


# --- histogram / probability CSV ------------------------------------------

def histogram_to_csv(hist: ShotHistogram) -> str:
    lines = ["state,count"]
    lines += [f"{state},{hist.counts[state]}" for state in sorted(hist.counts)]
    return "\n".join(lines) + "\n"


def histogram_from_csv(text: str) -> ShotHistogram:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != "state,count":
        raise ParseError("expected 'state,count' header")
    counts: dict[str, int] = {}
    length = None
    for ln in lines[1:]:
        try:
            state, raw = ln.split(",")
            count = int(raw)
        except ValueError as exc:
            raise ParseError(f"bad histogram row {ln!r}") from exc
        if length is None:
            length = len(state)
        counts[state] = counts.get(state, 0) + count
    if length is None:
        raise ParseError("histogram has no rows")
    return ShotHistogram(length, counts, sum(counts.values()))


def probabilities_to_csv(num_qutrits: int, probs: np.ndarray) -> str:
    if len(probs) != 3**num_qutrits:
        raise ShapeError(f"expected {3**num_qutrits} probabilities, got {len(probs)}")
    lines = ["state,probability"]
    lines += [
        f"{trits_from_index(i, num_qutrits)},{p:.17g}" for i, p in enumerate(probs)
    ]
    return "\n".join(lines) + "\n"


def probabilities_from_csv(text: str) -> tuple[int, np.ndarray]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != "state,probability":
        raise ParseError("expected 'state,probability' header")
    rows = lines[1:]
    if not rows:
        raise ParseError("probability table has no rows")
    length = len(rows[0].split(",")[0])
    if len(rows) != 3**length:
        raise ParseError(
            f"probability table must list all 3^{length} states, got {len(rows)} rows"
        )
    probs = np.zeros(3**length)
    for ln in rows:
        try:
            state, raw = ln.split(",")
            probs[index_from_trits(state)] = float(raw)
        except ValueError as exc:
            raise ParseError(f"bad probability row {ln!r}") from exc
    return length, probs


# --- text diagrams ---------------------------------------------------------

def diagram_columns(circuit: Circuit) -> list[list[str]]:
    """Cell grid of the diagram: one header column plus one column per op."""
    q = circuit.num_qutrits
    cols = [[f"q{j}:" for j in range(q)]]
    for op in circuit.ops:
        cells = [""] * q
        cells[op.target] = f"[{op.gate.label()}]"
        for c in op.controls:
            cells[c.qutrit] = f"({c.value})"
        cols.append(cells)
    return cols


def diagram(circuit: Circuit) -> str:
    """Render wires left to right, one text row per qutrit.

    Gate boxes sit on the target wire, control values print as circled
    digits `(v)` on the control wires.
    """
    cols = diagram_columns(circuit)
    widths = [max(len(cell) for cell in col) for col in cols]
    rows = []
    for j in range(circuit.num_qutrits):
        parts = [cols[0][j].ljust(widths[0])]
        for col, width in zip(cols[1:], widths[1:]):
            parts.append("--" + col[j].center(width, "-"))
        rows.append("".join(parts) + "--")
    return "\n".join(rows) + "\n"
