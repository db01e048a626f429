"""Single-qutrit gate matrices.

Every gate is a 3x3 unitary.  Subspace gates act as a 2x2 qubit gate on an
ordered basis pair (j, k) with j < k and leave the third level alone.  The
shift gates [+1] and [+2] cycle the whole basis, and the ternary Hadamard
is the 3-point Fourier matrix built from omega = exp(2*pi*i/3).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

SUBSPACE_PAIRS = ((0, 1), (0, 2), (1, 2))

OMEGA = cmath.exp(2j * math.pi / 3)


def _check_pair(j: int, k: int):
    if (j, k) not in SUBSPACE_PAIRS:
        raise ValueError(f"subspace pair must be one of {SUBSPACE_PAIRS}, got ({j}, {k})")


def x_gate(j: int, k: int) -> np.ndarray:
    """Permutation swapping basis states j and k, identity on the third."""
    _check_pair(j, k)
    m = np.eye(3, dtype=np.complex128)
    m[[j, k]] = m[[k, j]]
    return m


def shift_gate(amount: int) -> np.ndarray:
    """Cyclic shift |x> -> |(x + amount) mod 3> for amount 1 or 2."""
    if amount not in (1, 2):
        raise ValueError(f"shift amount must be 1 or 2, got {amount}")
    m = np.zeros((3, 3), dtype=np.complex128)
    for x in range(3):
        m[(x + amount) % 3, x] = 1.0
    return m


def hadamard3() -> np.ndarray:
    """Ternary Hadamard: maps |0> to the unbiased real superposition."""
    w = OMEGA
    return np.array(
        [[1, 1, 1], [1, w, w**2], [1, w**2, w**4]], dtype=np.complex128
    ) / math.sqrt(3)


def rotation(axis: str, j: int, k: int, theta: float) -> np.ndarray:
    """exp(-i*theta/2 * sigma_axis) embedded on the (j, k) subspace.

    The sigma operators are the Pauli matrices restricted to the pair:
    sigma_z = |j><j| - |k><k|, sigma_x = |j><k| + |k><j|,
    sigma_y = -i|j><k| + i|k><j|.  Closed forms are used for exactness.
    """
    _check_pair(j, k)
    c = math.cos(theta / 2)
    s = math.sin(theta / 2)
    m = np.eye(3, dtype=np.complex128)
    if axis == "z":
        m[j, j] = cmath.exp(-1j * theta / 2)
        m[k, k] = cmath.exp(1j * theta / 2)
    elif axis == "x":
        m[j, j] = m[k, k] = c
        m[j, k] = m[k, j] = -1j * s
    elif axis == "y":
        m[j, j] = m[k, k] = c
        m[j, k] = -s
        m[k, j] = s
    else:
        raise ValueError(f"axis must be 'x', 'y' or 'z', got {axis!r}")
    return m


def u_subspace(j: int, k: int, theta: float, phi: float, delta: float) -> np.ndarray:
    """General one-parameter-family rotation on the (j, k) subspace.

    Block entries: (j,j)=cos(th/2), (j,k)=-e^{i*delta} sin(th/2),
    (k,j)=e^{i*phi} sin(th/2), (k,k)=e^{i*(delta+phi)} cos(th/2).
    Phases are kept verbatim; no global-phase normalization.
    """
    _check_pair(j, k)
    c = math.cos(theta / 2)
    s = math.sin(theta / 2)
    m = np.eye(3, dtype=np.complex128)
    m[j, j] = c
    m[j, k] = -cmath.exp(1j * delta) * s
    m[k, j] = cmath.exp(1j * phi) * s
    m[k, k] = cmath.exp(1j * (delta + phi)) * c
    return m


def identity3() -> np.ndarray:
    return np.eye(3, dtype=np.complex128)


def is_unitary(m: np.ndarray, tol: float) -> bool:
    """True iff max entry of |M M^dag - I| is at most tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = np.asarray(m, dtype=np.complex128)
    return bool(np.max(np.abs(m @ m.conj().T - np.eye(3))) <= tol)


# Gate kinds understood by the circuit layer.  X and the rotations carry a
# subspace pair; P1/P2/H/I act on the full qutrit.
PARAM_COUNTS = {
    "X": 0, "P1": 0, "P2": 0, "H": 0, "I": 0,
    "RX": 1, "RY": 1, "RZ": 1, "U": 3,
}
SUBSPACE_KINDS = frozenset({"X", "RX", "RY", "RZ", "U"})


@dataclass(frozen=True)
class GateSpec:
    """A named single-qutrit gate with its subspace and angle parameters."""

    kind: str
    subspace: tuple[int, int] | None = None
    params: tuple[float, ...] = ()

    def __post_init__(self):
        if self.kind not in PARAM_COUNTS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.subspace is not None:
            object.__setattr__(self, "subspace", tuple(int(x) for x in self.subspace))
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        if self.kind in SUBSPACE_KINDS:
            if self.subspace is None:
                raise ValueError(f"gate {self.kind} requires a subspace pair")
            _check_pair(*self.subspace)
        elif self.subspace is not None:
            raise ValueError(f"gate {self.kind} takes no subspace")
        want = PARAM_COUNTS[self.kind]
        if len(self.params) != want:
            raise ValueError(
                f"gate {self.kind} takes {want} parameter(s), got {len(self.params)}"
            )

    def matrix(self) -> np.ndarray:
        if self.kind == "X":
            return x_gate(*self.subspace)
        if self.kind == "P1":
            return shift_gate(1)
        if self.kind == "P2":
            return shift_gate(2)
        if self.kind == "H":
            return hadamard3()
        if self.kind == "I":
            return identity3()
        if self.kind == "U":
            return u_subspace(*self.subspace, *self.params)
        axis = self.kind[1].lower()
        return rotation(axis, *self.subspace, self.params[0])

    def label(self) -> str:
        """Short text used in circuit diagrams, params to 2 decimals."""
        if self.kind == "P1":
            return "+1"
        if self.kind == "P2":
            return "+2"
        name = self.kind
        if self.subspace is not None:
            name += f"{self.subspace[0]}{self.subspace[1]}"
        if self.params:
            name += "(" + ",".join(f"{p:.2f}" for p in self.params) + ")"
        return name
