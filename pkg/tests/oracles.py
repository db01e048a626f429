"""Independent reference constructions used to check the fast paths.

Everything here is deliberately brute force: dense kron-product operators,
closed-form statevectors built straight from the angle formulas, and plain
base-3 arithmetic.  None of it shares code with the package's gate
application or encoders beyond the dataclasses.
"""

from __future__ import annotations

import math

import numpy as np

from qutritimg import CircuitOp, GrayImage, RgbImage

HALF_PI = math.pi / 2


def dense_op_matrix(op: CircuitOp, num_qutrits: int) -> np.ndarray:
    """Full 3^q x 3^q operator: identity off the control subspace, the
    embedded gate on it (projector-sum form)."""
    gate = op.gate.matrix()
    eye = np.eye(3, dtype=complex)
    control_map = {c.qutrit: c.value for c in op.controls}
    proj_factors = []
    gate_factors = []
    for q in range(num_qutrits):
        if q in control_map:
            p = np.zeros((3, 3), dtype=complex)
            p[control_map[q], control_map[q]] = 1.0
            proj_factors.append(p)
        else:
            proj_factors.append(eye)
        gate_factors.append(gate if q == op.target else eye)
    proj = _kron_chain(proj_factors)
    lifted = _kron_chain(gate_factors)
    return np.eye(3**num_qutrits, dtype=complex) - proj + lifted @ proj


def _kron_chain(factors) -> np.ndarray:
    m = np.eye(1, dtype=complex)
    for f in factors:
        m = np.kron(m, f)
    return m


def _angle(v: int) -> float:
    return v / 255 * HALF_PI


def fqri_state(img: GrayImage) -> np.ndarray:
    n = img.n
    side = 3**n
    area = side * side
    amps = np.zeros(3 * area, dtype=complex)
    for i in range(area):
        y, x = divmod(i, side)
        th = _angle(int(img.pixels[y, x]))
        amps[i] = math.cos(th) / side
        amps[area + i] = math.sin(th) / side
    return amps


def fqrri_state(img: RgbImage) -> np.ndarray:
    n = img.n
    side = 3**n
    area = side * side
    amps = np.zeros(3 * area, dtype=complex)
    for i in range(area):
        y, x = divmod(i, side)
        r, g, b = (int(v) for v in img.pixels[y, x])
        t_gb = ((g % 16) * 256 + b) / 4095 * HALF_PI
        t_gr = ((g // 16) * 256 + r) / 4095 * HALF_PI
        amps[i] = math.cos(t_gb) * math.cos(t_gr) / side
        amps[area + i] = math.sin(t_gb) / side
        amps[2 * area + i] = math.cos(t_gb) * math.sin(t_gr) / side
    return amps


def fqrqci_state(img: RgbImage) -> np.ndarray:
    n = img.n
    side = 3**n
    area = side * side
    amps = np.zeros(3 * area, dtype=complex)
    for i in range(area):
        y, x = divmod(i, side)
        r, g, b = (int(v) for v in img.pixels[y, x])
        tr, tg, tb = _angle(r), _angle(g), _angle(b)
        amps[i] = math.cos(tr) / side
        amps[area + i] = math.sin(tr) * math.cos(tg) / side
        amps[2 * area + i] = np.exp(1j * tb) * math.sin(tr) * math.sin(tg) / side
    return amps


def mcqri_state(img: RgbImage) -> np.ndarray:
    n = img.n
    side = 3**n
    area = side * side
    block = 3 * area
    norm = 1 / (side * math.sqrt(3))
    amps = np.zeros(3 * block, dtype=complex)
    for i in range(area):
        y, x = divmod(i, side)
        for c in range(3):
            th = _angle(int(img.pixels[y, x, c]))
            amps[c * area + i] = math.cos(th) * norm
            amps[block + c * area + i] = math.sin(th) * norm
    return amps


def qrciq_state(img: RgbImage) -> np.ndarray:
    n = img.n
    side = 3**n
    area = side * side
    q = 2 * n + 5
    amps = np.zeros(3**q, dtype=complex)
    norm = 1 / 3 ** (n + 1)
    for plane in range(9):
        for i in range(area):
            y, x = divmod(i, side)
            if plane < 6:
                digits = [
                    (int(img.pixels[y, x, c]) // 3**plane) % 3 for c in range(3)
                ]
            else:
                digits = [0, 0, 0]
            head = digits[0]
            for d in (digits[1], digits[2], plane // 3, plane % 3):
                head = head * 3 + d
            amps[head * area + i] = norm
    return amps


CLOSED_FORM_STATES = {
    "FQRI": fqri_state,
    "FQRRI": fqrri_state,
    "FQRQCI": fqrqci_state,
    "MCQRI": mcqri_state,
    "QRCIQ": qrciq_state,
}


def random_gray(rng: np.random.Generator, n: int = 1) -> GrayImage:
    return GrayImage(rng.integers(0, 256, size=(3**n, 3**n)))


def random_rgb(rng: np.random.Generator, n: int = 1) -> RgbImage:
    return RgbImage(rng.integers(0, 256, size=(3**n, 3**n, 3)))


def fqrqci_recoverable(img: RgbImage) -> RgbImage:
    """What the three-measurement decoder can recover at best.

    G is lost when R=0; B is lost when R is 0 or 255 or G is 0 (the
    interference prefactor cos(tr)*sin(tr)*sin(tg) vanishes).  Lost
    channels decode to 0 by definition.
    """
    out = img.pixels.astype(np.int64).copy()
    for y in range(img.side):
        for x in range(img.side):
            r, g, _ = (int(v) for v in img.pixels[y, x])
            if r == 0:
                out[y, x, 1] = 0
                out[y, x, 2] = 0
            elif g == 0 or r == 255:
                out[y, x, 2] = 0
    return RgbImage(out)
