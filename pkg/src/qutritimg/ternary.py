"""Base-3 digit manipulation, register indexing, and the raw statevector.

Register convention: qutrit 0 is the most significant digit, so the basis
index of |q0 q1 ... q_{m-1}> is the base-3 value of the digit string read
left to right.  Histogram keys and diagram rows follow the same order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError

# 3**12 complex128 amplitudes is ~8.5 MB; the largest register any codec
# here needs is 2n+5 = 9 qutrits (3x3 and 9x9 images).
MAX_QUTRITS = 12

_TRIT_CHARS = "012"


def trits_from_index(index: int, length: int) -> str:
    """Base-3 digits of `index`, most significant first, padded to `length`."""
    if length < 1:
        raise ValueError(f"trit string length must be >= 1, got {length}")
    if not 0 <= index < 3**length:
        raise ValueError(f"index {index} does not fit in {length} trits")
    digits = []
    for _ in range(length):
        index, rem = divmod(index, 3)
        digits.append(_TRIT_CHARS[rem])
    return "".join(reversed(digits))


def index_from_trits(trits: str) -> int:
    """Integer value of a most-significant-first trit string."""
    if len(trits) < 1:
        raise ValueError("empty trit string")
    if any(ch not in _TRIT_CHARS for ch in trits):
        raise ValueError(f"invalid trit string {trits!r}")
    return int(trits, 3)


def ternary_digits_u8(value: int) -> tuple[int, ...]:
    """Six base-3 digits of an 8-bit value, least significant plane first."""
    if not 0 <= value <= 255:
        raise ValueError(f"8-bit value out of range: {value}")
    digits = []
    for _ in range(6):
        value, rem = divmod(value, 3)
        digits.append(rem)
    return tuple(digits)


def value_from_digits(digits) -> int:
    """Recombine six least-significant-first base-3 digits.

    The result can reach 728; callers that require an 8-bit value must
    check the range themselves.
    """
    digits = tuple(digits)
    if len(digits) != 6:
        raise ValueError(f"expected 6 digits, got {len(digits)}")
    if any(d not in (0, 1, 2) for d in digits):
        raise ValueError(f"digits must be 0, 1 or 2: {digits}")
    return sum(d * 3**b for b, d in enumerate(digits))


@dataclass
class Statevector:
    """Amplitudes of a register of `num_qutrits` qutrits, index-ordered."""

    num_qutrits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.num_qutrits < 1:
            raise ValueError("register needs at least one qutrit")
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (3**self.num_qutrits,):
            raise ValueError(
                f"expected {3**self.num_qutrits} amplitudes, got shape {amps.shape}"
            )
        self.amplitudes = amps

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def statevector_zero(num_qutrits: int) -> Statevector:
    """The all-|0> state of a `num_qutrits` register."""
    if num_qutrits < 1:
        raise ValueError("register needs at least one qutrit")
    if num_qutrits > MAX_QUTRITS:
        raise CapacityError(
            f"{num_qutrits} qutrits exceeds the cap of {MAX_QUTRITS}"
        )
    amps = np.zeros(3**num_qutrits, dtype=np.complex128)
    amps[0] = 1.0
    return Statevector(num_qutrits, amps)
