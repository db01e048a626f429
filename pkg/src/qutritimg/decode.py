"""Image reconstruction from shot histograms or exact probability vectors.

Each decoder inverts its encoder's trigonometry.  Sampled probabilities can
fall slightly outside the domain of the inverse trig functions, so every
argument is clipped into range first; `clip_events` in the report counts
how often that changed a value.  Excursions below CLIP_COUNT_TOL are
floating-point dust from exact-probability inputs, not sampling noise, and
are clamped silently.

Probabilities are used exactly as the inversion formulas expect them:
raw count/shots values, scaled by the ideal location marginal (the 3^n
factors below).  No per-pixel renormalization by the observed location
frequency is applied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .encode import EncodeResult
from .errors import HistogramInconsistencyError, ShapeError
from .gates import GateSpec
from .images import GrayImage, RgbImage
from .simulator import Circuit, CircuitOp, ShotHistogram
from .ternary import trits_from_index

# Below this, sin/cos prefactors are treated as zero: the encoded state
# carries no usable information about the dependent channel.
DEGENERACY_EPSILON = 1e-6

# Domain excursions smaller than this are roundoff, not noise.
CLIP_COUNT_TOL = 1e-12

HALF_PI = math.pi / 2


@dataclass
class DecodeReport:
    image: GrayImage | RgbImage
    clip_events: int
    missing_states: tuple = ()
    shots_used: int = 0


def clip(x: float, lo: float, hi: float) -> float:
    """min(max(x, lo), hi); callers count their own clip events."""
    if lo > hi:
        raise ValueError(f"empty clip interval [{lo}, {hi}]")
    return min(max(x, lo), hi)


class _ClipCounter:
    """Clamp values into trig domains, counting non-roundoff excursions."""

    def __init__(self):
        self.events = 0

    def __call__(self, x: float, lo: float, hi: float) -> float:
        if x < lo - CLIP_COUNT_TOL or x > hi + CLIP_COUNT_TOL:
            self.events += 1
        return clip(x, lo, hi)


def _round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def _value_u8(theta: float) -> int:
    """Angle in [0, pi/2] back to an 8-bit value."""
    return min(max(_round_half_up(theta / HALF_PI * 255), 0), 255)


def _as_probabilities(hist, num_qutrits: int) -> tuple[np.ndarray, int]:
    """Accept a ShotHistogram or a raw probability vector."""
    if isinstance(hist, ShotHistogram):
        if hist.num_qutrits != num_qutrits:
            raise ShapeError(
                f"histogram is over {hist.num_qutrits} qutrits, expected {num_qutrits}"
            )
        return hist.to_probabilities(), hist.shots
    probs = np.asarray(hist, dtype=float)
    if probs.shape != (3**num_qutrits,):
        raise ShapeError(
            f"expected {3**num_qutrits} probabilities, got shape {probs.shape}"
        )
    return probs, 0


def decode_fqri(hist, n: int) -> DecodeReport:
    """Grayscale: theta_i = atan2(sqrt(p1), sqrt(p0)) per pixel.

    The ratio form cancels the location marginal, so shot noise in where
    the pixel was sampled does not bias the value.
    """
    probs, shots = _as_probabilities(hist, 2 * n + 1)
    side = 3**n
    area = side * side
    pixels = np.zeros((side, side), dtype=np.uint8)
    for i in range(area):
        p0 = probs[i]
        p1 = probs[area + i]
        theta = math.atan2(math.sqrt(p1), math.sqrt(p0))
        y, x = divmod(i, side)
        pixels[y, x] = _value_u8(theta)
    return DecodeReport(GrayImage(pixels), 0, (), shots)


def fqrri_values_from_angles(theta_gb: float, theta_gr: float) -> tuple[int, int, int]:
    """Unpack the two angles back to (R, G, B).

    v_gb recovers (G mod 16)*256 + B and v_gr recovers (G // 16)*256 + R,
    so G = (v_gb // 256) + (v_gr // 256) * 16.
    """
    v_gb = _round_half_up(theta_gb * 4095 * 2 / math.pi)
    v_gr = _round_half_up(theta_gr * 4095 * 2 / math.pi)
    b = v_gb % 256
    r = v_gr % 256
    g = (v_gb // 256) + (v_gr // 256) * 16
    return r, g, b


def decode_fqrri(hist, n: int) -> DecodeReport:
    """Two-angle RGB: theta_gb from asin, theta_gr from a probability ratio."""
    probs, shots = _as_probabilities(hist, 2 * n + 1)
    side = 3**n
    area = side * side
    counter = _ClipCounter()
    pixels = np.zeros((side, side, 3), dtype=np.uint8)
    for i in range(area):
        p0 = probs[i]
        p1 = probs[area + i]
        p2 = probs[2 * area + i]
        theta_gb = math.asin(counter(3**n * math.sqrt(p1), 0.0, 1.0))
        if p0 > 0:
            theta_gr = math.atan(math.sqrt(p2 / p0))
        elif p2 > 0:
            theta_gr = HALF_PI
        else:
            theta_gr = 0.0
        y, x = divmod(i, side)
        pixels[y, x] = fqrri_values_from_angles(theta_gb, theta_gr)
    return DecodeReport(RgbImage(pixels), counter.events, (), shots)


def fqrqci_measurement_circuits(enc: EncodeResult) -> tuple[Circuit, Circuit, Circuit]:
    """The three circuits whose statistics the three-angle decoder needs.

    Circuit 1 is the preparation itself; circuits 2 and 3 append an
    uncontrolled U(0,2) basis change on the value qutrit that interferes
    the |0> and |2> amplitudes, exposing the blue phase in the |0>/|2>
    probability difference.
    """
    if enc.method != "FQRQCI":
        raise ValueError(f"expected an FQRQCI encode result, got {enc.method}")
    base = enc.circuit
    gate2 = CircuitOp(GateSpec("U", (0, 2), (HALF_PI, -math.pi, -math.pi)), 0)
    gate3 = CircuitOp(GateSpec("U", (0, 2), (HALF_PI, -HALF_PI, HALF_PI)), 0)
    c2 = Circuit(base.num_qutrits, base.ops + (gate2,))
    c3 = Circuit(base.num_qutrits, base.ops + (gate3,))
    return base, c2, c3


def decode_fqrqci(hist1, hist2, hist3, n: int) -> DecodeReport:
    """Three-angle RGB from the three measurement distributions.

    Per pixel: theta_r = acos(3^n sqrt(p0)) and theta_g from p1 of the
    plain run; theta_b = atan2 of the |0>-|2> probability differences of
    the two basis-changed runs.  When a sin/cos prefactor vanishes the
    dependent channels are reported as 0 -- the state carries nothing to
    recover.  That covers R=0 (G and B lost), G=0 (B lost) and R=255
    (B lost: the |0> amplitude that the basis changes interfere with is
    zero, so both probability differences vanish identically).
    """
    probs1, shots1 = _as_probabilities(hist1, 2 * n + 1)
    probs2, shots2 = _as_probabilities(hist2, 2 * n + 1)
    probs3, shots3 = _as_probabilities(hist3, 2 * n + 1)
    side = 3**n
    area = side * side
    counter = _ClipCounter()
    pixels = np.zeros((side, side, 3), dtype=np.uint8)
    for i in range(area):
        theta_r = math.acos(counter(3**n * math.sqrt(probs1[i]), 0.0, 1.0))
        sin_r = math.sin(theta_r)
        theta_g = 0.0
        theta_b = 0.0
        if sin_r >= DEGENERACY_EPSILON:
            theta_g = math.acos(
                counter(3**n * math.sqrt(probs1[area + i]) / sin_r, 0.0, 1.0)
            )
            amp2 = sin_r * math.sin(theta_g)
            if amp2 >= DEGENERACY_EPSILON and math.cos(theta_r) >= DEGENERACY_EPSILON:
                d_cos = probs2[i] - probs2[2 * area + i]
                d_sin = probs3[i] - probs3[2 * area + i]
                theta_b = counter(math.atan2(d_sin, d_cos), 0.0, HALF_PI)
        y, x = divmod(i, side)
        pixels[y, x] = (_value_u8(theta_r), _value_u8(theta_g), _value_u8(theta_b))
    return DecodeReport(RgbImage(pixels), counter.events, (), shots1 + shots2 + shots3)


def decode_mcqri(hist, n: int) -> DecodeReport:
    """Channel-multiplexed RGB: theta = acos(3^{2n+1}(p_cos - p_sin)) / 2.

    The probability vector splits into three equal blocks by value-qutrit
    digit; the first holds the cos^2 terms, the second the sin^2 terms,
    and the third is empty.  Within a block, channel R/G/B is the next
    digit, then the pixel index.
    """
    probs, shots = _as_probabilities(hist, 2 * n + 2)
    area = 9**n
    block = 3 * area
    counter = _ClipCounter()
    side = 3**n
    pixels = np.zeros((side, side, 3), dtype=np.uint8)
    for channel in range(3):
        for i in range(area):
            p_cos = probs[channel * area + i]
            p_sin = probs[block + channel * area + i]
            arg = counter(3 ** (2 * n + 1) * (p_cos - p_sin), -1.0, 1.0)
            theta = math.acos(arg) / 2
            y, x = divmod(i, side)
            pixels[y, x, channel] = _value_u8(theta)
    return DecodeReport(RgbImage(pixels), counter.events, (), shots)


def _support_indices(hist, num_qutrits: int) -> tuple[set[int], int]:
    probs, shots = _as_probabilities(hist, num_qutrits)
    return {int(i) for i in np.nonzero(probs > 1e-15)[0]}, shots


def decode_qrciq(hist, n: int) -> DecodeReport:
    """Ternary-plane RGB: presence of a basis state is the whole message.

    Each observed state carries (R digit, G digit, B digit, plane, pixel).
    Plane values 6..8 are padding from the plane-qutrit superposition and
    are discarded.  A (plane <= 5, pixel) slot that was never observed
    contributes digit 0 and is listed in `missing_states` as
    (plane, pixel, channel) triples.  Counts beyond presence are ignored,
    so the result depends only on the histogram support.
    """
    q = 2 * n + 5
    support, shots = _support_indices(hist, q)
    side = 3**n
    area = side * side
    seen: dict[tuple[int, int], tuple[int, int, int]] = {}
    for index in sorted(support):
        trits = trits_from_index(index, q)
        digits = (int(trits[0]), int(trits[1]), int(trits[2]))
        plane = int(trits[3]) * 3 + int(trits[4])
        pixel = int(trits[5:], 3)
        if plane >= 6:
            continue
        key = (plane, pixel)
        if key in seen and seen[key] != digits:
            raise HistogramInconsistencyError(
                f"plane {plane}, pixel {pixel} observed with digits "
                f"{seen[key]} and {digits}"
            )
        seen[key] = digits
    missing = []
    values = np.zeros((area, 3), dtype=np.int64)
    for plane in range(6):
        for pixel in range(area):
            digits = seen.get((plane, pixel))
            if digits is None:
                missing += [(plane, pixel, ch) for ch in ("R", "G", "B")]
                continue
            for channel in range(3):
                values[pixel, channel] += digits[channel] * 3**plane
    if values.max() > 255:
        raise HistogramInconsistencyError(
            "decoded channel value exceeds 255; histogram is not a valid encoding"
        )
    pixels = values.reshape(side, side, 3).astype(np.uint8)
    return DecodeReport(RgbImage(pixels), 0, tuple(missing), shots)
