"""Fidelity metrics for decoded images and a shot-budget estimate."""

from __future__ import annotations

import math

import numpy as np

from .errors import ShapeError


def _samples(a, b) -> tuple[np.ndarray, np.ndarray]:
    if type(a) is not type(b):
        raise ShapeError(f"cannot compare {type(a).__name__} with {type(b).__name__}")
    if a.pixels.shape != b.pixels.shape:
        raise ShapeError(f"shape mismatch: {a.pixels.shape} vs {b.pixels.shape}")
    return a.pixels.astype(float).reshape(-1), b.pixels.astype(float).reshape(-1)


def mae(a, b) -> float:
    """Mean absolute error over all channel samples."""
    xs, ys = _samples(a, b)
    return float(np.mean(np.abs(xs - ys)))


def psnr(a, b) -> float:
    """Peak signal-to-noise ratio in dB; +inf when the images are equal."""
    xs, ys = _samples(a, b)
    mse = float(np.mean((xs - ys) ** 2))
    if mse == 0.0:
        return math.inf
    return 10 * math.log10(255**2 / mse)


def coupon_collector_expectation(num_states: int) -> float:
    """Expected draws to see every one of `num_states` equiprobable outcomes."""
    if num_states < 1:
        raise ValueError(f"need at least one state, got {num_states}")
    return num_states * sum(1 / k for k in range(1, num_states + 1))


def expected_complete_support_shots(n: int) -> float:
    """Expected shots until every occupied ternary-plane state is seen once.

    The plane codec on a 3^n x 3^n image occupies 3^(2n+2) equiprobable
    basis states, so this is the coupon-collector expectation for that many
    coupons.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return coupon_collector_expectation(3 ** (2 * n + 2))
