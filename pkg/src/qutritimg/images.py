"""8-bit images on a 3^n x 3^n grid, with PGM/PPM readers and writers.

Supported variants: P2/P5 grayscale, P3/P6 RGB, maxval 255 only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParseError, ShapeError, UnsupportedDepthError


def validate_side(side: int) -> int:
    """Return n such that side == 3^n, or raise."""
    if side < 3:
        raise ShapeError(f"side must be at least 3, got {side}")
    n = 0
    value = 1
    while value < side:
        value *= 3
        n += 1
    if value != side:
        raise ShapeError(f"side {side} is not a power of 3")
    return n


def _as_u8(pixels, shape_desc: str) -> np.ndarray:
    arr = np.asarray(pixels)
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"{shape_desc} pixels must be integers")
    if arr.size and (arr.min() < 0 or arr.max() > 255):
        raise ValueError(f"{shape_desc} pixels must lie in [0, 255]")
    return arr.astype(np.uint8)


@dataclass(eq=False)
class GrayImage:
    """Row-major (y, x) grid of 8-bit gray values."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = _as_u8(self.pixels, "grayscale")
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ShapeError(f"grayscale image must be square, got {arr.shape}")
        validate_side(arr.shape[0])
        self.pixels = arr

    @property
    def side(self) -> int:
        return self.pixels.shape[0]

    @property
    def n(self) -> int:
        return validate_side(self.side)

    def __eq__(self, other) -> bool:
        return isinstance(other, GrayImage) and np.array_equal(self.pixels, other.pixels)


@dataclass(eq=False)
class RgbImage:
    """Row-major (y, x, channel) grid of 8-bit RGB triples."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = _as_u8(self.pixels, "RGB")
        if arr.ndim != 3 or arr.shape[0] != arr.shape[1] or arr.shape[2] != 3:
            raise ShapeError(f"RGB image must be square with 3 channels, got {arr.shape}")
        validate_side(arr.shape[0])
        self.pixels = arr

    @property
    def side(self) -> int:
        return self.pixels.shape[0]

    @property
    def n(self) -> int:
        return validate_side(self.side)

    def __eq__(self, other) -> bool:
        return isinstance(other, RgbImage) and np.array_equal(self.pixels, other.pixels)


# --- netpbm parsing --------------------------------------------------------

_WHITESPACE = b" \t\r\n\v\f"


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    n = len(data)
    while pos < n:
        ch = data[pos : pos + 1]
        if ch == b"#":
            while pos < n and data[pos : pos + 1] not in b"\r\n":
                pos += 1
        elif ch in _WHITESPACE:
            pos += 1
        else:
            break
    if pos >= n:
        raise ParseError("unexpected end of file in header")
    start = pos
    while pos < n and data[pos : pos + 1] not in _WHITESPACE + b"#":
        pos += 1
    return data[start:pos], pos


def _parse_netpbm(data: bytes, magics: dict[bytes, bool], what: str):
    if len(data) < 2:
        raise ParseError(f"not a {what} file: too short")
    magic = bytes(data[:2])
    if magic not in magics:
        raise ParseError(f"not a {what} file: magic {magic!r}")
    binary = magics[magic]
    pos = 2
    header = []
    for _ in range(3):
        token, pos = _next_token(data, pos)
        try:
            header.append(int(token))
        except ValueError as exc:
            raise ParseError(f"bad header token {token!r}") from exc
    width, height, maxval = header
    if maxval != 255:
        raise UnsupportedDepthError(f"only maxval 255 is supported, got {maxval}")
    if width < 1 or height < 1:
        raise ParseError(f"bad dimensions {width}x{height}")
    return width, height, binary, pos


def _read_samples(data: bytes, pos: int, count: int, binary: bool) -> np.ndarray:
    if binary:
        # Exactly one whitespace byte separates maxval from the raster.
        if pos >= len(data) or data[pos : pos + 1] not in _WHITESPACE:
            raise ParseError("missing whitespace before binary raster")
        pos += 1
        raster = data[pos : pos + count]
        if len(raster) != count:
            raise ParseError(f"raster truncated: expected {count} bytes, got {len(raster)}")
        return np.frombuffer(raster, dtype=np.uint8).astype(np.int64)
    values = np.empty(count, dtype=np.int64)
    for i in range(count):
        token, pos = _next_token(data, pos)
        try:
            values[i] = int(token)
        except ValueError as exc:
            raise ParseError(f"bad sample {token!r}") from exc
    if values.size and (values.min() < 0 or values.max() > 255):
        raise ParseError("sample out of range [0, 255]")
    return values


def read_pgm(data: bytes) -> GrayImage:
    width, height, binary, pos = _parse_netpbm(data, {b"P2": False, b"P5": True}, "PGM")
    samples = _read_samples(data, pos, width * height, binary)
    if width != height:
        raise ShapeError(f"grayscale image must be square, got {width}x{height}")
    return GrayImage(samples.reshape(height, width))


def read_ppm(data: bytes) -> RgbImage:
    width, height, binary, pos = _parse_netpbm(data, {b"P3": False, b"P6": True}, "PPM")
    samples = _read_samples(data, pos, width * height * 3, binary)
    if width != height:
        raise ShapeError(f"RGB image must be square, got {width}x{height}")
    return RgbImage(samples.reshape(height, width, 3))


def write_pgm(img: GrayImage, binary: bool = False) -> bytes:
    side = img.side
    if binary:
        return f"P5\n{side} {side}\n255\n".encode() + img.pixels.tobytes()
    rows = "\n".join(" ".join(str(v) for v in row) for row in img.pixels)
    return f"P2\n{side} {side}\n255\n{rows}\n".encode()


def write_ppm(img: RgbImage, binary: bool = False) -> bytes:
    side = img.side
    if binary:
        return f"P6\n{side} {side}\n255\n".encode() + img.pixels.tobytes()
    rows = "\n".join(
        " ".join(str(v) for v in row.reshape(-1)) for row in img.pixels
    )
    return f"P3\n{side} {side}\n255\n{rows}\n".encode()
