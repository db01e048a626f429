import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qutritimg import (
    GrayImage,
    ParseError,
    RgbImage,
    ShapeError,
    UnsupportedDepthError,
    read_pgm,
    read_ppm,
    validate_side,
    write_pgm,
    write_ppm,
)


def test_validate_side():
    assert validate_side(3) == 1
    assert validate_side(9) == 2
    assert validate_side(27) == 3
    with pytest.raises(ShapeError):
        validate_side(6)
    with pytest.raises(ShapeError):
        validate_side(1)


def test_image_shape_validation():
    with pytest.raises(ShapeError):
        GrayImage(np.zeros((4, 4), dtype=np.uint8))
    with pytest.raises(ShapeError):
        GrayImage(np.zeros((3, 9), dtype=np.uint8))
    with pytest.raises(ShapeError):
        RgbImage(np.zeros((3, 3), dtype=np.uint8))
    with pytest.raises(ValueError):
        GrayImage(np.full((3, 3), 300))


def test_fixture_pixels(sample_gray, sample_rgb):
    assert sample_gray.side == 3 and sample_gray.n == 1
    assert sample_gray.pixels[0, 0] == 37
    assert sample_gray.pixels[0, 1] == 235
    assert sample_gray.pixels[2, 2] == 79
    assert tuple(sample_rgb.pixels[0, 0]) == (37, 192, 178)
    assert tuple(sample_rgb.pixels[1, 1]) == (255, 71, 146)
    assert tuple(sample_rgb.pixels[2, 0]) == (203, 252, 139)
    assert tuple(sample_rgb.pixels[2, 1]) == (133, 134, 252)
    assert tuple(sample_rgb.pixels[2, 2]) == (79, 25, 234)
    np.testing.assert_array_equal(sample_rgb.pixels[:, :, 0], sample_gray.pixels)


@pytest.mark.parametrize("binary", [False, True])
def test_pgm_round_trip(sample_gray, binary):
    assert read_pgm(write_pgm(sample_gray, binary=binary)) == sample_gray


@pytest.mark.parametrize("binary", [False, True])
def test_ppm_round_trip(sample_rgb, binary):
    assert read_ppm(write_ppm(sample_rgb, binary=binary)) == sample_rgb


@given(st.integers(min_value=0, max_value=2**32 - 1), st.booleans(), st.booleans())
def test_random_image_round_trip(seed, binary, rgb):
    rng = np.random.default_rng(seed)
    if rgb:
        img = RgbImage(rng.integers(0, 256, size=(9, 9, 3)))
        assert read_ppm(write_ppm(img, binary=binary)) == img
    else:
        img = GrayImage(rng.integers(0, 256, size=(9, 9)))
        assert read_pgm(write_pgm(img, binary=binary)) == img


def test_pgm_header_comments():
    data = b"P2\n# a comment\n3 3 # trailing\n255\n" + b"0 " * 9
    img = read_pgm(data)
    assert img.side == 3


def test_non_power_of_three_side():
    data = b"P2\n4 4\n255\n" + b"0 " * 16
    with pytest.raises(ShapeError):
        read_pgm(data)


def test_unsupported_maxval():
    data = b"P2\n3 3\n65535\n" + b"0 " * 9
    with pytest.raises(UnsupportedDepthError):
        read_pgm(data)


def test_malformed_inputs():
    with pytest.raises(ParseError):
        read_pgm(b"")
    with pytest.raises(ParseError):
        read_pgm(b"P7\n3 3\n255\n" + b"0 " * 9)
    with pytest.raises(ParseError):
        read_pgm(b"P2\n3 notanumber\n255\n" + b"0 " * 9)
    with pytest.raises(ParseError):
        read_pgm(b"P2\n3 3\n255\n0 0 0")  # truncated raster
    with pytest.raises(ParseError):
        read_pgm(b"P5\n3 3\n255\n" + b"\x00" * 5)  # truncated binary raster
    with pytest.raises(ParseError):
        read_pgm(b"P2\n3 3\n255\n" + b"0 " * 8 + b"999 ")


def test_wrong_kind_is_a_parse_error(sample_gray, sample_rgb):
    with pytest.raises(ParseError):
        read_ppm(write_pgm(sample_gray))
    with pytest.raises(ParseError):
        read_pgm(write_ppm(sample_rgb))
