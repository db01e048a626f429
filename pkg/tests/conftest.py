import pathlib

import pytest

from qutritimg import read_pgm, read_ppm

DATA_DIR = pathlib.Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> pathlib.Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def sample_gray():
    return read_pgm((DATA_DIR / "gray_3x3.pgm").read_bytes())


@pytest.fixture(scope="session")
def sample_rgb():
    return read_ppm((DATA_DIR / "rgb_3x3.ppm").read_bytes())
