import numpy as np
import pytest

from matpoly import MatrixPoly, save_poly


def random_poly(rng, n, m, monic=True):
    """Degree-n polynomial with entries uniform on [-2, 2] in both parts"""
    shape = (n + 1, m, m)
    coeffs = rng.uniform(-2, 2, shape) + 1j * rng.uniform(-2, 2, shape)
    if monic:
        coeffs[-1] = np.eye(m)
    return MatrixPoly(coeffs)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def make_poly(rng):
    def factory(n, m, monic=True):
        return random_poly(rng, n, m, monic)
    return factory


@pytest.fixture
def quadratic():
    """z^2 - 3z - 4 = (z - 4)(z + 1)"""
    return MatrixPoly([-4, -3, 1])


@pytest.fixture
def poly_file(tmp_path):
    def write(P, name='poly.json'):
        path = tmp_path / name
        save_poly(P, str(path))
        return str(path)
    return write
