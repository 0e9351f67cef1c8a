import numpy as np
import pytest

import PyPainleveTau as pt
from PyPainleveTau.determinants import Determinant, LogDeterminant


def test_determinant_of_permuted_diagonal():
    matrix = np.array([[0.0, 2.0, 0.0], [3.0, 0.0, 0.0], [0.0, 0.0, -4.0]])
    assert Determinant(matrix) == pytest.approx(24.0, abs=1e-12)


def test_determinant_matches_numpy_for_complex_matrix():
    rng = np.random.default_rng(7)
    matrix = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    assert Determinant(matrix) == pytest.approx(np.linalg.det(matrix), rel=1e-12)


def test_log_determinant_does_not_underflow():
    phase, logAbs = LogDeterminant(np.eye(400) * 1e-3)
    assert phase == pytest.approx(1.0, abs=1e-12)
    assert logAbs == pytest.approx(400 * np.log(1e-3), rel=1e-12)


def test_empty_matrix():
    assert LogDeterminant(np.zeros((0, 0))) == (1.0 + 0.0j, 0.0)


def test_singular_matrix():
    with pytest.raises(pt.FactorizationError):
        LogDeterminant(np.ones((3, 3)))


def test_non_finite_matrix():
    with pytest.raises(pt.FactorizationError):
        LogDeterminant(np.array([[1.0, np.nan], [0.0, 1.0]]))


def test_square_matrix_required():
    with pytest.raises(pt.ArgumentError):
        LogDeterminant(np.ones((2, 3)))
