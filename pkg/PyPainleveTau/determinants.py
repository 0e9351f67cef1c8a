# PyPainleveTau/determinants.py

"""
Determinants
============

Dense determinants through pivoted LU factorization, accumulated in log space
so that very small or very large values neither underflow nor overflow.

Key Functions
-------------
- ``LogDeterminant`` : Phase and log-magnitude of ``det(M)``.
- ``Determinant`` : ``det(M)`` from ``LogDeterminant``.
"""

import numpy as np
from scipy.linalg import lu_factor

from .errors import ArgumentError, FactorizationError


def LogDeterminant(matrix: np.ndarray) -> tuple[complex, float]:
    """
    Phase and logarithm of the magnitude of a determinant.

    Parameters
    ----------
    matrix : np.ndarray
        Square real or complex matrix.

    Returns
    -------
    tuple[complex, float]
        ``(phase, logAbs)`` with ``det = phase · exp(logAbs)`` and ``|phase| = 1``.

    Raises
    ------
    ArgumentError
        If the matrix is not square.
    FactorizationError
        If a pivot vanishes (singular matrix) or the matrix is not finite.
    """

    matrix = np.asarray(matrix)

    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:

        raise ArgumentError(f"Determinant needs a square matrix, got shape {matrix.shape}")

    if matrix.shape[0] == 0:

        return 1.0 + 0.0j, 0.0

    if not np.all(np.isfinite(matrix)):

        raise FactorizationError("Matrix has non-finite entries")

    lu, pivots = lu_factor(matrix, check_finite=False)
    diagonal = np.diag(lu)
    magnitudes = np.abs(diagonal)

    if np.any(magnitudes == 0.0):

        raise FactorizationError(
            "Singular matrix in pivoted factorization",
            {"size": matrix.shape[0], "zeroPivots": int(np.sum(magnitudes == 0.0))},
        )

    swaps = int(np.sum(pivots != np.arange(len(pivots))))
    phase = complex(np.prod(diagonal / magnitudes)) * (-1.0) ** swaps

    return phase, float(np.sum(np.log(magnitudes)))


def Determinant(matrix: np.ndarray) -> complex:
    """``det(M)`` via ``LogDeterminant``."""

    phase, logAbs = LogDeterminant(matrix)

    return phase * np.exp(logAbs)
