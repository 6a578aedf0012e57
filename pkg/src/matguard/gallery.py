"""Constructed test matrices for the randomized suites.

All generators take an explicit ``numpy.random.Generator``; nothing here
touches global RNG state.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "hurwitz_matrix",
    "imaginary_pair_matrix",
    "well_conditioned_matrix",
]


def well_conditioned_matrix(n: int, rng, cond_max: float = 25.0) -> np.ndarray:
    """Random invertible matrix with entries in [-1, 1] and bounded
    condition number (rejection sampling)."""
    while True:
        t = rng.uniform(-1.0, 1.0, size=(n, n))
        if np.linalg.cond(t) <= cond_max:
            return t


def hurwitz_matrix(n: int, rng, margin: float = 0.5, similarity: bool = False):
    """Strictly Hurwitz matrix with spectral abscissa <= -margin.

    Built as -(P'P + margin*I) with P uniform in [-1, 1]; the symmetric
    part is negative definite by construction.  With ``similarity`` the
    result is conjugated by a well-conditioned random basis, which keeps
    the spectrum but destroys symmetry.
    """
    if margin <= 0:
        raise ValueError("margin must be positive")
    p = rng.uniform(-1.0, 1.0, size=(n, n))
    a = -(p.T @ p + margin * np.eye(n))
    if similarity:
        t = well_conditioned_matrix(n, rng)
        a = np.linalg.solve(t.T, (t @ a).T).T
    return a


def imaginary_pair_matrix(n: int, rng, beta: float | None = None) -> np.ndarray:
    """Matrix with an exact eigenvalue pair (+i*beta, -i*beta), beta != 0.

    Conjugates blockdiag(rot(beta), D) by a well-conditioned random
    basis, where rot(beta) = [[0, beta], [-beta, 0]] and D is strictly
    Hurwitz diagonal, so the imaginary pair is exact by construction and
    every other eigenvalue sum stays bounded away from zero.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if beta is None:
        beta = float(rng.uniform(0.5, 2.0))
    if beta == 0:
        raise ValueError("beta must be nonzero")
    block = np.zeros((n, n))
    block[0, 1] = beta
    block[1, 0] = -beta
    if n > 2:
        block[range(2, n), range(2, n)] = rng.uniform(-2.0, -0.5, size=n - 2)
    t = well_conditioned_matrix(n, rng)
    return np.linalg.solve(t.T, (t @ block).T).T
