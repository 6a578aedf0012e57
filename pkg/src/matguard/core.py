"""Dense real matrix primitives shared by every other module.

All operations are pure functions on immutable inputs (arrays are never
modified in place), so everything here is safe to call concurrently.
Matrices are plain 2-D float64 numpy arrays in row-major order; validation
happens at the boundaries via :func:`as_matrix`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "GuardianValue",
    "Stability",
    "as_matrix",
    "as_square",
    "det_signed_log",
    "expm",
    "is_hurwitz",
    "matmul",
    "match_spectra",
    "maxabs",
    "norm1",
    "spectrum",
]

# Relative pivot threshold below which an LU pivot is treated as zero.
PIVOT_RTOL = 1e-12


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Validate and convert input to a 2-D float64 array.

    Rejects empty dimensions and non-finite entries; returns a C-contiguous
    copy so callers can rely on the result being independent of the input.
    """
    m = np.array(a, dtype=float, order="C")
    if m.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got ndim={m.ndim}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"{name} must have positive dimensions, got {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} contains non-finite entries")
    return m


def as_square(a, name: str = "matrix") -> np.ndarray:
    m = as_matrix(a, name)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    return m


def maxabs(a) -> float:
    return float(np.max(np.abs(a)))


def norm1(a) -> float:
    """Induced 1-norm (maximum absolute column sum)."""
    return float(np.linalg.norm(np.asarray(a, dtype=float), 1))


def matmul(a, b) -> np.ndarray:
    """Matrix product with an explicit conformability check."""
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


@dataclass(frozen=True)
class GuardianValue:
    """Sign and log-magnitude of a determinant.

    ``sign`` is 0 when the determinant falls below the zero threshold, in
    which case ``log_magnitude`` is ``-inf``.  Keeping determinants in
    (sign, log|det|) form avoids overflow for the large compound/Kronecker
    matrices whose raw determinants exceed float range.
    """

    sign: int
    log_magnitude: float

    def __mul__(self, other: "GuardianValue") -> "GuardianValue":
        s = self.sign * other.sign
        if s == 0:
            return GuardianValue(0, float("-inf"))
        return GuardianValue(s, self.log_magnitude + other.log_magnitude)

    @property
    def value(self) -> float:
        """Best-effort float value; may overflow to +/-inf for huge dets."""
        if self.sign == 0:
            return 0.0
        try:
            return self.sign * math.exp(self.log_magnitude)
        except OverflowError:
            return self.sign * math.inf


def det_signed_log(a, zero_scale: float | None = None) -> GuardianValue:
    """Determinant sign and log-magnitude via partially pivoted LU.

    The sign accounts for row-swap parity.  A pivot counts as zero when its
    magnitude is below ``PIVOT_RTOL * zero_scale``; ``zero_scale`` defaults
    to the largest absolute entry of ``a``.  Callers evaluating a guardian
    map pass the scale of the pre-image matrix instead, so that 1x1
    compressions of near-boundary matrices remain detectable.
    """
    m = as_square(a, "a")
    n = m.shape[0]
    ref = maxabs(m) if zero_scale is None else float(zero_scale)
    threshold = PIVOT_RTOL * ref
    sign = 1
    log_magnitude = 0.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(m[k:, k])))
        pivot = m[p, k]
        if pivot == 0.0 or abs(pivot) < threshold:
            return GuardianValue(0, float("-inf"))
        if p != k:
            m[[k, p], :] = m[[p, k], :]
            sign = -sign
        if pivot < 0.0:
            sign = -sign
        log_magnitude += math.log(abs(pivot))
        if k + 1 < n:
            m[k + 1 :, k] /= pivot
            m[k + 1 :, k + 1 :] -= np.outer(m[k + 1 :, k], m[k, k + 1 :])
    return GuardianValue(sign, log_magnitude)


def expm(a, t: float = 1.0) -> np.ndarray:
    """Matrix exponential ``e^{a t}`` (scaling-and-squaring with Pade)."""
    m = as_square(a, "a")
    if not np.isfinite(t):
        raise ValueError("t must be finite")
    import scipy.linalg

    return scipy.linalg.expm(m * float(t))


def spectrum(a) -> np.ndarray:
    """All eigenvalues of a square matrix as a complex array.

    Backed by the dense LAPACK solver (Hessenberg reduction + shifted QR);
    raises ``numpy.linalg.LinAlgError`` if the QR iteration fails to
    converge rather than returning a truncated spectrum.
    """
    m = as_square(a, "a")
    return np.linalg.eigvals(m)


class Stability(str, enum.Enum):
    STABLE = "stable"
    BOUNDARY = "boundary"
    UNSTABLE = "unstable"


def is_hurwitz(a, tol: float = 1e-8) -> Stability:
    """Classify the spectral abscissa against the imaginary axis.

    stable if ``max Re(lambda) < -tol``, boundary if ``|max Re| <= tol``,
    unstable otherwise.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    alpha = float(np.max(spectrum(a).real))
    if alpha < -tol:
        return Stability.STABLE
    if abs(alpha) <= tol:
        return Stability.BOUNDARY
    return Stability.UNSTABLE


def match_spectra(actual, expected, tol: float) -> float:
    """Greedy nearest-neighbor multiset comparison of eigenvalue lists.

    Pairs each expected eigenvalue with the nearest remaining actual one
    and returns the largest pairing distance.  Raises if the lengths
    differ; callers assert the result against their pairing tolerance.
    ``tol`` is only used in the error message when no pairing succeeds.
    """
    act = list(np.asarray(actual, dtype=complex))
    exp = np.asarray(expected, dtype=complex)
    if len(act) != len(exp):
        raise ValueError(f"spectrum size mismatch: {len(act)} vs {len(exp)}")
    # Match large-magnitude values first; ties in the greedy order matter
    # less for well-separated spectra, which is all the tolerance supports.
    order = np.argsort(-np.abs(exp), kind="stable")
    worst = 0.0
    for idx in order:
        target = exp[idx]
        dists = [abs(x - target) for x in act]
        j = int(np.argmin(dists))
        worst = max(worst, dists[j])
        act.pop(j)
    return worst
