"""Special functions for the analytic eigensystems.

Associated Laguerre polynomials via the stable upward three-term
recurrence, log-gamma via a Lanczos approximation, and generalized
(real upper argument) binomial coefficients built on log-gamma.
Everything here is plain 64-bit arithmetic and accepts numpy arrays
where a real argument is expected.
"""

import numpy as np

from .errors import DomainError

MAX_LAGUERRE_DEGREE = 64

# Lanczos coefficients, g = 7, 9 terms (Godfrey's set; ~1e-15 relative
# accuracy for positive real arguments).
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def laguerre_assoc(n, a, y):
    """Associated Laguerre polynomial L_n^a(y).

    Uses the upward recurrence
        (k+1) L_{k+1} = (2k+1+a-y) L_k - (k+a) L_{k-1},
    starting from L_0 = 1, L_1 = 1+a-y, which is stable on the bounded
    y-ranges produced by the truncated model domains.

    Parameters
    ----------
    n : int
        Degree, 0 <= n <= 64.
    a : float
        Order, a > -1.
    y : float or ndarray
        Argument, y >= 0.
    """
    if n < 0 or n != int(n) or n > MAX_LAGUERRE_DEGREE:
        raise DomainError(f"Laguerre degree must be an integer in [0, {MAX_LAGUERRE_DEGREE}], got {n}")
    if a <= -1.0:
        raise DomainError(f"Laguerre order must exceed -1, got {a}")
    y = np.asarray(y, dtype=float)
    if np.any(y < 0.0):
        raise DomainError("Laguerre argument must be >= 0")
    n = int(n)

    lk = np.ones_like(y)
    if n == 0:
        return lk if lk.ndim else float(lk)
    lk1 = 1.0 + a - y
    for k in range(1, n):
        lk, lk1 = lk1, ((2.0 * k + 1.0 + a - y) * lk1 - (k + a) * lk) / (k + 1.0)
    return lk1 if lk1.ndim else float(lk1)


def laguerre_deriv(n, a, y, order=1):
    """order-th derivative of L_n^a with respect to y.

    d^k/dy^k L_n^a(y) = (-1)^k L_{n-k}^{a+k}(y), identically zero once
    the degree is exhausted.
    """
    if order < 1:
        raise DomainError("derivative order must be >= 1")
    if n < order:
        y = np.asarray(y, dtype=float)
        z = np.zeros_like(y)
        return z if z.ndim else 0.0
    sign = -1.0 if order % 2 else 1.0
    return sign * laguerre_assoc(n - order, a + order, y)


def log_gamma(z):
    """ln Gamma(z) for z > 0.

    Lanczos approximation for z >= 0.5; the strip (0, 0.5) is lifted
    with ln Gamma(z) = ln Gamma(z+1) - ln z, so no reflection is needed.
    """
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0.0):
        raise DomainError("log_gamma requires z > 0")

    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    out = np.empty_like(z)

    small = z < 0.5
    zs = np.where(small, z + 1.0, z)

    series = np.full_like(zs, _LANCZOS_COEFFS[0])
    for k, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        series += c / (zs - 1.0 + k)
    t = zs + _LANCZOS_G - 0.5
    out = 0.5 * np.log(2.0 * np.pi) + (zs - 0.5) * np.log(t) - t + np.log(series)
    out = np.where(small, out - np.log(np.where(small, z, 1.0)), out)
    return float(out[0]) if scalar else out


def binomial_general(p, n):
    """Generalized binomial coefficient C(p, n) for real p and integer n >= 0.

    Computed as exp(lnG(p+1) - lnG(n+1) - lnG(p-n+1)); requires
    p > n - 1 so that all gamma arguments are positive.
    """
    if n < 0 or n != int(n):
        raise DomainError(f"binomial lower index must be a non-negative integer, got {n}")
    n = int(n)
    if p <= n - 1.0:
        raise DomainError(f"binomial requires p > n - 1, got p={p}, n={n}")
    return float(np.exp(log_gamma(p + 1.0) - log_gamma(n + 1.0) - log_gamma(p - n + 1.0)))
