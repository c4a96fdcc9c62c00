"""Independent verification engines.

Nothing here touches the eigenfunction machinery: the Crank-Nicolson
integrator discretizes the Fokker-Planck equation directly from the
drift, and the Euler-Maruyama ensemble realizes the underlying SDE
dX = D(X) dt + sqrt(2) dW.  Agreement with the spectral solution is
therefore a genuine cross-check, not a tautology.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_banded

from .errors import DomainError, IntegrationError
from .frames import Grid, SolutionFrame

__all__ = [
    "Grid",
    "EnsembleState",
    "quadrature",
    "crank_nicolson_evolve",
    "euler_maruyama",
    "histogram",
    "oracle_domain",
    "sampler_from_density",
    "stationary_sampler",
]

# 5-point Gauss-Legendre rule on [-1, 1]
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(5)


@dataclass(frozen=True, eq=False)
class EnsembleState:
    """Particle positions after an Euler-Maruyama run."""

    positions: np.ndarray
    seed: int
    t: float


def quadrature(f, lo, hi, panels):
    """Composite 5-point Gauss-Legendre integral of a vectorized f on [lo, hi]."""
    if not lo < hi:
        raise DomainError(f"quadrature bounds must satisfy lo < hi, got [{lo}, {hi}]")
    if panels < 1:
        raise DomainError("quadrature needs at least one panel")
    edges = np.linspace(float(lo), float(hi), int(panels) + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    pts = mid[:, None] + half[:, None] * _GL_NODES[None, :]
    vals = np.asarray(f(pts.ravel()), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise IntegrationError("integrand returned a non-finite sample")
    return float(np.sum(vals.reshape(pts.shape) * _GL_WEIGHTS[None, :] * half[:, None]))


def oracle_domain(model, a):
    """Truncation bounds used by the oracles.

    Same as the model default, except the radial oscillator is clipped to
    x >= 1e-4: the 1/x drift is too stiff for the grid/step sizes below,
    and the excluded sliver carries mass below 1e-12.
    """
    lo, hi = model.truncated_domain(a)
    if model.name == "radial":
        lo = max(lo, 1e-4)
    return lo, hi


def _flux_operator(model, a, grid):
    """Tridiagonal flux-form discretization of P -> -d/dx(D P) + d2/dx2 P.

    Zero-flux faces at both ends; column sums vanish, so the discrete
    mass sum(P) h is conserved exactly.
    """
    x = grid.x
    h = grid.h
    faces = 0.5 * (x[:-1] + x[1:])
    df = np.asarray(model.drift(a, faces), dtype=float)
    inv_h2 = 1.0 / (h * h)

    diag = np.zeros(grid.m)
    diag[:-1] += -df / (2.0 * h) - inv_h2
    diag[1:] += df / (2.0 * h) - inv_h2
    upper = -df / (2.0 * h) + inv_h2  # coeff of P[i+1] in row i
    lower = df / (2.0 * h) + inv_h2   # coeff of P[i-1] in row i+1
    return diag, upper, lower


def crank_nicolson_evolve(model, a, initial, dt, T):
    """Advance a frame by T under the FPE with drift of parameter set a.

    Trapezoidal (Crank-Nicolson) time stepping of the zero-flux
    discretization; dt is adjusted minimally so that T is an integer
    number of steps.
    """
    if dt <= 0.0:
        raise DomainError("dt must be positive")
    if T < dt:
        raise DomainError("T must be at least dt")
    grid = initial.grid
    diag, upper, lower = _flux_operator(model, a, grid)

    nsteps = max(1, int(round(T / dt)))
    step = T / nsteps

    ab = np.zeros((3, grid.m))
    ab[0, 1:] = -0.5 * step * upper
    ab[1, :] = 1.0 - 0.5 * step * diag
    ab[2, :-1] = -0.5 * step * lower

    p = initial.values.copy()
    rhs = np.empty_like(p)
    for _ in range(nsteps):
        rhs[:] = p + 0.5 * step * diag * p
        rhs[:-1] += 0.5 * step * upper * p[1:]
        rhs[1:] += 0.5 * step * lower * p[:-1]
        p = solve_banded((1, 1), ab, rhs)
    return SolutionFrame(grid=grid, t=initial.t + T, s=initial.s, values=p)


def _reflect(pos, lo, hi):
    # a step can overshoot a wall at most a few widths; fold until inside
    for _ in range(64):
        below = pos < lo
        above = pos > hi
        if not (below.any() or above.any()):
            return pos
        pos[below] = 2.0 * lo - pos[below]
        pos[above] = 2.0 * hi - pos[above]
    raise ArithmeticError("particle reflection did not settle; dt too large for the domain")


def euler_maruyama(model, a, n_particles, initial_sampler, dt, T, seed):
    """Euler-Maruyama ensemble for dX = D(X) dt + sqrt(2) dW.

    Noise comes from a counter-based Philox stream: step k draws from
    Philox(key=seed, counter=(0,0,0,k+1)) via numpy's ziggurat
    standard_normal, with the particle index ordering the draws inside a
    step.  Positions are therefore bitwise reproducible for a given
    (seed, dt, T, n_particles) regardless of scheduling.  The initial
    sampler receives the counter segment 0.
    """
    if dt <= 0.0:
        raise DomainError("dt must be positive")
    if n_particles < 1:
        raise DomainError("need at least one particle")
    lo, hi = oracle_domain(model, a)

    rng0 = np.random.Generator(np.random.Philox(key=seed))
    pos = np.asarray(initial_sampler(rng0, int(n_particles)), dtype=float).copy()
    _reflect(pos, lo, hi)

    nsteps = max(1, int(round(T / dt)))
    step = T / nsteps
    root = np.sqrt(2.0 * step)
    for k in range(nsteps):
        rng = np.random.Generator(np.random.Philox(key=seed, counter=[0, 0, 0, k + 1]))
        pos += model.drift(a, pos) * step + root * rng.standard_normal(pos.size)
        _reflect(pos, lo, hi)
    return EnsembleState(positions=pos, seed=int(seed), t=float(T))


def histogram(ensemble, bins, lo, hi):
    """Density estimate on bin centers, normalized to unit mass over [lo, hi]."""
    pos = ensemble.positions if isinstance(ensemble, EnsembleState) else np.asarray(ensemble)
    if bins < 2:
        raise DomainError("need at least two bins")
    if pos.size == 0:
        raise DomainError("empty ensemble")
    counts, edges = np.histogram(pos, bins=int(bins), range=(lo, hi))
    total = counts.sum()
    if total == 0:
        raise DomainError("no particles inside the histogram range")
    widths = np.diff(edges)
    centers = 0.5 * (edges[:-1] + edges[1:])
    return centers, counts / (total * widths)


def sampler_from_density(x, density):
    """Inverse-CDF sampler for a tabulated density (negative lobes clipped)."""
    x = np.asarray(x, dtype=float)
    p = np.clip(np.asarray(density, dtype=float), 0.0, None)
    if x.ndim != 1 or x.shape != p.shape or x.size < 2:
        raise DomainError("density table must be 1-D with matching shapes")
    increments = 0.5 * (p[1:] + p[:-1]) * np.diff(x)
    cdf = np.concatenate(([0.0], np.cumsum(increments)))
    if cdf[-1] <= 0.0:
        raise DomainError("density has no positive mass")
    cdf /= cdf[-1]

    def sample(rng, n):
        return np.interp(rng.random(n), cdf, x)

    return sample


def stationary_sampler(model, a, m=4097):
    """Sampler for the stationary density exp(-2W)/Z on the oracle domain."""
    lo, hi = oracle_domain(model, a)
    x = np.linspace(lo, hi, m)
    w = np.asarray(model.prepotential(a, x), dtype=float)
    return sampler_from_density(x, np.exp(-2.0 * (w - w.min())))
