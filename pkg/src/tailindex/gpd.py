"""Pareto <-> generalized Pareto parameter bridge.

With shape xi > 0 and location mu = sigma / xi the GPD density

    g(x) = (1/sigma) * (1 + xi (x - mu) / sigma) ** -(1 + 1/xi)

coincides with the Pareto density alpha * xmin**alpha / x**(1 + alpha) for
alpha = 1/xi and xmin = mu. Only that regime is supported here.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import InvalidInput, Unsupported

__all__ = ["ParetoParams", "GpdParams", "pareto_to_gpd", "gpd_to_pareto", "gpd_pdf", "pareto_pdf"]

_MU_RTOL = 1e-9


@dataclass(frozen=True)
class ParetoParams:
    alpha: float
    xmin: float

    def __post_init__(self):
        for name in ("alpha", "xmin"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise InvalidInput(f"Pareto {name} must be finite and > 0, got {v!r}")


@dataclass(frozen=True)
class GpdParams:
    xi: float
    sigma: float
    mu: float

    def check_pareto_regime(self) -> None:
        if not (math.isfinite(self.xi) and self.xi > 0):
            raise Unsupported(f"only xi > 0 is supported, got xi={self.xi!r}")
        if not (math.isfinite(self.sigma) and self.sigma > 0):
            raise InvalidInput(f"sigma must be finite and > 0, got {self.sigma!r}")
        expected = self.sigma / self.xi
        if not math.isclose(self.mu, expected, rel_tol=_MU_RTOL, abs_tol=0.0):
            raise InvalidInput(f"mu={self.mu!r} is not sigma/xi={expected!r}")


def pareto_to_gpd(params: ParetoParams) -> GpdParams:
    if not isinstance(params, ParetoParams):
        params = ParetoParams(*params)
    xi = 1.0 / params.alpha
    return GpdParams(xi=xi, sigma=params.xmin * xi, mu=params.xmin)


def gpd_to_pareto(gpd: GpdParams) -> ParetoParams:
    gpd.check_pareto_regime()
    return ParetoParams(alpha=1.0 / gpd.xi, xmin=gpd.mu)


def gpd_pdf(x, gpd: GpdParams):
    """GPD density for xi > 0; `x` may be a scalar or an array, all >= mu."""
    if not (gpd.xi > 0):
        raise Unsupported(f"only xi > 0 is supported, got xi={gpd.xi!r}")
    if not (gpd.sigma > 0):
        raise InvalidInput("sigma must be > 0")
    xa = np.asarray(x, dtype=np.float64)
    if np.any(xa < gpd.mu):
        raise InvalidInput("gpd_pdf is defined for x >= mu only")
    z = 1.0 + gpd.xi * (xa - gpd.mu) / gpd.sigma
    g = z ** -(1.0 + 1.0 / gpd.xi) / gpd.sigma
    return float(g) if g.ndim == 0 else g


def pareto_pdf(x, params: ParetoParams):
    xa = np.asarray(x, dtype=np.float64)
    a, m = params.alpha, params.xmin
    g = np.where(xa >= m, a / m * (m / xa) ** (a + 1.0), 0.0)
    return float(g) if g.ndim == 0 else g
