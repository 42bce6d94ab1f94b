"""Seedable samplers for Pareto, GPD, symmetric stable and Student-t data.

All samplers take ``rng`` as either an integer seed or a
``numpy.random.Generator``. Integer seeds are expanded with PCG64, whose
stream is identical on every platform numpy supports.
"""
from __future__ import annotations

import math

import numpy as np

from .core import InvalidInput
from .gpd import GpdParams, ParetoParams

__all__ = [
    "ParetoParams",
    "make_rng",
    "spawn_rngs",
    "generate_pareto",
    "generate_gpd",
    "generate_stable_symmetric",
    "generate_student_t",
]


def make_rng(rng=None) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    if isinstance(rng, (bool, float)):
        raise InvalidInput(f"seed must be an integer, got {rng!r}")
    return np.random.Generator(np.random.PCG64(rng))


def spawn_rngs(seed, count: int) -> list[np.random.Generator]:
    """Independent child generators derived from one root seed."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.Generator(np.random.PCG64(s)) for s in children]


def _check_n(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidInput(f"sample size must be a positive integer, got {n!r}")
    return int(n)


def generate_pareto(n, alpha, xmin=None, rng=None) -> np.ndarray:
    """Draw ``n`` Pareto variates by inverse transform, ``xmin * u**(-1/alpha)``.

    ``alpha`` may also be a `ParetoParams`, in which case ``xmin`` is omitted.
    Uniforms come from ``1 - U[0, 1)``, i.e. the half-open interval (0, 1],
    so no draw is infinite and every output is >= xmin.
    """
    params = alpha if isinstance(alpha, ParetoParams) else ParetoParams(float(alpha), float(xmin))
    n = _check_n(n)
    gen = make_rng(rng)
    u = gen.random(n)
    np.subtract(1.0, u, out=u)
    np.power(u, -1.0 / params.alpha, out=u)
    u *= params.xmin
    return u


def generate_gpd(n, gpd: GpdParams, rng=None) -> np.ndarray:
    gpd.check_pareto_regime()
    return generate_pareto(n, 1.0 / gpd.xi, gpd.sigma / gpd.xi, rng)


def generate_stable_symmetric(n, alpha, rng=None) -> np.ndarray:
    """Symmetric alpha-stable draws via the Chambers-Mallows-Stuck transform.

    With V ~ U(-pi/2, pi/2) and W ~ Exp(1)::

        X = sin(a V) / cos(V)**(1/a) * (cos((1 - a) V) / W)**((1 - a) / a)

    At ``a == 1`` this reduces to ``tan(V)`` (standard Cauchy); at ``a == 2``
    it is Normal with variance 2. Output is a raw float array and may hold
    negative values.
    """
    n = _check_n(n)
    alpha = float(alpha)
    if not (0 < alpha <= 2):
        raise InvalidInput(f"stability parameter must lie in (0, 2], got {alpha!r}")
    gen = make_rng(rng)
    v = gen.uniform(-math.pi / 2, math.pi / 2, n)
    w = gen.standard_exponential(n)
    if alpha == 1.0:
        return np.tan(v)
    return (
        np.sin(alpha * v)
        / np.cos(v) ** (1.0 / alpha)
        * (np.cos((1.0 - alpha) * v) / w) ** ((1.0 - alpha) / alpha)
    )


def generate_student_t(n, dof, rng=None) -> np.ndarray:
    # numpy's standard_t is the exact normal / sqrt(gamma) construction
    n = _check_n(n)
    dof = float(dof)
    if not (dof > 0 and math.isfinite(dof)):
        raise InvalidInput(f"degrees of freedom must be > 0, got {dof!r}")
    return make_rng(rng).standard_t(dof, n)
