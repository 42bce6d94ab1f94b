"""Shared domain types, ranking and the linear-interpolation quantile."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "TailIndexError",
    "InvalidInput",
    "DegenerateSample",
    "Unsupported",
    "RankedSample",
    "EstimateResult",
    "ConfidenceInterval",
    "as_sample",
    "rank",
    "quantile",
]


class TailIndexError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidInput(TailIndexError):
    """Arguments or data violate a precondition."""


class DegenerateSample(TailIndexError):
    """The sample makes the estimator undefined (e.g. all values equal)."""


class Unsupported(TailIndexError):
    """Parameters fall in a regime this package does not handle."""


def as_sample(data, *, min_size: int = 1) -> np.ndarray:
    """Validate `data` and return it as a read-only float64 array.

    Every value must be finite and strictly positive. The input is copied,
    so later mutation of `data` cannot affect the result.
    """
    x = np.array(data, dtype=np.float64).ravel()
    if x.size < min_size:
        raise InvalidInput(f"need at least {min_size} observation(s), got {x.size}")
    if not np.all(np.isfinite(x)):
        raise InvalidInput("sample contains non-finite values")
    if np.any(x <= 0):
        raise InvalidInput("sample values must be strictly positive")
    x.flags.writeable = False
    return x


@dataclass(frozen=True)
class RankedSample:
    """Ascending order statistics with rank-based survival fractions.

    ``survival[i]`` is ``(N - i) / N`` for the 0-based index ``i``, i.e. the
    1-based ``(N + 1 - i) / N``. Ties get distinct ranks.
    """

    sorted: np.ndarray
    survival: np.ndarray

    @property
    def n(self) -> int:
        return self.sorted.size


@dataclass(frozen=True)
class ConfidenceInterval:
    lower: float
    upper: float
    significance: float
    std_err: float


@dataclass(frozen=True)
class EstimateResult:
    """Tail index estimate plus the reference minimum it was computed against."""

    shape: float
    scale: float
    ci: ConfidenceInterval | None = None
    warnings: tuple[str, ...] = field(default=())

    @property
    def lower_bound(self) -> float | None:
        return None if self.ci is None else self.ci.lower

    @property
    def upper_bound(self) -> float | None:
        return None if self.ci is None else self.ci.upper

    def as_dict(self) -> dict:
        out = {"shape": self.shape, "scale": self.scale}
        if self.ci is not None:
            out["lower_bound"] = self.ci.lower
            out["upper_bound"] = self.ci.upper
        if self.warnings:
            out["warnings"] = list(self.warnings)
        return out


def rank(sample) -> RankedSample:
    x = np.sort(as_sample(sample), kind="stable")
    n = x.size
    survival = np.arange(n, 0, -1, dtype=np.float64) / n
    x.flags.writeable = False
    survival.flags.writeable = False
    return RankedSample(x, survival)


def _interpolate(sorted_x: np.ndarray, p) -> np.ndarray:
    # 0-based form of h = (N - 1) p + 1
    p = np.asarray(p, dtype=np.float64)
    if np.any((p < 0) | (p > 1)) or np.any(np.isnan(p)):
        raise InvalidInput("quantile level must lie in [0, 1]")
    h = (sorted_x.size - 1) * p
    lo = np.floor(h).astype(np.intp)
    hi = np.minimum(lo + 1, sorted_x.size - 1)
    frac = h - lo
    a = sorted_x[lo]
    return a + frac * (sorted_x[hi] - a)


def quantile(ranked, p):
    """Linear-interpolation quantile of ranked data.

    Parameters
    ----------
    ranked : RankedSample or array_like
        Sorted observations. A plain array is assumed to be sorted already.
    p : float or array_like
        Level(s) in [0, 1].

    Returns
    -------
    float or ndarray
        For a 1-based position ``h = (N - 1) p + 1`` the result is
        ``x[floor(h)] + (h - floor(h)) * (x[ceil(h)] - x[floor(h)])``.
    """
    x = ranked.sorted if isinstance(ranked, RankedSample) else np.asarray(ranked, dtype=np.float64)
    if x.size == 0:
        raise InvalidInput("quantile of an empty sample")
    q = _interpolate(x, p)
    return float(q) if q.ndim == 0 else q
