"""Closed-form Pareto tail-index estimators.

Every public estimator sorts a private copy of the data first, which makes
results bit-identical under any permutation of the input, and returns an
`EstimateResult` whose ``scale`` is the reference minimum used.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from statistics import NormalDist

import numpy as np

from .core import (
    ConfidenceInterval,
    DegenerateSample,
    EstimateResult,
    InvalidInput,
    TailIndexError,
    as_sample,
    quantile,
)

__all__ = [
    "EstimatorWarning",
    "MleEquivalenceWarning",
    "MomentWarning",
    "HillSpec",
    "MleOptions",
    "EstimateRow",
    "METHODS",
    "alpha_mle",
    "alpha_ls",
    "alpha_wls",
    "alpha_percentile",
    "alpha_modified_percentile",
    "alpha_geometric_percentile",
    "alpha_moment",
    "alpha_hills",
    "generate_all_estimates",
    "mle_confidence_interval",
    "mle_unbiased",
    "error_pct",
]

HILL_MLE_WARNING = (
    "Setting k as the number of observations makes it equivalent to the MLE (alpha_mle)."
)
MOMENT_WARNING = (
    "Method of moments estimate is close to 1; the data may have infinite mean "
    "(alpha <= 1), in which case this estimate does not converge. "
    "Cross-check with another estimator."
)
_MOMENT_WARN_BELOW = 1.05


class EstimatorWarning(UserWarning):
    pass


class MleEquivalenceWarning(EstimatorWarning):
    pass


class MomentWarning(EstimatorWarning):
    pass


@dataclass(frozen=True)
class HillSpec:
    """Tail size for the Hill estimator: a rank count or a threshold value."""

    k: float
    by_value: bool = False

    @classmethod
    def by_rank(cls, k: int) -> "HillSpec":
        return cls(k, False)

    @classmethod
    def threshold(cls, value: float) -> "HillSpec":
        return cls(value, True)


@dataclass(frozen=True)
class MleOptions:
    biased: bool = True
    significance: float | None = None

    def __post_init__(self):
        if self.significance is not None:
            if not self.biased:
                raise InvalidInput("confidence intervals are only available for the biased MLE")
            if not (0 < self.significance < 1):
                raise InvalidInput(f"significance must lie in (0, 1), got {self.significance!r}")


def _sorted(sample, min_size=1) -> np.ndarray:
    return np.sort(as_sample(sample, min_size=min_size))


def _log_excess_sum(xs: np.ndarray, ref: float) -> float:
    s = float(np.log(xs / ref).sum())
    if s <= 0:
        raise DegenerateSample("all observations equal the reference minimum")
    return s


def error_pct(true_alpha: float, alpha_hat: float) -> float:
    """Relative error in percent, ``|alpha - alpha_hat| / alpha * 100``."""
    return abs(true_alpha - alpha_hat) / true_alpha * 100.0


# -- MLE ---------------------------------------------------------------------

def mle_confidence_interval(shape: float, n: int, significance: float) -> ConfidenceInterval:
    """Two-sided normal interval ``shape +/- z * sqrt(n + 1) / n * shape``."""
    if not (0 < significance < 1):
        raise InvalidInput(f"significance must lie in (0, 1), got {significance!r}")
    std_err = math.sqrt(n + 1) / n * shape
    z = NormalDist().inv_cdf(1 - significance / 2)
    return ConfidenceInterval(shape - z * std_err, shape + z * std_err, significance, std_err)


def mle_unbiased(shape: float, scale: float, n: int) -> tuple[float, float]:
    """Bias-corrected (shape, scale) from the biased MLE pair."""
    if n < 3:
        raise InvalidInput("the unbiased MLE needs n >= 3")
    return (n - 2) / n * shape, scale * (1 - 1 / ((n - 1) * shape))


def _mle(xs: np.ndarray) -> EstimateResult:
    xmin = float(xs[0])
    return EstimateResult(xs.size / _log_excess_sum(xs, xmin), xmin)


def alpha_mle(sample, biased: bool = True, significance: float | None = None) -> EstimateResult:
    """Maximum likelihood estimate with the sample minimum as ``xmin``.

    Parameters
    ----------
    sample : array_like
        Positive observations.
    biased : bool
        If False, apply the ``(n - 2) / n`` shape correction and the matching
        scale correction ``xmin * (1 - 1 / ((n - 1) * alpha))``.
    significance : float, optional
        If given, attach a ``1 - significance`` confidence interval for the
        biased shape.
    """
    opts = MleOptions(biased, significance)
    xs = _sorted(sample, min_size=2 if biased else 3)
    res = _mle(xs)
    if not opts.biased:
        shape, scale = mle_unbiased(res.shape, res.scale, xs.size)
        return EstimateResult(shape, scale)
    if opts.significance is not None:
        ci = mle_confidence_interval(res.shape, xs.size, opts.significance)
        return EstimateResult(res.shape, res.scale, ci)
    return res


# -- regression on the rank plot ---------------------------------------------

def _ls(xs: np.ndarray) -> EstimateResult:
    n = xs.size
    if n < 2:
        raise InvalidInput("least squares needs n >= 2")
    lx = np.log(xs)
    lx -= lx.mean()
    sxx = float(np.dot(lx, lx))
    if sxx == 0:
        raise DegenerateSample("all observations are equal")
    y = np.log(np.arange(n, 0, -1, dtype=np.float64) / n)
    y -= y.mean()
    return EstimateResult(-float(np.dot(y, lx)) / sxx, float(xs[0]))


def alpha_ls(sample) -> EstimateResult:
    """Negated slope of log-survival ``ln((N + 1 - i) / N)`` regressed on ``ln x``."""
    return _ls(_sorted(sample))


def _wls(xs: np.ndarray) -> EstimateResult:
    n = xs.size
    if n < 2:
        raise InvalidInput("weighted least squares needs n >= 2")
    # -sum_{i=1..N} ln((N + 1 - i) / N) = N ln N - ln N!
    numer = n * math.log(n) - math.lgamma(n + 1)
    xmin = float(xs[0])
    return EstimateResult(numer / _log_excess_sum(xs, xmin), xmin)


def alpha_wls(sample) -> EstimateResult:
    """Weighted least squares with weights ``1 / ln(x / xmin)``, in closed form."""
    return _wls(_sorted(sample))


# -- percentile family -------------------------------------------------------

def _log_diff(hi: float, lo: float) -> float:
    d = math.log(hi) - math.log(lo)
    if d == 0:
        raise DegenerateSample("percentiles coincide")
    return d


def _pm(xs: np.ndarray) -> EstimateResult:
    if xs.size < 2:
        raise InvalidInput("percentile methods need n >= 2")
    p25, p75 = quantile(xs, [0.25, 0.75])
    return EstimateResult(math.log(3) / _log_diff(p75, p25), float(xs[0]))


def _mpm(xs: np.ndarray) -> EstimateResult:
    if xs.size < 2:
        raise InvalidInput("percentile methods need n >= 2")
    p50, p75 = quantile(xs, [0.5, 0.75])
    return EstimateResult(math.log(2) / _log_diff(p75, p50), float(xs[0]))


def _gmpm(xs: np.ndarray) -> EstimateResult:
    if xs.size < 2:
        raise InvalidInput("percentile methods need n >= 2")
    p75 = quantile(xs, 0.75)
    d = float(np.log(xs).mean()) - math.log(p75)
    if d == 0:
        raise DegenerateSample("geometric mean equals the 75th percentile")
    return EstimateResult((1 - math.log(4)) / d, float(xs[0]))


def alpha_percentile(sample) -> EstimateResult:
    """``ln 3 / (ln P75 - ln P25)``."""
    return _pm(_sorted(sample))


def alpha_modified_percentile(sample) -> EstimateResult:
    """``ln 2 / (ln P75 - ln P50)``."""
    return _mpm(_sorted(sample))


def alpha_geometric_percentile(sample) -> EstimateResult:
    """``(1 - ln 4) / (mean(ln x) - ln P75)``."""
    return _gmpm(_sorted(sample))


# -- moments -----------------------------------------------------------------

def _moment(xs: np.ndarray, warn: bool = True) -> EstimateResult:
    xmin = float(xs[0])
    excess = float((xs - xmin).sum())
    if excess <= 0:
        raise DegenerateSample("sample mean equals the sample minimum")
    shape = float(xs.sum()) / excess
    notes = ()
    if shape <= _MOMENT_WARN_BELOW:
        notes = (MOMENT_WARNING,)
        if warn:
            warnings.warn(MOMENT_WARNING, MomentWarning, stacklevel=3)
    return EstimateResult(shape, xmin, warnings=notes)


def alpha_moment(sample) -> EstimateResult:
    """Match the sample mean to the Pareto mean ``alpha xmin / (alpha - 1)``.

    For true ``alpha <= 1`` the mean is infinite and the estimate drifts to 1;
    results at or below 1.05 carry a warning.
    """
    return _moment(_sorted(sample))


# -- Hill --------------------------------------------------------------------

def _hill_rank(xs: np.ndarray, k, warn: bool = True) -> EstimateResult:
    n = xs.size
    if isinstance(k, bool) or int(k) != k or not (1 <= k <= n):
        raise InvalidInput(f"k must be an integer in [1, {n}], got {k!r}")
    k = int(k)
    if k == n:
        if warn:
            warnings.warn(HILL_MLE_WARNING, MleEquivalenceWarning, stacklevel=3)
        res = _mle(xs)
        return EstimateResult(res.shape, res.scale, warnings=(HILL_MLE_WARNING,))
    ref = float(xs[n - k - 1])
    return EstimateResult(k / _log_excess_sum(xs[n - k:], ref), ref)


def _hill_value(xs: np.ndarray, threshold) -> EstimateResult:
    threshold = float(threshold)
    tail = xs[np.searchsorted(xs, threshold, side="right"):]
    if tail.size == 0:
        raise InvalidInput(f"no observations above threshold {threshold!r}")
    ref = float(tail[0])
    # the smallest observation above the threshold plays the role of x_(N-k)
    k = tail.size - 1
    if k == 0:
        raise DegenerateSample("only one observation above the threshold")
    return EstimateResult(k / _log_excess_sum(tail[1:], ref), ref)


def alpha_hills(sample, k, value: bool = False) -> EstimateResult:
    """Hill estimator over the upper tail.

    Parameters
    ----------
    sample : array_like
        Positive observations.
    k : int or float or HillSpec
        With ``value=False`` the number of upper order statistics used,
        ``1 <= k <= N``; the reference point is the (k+1)-th largest value.
        With ``value=True`` a threshold: the smallest observation strictly
        above it becomes the reference point and every observation above
        that reference enters the estimate.
    value : bool
        Interpret `k` as a threshold rather than a rank.

    Notes
    -----
    ``k == N`` falls back to the sample minimum as reference, reproduces
    `alpha_mle` exactly and attaches an equivalence warning.
    """
    if isinstance(k, HillSpec):
        k, value = k.k, k.by_value
    xs = _sorted(sample)
    if value:
        if not (xs[-1] > float(k)):
            raise InvalidInput("threshold must be below the sample maximum")
        return _hill_value(xs, k)
    return _hill_rank(xs, k)


# -- batch -------------------------------------------------------------------

METHODS = {
    "mle": ("Maximum Likelihood Estimate", _mle),
    "ls": ("Least Squares", _ls),
    "mom": ("Method of Moments", _moment),
    "pm": ("Percentiles Method", _pm),
    "mpm": ("Modified Percentiles Method", _mpm),
    "gmpm": ("Geometric Percentiles Method", _gmpm),
    "wls": ("Weighted Least Squares", _wls),
}

PUBLIC = {
    "mle": alpha_mle,
    "ls": alpha_ls,
    "mom": alpha_moment,
    "pm": alpha_percentile,
    "mpm": alpha_modified_percentile,
    "gmpm": alpha_geometric_percentile,
    "wls": alpha_wls,
}


@dataclass(frozen=True)
class EstimateRow:
    method: str
    label: str
    result: EstimateResult | None
    error: TailIndexError | None = None

    @property
    def shape(self) -> float:
        return math.nan if self.result is None else self.result.shape

    @property
    def scale(self) -> float:
        return math.nan if self.result is None else self.result.scale


def generate_all_estimates(sample) -> list[EstimateRow]:
    """All estimators except Hill, in the order MLE, LS, MoM, PM, MPM, GMPM, WLS.

    A method that fails on this sample yields a row with ``result=None`` and
    the exception in ``error``; the others are still computed.
    """
    xs = _sorted(sample)
    rows = []
    for key, (label, fn) in METHODS.items():
        try:
            rows.append(EstimateRow(key, label, fn(xs)))
        except TailIndexError as exc:
            rows.append(EstimateRow(key, label, None, exc))
    return rows
