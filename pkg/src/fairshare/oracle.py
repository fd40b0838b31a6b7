"""Brute-force reference computations for cross-checking the closed forms.

Nothing here reuses the Gini, area or share formulas from `fairshare.lorenz`;
the checks work from raw values or from numerical quadrature.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .errors import DomainError, ValidationError, ZeroTotal
from .lorenz import LorenzParams, QuintileShares, lorenz_slope, lorenz_value


@dataclass(frozen=True)
class OracleResult:
    value: float
    method: str

    def __post_init__(self):
        if not self.method:
            raise ValidationError("oracle method descriptor must be nonempty")


def _nonnegative(values, min_n):
    x = np.sort(np.asarray(values, dtype=float))
    if x.size < min_n:
        raise ValidationError(f"need at least {min_n} values, got {x.size}")
    if np.any(np.isnan(x)) or x[0] < 0:
        raise ValidationError("values must be nonnegative numbers")
    total = x.sum()
    if not total > 0:
        raise ZeroTotal("values sum to zero")
    return x, total


def empirical_gini(values) -> float:
    """Discrete Gini by the rank-weighted mean difference.

    ``sum_j (2j - n - 1) x_(j) / (n^2 mean)``, no small-sample correction;
    ranges over [0, (n - 1)/n].
    """
    x, total = _nonnegative(values, 2)
    n = x.size
    ranks = 2.0 * np.arange(1, n + 1) - n - 1
    return float(ranks @ x / (n * total))


def numeric_lorenz_area(params: LorenzParams, panels: int = 10_000) -> float:
    """Composite Simpson integral of the curve over [0, 1].

    The curve's slope is unbounded at x = 1 whenever the weight is positive,
    which caps plain Simpson near 1e-5 accuracy. Integrating in ``u`` with
    ``x = 1 - u**m``, ``m = 4 * ceil(P)``, flattens that end so the rule
    keeps its fourth-order convergence. The curve is only ever evaluated.
    """
    if panels < 100 or panels % 2:
        raise DomainError(f"panel count must be even and >= 100, got {panels}")
    m = 4 * int(np.ceil(params.power))
    u = np.linspace(0.0, 1.0, panels + 1)
    x = np.clip(1.0 - u**m, 0.0, 1.0)
    return float(simpson(lorenz_value(params, x) * m * u ** (m - 1), x=u))


def numeric_gini(params: LorenzParams, panels: int = 10_000) -> OracleResult:
    area = numeric_lorenz_area(params, panels)
    return OracleResult(1.0 - 2.0 * area, f"1 - 2 * simpson area, {panels} substituted panels")


def empirical_quintile_shares(values) -> QuintileShares:
    """Share of the total held by each fifth of the sorted observations.

    When n is not a multiple of 5, the observation straddling a boundary is
    split between the two fifths in proportion to its overlap.
    """
    x, total = _nonnegative(values, 5)
    n = x.size
    cum = np.r_[0.0, np.cumsum(x)]
    cuts = []
    for i in range(6):
        t = n * i / 5
        j = min(int(np.floor(t)), n)
        frac = t - j
        cuts.append(cum[j] + (frac * x[j] if j < n else 0.0))
    shares = np.diff(cuts) / total
    return QuintileShares(*shares.tolist())


def lorenz_sample(params: LorenzParams, n: int, rng=None) -> np.ndarray:
    """Values whose distribution has the given Lorenz curve.

    With ``rng`` the values are the curve's slope (the normalised quantile
    function) at uniform random ranks. Without it they are the exact
    increments ``L(j/n) - L((j-1)/n)``, which lie on the curve.
    """
    if rng is None:
        return np.diff(lorenz_value(params, np.arange(n + 1) / n))
    return lorenz_slope(params, rng.uniform(0.0, 1.0, n))
