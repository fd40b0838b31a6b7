"""Two-parameter Lorenz curve: empirical points, fitting, closed forms.

The curve is a weighted average of the power form ``x**P`` and the Pareto
form ``1 - (1 - x)**(1/P)``::

    L(x) = (1 - k) * x**P + k * (1 - (1 - x)**(1/P)),   0 <= k <= 1,  P >= 1

Both components enclose area ``1/(P + 1)``, so the Gini index is
``(P - 1)/(P + 1)`` whatever the weight ``k``. In code ``k`` is
``LorenzParams.weight`` and ``P`` is ``LorenzParams.power``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import DomainError, TooFewObservations, ValidationError, ZeroTotal
from .simplex import minimize_box

MIN_OBSERVATIONS = 10

# seed grid and bounds for fit_lorenz
WEIGHT_GRID = np.linspace(0.0, 1.0, 101)
POWER_GRID = np.geomspace(1.0, 40.0, 80)
POWER_MAX = 40.0


class QuintileShares(NamedTuple):
    """Shares of the total held by each fifth, lowest first."""

    q1: float
    q2: float
    q3: float
    q4: float
    q5: float

    @property
    def bottom40(self) -> float:
        return self.q1 + self.q2


@dataclass(frozen=True)
class LorenzParams:
    weight: float
    power: float

    def __post_init__(self):
        if not (0.0 <= self.weight <= 1.0):
            raise DomainError(f"weight k={self.weight} outside [0, 1]")
        if not (self.power >= 1.0 and math.isfinite(self.power)):
            raise DomainError(f"power P={self.power} must be finite and >= 1")


@dataclass(frozen=True, eq=False)
class EmpiricalLorenz:
    """Observed Lorenz points ``(j/n, cumulative share)`` for j = 1..n."""

    x: np.ndarray = field(repr=False)
    y: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.x.setflags(write=False)
        self.y.setflags(write=False)

    @property
    def n(self) -> int:
        return int(self.x.size)

    @property
    def points(self) -> list[tuple[float, float]]:
        return list(zip(self.x.tolist(), self.y.tolist()))


@dataclass(frozen=True)
class LorenzFit:
    params: LorenzParams
    sse: float
    r2: float
    n: int
    iterations: int = 0
    at_bound: bool = False


def build_empirical_lorenz(values) -> EmpiricalLorenz:
    """Rank nonnegative values ascending and accumulate their normalised sum."""
    v = np.asarray(values, dtype=float)
    if v.ndim != 1:
        raise ValidationError("values must be one-dimensional")
    if v.size < MIN_OBSERVATIONS:
        raise TooFewObservations(f"{v.size} observations, need at least {MIN_OBSERVATIONS}")
    if np.any(np.isnan(v)) or np.any(v < 0):
        raise ValidationError("values must be nonnegative numbers")
    v = np.sort(v, kind="stable")
    cum = np.cumsum(v)
    total = cum[-1]
    if not total > 0:
        raise ZeroTotal("values sum to zero")
    n = v.size
    x = np.arange(1, n + 1, dtype=float) / n
    # round-off can lift a cumulative share a few ulps above the diagonal
    y = np.minimum(cum / total, x)
    y[-1] = 1.0
    return EmpiricalLorenz(x, y)


def _curve(weight, power, x):
    """Unchecked, broadcasting evaluation of the curve."""
    return (1.0 - weight) * x**power + weight * (1.0 - (1.0 - x) ** (1.0 / power))


def _as_unit(x, upper_open=False):
    arr = np.asarray(x, dtype=float)
    bad = np.isnan(arr) | (arr < 0) | (arr >= 1 if upper_open else arr > 1)
    if np.any(bad):
        bound = "[0, 1)" if upper_open else "[0, 1]"
        raise DomainError(f"x must lie in {bound}")
    return arr


def lorenz_value(params: LorenzParams, x):
    """Evaluate the curve at ``x`` (scalar or array) in [0, 1].

    Returns exactly 0 at x = 0 and exactly 1 at x = 1.
    """
    arr = _as_unit(x)
    y = _curve(params.weight, params.power, arr)
    y = np.where(arr == 0.0, 0.0, np.where(arr == 1.0, 1.0, y))
    return float(y) if y.ndim == 0 else y


def lorenz_slope(params: LorenzParams, x):
    """First derivative of the curve on [0, 1).

    At x = 1 the slope is finite only for P = 1, where it is identically 1.
    """
    k, p = params.weight, params.power
    arr = np.asarray(x, dtype=float)
    if p == 1.0 and np.all(arr <= 1.0) and np.all(arr >= 0.0):
        out = np.ones_like(arr)
        return float(out) if out.ndim == 0 else out
    arr = _as_unit(arr, upper_open=True)
    out = (1.0 - k) * p * arr ** (p - 1.0) + (k / p) * (1.0 - arr) ** (1.0 / p - 1.0)
    return float(out) if out.ndim == 0 else out


def area_under(params: LorenzParams) -> float:
    return 1.0 / (params.power + 1.0)


def gini_of(params: LorenzParams) -> float:
    """Gini index, ``1 - 2 * area`` = ``(P - 1)/(P + 1)``; independent of k."""
    p = params.power
    return (p - 1.0) / (p + 1.0)


def quintile_shares(params: LorenzParams) -> QuintileShares:
    cuts = lorenz_value(params, np.arange(6) / 5.0)
    return QuintileShares(*np.diff(cuts).tolist())


def _sse(params: LorenzParams, emp: EmpiricalLorenz) -> float:
    resid = lorenz_value(params, emp.x) - emp.y
    return float(resid @ resid)


def r_squared(emp: EmpiricalLorenz, params: LorenzParams) -> float:
    """``1 - SSE/SST`` of the curve against the empirical points.

    Can be negative when the curve is worse than the mean of y.
    """
    dev = emp.y - emp.y.mean()
    sst = float(dev @ dev)
    if sst == 0.0:
        raise ValidationError("empirical y values are all identical; R^2 undefined")
    return 1.0 - _sse(params, emp) / sst


def _grid_seed(emp: EmpiricalLorenz):
    best = (np.inf, 0, 0)
    k = WEIGHT_GRID[:, None]
    for j, p in enumerate(POWER_GRID):
        sse = ((_curve(k, p, emp.x) - emp.y) ** 2).sum(axis=1)
        i = int(np.argmin(sse))
        if sse[i] < best[0]:
            best = (sse[i], i, j)
    return best[1], best[2]


def fit_lorenz(emp: EmpiricalLorenz) -> LorenzFit:
    """Least-squares fit of (k, P) to empirical Lorenz points.

    A coarse grid (101 weights x 80 log-spaced powers in [1, 40]) picks the
    starting cell, then a box-projected simplex refines it. The result is
    deterministic for a given input. A `RuntimeWarning` is issued when the
    optimum sits on the upper power bound.
    """
    i, j = _grid_seed(emp)
    x0 = np.array([WEIGHT_GRID[i], POWER_GRID[j]])
    step = np.array([WEIGHT_GRID[1] - WEIGHT_GRID[0], POWER_GRID[j] * (POWER_GRID[1] - 1.0)])

    def objective(theta):
        resid = _curve(theta[0], theta[1], emp.x) - emp.y
        return float(resid @ resid)

    res = minimize_box(objective, x0, [0.0, 1.0], [1.0, POWER_MAX], step,
                       ftol=1e-12, xtol=1e-10, max_iter=2000)
    params = LorenzParams(float(res.x[0]), float(res.x[1]))
    at_bound = params.power >= POWER_MAX - 1e-9
    if at_bound:
        warnings.warn(f"fitted power reached the search bound {POWER_MAX}", RuntimeWarning,
                      stacklevel=2)
    sse = _sse(params, emp)
    return LorenzFit(params=params, sse=sse, r2=r_squared(emp, params), n=emp.n,
                     iterations=res.iterations, at_bound=at_bound)


def fit_values(values) -> LorenzFit:
    """Shortcut: build the empirical curve from raw values and fit it."""
    return fit_lorenz(build_empirical_lorenz(values))
