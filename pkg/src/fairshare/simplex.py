"""Nelder-Mead simplex minimisation inside a box.

Every trial vertex is clipped into ``[lower, upper]`` before it is
evaluated, so the objective is never called outside its domain.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SimplexResult:
    x: np.ndarray
    fun: float
    iterations: int
    converged: bool


def minimize_box(func, x0, lower, upper, step, *, ftol=1e-12, xtol=1e-10, max_iter=2000,
                 alpha=1.0, gamma=2.0, rho=0.5, sigma=0.5):
    """Minimise ``func`` from ``x0`` with a box-projected Nelder-Mead simplex.

    Parameters
    ----------
    func : callable
        Objective, takes a 1-D array and returns a float.
    x0 : array_like
        Starting vertex; clipped into the box.
    lower, upper : array_like
        Box bounds.
    step : array_like
        Edge length of the initial simplex along each axis. An edge that
        would leave the box is flipped to the other side of ``x0``.
    ftol, xtol : float
        Stop once the spread of objective values across the simplex is at
        most ``ftol`` and every vertex lies within ``xtol`` (max-norm) of
        the best one.
    max_iter : int
        Hard cap on iterations.

    Returns
    -------
    SimplexResult
    """
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    x0 = np.clip(np.asarray(x0, dtype=float), lower, upper)
    step = np.asarray(step, dtype=float)
    n = x0.size

    def clip(v):
        return np.clip(v, lower, upper)

    verts = [x0]
    for i in range(n):
        v = x0.copy()
        v[i] += step[i]
        if v[i] > upper[i]:
            v[i] = x0[i] - step[i]
        verts.append(clip(v))
    vals = [func(v) for v in verts]

    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        order = np.argsort(vals, kind="stable")
        verts = [verts[i] for i in order]
        vals = [vals[i] for i in order]
        spread = vals[-1] - vals[0]
        size = max(np.max(np.abs(v - verts[0])) for v in verts[1:])
        if spread <= ftol and size <= xtol:
            converged = True
            break

        centroid = np.mean(verts[:-1], axis=0)
        worst = verts[-1]
        xr = clip(centroid + alpha * (centroid - worst))
        fr = func(xr)
        if fr < vals[0]:
            xe = clip(centroid + gamma * (xr - centroid))
            fe = func(xe)
            verts[-1], vals[-1] = (xe, fe) if fe < fr else (xr, fr)
            continue
        if fr < vals[-2]:
            verts[-1], vals[-1] = xr, fr
            continue
        # contraction, outside if the reflection improved on the worst vertex
        if fr < vals[-1]:
            xc = clip(centroid + rho * (xr - centroid))
        else:
            xc = clip(centroid + rho * (worst - centroid))
        fc = func(xc)
        if fc < min(fr, vals[-1]):
            verts[-1], vals[-1] = xc, fc
            continue
        best = verts[0]
        for i in range(1, n + 1):
            verts[i] = clip(best + sigma * (verts[i] - best))
            vals[i] = func(verts[i])

    i = int(np.argmin(vals))
    return SimplexResult(x=verts[i], fun=float(vals[i]), iterations=it, converged=converged)
