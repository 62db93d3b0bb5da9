"""
Nelder-Mead simplex minimization with a recorded trajectory.

Standard coefficients (reflection 1, expansion 2, contraction 1/2,
shrink 1/2). Ties are broken by vertex index, so a run is a pure function
of its inputs.
"""
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np


@dataclass
class SimplexResult:
    x: np.ndarray
    fun: float
    iterations: int
    evaluations: int
    history: List[Tuple[int, float]] = field(default_factory=list)


def nelder_mead(func, x0, step=0.5, max_iters=2000, ftol=1e-22, xtol=1e-13, target=None,
                record_every=100):
    """Minimize ``func`` from ``x0``.

    Stops after ``max_iters`` iterations, when the spread of function values
    over the simplex drops to ``ftol`` and the simplex diameter to ``xtol``,
    or as soon as the best value reaches ``target``. ``history`` holds
    ``(iteration, best value)`` every ``record_every`` iterations and at exit.
    """
    x0 = np.asarray(x0, dtype=float)
    n = x0.size
    pts = [x0.copy()]
    for i in range(n):
        p = x0.copy()
        p[i] += step
        pts.append(p)
    vals = [float(func(p)) for p in pts]
    evals = n + 1
    history = []

    def order():
        idx = sorted(range(n + 1), key=lambda k: (vals[k], k))
        return [pts[k] for k in idx], [vals[k] for k in idx]

    it = 0
    while True:
        pts, vals = order()
        if it % record_every == 0:
            history.append((it, vals[0]))
        if it >= max_iters:
            break
        if target is not None and vals[0] <= target:
            break
        if vals[-1] - vals[0] <= ftol and max(np.max(np.abs(p - pts[0])) for p in pts[1:]) <= xtol:
            break
        it += 1

        centroid = np.sum(pts[:-1], axis=0) / n
        worst = pts[-1]
        xr = centroid + (centroid - worst)
        fr = float(func(xr))
        evals += 1
        if fr < vals[0]:
            xe = centroid + 2.0 * (centroid - worst)
            fe = float(func(xe))
            evals += 1
            if fe < fr:
                pts[-1], vals[-1] = xe, fe
            else:
                pts[-1], vals[-1] = xr, fr
            continue
        if fr < vals[-2]:
            pts[-1], vals[-1] = xr, fr
            continue
        if fr < vals[-1]:
            xc = centroid + 0.5 * (xr - centroid)
            fc = float(func(xc))
            evals += 1
            if fc <= fr:
                pts[-1], vals[-1] = xc, fc
                continue
        else:
            xc = centroid + 0.5 * (worst - centroid)
            fc = float(func(xc))
            evals += 1
            if fc < vals[-1]:
                pts[-1], vals[-1] = xc, fc
                continue
        best = pts[0]
        for k in range(1, n + 1):
            pts[k] = best + 0.5 * (pts[k] - best)
            vals[k] = float(func(pts[k]))
        evals += n

    if not history or history[-1][0] != it:
        history.append((it, vals[0]))
    return SimplexResult(pts[0].copy(), vals[0], it, evals, history)
