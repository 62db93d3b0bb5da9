"""
Dimension 6: the Fourier family D(theta) F6 on the 5-torus and a seeded
phase search.

Every member of the family is unbiased to the standard basis. Whether a
further member is unbiased to a given set reduces to 36 equations in the
phase differences; ``search_additional_basis`` minimizes their squared
residuals with restarted Nelder-Mead. The report is descriptive only.
"""
import math
from dataclasses import asdict, dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from .errors import DimensionError
from .hadamard import PhaseVector, fourier, phased_basis
from .linalg import roots_of_unity, tensor
from .mub import Basis, MubSet, certify, pair_reports, standard_basis, verify_set
from .optimize import nelder_mead
from .rng import SplitMix64
from .weyl import weyl_mub_set

D = 6
_F6 = fourier(D)


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 0
    restarts: int = 8
    max_iters: int = 2000
    target_bases: int = 2
    tol: float = 1e-20
    step: float = 0.5

    def __post_init__(self):
        if self.restarts < 1 or self.max_iters < 1:
            raise ValueError("restarts and max_iters must be positive")
        if self.target_bases < 2:
            raise ValueError("target_bases must be at least 2")


@dataclass
class SearchReport:
    best_phases: List[PhaseVector]
    best_defect: float
    iterations_used: int
    history: List[Tuple[int, float]]
    best_restart: int
    restarts_run: int
    config: SearchConfig = field(default=None)

    def to_dict(self):
        return {
            "best_phases": [list(p.phases) for p in self.best_phases],
            "best_defect": self.best_defect,
            "iterations_used": self.iterations_used,
            "best_restart": self.best_restart,
            "restarts_run": self.restarts_run,
            "history": [[i, v] for i, v in self.history],
            "config": asdict(self.config) if self.config else None,
        }


def _phase_vector(theta) -> PhaseVector:
    if isinstance(theta, PhaseVector):
        if theta.dim != D:
            raise DimensionError(f"expected a phase vector of dimension 6, got {theta.dim}")
        return theta
    theta = tuple(float(x) for x in theta)
    if len(theta) != D - 1:
        raise DimensionError(f"expected 5 phases, got {len(theta)}")
    return PhaseVector(D, theta)


def fourier_family_basis(theta) -> Basis:
    """Basis with components ``e^{i theta_m} [F6]_{m,i}`` (theta_0 = 0)."""
    p = _phase_vector(theta)
    label = "fourier6:" + ",".join(repr(x) for x in p.phases)
    return phased_basis(_F6, p, label=label)


def pair_defect(theta, theta2) -> float:
    """Sum over the 36 column pairs of (|<v_i(theta)|v_j(theta2)>|^2 - 1/6)^2.

    Uses the closed form: the (i, j) overlap is
    (1/6) sum_k e^{i(theta2_k - theta_k)} omega^{k(j - i)}, so it only
    depends on (j - i) mod 6 and each value occurs six times.
    """
    a = np.concatenate(([0.0], _phase_vector(theta).phases))
    b = np.concatenate(([0.0], _phase_vector(theta2).phases))
    z = np.exp(1j * (b - a))
    w = roots_of_unity(D)
    total = 0.0
    for m in range(D):
        c = sum(z[k] * w[(k * m) % D] for k in range(D)) / D
        total += D * (abs(c) ** 2 - 1.0 / D) ** 2
    return float(total)


def tensor_mub_triple() -> MubSet:
    """Three MUBs in C^6: the i-th qubit basis tensored with the i-th qutrit basis."""
    two = weyl_mub_set(2)
    three = weyl_mub_set(3)
    bases = [
        Basis(tensor(two[i].vectors, three[i].vectors), f"tensor6:{two[i].label}(x){three[i].label}")
        for i in range(3)
    ]
    return certify(bases, tol=1e-10)


def chirp_phases():
    """theta_k = pi k^2 / 6: the Fourier-family member unbiased to F6 itself."""
    return PhaseVector(D, tuple(math.pi * k * k / D for k in range(1, D)))


def base_set(name) -> MubSet:
    if name == "standard":
        return certify([standard_basis(D)])
    if name == "standard+fourier":
        return certify([standard_basis(D), Basis(_F6, "fourier:d=6")])
    if name == "tensor-triple":
        return tensor_mub_triple()
    raise ValueError(f"unknown base set {name!r}")


BASE_SETS = ("standard", "standard+fourier", "tensor-triple")


def _objective(existing: MubSet, n_new):
    edag = np.stack([b.vectors.conj().T for b in existing]) if len(existing) else None
    inv = 1.0 / D

    def f(x):
        x = np.asarray(x).reshape(n_new, D - 1)
        news = [np.exp(1j * np.concatenate(([0.0], row)))[:, None] * _F6 for row in x]
        total = 0.0
        for v in news:
            if edag is not None:
                total += float(np.sum((np.abs(edag @ v) ** 2 - inv) ** 2))
        for i in range(n_new):
            for j in range(i + 1, n_new):
                total += float(np.sum((np.abs(news[i].conj().T @ news[j]) ** 2 - inv) ** 2))
        return total

    return f


def search_additional_basis(existing: MubSet, cfg: SearchConfig = SearchConfig()) -> SearchReport:
    """Look for Fourier-family bases unbiased to ``existing`` (and to each other).

    The number of new bases is ``max(1, cfg.target_bases - len(existing))``.
    Each restart starts from a uniform point drawn from its own generator
    stream derived from ``cfg.seed``; restarts stop early once a defect of at
    most ``cfg.tol`` is reached. Ties between restarts go to the lower index.
    """
    if len(existing) and existing.dim != D:
        raise DimensionError(f"search runs in dimension 6, got {existing.dim}")
    n_new = max(1, cfg.target_bases - len(existing))
    f = _objective(existing, n_new)
    root = SplitMix64(cfg.seed)

    best = None
    history = []
    used = 0
    run = 0
    for r in range(cfg.restarts):
        gen = root.stream(r)
        x0 = np.array(gen.uniform(0.0, 2.0 * math.pi, n_new * (D - 1)))
        res = nelder_mead(f, x0, step=cfg.step, max_iters=cfg.max_iters, target=cfg.tol)
        history.extend((used + i, v) for i, v in res.history)
        used += res.iterations
        run += 1
        if best is None or res.fun < best[1]:
            best = (res.x, res.fun, r)
        if best[1] <= cfg.tol:
            break

    x, fun, r = best
    phases = [PhaseVector(D, tuple(row)) for row in x.reshape(n_new, D - 1)]
    return SearchReport(phases, float(fun), used, history, r, run, cfg)


def extend_set(existing: MubSet, phases: Sequence[PhaseVector], tol=1e-10) -> MubSet:
    return certify(list(existing) + [fourier_family_basis(p) for p in phases], tol=tol)


def check_candidate(thetas, tol=1e-10):
    """Standard basis plus one family basis per phase vector; verify every pair."""
    bases = [standard_basis(D)] + [fourier_family_basis(t) for t in thetas]
    s = MubSet(tuple(bases))
    v = verify_set(s, tol)
    return v.certified, pair_reports(s)
