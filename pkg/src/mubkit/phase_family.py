"""
The d = 4 family B(theta) = D(theta) H4 / 2 on the 3-torus.

For columns i, j the overlap between B(theta) and B(theta') depends only on
the phase differences and on the sign pattern eps_m = H[m,i] H[m,j]:

    <v_i(theta)|v_j(theta')> = (1 + eps2 e^{i da} + eps3 e^{i db} + eps4 e^{i dg}) / 4

``trig_criterion`` expands |4 <v_i|v_j>|^2 - 4 into cosines, so it vanishes
exactly when that overlap has squared modulus 1/4.
"""
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Tuple

import numpy as np

from .hadamard import PhaseVector, hadamard4, phased_basis
from .mub import Basis

_H4 = hadamard4().real.astype(int)


@dataclass(frozen=True)
class SignConfig:
    pair: Tuple[int, int]
    eps: Tuple[int, int, int]

    @property
    def k(self):
        """Sign sum eps2 + eps3 + eps4 (3 for i == j, -1 otherwise)."""
        return sum(self.eps)


@dataclass(frozen=True)
class PhaseDelta:
    delta: Tuple[float, float, float]

    def __post_init__(self):
        d = tuple(float(x) for x in self.delta)
        if len(d) != 3 or not all(math.isfinite(x) for x in d):
            raise ValueError(f"need three finite phase differences, got {self.delta}")
        object.__setattr__(self, "delta", d)

    @classmethod
    def of(cls, *delta):
        return cls(tuple(delta))


def _as_delta(d):
    return d if isinstance(d, PhaseDelta) else PhaseDelta(tuple(d))


def sign_config(i, j) -> SignConfig:
    """Sign pattern of columns i, j of the raw H4 (1-based), rows 2..4."""
    if not (1 <= i <= 4 and 1 <= j <= 4):
        raise IndexError(f"column indices must lie in 1..4, got ({i}, {j})")
    col_i = _H4[:, i - 1]
    col_j = _H4[:, j - 1]
    eps = tuple(int(x) for x in col_i[1:] * col_j[1:])
    return SignConfig((i, j), eps)


def all_sign_configs():
    return [sign_config(i, j) for i in range(1, 5) for j in range(1, 5)]


def overlap_from_phases(cfg: SignConfig, d) -> complex:
    d = _as_delta(d)
    terms = [1.0] + [e * complex(math.cos(x), math.sin(x)) for e, x in zip(cfg.eps, d.delta)]
    return sum(terms) / 4.0


def trig_sum(cfg: SignConfig, d) -> float:
    """eps2 cos da + eps3 cos db + eps4 cos dg + sum over pairs eps_m eps_n cos(d_m - d_n)."""
    d = _as_delta(d)
    total = sum(e * math.cos(x) for e, x in zip(cfg.eps, d.delta))
    for (e1, x1), (e2, x2) in combinations(zip(cfg.eps, d.delta), 2):
        total += e1 * e2 * math.cos(x1 - x2)
    return total


def trig_criterion(cfg: SignConfig, d) -> float:
    """|4 <v_i|v_j>|^2 - 4, evaluated through the cosine expansion.

    Expanding the squared modulus of a four-term sum gives
    4 + 2 * trig_sum, hence the factor of two.
    """
    return 2.0 * trig_sum(cfg, d)


def is_unbiased_family_pair(d, tol=1e-12) -> bool:
    """All 16 column pairs satisfy the criterion, i.e. both the k = 3 and k = -1 classes."""
    d = _as_delta(d)
    return all(abs(trig_criterion(cfg, d)) <= tol for cfg in all_sign_configs())


def symmetric_case_solutions(k, tol=1e-12):
    """All Delta in [0, 2 pi) with |1 + k e^{i Delta}|^2 = 4, i.e. cos Delta = (3 - k^2) / (2k)."""
    if k == 0:
        return frozenset()
    c = (3 - k * k) / (2.0 * k)
    if abs(c) > 1.0 + tol:
        return frozenset()
    c = max(-1.0, min(1.0, c))
    if c == -1.0:
        return frozenset({math.pi})
    if c == 1.0:
        return frozenset({0.0})
    a = math.acos(c)
    return frozenset({a, 2.0 * math.pi - a})


def family_basis(alpha, beta, gamma) -> Basis:
    """The basis D(alpha, beta, gamma) H4 / 2."""
    p = PhaseVector(4, (alpha, beta, gamma))
    return phased_basis(hadamard4() / 2.0, p, label=f"family4:{alpha!r},{beta!r},{gamma!r}")


def criterion_by_class(d):
    """Criterion value for each distinct sign pattern, with the column pairs sharing it."""
    d = _as_delta(d)
    groups = {}
    for cfg in all_sign_configs():
        groups.setdefault(cfg.eps, []).append(cfg.pair)
    out = []
    for eps, pairs in groups.items():
        cfg = SignConfig(pairs[0], eps)
        out.append((cfg, pairs, trig_criterion(cfg, d)))
    return out


def criterion_grid(n=10):
    """Uniform n^3 grid of phase-difference triples on [0, 2 pi)^3."""
    t = 2.0 * np.pi * np.arange(n) / n
    return [PhaseDelta((a, b, c)) for a in t for b in t for c in t]
