"""
Bases, sets of bases, and the unbiasedness verifier.

Two orthonormal bases of C^d are mutually unbiased when every cross overlap
|<e|f>|^2 equals 1/d. Certification uses the max-norm deviation from 1/d;
``defect`` gives the smooth sum-of-squares aggregate used by the search.
"""
from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .errors import DimensionError
from .linalg import STRUCTURAL_TOL, as_matrix


@dataclass(frozen=True, eq=False)
class Basis:
    """An orthonormal basis stored column-wise, with a provenance label.

    ``label`` follows ``"method:parameters"``, e.g. ``"weyl:d=3:XZ^2"``.
    """

    vectors: np.ndarray
    label: str

    def __post_init__(self):
        m = as_matrix(self.vectors).copy()
        if m.shape[0] != m.shape[1]:
            raise DimensionError(f"basis matrix must be square, got {m.shape}")
        if not self.label:
            raise ValueError("basis label is mandatory")
        m.setflags(write=False)
        object.__setattr__(self, "vectors", m)

    @property
    def dim(self):
        return self.vectors.shape[0]

    def vector(self, i):
        return self.vectors[:, i]

    def orthonormality_error(self):
        v = self.vectors
        return float(np.max(np.abs(v.conj().T @ v - np.eye(self.dim))))

    def is_orthonormal(self, tol=STRUCTURAL_TOL):
        return self.orthonormality_error() <= tol

    def __repr__(self):
        return f"Basis(dim={self.dim}, label={self.label!r})"


def standard_basis(d, label=None):
    return Basis(np.eye(d, dtype=np.complex128), label or f"standard:d={d}")


@dataclass(frozen=True)
class OverlapReport:
    pair: Tuple[int, int]
    table: np.ndarray = field(repr=False)
    max_deviation: float


class Verification(NamedTuple):
    certified: bool
    worst_pair: Optional[Tuple[int, int]]
    max_deviation: float


@dataclass(frozen=True)
class MubSet:
    """Ordered bases sharing one dimension.

    ``certified`` is only ever set by :func:`certify`, which runs
    :func:`verify_set` at ``tol``.
    """

    bases: Tuple[Basis, ...]
    certified: bool = False
    tol: float = STRUCTURAL_TOL

    def __post_init__(self):
        bases = tuple(self.bases)
        if bases:
            d = bases[0].dim
            for b in bases:
                if b.dim != d:
                    raise DimensionError(
                        f"all bases must share one dimension ({b.label} has {b.dim}, expected {d})"
                    )
        object.__setattr__(self, "bases", bases)

    @property
    def dim(self):
        if not self.bases:
            raise DimensionError("empty set has no dimension")
        return self.bases[0].dim

    def __len__(self):
        return len(self.bases)

    def __iter__(self):
        return iter(self.bases)

    def __getitem__(self, i):
        return self.bases[i]

    @property
    def labels(self):
        return [b.label for b in self.bases]

    def pairs(self):
        """Unordered index pairs in fixed lexicographic order."""
        return list(combinations(range(len(self.bases)), 2))


def _table(a: Basis, b: Basis) -> np.ndarray:
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return np.abs(a.vectors.conj().T @ b.vectors) ** 2


def overlap_table(a: Basis, b: Basis, pair=(0, 1)) -> OverlapReport:
    """Squared-modulus overlaps ``|<a_i|b_j>|^2`` and their worst deviation from 1/d."""
    t = _table(a, b)
    t.setflags(write=False)
    dev = float(np.max(np.abs(t - 1.0 / a.dim)))
    return OverlapReport(pair=tuple(pair), table=t, max_deviation=dev)


def is_unbiased_pair(a: Basis, b: Basis, tol=STRUCTURAL_TOL) -> bool:
    return overlap_table(a, b).max_deviation <= tol


def pair_reports(s: MubSet):
    return [overlap_table(s[i], s[j], pair=(i, j)) for i, j in s.pairs()]


def verify_set(s: MubSet, tol=STRUCTURAL_TOL, ortho_tol=STRUCTURAL_TOL) -> Verification:
    """Check every basis for orthonormality and every unordered pair for unbiasedness.

    ``worst_pair`` is the first pair (in lexicographic order) attaining the
    largest deviation; it is ``None`` for a single-basis set.
    """
    if len(s) == 0:
        raise ValueError("cannot verify an empty set")
    ok = all(b.is_orthonormal(ortho_tol) for b in s)
    worst, worst_dev = None, 0.0
    for rep in pair_reports(s):
        if worst is None or rep.max_deviation > worst_dev:
            worst, worst_dev = rep.pair, rep.max_deviation
    ok = ok and worst_dev <= tol
    return Verification(bool(ok), worst, float(worst_dev))


def certify(bases: Sequence[Basis], tol=STRUCTURAL_TOL) -> MubSet:
    s = MubSet(tuple(bases), tol=tol)
    v = verify_set(s, tol)
    return MubSet(s.bases, certified=v.certified, tol=tol)


def defect(s: MubSet) -> float:
    """Sum over basis pairs of ``sum_ij (|<a_i|b_j>|^2 - 1/d)^2``; zero iff exactly unbiased."""
    if len(s) < 2:
        return 0.0
    total = 0.0
    for i, j in s.pairs():
        total += float(np.sum((_table(s[i], s[j]) - 1.0 / s.dim) ** 2))
    return total


def transition_matrix(a: Basis, b: Basis) -> np.ndarray:
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return a.vectors.conj().T @ b.vectors
