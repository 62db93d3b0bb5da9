"""
Two-qubit Pauli operators and the complete set of five MUBs in C^4.

Each of the five commuting classes below fixes a basis as the joint
eigenbasis of its two generators. The classes partition the fifteen
non-identity Paulis into disjoint triples (generators plus their product),
which is what makes the five eigenbases mutually unbiased.

The tempting pairs {XX, YY} and {XY, YX} also commute, but both generate
Z(x)Z, already in class 1; their joint eigenbasis is the Bell basis, which
is *not* unbiased to the computational basis. They are kept in
``BELL_TYPE_CLASSES`` for comparison only.
"""
import math
from dataclasses import dataclass
from typing import NamedTuple, Tuple

import numpy as np

from .errors import ContractError
from .linalg import STRUCTURAL_TOL, hermitian_eigen, normalize_phase, tensor
from .mub import Basis, certify

SIGMA = {
    "I": np.eye(2, dtype=np.complex128),
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}

_MIX = math.pi * math.e


class PauliLabel(NamedTuple):
    first: str
    second: str

    @classmethod
    def parse(cls, s):
        if len(s) != 2 or any(c not in SIGMA for c in s.upper()):
            raise ValueError(f"not a two-qubit Pauli label: {s!r}")
        return cls(s[0].upper(), s[1].upper())

    def __str__(self):
        return self.first + self.second


def pauli_matrix(label) -> np.ndarray:
    if isinstance(label, str):
        label = PauliLabel.parse(label)
    return tensor(SIGMA[label.first], SIGMA[label.second])


@dataclass(frozen=True)
class CommutingClass:
    id: int
    generators: Tuple[PauliLabel, PauliLabel]

    def __post_init__(self):
        a, b = (pauli_matrix(g) for g in self.generators)
        if np.any(a @ b - b @ a):
            raise ContractError(f"class {self.id} generators do not commute")

    @property
    def label(self):
        return "{" + ",".join(str(g) for g in self.generators) + "}"


_CLASSES = (
    ("ZI", "IZ"),
    ("XI", "IX"),
    ("YI", "IY"),
    ("XY", "YZ"),  # product: -ZX
    ("YX", "ZY"),  # product: -XZ
)

BELL_TYPE_CLASSES = (
    ("XX", "YY"),
    ("XY", "YX"),
)


def _build(pairs, first_id=1):
    return [
        CommutingClass(first_id + k, (PauliLabel.parse(a), PauliLabel.parse(b)))
        for k, (a, b) in enumerate(pairs)
    ]


def commuting_classes():
    return _build(_CLASSES)


def bell_type_classes():
    """Commuting pairs whose eigenbases overlap class 1 (numbered 4 and 5)."""
    return _build(BELL_TYPE_CLASSES, first_id=4)


def class_group(c: CommutingClass):
    """The three non-identity labels spanned by a class, up to sign."""
    a, b = c.generators
    prod = pauli_matrix(a) @ pauli_matrix(b)
    for l1 in SIGMA:
        for l2 in SIGMA:
            m = pauli_matrix(PauliLabel(l1, l2))
            if abs(abs(np.vdot(m, prod)) - 4.0) < 1e-12:
                return {str(a), str(b), l1 + l2}
    raise ContractError("product of generators is not a Pauli operator")


def joint_eigenbasis(c: CommutingClass, tol=STRUCTURAL_TOL) -> Basis:
    """Common eigenbasis of a commuting pair A, B.

    Diagonalizes A + (pi e) B; the weight separates all four (+-1, +-1)
    eigenvalue pairs. Vectors are ordered by (lambda_A, lambda_B) in the
    order (+,+), (+,-), (-,+), (-,-), and each is rephased so its first
    nonzero component is real-positive.
    """
    a, b = (pauli_matrix(g) for g in c.generators)
    if np.max(np.abs(a @ b - b @ a)) > tol:
        raise ContractError("joint_eigenbasis requires commuting generators")
    _, vecs = hermitian_eigen(a + _MIX * b, tol)
    cols = []
    for k in range(vecs.shape[1]):
        v = vecs[:, k]
        la = np.vdot(v, a @ v).real
        lb = np.vdot(v, b @ v).real
        if max(np.linalg.norm(a @ v - la * v), np.linalg.norm(b @ v - lb * v)) > tol:
            raise ContractError(f"class {c.id}: joint eigenvector residual above {tol}")
        cols.append((-la, -lb, normalize_phase(v)))
    cols.sort(key=lambda t: (t[0], t[1]))
    return Basis(np.column_stack([v for *_, v in cols]), f"pauli:d=4:class={c.id}:{c.label}")


def pauli_mub_set():
    return certify([joint_eigenbasis(c) for c in commuting_classes()], tol=STRUCTURAL_TOL)
