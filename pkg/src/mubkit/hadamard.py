"""
Real and complex Hadamard matrices and diagonal phase matrices.

``hadamard2``/``hadamard4`` return the raw +-1 matrices; callers normalize.
Phases attach to vector components, so a phased basis is ``D(p) @ h``
(left multiplication). Right multiplication would only rephase whole
columns, which never changes an overlap.
"""
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import ContractError, DimensionError
from .linalg import STRUCTURAL_TOL, as_matrix, is_unitary, roots_of_unity, tensor
from .mub import Basis, certify, standard_basis

TWO_PI = 2.0 * math.pi


def wrap_angle(x):
    r = math.fmod(float(x), TWO_PI)
    if r < 0.0:
        r += TWO_PI
    if r >= TWO_PI:
        r = 0.0
    return r


@dataclass(frozen=True)
class PhaseVector:
    """A point on the torus T^(d-1): phases of entries 2..d of diag(1, e^{i p_1}, ...)."""

    dim: int
    phases: Tuple[float, ...]

    def __post_init__(self):
        phases = tuple(wrap_angle(x) for x in self.phases)
        if self.dim < 1 or len(phases) != self.dim - 1:
            raise DimensionError(f"dimension {self.dim} needs {self.dim - 1} phases, got {len(phases)}")
        object.__setattr__(self, "phases", phases)

    @classmethod
    def of(cls, phases):
        phases = [float(x) for x in phases]
        return cls(len(phases) + 1, tuple(phases))

    @classmethod
    def zero(cls, dim):
        return cls(dim, (0.0,) * (dim - 1))

    def diagonal(self):
        angles = np.concatenate(([0.0], self.phases))
        return np.exp(1j * angles)


def hadamard2():
    return np.array([[1, 1], [1, -1]], dtype=np.complex128)


def hadamard4():
    return tensor(hadamard2(), hadamard2())


def fourier(d):
    """Unitary DFT matrix with entries omega^{jk} / sqrt(d)."""
    if d < 1:
        raise DimensionError("d must be positive")
    w = roots_of_unity(d)
    k = np.arange(d)
    return w[np.outer(k, k) % d] / math.sqrt(d)


def phase_diag(p: PhaseVector):
    return np.diag(p.diagonal())


def _has_constant_modulus(m, tol):
    return bool(np.max(np.abs(np.abs(m) - 1.0 / math.sqrt(m.shape[0]))) <= tol)


def phased_basis(h, p: PhaseVector, label=None) -> Basis:
    """Basis whose i-th vector has components ``d_m(p) * h[m, i]``."""
    h = as_matrix(h)
    if h.shape[0] != h.shape[1] or p.dim != h.shape[0]:
        raise DimensionError(f"phase vector of dim {p.dim} does not fit a {h.shape} matrix")
    if not _has_constant_modulus(h, STRUCTURAL_TOL):
        raise ContractError("phased_basis needs a normalized matrix with constant-modulus entries")
    if label is None:
        label = f"phased:d={p.dim}:" + ",".join(repr(x) for x in p.phases)
    return Basis(p.diagonal()[:, None] * h, label)


def is_complex_hadamard(m, tol=STRUCTURAL_TOL):
    """Normalized convention: every |m_ij| = 1/sqrt(d) and m unitary."""
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"matrix must be square, got shape {m.shape}")
    return _has_constant_modulus(m, tol) and is_unitary(m, tol)


def dephase(m, tol=1e-8):
    """Rephase rows and columns so the first row and first column are real-positive."""
    m = as_matrix(m)
    if not is_complex_hadamard(m, tol):
        raise ContractError("dephase expects a complex Hadamard matrix")
    row0 = m[0, :]
    if np.min(np.abs(row0)) < tol:
        raise ContractError("cannot dephase: vanishing entry in first row")
    m = m * (np.abs(row0) / row0)[None, :]
    col0 = m[:, 0]
    if np.min(np.abs(col0)) < tol:
        raise ContractError("cannot dephase: vanishing entry in first column")
    m = m * (np.abs(col0) / col0)[:, None]
    # the corner was made positive twice; clean residual imaginary dust
    m[0, :] = m[0, :].real
    m[:, 0] = m[:, 0].real
    return m


def qubit_triple():
    """Standard, Hadamard and circular bases of C^2, certified."""
    s = 1.0 / math.sqrt(2.0)
    circular = np.array([[1, 1], [1j, -1j]], dtype=np.complex128) * s
    return certify(
        [
            standard_basis(2),
            Basis(hadamard2() * s, "hadamard:d=2"),
            Basis(circular, "circular:d=2"),
        ],
        tol=1e-12,
    )
