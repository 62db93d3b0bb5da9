"""
Weyl shift and clock operators and the prime-dimension MUB construction.

For prime d the computational basis together with the eigenbases of
X Z^a, a = 0..d-1, is a complete set of d + 1 mutually unbiased bases.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, UnsupportedDimension
from .hadamard import fourier
from .linalg import STRUCTURAL_TOL, hermitian_eigen, normalize_phase, roots_of_unity
from .mub import Basis, certify, standard_basis

# irrational weight separating the spectra of W + W^dag and i(W - W^dag)
_SPLIT = math.pi / math.e


def is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def weyl_x(d):
    """Cyclic shift X|k> = |k+1 mod d>."""
    if d < 2:
        raise DimensionError("d must be at least 2")
    return np.roll(np.eye(d, dtype=np.complex128), 1, axis=0)


def weyl_z(d):
    """Clock Z|k> = omega^k |k>."""
    if d < 2:
        raise DimensionError("d must be at least 2")
    return np.diag(np.array(roots_of_unity(d)))


@dataclass(frozen=True)
class WeylOperator:
    dim: int
    x_power: int
    z_power: int
    matrix: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        d = self.dim
        object.__setattr__(self, "x_power", self.x_power % d)
        object.__setattr__(self, "z_power", self.z_power % d)
        m = np.linalg.matrix_power(weyl_x(d), self.x_power) @ np.linalg.matrix_power(
            weyl_z(d), self.z_power
        )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


def commutator_check(d, tol=1e-12):
    """True iff ZX = omega XZ within ``tol``."""
    x, z = weyl_x(d), weyl_z(d)
    w = roots_of_unity(d)[1]
    return bool(np.max(np.abs(z @ x - w * (x @ z))) <= tol)


def _phase_key(lam):
    ang = math.atan2(lam.imag, lam.real) % (2.0 * math.pi)
    if ang > 2.0 * math.pi - 1e-9:
        ang = 0.0
    return ang


def unitary_eigenbasis(w, tol=STRUCTURAL_TOL):
    """Eigenvectors of a unitary with a non-degenerate spectrum.

    Diagonalizes the Hermitian combination (W + W^dag) + c * i(W - W^dag)
    and orders vectors by eigenvalue phase in [0, 2 pi).
    """
    w = np.asarray(w, dtype=np.complex128)
    herm = (w + w.conj().T) + _SPLIT * 1j * (w - w.conj().T)
    _, vecs = hermitian_eigen(herm, tol)
    lams = [np.vdot(vecs[:, k], w @ vecs[:, k]) for k in range(w.shape[0])]
    order = sorted(range(len(lams)), key=lambda k: _phase_key(lams[k]))
    cols = [normalize_phase(vecs[:, k]) for k in order]
    return np.array([lams[k] for k in order]), np.column_stack(cols)


def _require_prime(d):
    if not is_prime(d):
        raise UnsupportedDimension(f"weyl requires prime dimension, got {d}")


def weyl_eigenbasis(d, z_power=0, computational=False) -> Basis:
    """Eigenbasis of X Z^z_power (or of Z when ``computational`` is set)."""
    _require_prime(d)
    if computational:
        return standard_basis(d, f"weyl:d={d}:Z")
    a = z_power % d
    label = f"weyl:d={d}:X" if a == 0 else f"weyl:d={d}:XZ^{a}" if a > 1 else f"weyl:d={d}:XZ"
    if a == 0:
        # eigenvalue of column k is omega^{-k}; reorder to ascending phase
        f = fourier(d)
        order = [0] + list(range(d - 1, 0, -1))
        return Basis(f[:, order], label)
    w = WeylOperator(d, 1, a).matrix
    lams, vecs = unitary_eigenbasis(w)
    return Basis(_refine(w, lams, vecs), label)


def _refine(w, lams, vecs):
    """Polish eigenvectors of a unitary with W^d = c*I via exact spectral projectors.

    Each estimated eigenvalue is snapped to the nearest d-th root of c and
    the vector is pushed through P = (1/d) sum_m (W / lam)^m.
    """
    d = w.shape[0]
    c = np.linalg.matrix_power(w, d)[0, 0]
    root = c ** (1.0 / d)
    candidates = root * np.array(roots_of_unity(d))
    out = np.empty_like(vecs)
    for k in range(d):
        lam = candidates[np.argmin(np.abs(candidates - lams[k]))]
        acc = np.zeros(d, dtype=np.complex128)
        term = vecs[:, k].copy()
        for _ in range(d):
            acc += term
            term = (w @ term) / lam
        acc /= np.linalg.norm(acc)
        out[:, k] = normalize_phase(acc)
    return out


def weyl_mub_set(d):
    _require_prime(d)
    bases = [weyl_eigenbasis(d, computational=True)]
    bases += [weyl_eigenbasis(d, a) for a in range(d)]
    return certify(bases, tol=STRUCTURAL_TOL)
