"""
Small dense complex linear algebra.

Matrices are plain ``numpy`` complex128 arrays. Everything here targets
d <= 16, so clarity wins over speed; the eigensolver is a cyclic complex
Jacobi iteration rather than a LAPACK call.
"""
from functools import lru_cache

import numpy as np

from .errors import ContractError, DimensionError

STRUCTURAL_TOL = 1e-10
EXACT_TOL = 1e-12
DEGENERACY_TOL = 1e-8


def as_matrix(m):
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or 0 in a.shape:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {a.shape}")
    return a


def _require_square(m):
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"matrix must be square, got shape {m.shape}")


@lru_cache(maxsize=None)
def _roots(d):
    k = np.arange(d)
    w = np.exp(2j * np.pi * k / d)
    # pin the values that have exact representations
    w[0] = 1.0
    if d % 2 == 0:
        w[d // 2] = -1.0
    if d % 4 == 0:
        w[d // 4] = 1j
        w[3 * d // 4] = -1j
    w.setflags(write=False)
    return w


def roots_of_unity(d):
    """Return ``omega**k`` for ``k = 0..d-1`` with ``omega = exp(2 pi i / d)``.

    The array is cached and read-only, so repeated powers are bit-identical
    across calls.
    """
    if d < 1:
        raise DimensionError("d must be positive")
    return _roots(int(d))


def omega_power(d, k):
    return roots_of_unity(d)[int(k) % d]


def inner_product(u, v):
    """Conjugate-linear in the first argument: sum(conj(u) * v)."""
    u = np.asarray(u, dtype=np.complex128).ravel()
    v = np.asarray(v, dtype=np.complex128).ravel()
    if u.shape != v.shape:
        raise DimensionError(f"vector lengths differ: {u.size} vs {v.size}")
    return complex(np.vdot(u, v))


def tensor(a, b):
    """Kronecker product of two matrices."""
    return np.kron(as_matrix(a), as_matrix(b))


def dagger(m):
    return np.conj(as_matrix(m)).T


def is_unitary(m, tol=STRUCTURAL_TOL):
    m = as_matrix(m)
    _require_square(m)
    err = m.conj().T @ m - np.eye(m.shape[0])
    return bool(np.max(np.abs(err)) <= tol)


def is_hermitian(m, tol=STRUCTURAL_TOL):
    m = as_matrix(m)
    _require_square(m)
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def gram_schmidt(vectors):
    """Modified Gram-Schmidt on the columns of ``vectors``."""
    q = np.array(vectors, dtype=np.complex128, copy=True)
    for k in range(q.shape[1]):
        for j in range(k):
            q[:, k] -= np.vdot(q[:, j], q[:, k]) * q[:, j]
        norm = np.linalg.norm(q[:, k])
        if norm == 0.0:
            raise ContractError("columns are linearly dependent")
        q[:, k] /= norm
    return q


def _off_norm(a):
    off = a - np.diag(np.diag(a))
    return np.sqrt(np.sum(np.abs(off) ** 2))


def _rotate(a, v, p, q):
    apq = a[p, q]
    r = abs(apq)
    phase = apq / r
    app = a[p, p].real
    aqq = a[q, q].real
    # real symmetric 2x2 problem [[app, r], [r, aqq]] after rephasing q
    zeta = (aqq - app) / (2.0 * r)
    t = np.copysign(1.0, zeta) / (abs(zeta) + np.hypot(1.0, zeta))
    c = 1.0 / np.hypot(1.0, t)
    s = t * c
    # U acts on columns p, q: U = diag(1, conj(phase)) @ [[c, s], [-s, c]]
    u_pp, u_pq = c, s
    u_qp, u_qq = -s * np.conj(phase), c * np.conj(phase)

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = col_p * u_pp + col_q * u_qp
    a[:, q] = col_p * u_pq + col_q * u_qq
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = np.conj(u_pp) * row_p + np.conj(u_qp) * row_q
    a[q, :] = np.conj(u_pq) * row_p + np.conj(u_qq) * row_q
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real

    vp = v[:, p].copy()
    vq = v[:, q].copy()
    v[:, p] = vp * u_pp + vq * u_qp
    v[:, q] = vp * u_pq + vq * u_qq


def hermitian_eigen(m, tol=STRUCTURAL_TOL, max_sweeps=64):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues ascending and
    eigenvectors as orthonormal columns. Vectors belonging to a cluster of
    eigenvalues closer than ``DEGENERACY_TOL`` are re-orthonormalized.
    """
    a = as_matrix(m).copy()
    _require_square(a)
    if not is_hermitian(a, tol):
        raise ContractError("hermitian_eigen requires a Hermitian matrix")
    n = a.shape[0]
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=np.complex128)

    scale = max(np.linalg.norm(a), 1.0)
    threshold = 1e-15 * scale
    for _ in range(max_sweeps):
        if _off_norm(a) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > 1e-300:
                    _rotate(a, v, p, q)
    else:
        if _off_norm(a) > 1e3 * threshold:
            raise ContractError("Jacobi iteration did not converge")

    evals = np.diag(a).real.copy()
    order = np.argsort(evals, kind="stable")
    evals = evals[order]
    v = v[:, order]

    start = 0
    for k in range(1, n + 1):
        if k == n or evals[k] - evals[k - 1] >= DEGENERACY_TOL:
            if k - start > 1:
                v[:, start:k] = gram_schmidt(v[:, start:k])
            start = k
    return evals, v


def normalize_phase(vec, tol=STRUCTURAL_TOL):
    """Rescale so the first component with modulus above ``tol`` is real-positive."""
    vec = np.asarray(vec, dtype=np.complex128)
    for x in vec:
        if abs(x) > tol:
            return vec * (abs(x) / x)
    return vec.copy()
