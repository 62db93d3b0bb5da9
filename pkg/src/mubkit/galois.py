"""
Arithmetic in GF(p^n) and the quadratic-phase MUB construction for odd p.

Elements are coefficient tuples ``(c_0, ..., c_{n-1})`` of polynomials in t
reduced modulo a monic irreducible of degree n. Field elements are
enumerated by ``index = sum c_k p^k``; that order fixes the coordinate
labelling of every basis built here.
"""
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Tuple

import numpy as np

from .errors import ContractError, UnsupportedDimension
from .linalg import roots_of_unity
from .mub import Basis, certify, standard_basis
from .weyl import is_prime


def _poly_mod(num, den, p):
    """Remainder of ``num`` by monic ``den``; coefficients low-degree first."""
    num = list(num)
    dn = len(den) - 1
    for shift in range(len(num) - 1 - dn, -1, -1):
        lead = num[shift + dn] % p
        if lead:
            for k in range(dn + 1):
                num[shift + k] = (num[shift + k] - lead * den[k]) % p
    rem = [c % p for c in num[:dn]]
    return rem + [0] * (dn - len(rem))


def _monic_polys(p, deg):
    for tail in product(range(p), repeat=deg):
        yield tuple(reversed(tail)) + (1,)


def is_irreducible(modulus, p):
    """Exhaustive check: no monic factor of degree 1..n//2 divides ``modulus``."""
    n = len(modulus) - 1
    if n < 1 or modulus[-1] % p != 1:
        return False
    for deg in range(1, n // 2 + 1):
        for f in _monic_polys(p, deg):
            if not any(_poly_mod(modulus, f, p)):
                return False
    return True


def lowest_irreducible(p, n):
    """Lexicographically smallest monic irreducible of degree n over GF(p).

    Candidates are ordered by their coefficients read from t^{n-1} down to
    the constant term.
    """
    for poly in _monic_polys(p, n):
        if is_irreducible(poly, p):
            return poly
    raise ContractError(f"no irreducible polynomial of degree {n} over GF({p})")


@dataclass(frozen=True)
class FieldSpec:
    p: int
    n: int
    modulus: Tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ContractError(f"characteristic must be prime, got {self.p}")
        mod = tuple(int(c) % self.p for c in self.modulus)
        if len(mod) != self.n + 1 or not is_irreducible(mod, self.p):
            raise ContractError(f"modulus {self.modulus} is not a monic irreducible of degree {self.n}")
        object.__setattr__(self, "modulus", mod)

    @classmethod
    def create(cls, p, n=1):
        return cls(p, n, lowest_irreducible(p, n))

    @property
    def order(self):
        return self.p ** self.n

    def element(self, coeffs):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        coeffs = tuple(int(c) % self.p for c in coeffs)
        coeffs = coeffs + (0,) * (self.n - len(coeffs))
        return FieldElement(self, coeffs[: self.n])

    def from_index(self, idx):
        coeffs = []
        for _ in range(self.n):
            idx, c = divmod(idx, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    @cached_property
    def elements(self):
        return tuple(self.from_index(i) for i in range(self.order))

    @cached_property
    def trace_table(self):
        """``trace`` of every element, by index."""
        return tuple(trace(x) for x in self.elements)

    @property
    def zero(self):
        return self.element(0)

    @property
    def one(self):
        return self.element(1)

    @property
    def generator(self):
        """The class of t (equal to 1 when n = 1)."""
        return self.element((0, 1)) if self.n > 1 else self.one


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    coeffs: Tuple[int, ...]

    def _check(self, other):
        if isinstance(other, int):
            return self.spec.element(other)
        if not isinstance(other, FieldElement) or other.spec != self.spec:
            raise ContractError("field elements belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        p, n = self.spec.p, self.spec.n
        prod = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return FieldElement(self.spec, tuple(_poly_mod(prod, self.spec.modulus, p)))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.spec.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.spec.order - 2)

    def is_zero(self):
        return not any(self.coeffs)

    @property
    def index(self):
        return sum(c * self.spec.p ** k for k, c in enumerate(self.coeffs))

    def __repr__(self):
        terms = [f"{c}" if k == 0 else f"{c}t^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"GF({self.spec.p}^{self.spec.n})[{' + '.join(terms) or '0'}]"


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def trace(x: FieldElement) -> int:
    """Tr(x) = x + x^p + ... + x^{p^{n-1}}, returned as an integer in 0..p-1."""
    acc, y = x.spec.zero, x
    for _ in range(x.spec.n):
        acc = acc + y
        y = y ** x.spec.p
    if any(acc.coeffs[1:]):
        raise ContractError(f"trace landed outside the prime field: {acc}")
    return acc.coeffs[0]


def _require_odd(spec):
    if spec.p == 2:
        raise UnsupportedDimension("the quadratic-phase construction needs an odd characteristic")


def quadratic_phase_basis(spec: FieldSpec, a: FieldElement) -> Basis:
    """Vectors ``v_b[x] = omega^{Tr(a x^2 + b x)} / sqrt(d)`` for b over the field."""
    _require_odd(spec)
    a = spec.element(a) if isinstance(a, int) else a
    if a.spec != spec:
        raise ContractError("a belongs to a different field")
    w = roots_of_unity(spec.p)
    els = spec.elements
    d = spec.order
    tr = spec.trace_table
    quad = [tr[(a * x * x).index] for x in els]
    lin = [[tr[(b * x).index] for x in els] for b in els]
    exps = (np.array(quad)[:, None] + np.array(lin).T) % spec.p
    label = f"galois:p={spec.p}:n={spec.n}:a={a.index}"
    return Basis(w[exps] / math.sqrt(d), label)


def galois_mub_set(spec: FieldSpec):
    _require_odd(spec)
    bases = [standard_basis(spec.order, f"galois:p={spec.p}:n={spec.n}:computational")]
    bases += [quadratic_phase_basis(spec, a) for a in spec.elements]
    return certify(bases, tol=1e-10)
