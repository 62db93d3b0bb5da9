from itertools import product

import numpy as np
import pytest

from mubkit.errors import ContractError, UnsupportedDimension
from mubkit.galois import (
    FieldSpec,
    field_add,
    field_mul,
    galois_mub_set,
    is_irreducible,
    lowest_irreducible,
    quadratic_phase_basis,
    trace,
)
from mubkit.hadamard import fourier
from mubkit.mub import overlap_table, verify_set
from mubkit.weyl import weyl_mub_set

FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (2, 3), (5, 2), (3, 3)]


def poly_mul_mod_oracle(a, b, modulus, p):
    """Schoolbook product followed by repeated substitution of t^n."""
    n = len(modulus) - 1
    prod = [0] * (2 * n)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] += x * y
    # t^n = -(m_0 + m_1 t + ... + m_{n-1} t^{n-1})
    for deg in range(len(prod) - 1, n - 1, -1):
        c = prod[deg]
        prod[deg] = 0
        for k in range(n):
            prod[deg - n + k] -= c * modulus[k]
    return tuple(x % p for x in prod[:n])


def test_prime_field_addition():
    f = FieldSpec.create(3)
    assert field_add(f.element(2), f.element(2)) == f.element(1)


def test_gf9_t_squared():
    f = FieldSpec(3, 2, (1, 0, 1))  # t^2 + 1
    t = f.generator
    assert field_mul(t, t) == f.element(2)
    assert poly_mul_mod_oracle((0, 1), (0, 1), (1, 0, 1), 3) == (2, 0)


@pytest.mark.parametrize("p,n", FIELDS)
def test_multiplication_matches_oracle(p, n):
    f = FieldSpec.create(p, n)
    for a in f.elements:
        for b in f.elements:
            assert (a * b).coeffs == poly_mul_mod_oracle(a.coeffs, b.coeffs, f.modulus, p)
        assert a * f.one == a


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (2, 3), (5, 1), (3, 3)])
def test_field_axioms_exhaustive(p, n):
    f = FieldSpec.create(p, n)
    els = f.elements
    for a, b in product(els, repeat=2):
        assert a + b == b + a and a * b == b * a
    for a, b, c in product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a in els:
        assert a + f.zero == a and a + (-a) == f.zero
        if not a.is_zero():
            assert a * a.inverse() == f.one


def test_field_axioms_gf81_inverses():
    f = FieldSpec.create(3, 4)
    assert f.order == 81
    for a in f.elements[1:]:
        assert a * a.inverse() == f.one


def test_lowest_irreducibles():
    assert lowest_irreducible(3, 2) == (1, 0, 1)
    assert lowest_irreducible(2, 2) == (1, 1, 1)
    assert lowest_irreducible(2, 3) == (1, 1, 0, 1)
    assert not is_irreducible((2, 0, 1), 3)  # t^2 + 2 = (t - 1)(t + 1)
    with pytest.raises(ContractError):
        FieldSpec(3, 2, (2, 0, 1))


def test_mixed_fields_rejected():
    with pytest.raises(ContractError):
        FieldSpec.create(3).one + FieldSpec.create(5).one


def test_trace_basics():
    f = FieldSpec.create(3)
    assert trace(f.zero) == 0
    assert [trace(x) for x in f.elements] == [0, 1, 2]


def test_trace_gf9_by_brute_force():
    f = FieldSpec(3, 2, (1, 0, 1))
    t = f.generator
    brute = t + t * t * t
    assert brute.coeffs[1] == 0
    assert trace(t) == brute.coeffs[0] == 0
    assert trace(f.one) == 2  # 1 + 1


@pytest.mark.parametrize("p,n", [(3, 2), (2, 2), (2, 3), (5, 2), (3, 4)])
def test_trace_linearity_and_frobenius(p, n):
    f = FieldSpec.create(p, n)
    els = f.elements
    for x, y in product(els, repeat=2):
        assert trace(x + y) == (trace(x) + trace(y)) % p
    for c in range(p):
        for x in els:
            assert trace(f.element(c) * x) == (c * trace(x)) % p
    for x in els:
        assert trace(x ** p) == trace(x)


def test_trace_is_onto():
    f = FieldSpec.create(3, 2)
    assert sorted(set(f.trace_table)) == [0, 1, 2]


def test_a_zero_is_fourier():
    f = FieldSpec.create(3)
    b = quadratic_phase_basis(f, f.zero)
    np.testing.assert_allclose(b.vectors, fourier(3), atol=1e-15)


def test_gf3_matches_weyl_overlaps():
    g = galois_mub_set(FieldSpec.create(3))
    w = weyl_mub_set(3)
    assert g.certified and len(g) == 4
    for (i, j) in g.pairs():
        np.testing.assert_allclose(
            overlap_table(g[i], g[j]).table, overlap_table(w[i], w[j]).table, atol=1e-12
        )


@pytest.mark.parametrize("p,n,count", [(3, 1, 4), (5, 1, 6), (7, 1, 8), (3, 2, 10)])
def test_galois_sets_certified(p, n, count):
    s = galois_mub_set(FieldSpec.create(p, n))
    assert len(s) == count
    assert verify_set(s, 1e-10).certified


def test_even_characteristic_rejected():
    f = FieldSpec.create(2, 2)
    with pytest.raises(UnsupportedDimension):
        galois_mub_set(f)
    with pytest.raises(UnsupportedDimension):
        quadratic_phase_basis(f, f.one)


def test_element_enumeration_order():
    f = FieldSpec.create(3, 2)
    assert [x.index for x in f.elements] == list(range(9))
    assert f.elements[1].coeffs == (1, 0) and f.elements[3].coeffs == (0, 1)
