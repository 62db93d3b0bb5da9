import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mubkit.hadamard import PhaseVector, hadamard4, phase_diag, phased_basis
from mubkit.mub import Basis, is_unbiased_pair, overlap_table, standard_basis
from mubkit.phase_family import (
    PhaseDelta,
    SignConfig,
    all_sign_configs,
    criterion_by_class,
    criterion_grid,
    family_basis,
    is_unbiased_family_pair,
    overlap_from_phases,
    sign_config,
    symmetric_case_solutions,
    trig_criterion,
    trig_sum,
)

PI = math.pi
H4 = hadamard4().real


def test_sign_config_diagonal():
    cfg = sign_config(1, 1)
    assert cfg.eps == (1, 1, 1) and cfg.k == 3


def test_sign_config_12():
    cfg = sign_config(1, 2)
    # rows 2-4 of columns (1,1,1,1) and (1,-1,1,-1)
    assert cfg.eps == (-1, 1, -1) and cfg.k == -1


def test_off_diagonal_sign_sums():
    for i in range(1, 5):
        for j in range(1, 5):
            cfg = sign_config(i, j)
            assert cfg.k == (3 if i == j else -1)
            if i != j:
                assert 1 + sum(cfg.eps) == 0


def test_sign_config_matches_entrywise_products():
    for cfg in all_sign_configs():
        i, j = cfg.pair
        assert cfg.eps == tuple(int(H4[m, i - 1] * H4[m, j - 1]) for m in (1, 2, 3))


def test_sign_config_range():
    with pytest.raises(IndexError):
        sign_config(0, 1)
    with pytest.raises(IndexError):
        sign_config(1, 5)


def test_overlap_examples():
    assert overlap_from_phases(SignConfig((1, 1), (1, 1, 1)), (0, 0, 0)) == 1
    assert overlap_from_phases(SignConfig((1, 2), (-1, 1, -1)), (0, 0, 0)) == 0
    ov = overlap_from_phases(SignConfig((1, 1), (1, 1, 1)), (PI, PI, PI))
    assert abs(ov - (-0.5)) < 1e-15
    assert abs(abs(ov) ** 2 - 0.25) < 1e-15
    # cross-check against the full matrices
    a, b = family_basis(0, 0, 0), family_basis(PI, PI, PI)
    assert abs(np.vdot(a.vector(0), b.vector(0)) - ov) < 1e-15


def test_trig_criterion_examples():
    assert trig_criterion(sign_config(1, 1), (PI, PI, PI)) == 0
    assert trig_sum(sign_config(1, 1), (0, 0, 0)) == 6
    assert trig_criterion(sign_config(1, 1), (0, 0, 0)) == 12
    # |1 + 3i|^2 - 4 = 6 at the symmetric point pi/2
    assert trig_criterion(sign_config(1, 1), (PI / 2,) * 3) == pytest.approx(6, abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(st.tuples(*[st.floats(-20, 20)] * 3), st.sampled_from(all_sign_configs()))
def test_criterion_identity(delta, cfg):
    expected = abs(4 * overlap_from_phases(cfg, delta)) ** 2 - 4
    assert abs(trig_criterion(cfg, delta) - expected) <= 1e-12


def _full_overlap(theta, theta2, i, j):
    a = family_basis(*theta)
    b = family_basis(*theta2)
    return np.vdot(a.vector(i - 1), b.vector(j - 1))


def test_formula_matches_full_matrix_seeded():
    rng = np.random.default_rng(314159)
    for _ in range(100):
        t1 = rng.uniform(0, 2 * PI, 3)
        t2 = rng.uniform(0, 2 * PI, 3)
        delta = tuple(t2 - t1)
        for cfg in all_sign_configs():
            full = _full_overlap(t1, t2, *cfg.pair)
            assert abs(overlap_from_phases(cfg, delta) - full) <= 1e-12


def test_family_pair_examples():
    assert is_unbiased_family_pair((PI, PI, PI))
    assert not is_unbiased_family_pair((0, 0, 0))
    assert not is_unbiased_family_pair((PI / 2, PI / 2, PI / 2))


def test_pi_shift_brute_force():
    rep = overlap_table(family_basis(0, 0, 0), family_basis(PI, PI, PI))
    np.testing.assert_allclose(rep.table, 0.25, atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.tuples(*[st.floats(0, 2 * PI)] * 3), st.tuples(*[st.floats(0, 2 * PI)] * 3))
def test_shift_invariance(base, delta):
    shifted = tuple(b + d for b, d in zip(base, delta))
    brute = is_unbiased_pair(family_basis(*base), family_basis(*shifted), 1e-9)
    assert is_unbiased_family_pair(delta, 1e-8) == brute


def test_near_solutions_agree_both_ways():
    for delta in [(PI, PI, PI), (PI, 0.0, PI), (0.0, PI, PI), (PI, PI, 0.0)]:
        base = (0.3, 1.1, 2.0)
        shifted = tuple(b + d for b, d in zip(base, delta))
        assert is_unbiased_family_pair(delta, 1e-12) == is_unbiased_pair(
            family_basis(*base), family_basis(*shifted), 1e-12
        )


@pytest.mark.parametrize("k,expected", [(3, {PI}), (-1, {PI}), (1, {0.0}), (-3, {0.0})])
def test_symmetric_solutions(k, expected):
    assert symmetric_case_solutions(k) == expected
    for delta in expected:
        assert abs(abs(1 + k * cmath.exp(1j * delta)) ** 2 - 4) < 1e-12


def test_symmetric_solutions_general_k():
    assert symmetric_case_solutions(0) == frozenset()
    sols = symmetric_case_solutions(2)  # cos = -1/4
    assert len(sols) == 2
    for delta in sols:
        assert abs(abs(1 + 2 * cmath.exp(1j * delta)) ** 2 - 4) < 1e-12


def test_half_pi_is_not_a_solution():
    for k in (-3, -1, 1, 3):
        assert abs(abs(1 + k * 1j) ** 2 - 4) > 1  # |1 + k i|^2 = 1 + k^2
        assert not any(abs(s - PI / 2) < 1e-9 for s in symmetric_case_solutions(k))


def test_grid_size():
    assert len(criterion_grid(10)) == 1000


def test_criterion_by_class_groups_pairs():
    groups = criterion_by_class((0, 0, 0))
    assert sorted(len(p) for _, p, _ in groups) == [4, 4, 4, 4]
    values = {cfg.k: v for cfg, _, v in groups if cfg.k == 3}
    assert values[3] == 12


def test_diagonal_phase_candidates_report():
    """The diagonal matrices diag(1,i,-1,i), diag(1,-1,1,-1), diag(1,-i,-1,i) with
    phases on components: record which pairs come out unbiased."""
    half = hadamard4() / 2
    ds = [
        np.diag([1, 1j, -1, 1j]),
        np.diag([1, -1, 1, -1]),
        np.diag([1, -1j, -1, 1j]),
    ]
    bases = [standard_basis(4), Basis(half, "h4")] + [Basis(d @ half, f"d{k + 2}") for k, d in enumerate(ds)]
    unbiased = {
        (i, j)
        for i in range(5)
        for j in range(i + 1, 5)
        if is_unbiased_pair(bases[i], bases[j], 1e-12)
    }
    assert unbiased == {(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (2, 4)}
    # first vectors of H4/2 and diag(1,-1,1,-1) H4/2 are orthogonal under this convention
    assert abs(np.vdot(bases[1].vector(0), bases[3].vector(0))) < 1e-15
