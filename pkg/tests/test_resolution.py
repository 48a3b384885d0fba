"""Betti tables, regularity, t-invariants, and the power-map relation."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from regcert.monomials import MonomialIdeal, hilbert_function
from regcert.parser import parse_ideal_file
from regcert.resolution import (BettiTable, betti_table, check_flat_betti,
                                koszul_homology_rank, rank_exact_rational,
                                rank_mod_p, regularity, t_invariants)
from regcert.rings import DegRevLexOrder, LexOrder, make_ring
from regcert.scalars import QQ, PrimeField

R2 = make_ring(["x1", "x2"])
R3 = make_ring(["x1", "x2", "x3"])


def mi(ring, *gens):
    return MonomialIdeal.from_monomials(ring, gens)


def ideal(text):
    return parse_ideal_file(text)[1]


# ---------------------------------------------------------------------------
# exact rank

def test_rank_small_matrices():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank_mod_p(rows, 32003) == 2
    assert rank_exact_rational(rows) == 2
    assert rank_mod_p([], 7) == 0
    assert rank_exact_rational([[0, 0]]) == 0


@given(st.lists(st.lists(st.integers(-30, 30), min_size=3, max_size=3),
                min_size=1, max_size=4))
@settings(max_examples=50)
def test_rank_routes_agree_away_from_char(rows):
    # entries are far below the prime, so ranks agree
    assert rank_mod_p(rows, 32003) == rank_exact_rational(rows)


# ---------------------------------------------------------------------------
# monomial engine against known resolutions

def test_koszul_complete_intersection_two_squares():
    M = mi(R2, (2, 0), (0, 2))
    T = betti_table(M)
    # Koszul resolution of a (2,2) CI: ideal-side betti (0,2):2, (1,4):1
    assert T.entries == {(0, 2): 2, (1, 4): 1}
    assert T.regularity() == 3
    assert T.t_sequence() == (2, 4)


def test_koszul_three_variables_ci():
    M = mi(R3, (2, 0, 0), (0, 2, 0), (0, 0, 2))
    T = betti_table(M)
    assert T.entries == {(0, 2): 3, (1, 4): 3, (2, 6): 1}
    assert T.regularity() == 4


def test_principal_ideal():
    M = mi(R3, (1, 2, 0))
    T = betti_table(M)
    assert T.entries == {(0, 3): 1}
    assert T.regularity() == 3
    ts, p = t_invariants(T)
    assert ts == (3,) and p == 0


def test_maximal_ideal_linear_resolution():
    M = mi(R3, (1, 0, 0), (0, 1, 0), (0, 0, 1))
    T = betti_table(M)
    # Koszul complex: beta_i = C(3, i+1) in degree i+1
    assert T.entries == {(0, 1): 3, (1, 2): 3, (2, 3): 1}
    assert T.regularity() == 1


def betti_euler_check(M, field):
    """Alternating sums of Betti numbers reproduce the Hilbert function
    numerator of R/M (Euler characteristic of the resolution)."""
    from regcert.monomials import quotient_k_polynomial
    from regcert.resolution import monomial_quotient_betti
    q = monomial_quotient_betti(M, field)
    maxj = max(j for _, j in q)
    kp = quotient_k_polynomial(M)
    kp = list(kp) + [0] * (maxj + 1 - len(kp))
    for j in range(maxj + 1):
        assert sum((-1) ** i * v for (i, jj), v in q.items()
                   if jj == j) == kp[j]


monoset3 = st.lists(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
    min_size=1, max_size=5)


@given(monoset3)
@settings(max_examples=40, deadline=None)
def test_euler_characteristic_random_monomial(gens):
    M = MonomialIdeal.from_monomials(R3, gens)
    if M.is_unit() or M.is_zero():
        return
    betti_euler_check(M, R3.field)


@given(monoset3)
@settings(max_examples=25, deadline=None)
def test_monomial_betti_char_independent_small(gens):
    # homology of complexes on <= 3 vertices is torsion-free
    M = MonomialIdeal.from_monomials(R3, gens)
    if M.is_unit() or M.is_zero():
        return
    from regcert.resolution import monomial_quotient_betti
    assert monomial_quotient_betti(M, R3.field) == \
        monomial_quotient_betti(M, QQ)


# ---------------------------------------------------------------------------
# general engine against the monomial engine

def test_general_engine_on_monomial_input():
    # run the same ideal through both engines
    J = ideal("ring x1 x2 x3; gens: x1^2, x2^2, x1*x3")
    M = mi(R3, (2, 0, 0), (0, 2, 0), (1, 0, 1))
    assert betti_table(J).entries == betti_table(M).entries


def test_general_engine_ci_conic():
    J = ideal("ring x1 x2 x3; gens: x1*x3 - x2^2")
    T = betti_table(J)
    assert T.entries == {(0, 2): 1}
    assert T.regularity() == 2


def test_general_engine_twisted_cubic():
    J = ideal("ring x1 x2 x3 x4; gens: "
              "x1*x3 - x2^2, x2*x4 - x3^2, x1*x4 - x2*x3")
    T = betti_table(J)
    # 2x2 minors of a 2x3 matrix: 3 quadrics, 2 linear syzygies
    assert T.entries == {(0, 2): 3, (1, 3): 2}
    assert T.regularity() == 2


def test_general_vs_koszul_rank_route():
    J = ideal("ring x1 x2 x3; gens: x1^2 + x2*x3, x2^2")
    T = betti_table(J)
    for (i, j), v in T.entries.items():
        assert koszul_homology_rank(J, i + 1, j) == v


def test_betti_independent_of_order():
    J = ideal("ring x1 x2 x3; gens: x1*x2 - x3^2, x2^2 - x1*x3")
    assert betti_table(J, LexOrder()).entries == \
        betti_table(J, DegRevLexOrder()).entries


def test_betti_char_zero_agrees():
    J0 = ideal("ring x1 x2 x3; char 0; gens: x1*x2 - x3^2, x2^2 - x1*x3")
    Jp = ideal("ring x1 x2 x3; gens: x1*x2 - x3^2, x2^2 - x1*x3")
    assert betti_table(J0).entries == betti_table(Jp).entries
    assert betti_table(J0).characteristic == 0


def test_regularity_matches_initial_ideal_for_monomial():
    M = mi(R3, (2, 1, 0), (0, 0, 3))
    assert regularity(M) == betti_table(M).regularity()


def test_nonhomogeneous_rejected():
    J = ideal("ring x1 x2; gens: x1^2 + x2")
    with pytest.raises(ValueError, match="homogeneous"):
        betti_table(J)


def test_zero_and_unit_ideal():
    J = ideal("ring x1 x2; gens: x1 - x1")
    assert betti_table(J).entries == {}
    with pytest.raises(ValueError):
        regularity(J)
    U = ideal("ring x1 x2; char 0; gens: x1, 2")
    with pytest.raises(ValueError, match="unit"):
        betti_table(U)


# ---------------------------------------------------------------------------
# the power-map Betti relation

def test_check_flat_monomial_ci():
    M = mi(R2, (2, 0), (0, 2))
    rep = check_flat_betti(M, 2)
    assert rep.status == "pass"
    v = rep.instances[0].values
    assert v["reg"] == 3 and v["reg_prime"] == 7 and v["p"] == 1


def test_check_flat_principal_scales_exactly():
    M = mi(R3, (1, 1, 1))
    for d in (2, 3):
        rep = check_flat_betti(M, d)
        assert rep.status == "pass"
        v = rep.instances[0].values
        assert v["p"] == 0
        assert v["reg_prime"] == d * v["reg"]
        from fractions import Fraction
        assert Fraction(v["eq1_gap"]) == 0


def test_check_flat_general_ideal():
    J = ideal("ring x1 x2 x3; gens: x1*x3 - x2^2, x1^2*x2")
    rep = check_flat_betti(J, 2)
    assert rep.status == "pass"


def test_t_invariants_p_index():
    # the strictness example: t = (2,4,5,5,6), reg 3, p = 2
    R5 = make_ring([f"x{i}" for i in range(1, 6)])
    M = MonomialIdeal.from_monomials(
        R5, [(2, 0, 0, 0, 0), (1, 1, 0, 0, 0), (1, 0, 1, 0, 0),
             (1, 0, 0, 1, 0), (1, 0, 0, 0, 1), (0, 2, 0, 0, 0),
             (0, 0, 2, 0, 0)])
    T = betti_table(M)
    ts, p = t_invariants(T)
    assert ts == (2, 4, 5, 5, 6)
    assert T.regularity() == 3
    assert p == 2


def test_betti_table_quotient_side():
    M = mi(R2, (2, 0), (0, 2))
    q = betti_table(M).quotient_side_entries()
    assert q == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
