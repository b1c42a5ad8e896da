"""Ordered-monomial bases: ranks, dependencies, dimension probes."""

from fractions import Fraction

import pytest

from glomega import StructureError, direct_sum_C
from glomega.yangian import (
    YExpression,
    euler_phi,
    independence_check,
    multiply_y,
    necklace_count,
    pbw_monomials,
    pbw_suite,
    shift_automorphism_check,
    splitting_expected,
    splitting_probe,
    t_gen,
)

S0 = Fraction(0)


def test_pbw_monomial_counts():
    # one letter, d=2: 4 index pairs per word length 1..3 = 12 generators;
    # <= 2 factors, total length <= 3:
    #   empty(1) + singles(12) + len1*len1(10) + len1*len2(16) = 39
    monos = pbw_monomials(direct_sum_C(1), 2, 3, 2, S0)
    assert len(monos) == 39
    # two letters, d=2: 4*(2 + 4) = 24 generators up to length 2;
    #   empty(1) + singles(24) + len1*len1 pairs C(8+1, 2)=36 = 61
    monos2 = pbw_monomials(direct_sum_C(2), 2, 2, 2, S0)
    assert len(monos2) == 61
    # ordered: factors weakly increase under the generator key
    for mono in monos2:
        words = [(g.i, g.j, len(g.word), g.word) for g in mono]
        assert words == sorted(words)


def test_pbw_full_rank():
    rep = pbw_suite(direct_sum_C(1), 2, 3, 2, 4, S0)
    assert rep == {"count": 39, "rank": 39, "full_rank": True}
    rep2 = pbw_suite(direct_sum_C(2), 2, 2, 2, 4, S0)
    assert rep2 == {"count": 61, "rank": 61, "full_rank": True}


def test_planted_dependency_is_flagged():
    g = t_gen(1, 1, (0,), S0)
    status, vec = independence_check([(g,), (g,)], direct_sum_C(1), 3)
    assert status == "dependent"
    assert vec == {0: Fraction(1), 1: Fraction(-1)}


def test_independent_set_certified():
    g = t_gen(1, 1, (0,), S0)
    h = t_gen(1, 2, (0,), S0)
    status, vec = independence_check([(g,), (h,), (g, h)], direct_sum_C(1), 3)
    assert (status, vec) == ("independent", None)


def test_necklace_and_phi():
    assert [euler_phi(k) for k in (1, 2, 3, 4, 6)] == [1, 1, 2, 2, 2]
    assert necklace_count(2, 1) == 2
    assert necklace_count(2, 2) == 3
    assert necklace_count(2, 3) == 4
    assert necklace_count(3, 2) == 6


def test_splitting_expected_small_values():
    # degree <= 1 dimension: 1 + #classes(1) + d^2 dim
    assert splitting_expected(1, 1, 1) == 3
    assert splitting_expected(2, 1, 1) == 5
    assert splitting_expected(2, 0, 1) == 3
    # degree <= 2, d=0, one letter: 1 + c1 + (c1 choose 2 with repeats) + c2
    assert splitting_expected(1, 0, 2) == 4


def test_splitting_probe_matches():
    rep = splitting_probe(direct_sum_C(1), 0, 2, 3)
    assert rep["stabilized"] and rep["match"]
    assert rep["expected"] == 4
    rep2 = splitting_probe(direct_sum_C(2), 1, 1, 3)
    assert rep2["match"] and rep2["expected"] == 5


def test_multiply_y_stable_product():
    g = YExpression.generator(t_gen(1, 1, (0,), S0))
    status, prod = multiply_y(g, g, direct_sum_C(1), 3)
    assert status == "ok"
    assert prod is not None
    # the square re-expands with the squared monomial present
    sq = (t_gen(1, 1, (0,), S0), t_gen(1, 1, (0,), S0))
    assert prod.terms.get(sq) == Fraction(1)


def test_multiply_y_mixed_parameters_rejected():
    a = YExpression.generator(t_gen(1, 1, (0,), S0))
    b = YExpression.generator(t_gen(1, 1, (0,), Fraction(1)))
    with pytest.raises(StructureError):
        multiply_y(a, b, direct_sum_C(1), 3)


def test_shift_automorphism():
    g = t_gen(1, 2, (0,), S0)
    h = t_gen(2, 1, (0,), S0)
    rep = shift_automorphism_check(g, h, Fraction(1), direct_sum_C(1), 3)
    assert rep["match"] is True
    rep2 = shift_automorphism_check(g, h, Fraction(-3, 2), direct_sum_C(1), 3)
    assert rep2["match"] is True
