"""Double brackets on words, induced symbol brackets, symbol matches."""

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from glomega import (
    AlgebraSpec,
    direct_sum_C,
    matrix_algebra,
    nonassoc_witness,
    null_algebra,
)
from glomega.doublepoisson import (
    NecklacePoly,
    PGen,
    SPoly,
    check_double_jacobi,
    check_leibniz,
    check_letter_bracket,
    check_skew,
    double_bracket,
    pgen_key,
    poisson_pgen,
    poisson_smd,
    poisson_stc,
    pvdw_equivalence,
    symbol_match_smd,
    symbol_match_stc,
    trace_bracket,
)
from glomega.words import CyclicWord

TABLES = (direct_sum_C(1), direct_sum_C(2), null_algebra(2), matrix_algebra(2))


def test_letter_bracket_shape():
    spec = direct_sum_C(2)
    # <<u1, u1>> = 1 (x) u1  minus  u1 (x) 1
    got = double_bracket(spec, (0,), (0,))
    assert got.terms == {((), (0,)): Fraction(1), ((0,), ()): Fraction(-1)}
    # orthogonal letters bracket to zero
    assert double_bracket(spec, (0,), (1,)).is_zero()


def test_letter_bracket_matches_structure_constants():
    for spec in TABLES:
        assert check_letter_bracket(spec) is None


def test_skew_and_leibniz_exhaustive():
    for spec in TABLES:
        cap = 2 if spec.dim >= 4 else 3
        assert check_skew(spec, cap) is None
        assert check_leibniz(spec, cap) is None


def test_double_jacobi_on_associative_tables():
    for spec in TABLES:
        cap = 2 if spec.dim >= 4 else 3
        assert check_double_jacobi(spec, cap) is None


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(0, 1), min_size=1, max_size=3),
    st.lists(st.integers(0, 1), min_size=1, max_size=3),
)
def test_skew_random_words(wx, wy):
    spec = direct_sum_C(2)
    x, y = tuple(wx), tuple(wy)
    # <<x, y>> = -flip(<<y, x>>)
    assert (double_bracket(spec, x, y) + double_bracket(spec, y, x).flip()).is_zero()


def test_jacobi_fails_exactly_when_nonassociative():
    spec = nonassoc_witness()
    rep = pvdw_equivalence(spec, 2)
    assert rep["equivalent"] is True
    assert rep["assoc_witness"] is not None
    assert rep["jacobi_witness"] is not None
    # witness is an actual triple of words
    a, b, c = rep["jacobi_witness"]
    assert all(isinstance(w, tuple) for w in (a, b, c))


def test_pvdw_seeded_fuzz_small():
    rng = random.Random(99)
    coeffs = (Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(2))
    for _ in range(10):
        dim = rng.randint(1, 3)
        table = {}
        for i in range(dim):
            for j in range(dim):
                if rng.random() < 0.5:
                    continue
                table[(i, j)] = {rng.randrange(dim): rng.choice(coeffs)}
        spec = AlgebraSpec(dim, table=table)
        assert pvdw_equivalence(spec, 2)["equivalent"] is True


def test_poisson_pgen_hand_oracle():
    # {p_11(u1 u2), p_11(u2 u1)} over the two-idempotent table
    spec = direct_sum_C(2)
    got = poisson_pgen(spec, PGen(1, 1, (0, 1)), PGen(1, 1, (1, 0)))
    expected = SPoly(
        {
            (PGen(1, 1, (0, 1, 0)),): Fraction(1),
            (PGen(1, 1, (1, 0, 1)),): Fraction(-1),
            (PGen(1, 1, (0,)), PGen(1, 1, (1, 1))): Fraction(1),
            (PGen(1, 1, (1,)), PGen(1, 1, (0, 0))): Fraction(-1),
        }
    )
    assert got == expected


def test_poisson_pgen_delta_gating():
    spec = direct_sum_C(1)
    # k != j and i != l kills every term with an empty slot
    got = poisson_pgen(spec, PGen(1, 2, (0,)), PGen(1, 2, (0,)))
    for mono in got.terms:
        assert len(mono) == 2  # only purely quadratic terms survive
    # while matching deltas re-create the linear part
    lin = poisson_pgen(spec, PGen(1, 2, (0,)), PGen(2, 1, (0,))).part(1)
    assert not lin.is_zero()


def test_poisson_antisymmetry():
    spec = direct_sum_C(2)
    pgens = [PGen(1, 1, (0, 1)), PGen(2, 1, (1,)), PGen(1, 2, (0,)), PGen(2, 2, (1, 0))]
    for p in pgens:
        for q in pgens:
            assert (poisson_pgen(spec, p, q) + poisson_pgen(spec, q, p)).is_zero()


def test_poisson_smd_leibniz():
    spec = direct_sum_C(2)
    f = SPoly.generator(PGen(1, 1, (0,)))
    g = SPoly.generator(PGen(1, 2, (1,)))
    h = SPoly.generator(PGen(2, 1, (0, 1)))
    lhs = poisson_smd(spec, f, g * h)
    rhs = poisson_smd(spec, f, g) * h + g * poisson_smd(spec, f, h)
    assert lhs == rhs


def test_poisson_jacobi_on_symbols():
    spec = direct_sum_C(2)
    f = SPoly.generator(PGen(1, 1, (0,)))
    g = SPoly.generator(PGen(1, 2, (1,)))
    h = SPoly.generator(PGen(2, 1, (1,)))
    total = (
        poisson_smd(spec, f, poisson_smd(spec, g, h))
        + poisson_smd(spec, g, poisson_smd(spec, h, f))
        + poisson_smd(spec, h, poisson_smd(spec, f, g))
    )
    assert total.is_zero()


def test_sorted_monomials_commute():
    p = SPoly.generator(PGen(2, 1, (0,)))
    q = SPoly.generator(PGen(1, 1, (0, 0)))
    assert p * q == q * p
    assert pgen_key(PGen(1, 1, (0,))) < pgen_key(PGen(1, 1, (0, 0)))


def test_trace_bracket_center_is_abelian():
    # one-letter table: every class is central, the bracket vanishes
    spec = direct_sum_C(1)
    assert trace_bracket(spec, (0,), (0, 0)) == {}
    assert trace_bracket(spec, (0, 0), (0, 0)) == {}


def test_trace_bracket_antisymmetry_and_grading():
    spec = matrix_algebra(2)
    words = [(0,), (1,), (1, 2), (2, 1)]
    for x in words:
        for y in words:
            b1 = trace_bracket(spec, x, y)
            b2 = trace_bracket(spec, y, x)
            assert {w: -c for w, c in b2.items()} == b1
            for w in b1:
                assert isinstance(w, CyclicWord)
                assert len(w) == len(x) + len(y) - 1


def test_poisson_stc_leibniz():
    spec = matrix_algebra(2)
    f = NecklacePoly.cls_of((1,))
    g = NecklacePoly.cls_of((2,))
    h = NecklacePoly.cls_of((0,))
    lhs = poisson_stc(spec, f, g * h)
    rhs = poisson_stc(spec, f, g) * h + g * poisson_stc(spec, f, h)
    assert lhs == rhs


def test_symbol_match_smd_smoke():
    rep = symbol_match_smd(direct_sum_C(2), 1, 1, 1, 1, (0,), (1,), 2, Fraction(0), 3)
    assert rep["match"] is True
    assert rep["by_n"] == {3: True, 4: True}
    assert rep["degree"] == 1


def test_symbol_match_stc_smoke():
    rep = symbol_match_stc(direct_sum_C(1), (0,), (0, 0), 3)
    assert rep["match"] is True
    assert rep["by_n"] == {3: True, 4: True}
