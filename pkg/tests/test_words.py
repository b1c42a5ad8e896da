"""Words, compositions, coagulation, and cyclic classes."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glomega import StructureError, direct_sum_C, matrix_algebra
from glomega.words import (
    CyclicWord,
    basis_words,
    coagulate_word,
    compositions,
    concat,
    cyclic_canonical,
    project_cyclic,
    tensor_word,
    words_up_to,
)


def test_compositions_lex_order():
    assert compositions(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert compositions(1) == [(1,)]
    with pytest.raises(StructureError):
        compositions(0)


@given(st.integers(min_value=1, max_value=8))
def test_compositions_count(m):
    out = compositions(m)
    assert len(out) == 2 ** (m - 1)
    assert all(sum(nu) == m for nu in out)
    assert out == sorted(out)


def test_basis_words_enumeration():
    spec = direct_sum_C(2)
    assert list(basis_words(spec, 0)) == [()]
    assert list(basis_words(spec, 2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert list(words_up_to(spec, 2)) == [(0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1)]


def test_coagulate_word_merges_blocks():
    spec = direct_sum_C(2)
    # finest composition keeps the word
    assert coagulate_word(spec, (0, 1), (1, 1)).terms == {(0, 1): Fraction(1)}
    # merging orthogonal idempotents kills the term
    assert coagulate_word(spec, (0, 1), (2,)).terms == {}
    assert coagulate_word(spec, (0, 0), (2,)).terms == {(0,): Fraction(1)}


def test_coagulate_word_matrix_blocks():
    spec = matrix_algebra(2)
    # e12 * e21 = e11 under the (2,) merge
    assert coagulate_word(spec, (1, 2), (2,)).terms == {(0,): Fraction(1)}


def test_concat_words():
    spec = direct_sum_C(2)
    a = tensor_word(spec, (0,))
    b = tensor_word(spec, (1, 1))
    assert concat(a, b).terms == {(0, 1, 1): Fraction(1)}


@settings(max_examples=50, deadline=None)
@given(
    st.lists(st.integers(0, 1), min_size=0, max_size=3),
    st.lists(st.integers(0, 1), min_size=0, max_size=3),
    st.lists(st.integers(0, 1), min_size=0, max_size=3),
)
def test_concat_associative(wa, wb, wc):
    spec = direct_sum_C(2)
    a, b, c = (tensor_word(spec, tuple(w)) for w in (wa, wb, wc))
    assert concat(concat(a, b), c) == concat(a, concat(b, c))


def test_cyclic_word_canonical_rotation():
    assert CyclicWord((1, 0, 1)) == (0, 1, 1)
    assert cyclic_canonical((2, 0, 1)) == (0, 1, 2)
    assert CyclicWord((0,)) == (0,)
    with pytest.raises(StructureError):
        CyclicWord(())


def test_project_cyclic_merges_rotations():
    spec = direct_sum_C(2)
    t = tensor_word(spec, (0, 1)) + tensor_word(spec, (1, 0))
    assert project_cyclic(t) == {CyclicWord((0, 1)): Fraction(2)}


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=5), st.integers(0, 4))
def test_cyclic_class_is_rotation_invariant(word, shift):
    w = tuple(word)
    k = shift % len(w)
    assert CyclicWord(w) == CyclicWord(w[k:] + w[:k])
