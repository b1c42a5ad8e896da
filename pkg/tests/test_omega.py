"""Coefficient tables: construction, builtin algebras, serialization."""

from fractions import Fraction

import pytest

from glomega import (
    AlgebraSpec,
    StructureError,
    check_associativity,
    detect_unit,
    direct_sum_C,
    from_dict,
    load_algebra,
    matrix_algebra,
    multiply,
    nonassoc_witness,
    null_algebra,
    save_algebra,
    to_dict,
)


def test_direct_sum_products():
    spec = direct_sum_C(3)
    assert spec.dim == 3
    for i in range(3):
        for j in range(3):
            want = {i: Fraction(1)} if i == j else {}
            assert dict(spec.product(i, j)) == want


def test_direct_sum_requires_positive_length():
    with pytest.raises(StructureError):
        direct_sum_C(0)


def test_null_algebra_multiplies_to_zero():
    spec = null_algebra(2)
    for i in range(2):
        for j in range(2):
            assert dict(spec.product(i, j)) == {}
    assert detect_unit(spec) is None
    assert check_associativity(spec) is None


def test_matrix_algebra_units():
    spec = matrix_algebra(2)
    assert spec.dim == 4
    assert spec.basis == ("e11", "e12", "e21", "e22")
    # e12 * e21 = e11, e21 * e12 = e22, e12 * e12 = 0
    assert dict(spec.product(1, 2)) == {0: Fraction(1)}
    assert dict(spec.product(2, 1)) == {3: Fraction(1)}
    assert dict(spec.product(1, 1)) == {}
    assert check_associativity(spec) is None
    unit = detect_unit(spec)
    assert unit is not None
    assert dict(unit.coeffs) == {0: Fraction(1), 3: Fraction(1)}


def test_unit_of_direct_sum_is_sum_of_idempotents():
    spec = direct_sum_C(2)
    unit = detect_unit(spec)
    assert unit is not None
    assert dict(unit.coeffs) == {0: Fraction(1), 1: Fraction(1)}


def test_nonassoc_witness_fails_associativity():
    spec = nonassoc_witness()
    triple = check_associativity(spec)
    assert triple is not None
    i, j, k = triple
    lhs = multiply(multiply(spec.basis_element(i), spec.basis_element(j)), spec.basis_element(k))
    rhs = multiply(spec.basis_element(i), multiply(spec.basis_element(j), spec.basis_element(k)))
    assert lhs != rhs


def test_element_arithmetic():
    spec = direct_sum_C(2)
    a = spec.element({0: 1, 1: Fraction(1, 2)})
    b = spec.element({1: Fraction(1, 2)})
    assert (a - b) == spec.element({0: 1})
    assert (a + (-a)).is_zero()
    assert a.scale(2) == spec.element({0: 2, 1: 1})
    assert 2 * b == spec.element({1: 1})
    # orthogonal idempotents: cross terms die
    assert multiply(a, b) == spec.element({1: Fraction(1, 4)})


def test_mixed_algebra_elements_rejected():
    a = direct_sum_C(2).element({0: 1})
    b = direct_sum_C(3).element({0: 1})
    with pytest.raises(StructureError):
        a + b


def test_table_validation():
    with pytest.raises(StructureError):
        AlgebraSpec(0)
    with pytest.raises(StructureError):
        AlgebraSpec(2, table={(0, 5): {0: Fraction(1)}})
    with pytest.raises(StructureError):
        AlgebraSpec(2, table={(0, 0): {7: Fraction(1)}})
    with pytest.raises(StructureError):
        AlgebraSpec(2, basis=["a"])  # wrong label count


def test_serialization_roundtrip(tmp_path):
    spec = matrix_algebra(2)
    path = str(tmp_path / "mat2.json")
    save_algebra(spec, path)
    back = load_algebra(path)
    assert back.dim == spec.dim
    assert tuple(back.basis) == tuple(spec.basis)
    for i in range(spec.dim):
        for j in range(spec.dim):
            assert dict(back.product(i, j)) == dict(spec.product(i, j))


def test_from_dict_diagnostics():
    with pytest.raises(StructureError):
        from_dict({"dim": 2, "basis": ["a", "b"]})  # missing table
    bad_index = {
        "dim": 2,
        "basis": ["a", "b"],
        "table": [{"i": 0, "j": 0, "terms": [{"k": 9, "num": 1}]}],
    }
    with pytest.raises(StructureError):
        from_dict(bad_index)
    dup = {
        "dim": 1,
        "basis": ["a"],
        "table": [
            {"i": 0, "j": 0, "terms": [{"k": 0, "num": 1}]},
            {"i": 0, "j": 0, "terms": [{"k": 0, "num": 2}]},
        ],
    }
    with pytest.raises(StructureError):
        from_dict(dup)


def test_sparse_convention_missing_rows_are_zero():
    data = {"dim": 2, "basis": ["a", "b"], "table": [{"i": 0, "j": 0, "terms": [{"k": 0, "num": 1}]}]}
    spec = from_dict(data)
    assert dict(spec.product(0, 1)) == {}
    assert dict(spec.product(0, 0)) == {0: Fraction(1)}


def test_load_algebra_missing_file():
    with pytest.raises(StructureError):
        load_algebra("/nonexistent/table.json")


def test_to_dict_uses_fraction_terms():
    spec = AlgebraSpec(1, table={(0, 0): {0: Fraction(1, 2)}})
    data = to_dict(spec)
    assert data["table"][0]["terms"] == [{"k": 0, "num": 1, "den": 2}]
