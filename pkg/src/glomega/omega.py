"""Finite-dimensional algebras presented by exact rational multiplication tables.

An :class:`AlgebraSpec` fixes a basis ``x_0, ..., x_{dim-1}`` and structure
constants ``c[i][j][k]`` so that ``x_i * x_j = sum_k c[i][j][k] x_k``.  Tables
are stored sparsely: a pair ``(i, j)`` absent from the table multiplies to
zero.  Nothing here assumes associativity or a unit; both are decidable
properties of a finite table and are checked on demand
(:func:`check_associativity`, :func:`detect_unit`).

All coefficients are ``fractions.Fraction`` values, so every computation in
this package is exact.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Tuple, Union

Scalar = Fraction

ScalarLike = Union[Scalar, int, str]


def as_scalar(value: ScalarLike) -> Scalar:
    """Coerce ints, strings like '-7/2', or Fractions to an exact Scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError("exact scalar expected, got %r (floats are not allowed)" % (value,))


class StructureError(ValueError):
    """A malformed table, or elements of distinct algebras being mixed."""


class StabilizationError(StructureError):
    """A two-size certificate disagreed between N and N+1.

    Kept apart from plain failures: a headroom shortfall is not a
    counterexample, and reports track it under its own status.
    """


class AlgebraSpec:
    """A finite-dimensional algebra over Q, not assumed associative or unital.

    The table maps ``(i, j)`` to a sparse ``{k: coefficient}`` dict.  Identity
    of the spec object is what ties elements together: operations refuse to
    combine elements whose ``spec`` attributes are different objects.
    """

    __slots__ = ("dim", "basis", "table", "name")

    def __init__(
        self,
        dim: int,
        basis: Optional[Sequence[str]] = None,
        table: Optional[Mapping[Tuple[int, int], Mapping[int, ScalarLike]]] = None,
        name: str = "",
    ):
        if not isinstance(dim, int) or dim < 1:
            raise StructureError("dim must be a positive integer")
        if basis is None:
            basis = tuple("u%d" % (i + 1) for i in range(dim))
        basis = tuple(str(b) for b in basis)
        if len(basis) != dim:
            raise StructureError("expected %d basis labels, got %d" % (dim, len(basis)))
        if len(set(basis)) != dim:
            raise StructureError("basis labels must be distinct")
        clean: dict = {}
        for (i, j), terms in (table or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise StructureError("table index (%r, %r) out of range" % (i, j))
            entry = {}
            for k, c in terms.items():
                if not (0 <= k < dim):
                    raise StructureError("table target index %r out of range" % (k,))
                c = as_scalar(c)
                if c:
                    entry[k] = c
            if entry:
                clean[(i, j)] = entry
        self.dim = dim
        self.basis = basis
        self.table = clean
        self.name = name or ("algebra(dim=%d)" % dim)

    def product(self, i: int, j: int) -> Mapping[int, Scalar]:
        """Structure constants of x_i * x_j as a sparse dict."""
        return self.table.get((i, j), {})

    def element(self, coeffs: Mapping[int, ScalarLike]) -> "OmegaElement":
        return OmegaElement(self, coeffs)

    def basis_element(self, i: int) -> "OmegaElement":
        return OmegaElement(self, {i: Fraction(1)})

    def zero(self) -> "OmegaElement":
        return OmegaElement(self, {})

    def __repr__(self) -> str:
        return "<AlgebraSpec %s>" % self.name


class OmegaElement:
    """A sparse vector in an AlgebraSpec, with the table-induced product."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: AlgebraSpec, coeffs: Mapping[int, ScalarLike]):
        self.spec = spec
        cleaned = {}
        for k, c in coeffs.items():
            if not (0 <= k < spec.dim):
                raise StructureError("coefficient index %r out of range" % (k,))
            c = as_scalar(c)
            if c:
                cleaned[k] = c
        self.coeffs = cleaned

    def _check(self, other: "OmegaElement") -> None:
        if self.spec is not other.spec:
            raise StructureError("elements belong to different algebras")

    def __add__(self, other: "OmegaElement") -> "OmegaElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return OmegaElement(self.spec, out)

    def __neg__(self) -> "OmegaElement":
        return OmegaElement(self.spec, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "OmegaElement") -> "OmegaElement":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "OmegaElement":
        c = as_scalar(c)
        return OmegaElement(self.spec, {k: c * v for k, v in self.coeffs.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, OmegaElement):
            return multiply(self, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OmegaElement)
            and self.spec is other.spec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.spec), tuple(sorted(self.coeffs.items()))))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = [
            "%s*%s" % (c, self.spec.basis[k]) for k, c in sorted(self.coeffs.items())
        ]
        return " + ".join(parts)


def multiply(a: OmegaElement, b: OmegaElement) -> OmegaElement:
    """Bilinear product through the structure table."""
    a._check(b)
    out: dict = {}
    for i, ca in a.coeffs.items():
        for j, cb in b.coeffs.items():
            scale = ca * cb
            for k, c in a.spec.product(i, j).items():
                s = out.get(k, 0) + scale * c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
    return OmegaElement(a.spec, out)


def check_associativity(spec: AlgebraSpec) -> Optional[Tuple[int, int, int]]:
    """Return None if the table is associative, else the first bad triple.

    Triples (i, j, k) of basis indices are scanned in lexicographic order and
    the first one with (x_i x_j) x_k != x_i (x_j x_k) is returned.
    """
    basis = [spec.basis_element(i) for i in range(spec.dim)]
    for i in range(spec.dim):
        for j in range(spec.dim):
            ij = multiply(basis[i], basis[j])
            for k in range(spec.dim):
                left = multiply(ij, basis[k])
                right = multiply(basis[i], multiply(basis[j], basis[k]))
                if left != right:
                    return (i, j, k)
    return None


def detect_unit(spec: AlgebraSpec) -> Optional[OmegaElement]:
    """Solve for a two-sided unit; None when the linear system has no solution.

    A unit e = sum_i e_i x_i must satisfy e * x_j = x_j = x_j * e for every j,
    which is a linear system in the e_i.
    """
    from .linalg import SpanSolver

    solver = SpanSolver()
    for i in range(spec.dim):
        col: dict = {}
        for j in range(spec.dim):
            for k, c in spec.product(i, j).items():
                col[("L", j, k)] = col.get(("L", j, k), 0) + c
            for k, c in spec.product(j, i).items():
                col[("R", j, k)] = col.get(("R", j, k), 0) + c
        solver.add({key: v for key, v in col.items() if v}, i)
    rhs: dict = {}
    for j in range(spec.dim):
        rhs[("L", j, j)] = Fraction(1)
        rhs[("R", j, j)] = Fraction(1)
    combo = solver.solve(rhs)
    if combo is None:
        return None
    unit = OmegaElement(spec, combo)
    # defensive: confirm the solution really is a two-sided unit
    for j in range(spec.dim):
        bj = spec.basis_element(j)
        if multiply(unit, bj) != bj or multiply(bj, unit) != bj:
            return None
    return unit


# ---------------------------------------------------------------------------
# builtin tables


def direct_sum_C(L: int) -> AlgebraSpec:
    """C^(+L): L orthogonal idempotents u1, ..., uL (ui*ui = ui, ui*uj = 0)."""
    if L < 1:
        raise StructureError("L must be >= 1")
    table = {(i, i): {i: Fraction(1)} for i in range(L)}
    return AlgebraSpec(L, ["u%d" % (i + 1) for i in range(L)], table, name="C^+%d" % L)


def null_algebra(n: int) -> AlgebraSpec:
    """Zero multiplication on an n-dimensional space."""
    if n < 1:
        raise StructureError("n must be >= 1")
    return AlgebraSpec(n, ["z%d" % (i + 1) for i in range(n)], {}, name="null(%d)" % n)


def matrix_algebra(k: int) -> AlgebraSpec:
    """Full matrix algebra Mat(k) on matrix units e_{ab}, row-major order."""
    if k < 1:
        raise StructureError("k must be >= 1")
    labels = ["e%d%d" % (a + 1, b + 1) for a in range(k) for b in range(k)]
    idx = lambda a, b: a * k + b
    table = {}
    for a in range(k):
        for b in range(k):
            for c in range(k):
                # e_{ab} e_{bc} = e_{ac}
                table[(idx(a, b), idx(b, c))] = {idx(a, c): Fraction(1)}
    return AlgebraSpec(k * k, labels, table, name="Mat(%d)" % k)


def nonassoc_witness() -> AlgebraSpec:
    """The standard 2-dim non-associative table: x*x = y, x*y = x, rest 0.

    (x x) x = y x = 0 while x (x x) = x y = x, so (0, 0, 0) witnesses the
    failure of associativity.
    """
    table = {(0, 0): {1: Fraction(1)}, (0, 1): {0: Fraction(1)}}
    return AlgebraSpec(2, ["x", "y"], table, name="nonassoc-witness")


# ---------------------------------------------------------------------------
# JSON serialization
#
# {"dim": n, "basis": [...], "table": [{"i": i, "j": j,
#   "terms": [{"k": k, "num": p, "den": q}]}]}
# Indices are 0-based; omitted (i, j) entries are zero products.


def to_dict(spec: AlgebraSpec) -> dict:
    rows = []
    for (i, j) in sorted(spec.table):
        terms = [
            {"k": k, "num": c.numerator, "den": c.denominator}
            for k, c in sorted(spec.table[(i, j)].items())
        ]
        rows.append({"i": i, "j": j, "terms": terms})
    return {"dim": spec.dim, "basis": list(spec.basis), "table": rows}


def from_dict(data: Mapping, name: str = "") -> AlgebraSpec:
    if not isinstance(data, Mapping):
        raise StructureError("algebra file must contain a JSON object")
    for field in ("dim", "basis", "table"):
        if field not in data:
            raise StructureError("missing required field %r" % field)
    dim = data["dim"]
    basis = data["basis"]
    if not isinstance(basis, list):
        raise StructureError("'basis' must be a list of labels")
    table: dict = {}
    if not isinstance(data["table"], list):
        raise StructureError("'table' must be a list of {i, j, terms} rows")
    for row in data["table"]:
        if not isinstance(row, Mapping) or not {"i", "j", "terms"} <= set(row):
            raise StructureError("table rows must have fields i, j, terms")
        i, j = row["i"], row["j"]
        if (i, j) in table:
            raise StructureError("duplicate table entry for (%r, %r)" % (i, j))
        entry: dict = {}
        for term in row["terms"]:
            if "k" not in term or "num" not in term:
                raise StructureError("terms must have fields k, num[, den]")
            den = term.get("den", 1)
            if den == 0:
                raise StructureError("zero denominator in table term")
            k = term["k"]
            if k in entry:
                raise StructureError("duplicate term index %r in table entry" % (k,))
            entry[k] = Fraction(term["num"], den)
        table[(i, j)] = entry
    return AlgebraSpec(dim, basis, table, name=name or str(data.get("name", "")))


def load_algebra(path: str) -> AlgebraSpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise StructureError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise StructureError("invalid JSON in %s: %s" % (path, exc))
    return from_dict(data, name=path)


def save_algebra(spec: AlgebraSpec, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_dict(spec), fh, indent=1, sort_keys=True)
        fh.write("\n")
