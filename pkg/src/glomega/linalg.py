"""Sparse exact linear algebra over Fraction.

Vectors are dicts mapping hashable, mutually comparable keys to nonzero
Fractions.  This is all the package needs: incremental row reduction with
dependency tracking (:class:`SpanSolver`), canonical reduced bases
(:func:`rref`), kernels of sparse constraint systems (:func:`kernel_basis`),
and intersections with coordinate subspaces.  Everything is deterministic:
pivots are always the smallest key under the configured ordering.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

Vec = Dict[Hashable, Fraction]


def vec_add(target: Vec, src: Vec, scale: Fraction) -> None:
    """target += scale * src, pruning zeros in place."""
    if not scale:
        return
    for k, v in src.items():
        s = target.get(k, 0) + scale * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)


class SpanSolver:
    """Incremental Gaussian elimination over Q with combination tracking.

    Columns are added one at a time; the solver keeps a row-reduced basis of
    their span.  ``solve(rhs)`` expresses rhs in the added columns when
    possible, and ``add`` reports an exact linear dependency the moment one
    appears.
    """

    def __init__(self, key_order: Optional[Callable] = None):
        # pivot key -> (reduced vector with 1 at pivot, combination over column ids)
        self.rows: Dict[Hashable, Tuple[Vec, Vec]] = {}
        self._order = key_order if key_order is not None else (lambda k: k)
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: Vec) -> Tuple[Vec, Vec]:
        """Return (residual, combo) with residual = vec - sum combo[c] * col_c."""
        residual = dict(vec)
        combo: Vec = {}
        while True:
            live = [k for k in residual if k in self.rows]
            if not live:
                return residual, combo
            k = min(live, key=self._order)
            row, row_combo = self.rows[k]
            c = residual[k]
            vec_add(residual, row, -c)
            vec_add(combo, row_combo, c)

    def add(self, vec: Vec, col_id: Hashable = None) -> Optional[Vec]:
        """Add a column; return a dependency combo if it is already spanned.

        The returned dict gives coefficients over previously added column ids
        such that ``vec == sum combo[c] * col_c``; None means the column was
        independent and has been incorporated.
        """
        if col_id is None:
            col_id = self._count
        self._count += 1
        residual, combo = self._reduce(vec)
        if not residual:
            return combo
        pivot = min(residual, key=self._order)
        inv = Fraction(1) / residual[pivot]
        row = {k: v * inv for k, v in residual.items()}
        row_combo: Vec = {c: -v * inv for c, v in combo.items() if v}
        row_combo[col_id] = inv
        # keep fully reduced form: eliminate the new pivot from existing rows
        for k, (other, other_combo) in list(self.rows.items()):
            c = other.get(pivot)
            if c:
                vec_add(other, row, -c)
                vec_add(other_combo, row_combo, -c)
        self.rows[pivot] = (row, row_combo)
        return None

    def contains(self, vec: Vec) -> bool:
        residual, _ = self._reduce(vec)
        return not residual

    def solve(self, rhs: Vec) -> Optional[Vec]:
        """Coefficients over column ids reproducing rhs, or None."""
        residual, combo = self._reduce(rhs)
        if residual:
            return None
        return {c: v for c, v in combo.items() if v}


def rank(vectors: Iterable[Vec]) -> int:
    solver = SpanSolver()
    for v in vectors:
        solver.add(v)
    return solver.rank


def rref(vectors: Iterable[Vec], key_order: Optional[Callable] = None) -> List[Vec]:
    """Canonical fully-reduced basis of the span, sorted by pivot key.

    Two spanning sets generate the same subspace iff their rref lists are
    equal.
    """
    solver = SpanSolver(key_order=key_order)
    for v in vectors:
        solver.add(v)
    order = solver._order
    return [dict(solver.rows[k][0]) for k in sorted(solver.rows, key=order)]


def subspace_equal(a: Iterable[Vec], b: Iterable[Vec]) -> bool:
    return rref(a) == rref(b)


def coordinate_intersection(vectors: Iterable[Vec], inside: Callable) -> List[Vec]:
    """Basis of span(vectors) intersected with {v : support(v) in inside}.

    Works by eliminating on the outside coordinates first; the reduced rows
    supported entirely inside the coordinate subspace then span the
    intersection.
    """
    key_order = lambda k: (1 if inside(k) else 0, k)
    rows = rref(vectors, key_order=key_order)
    return [r for r in rows if all(inside(k) for k in r)]


def kernel_basis(rows: Iterable[Vec], ncols: int) -> List[Vec]:
    """Kernel of a constraint system; unknowns are column indices 0..ncols-1.

    Each row is a sparse linear functional on the unknowns; the result is a
    list of sparse kernel vectors (free-variable form, deterministic order).
    """
    solver = SpanSolver()
    for r in rows:
        solver.add(r)
    pivots = {}
    for k, (row, _) in solver.rows.items():
        pivots[k] = row
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v: Vec = {f: Fraction(1)}
        for p, row in pivots.items():
            c = row.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def primitive(vec: Vec, key_order: Optional[Callable] = None) -> Vec:
    """Scale to coprime integers with positive leading coefficient."""
    if not vec:
        return {}
    keys = sorted(vec, key=key_order if key_order else (lambda k: k))
    denom = 1
    for k in keys:
        denom = denom * vec[k].denominator // gcd(denom, vec[k].denominator)
    ints = {k: vec[k] * denom for k in keys}
    g = 0
    for v in ints.values():
        g = gcd(g, int(v))
    if g:
        ints = {k: v / g for k, v in ints.items()}
    lead = ints[keys[0]]
    if lead < 0:
        ints = {k: -v for k, v in ints.items()}
    return {k: Fraction(v) for k, v in ints.items()}
