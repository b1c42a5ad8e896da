"""PBW machinery for U(gl(N, Omega)) and the centralizer construction.

gl(N, Omega) = gl(N, C) (x) Omega has basis E_ij(x_b) with bracket

    [E_ij(x), E_kl(y)] = delta_kj E_il(x y) - delta_il E_kj(y x),

products taken in the coefficient algebra Omega (which must be associative
here).  Monomials in the enveloping algebra are written in a fixed total
order on generators: the key of E_ij(x_b) is (class, i, j, b) where class is
0 for i, j < N, 1 for i = N > j, and 2 for j = N.  Class 2 generators sit at
the right end of every sorted monomial, which is what makes deleting
index-N monomials implement the projection U(gl(N))^{E_NN} ->
U(gl(N-1)): an E_NN-invariant monomial touching index N always ends in an
E(*, N) factor, hence lies in the two-sided piece L(N) that the projection
kills.

Normal forms are computed by repeatedly swapping the leftmost out-of-order
adjacent pair and inserting the bracket correction; confluence of this
strategy against randomized swap schedules is exercised in the tests rather
than assumed.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .linalg import SpanSolver, coordinate_intersection, kernel_basis, rank, rref
from .omega import AlgebraSpec, ScalarLike, StructureError, as_scalar, check_associativity
from .words import Word, compositions, coagulate_word

# generator E_ij(x_b) as a plain tuple (i, j, b); i, j are 1-based, b indexes
# the Omega basis
Gen = Tuple[int, int, int]
Mono = Tuple[Gen, ...]

_ONE = Fraction(1)


class Enveloping:
    """Computation context for U(gl(n, omega)) with a fixed PBW order."""

    _registry: Dict[Tuple[int, int], "Enveloping"] = {}

    def __init__(self, omega: AlgebraSpec, n: int):
        if n < 1:
            raise StructureError("n must be >= 1")
        witness = check_associativity(omega)
        if witness is not None:
            raise StructureError(
                "coefficient algebra is not associative (witness %r)" % (witness,)
            )
        self.omega = omega
        self.n = n
        self._nf: Dict[Mono, Dict[Mono, Fraction]] = {}
        self._comm: Dict[Tuple[Gen, Gen], Tuple[Tuple[Gen, Fraction], ...]] = {}
        self._keys: Dict[Gen, Tuple[int, int, int, int]] = {}
        self._e: Dict = {}
        self._t: Dict = {}
        self._gens: Optional[List[Gen]] = None

    @classmethod
    def get(cls, omega: AlgebraSpec, n: int) -> "Enveloping":
        """Shared context per (omega, n); keeps caches warm across callers."""
        key = (id(omega), n)
        ctx = cls._registry.get(key)
        if ctx is None or ctx.omega is not omega:
            ctx = cls(omega, n)
            cls._registry[key] = ctx
        return ctx

    # -- generator order ----------------------------------------------------

    def sort_key(self, g: Gen) -> Tuple[int, int, int, int]:
        key = self._keys.get(g)
        if key is None:
            i, j, b = g
            if not (1 <= i <= self.n and 1 <= j <= self.n and 0 <= b < self.omega.dim):
                raise StructureError("generator %r out of range for n=%d" % (g, self.n))
            cls = 2 if j == self.n else (1 if i == self.n else 0)
            key = (cls, i, j, b)
            self._keys[g] = key
        return key

    def gens(self) -> List[Gen]:
        if self._gens is None:
            self._gens = sorted(
                (
                    (i, j, b)
                    for i in range(1, self.n + 1)
                    for j in range(1, self.n + 1)
                    for b in range(self.omega.dim)
                ),
                key=self.sort_key,
            )
        return self._gens

    def commutator_terms(self, g: Gen, h: Gen) -> Tuple[Tuple[Gen, Fraction], ...]:
        """[E_g, E_h] as a tuple of (generator, coefficient) pairs."""
        key = (g, h)
        terms = self._comm.get(key)
        if terms is None:
            i1, j1, b1 = g
            i2, j2, b2 = h
            out: Dict[Gen, Fraction] = {}
            if i2 == j1:
                for k, c in self.omega.product(b1, b2).items():
                    gen = (i1, j2, k)
                    out[gen] = out.get(gen, 0) + c
            if i1 == j2:
                for k, c in self.omega.product(b2, b1).items():
                    gen = (i2, j1, k)
                    s = out.get(gen, 0) - c
                    if s:
                        out[gen] = s
                    else:
                        out.pop(gen, None)
            terms = tuple((gen, c) for gen, c in out.items() if c)
            self._comm[key] = terms
        return terms

    # -- normal form --------------------------------------------------------

    def normal_form(self, seq: Sequence[Gen]) -> Dict[Mono, Fraction]:
        """PBW expansion of a product of generators (memoized; do not mutate)."""
        seq = tuple(seq)
        cached = self._nf.get(seq)
        if cached is not None:
            return cached
        key = self.sort_key
        p = -1
        for a in range(len(seq) - 1):
            if key(seq[a]) > key(seq[a + 1]):
                p = a
                break
        if p < 0:
            res: Dict[Mono, Fraction] = {seq: _ONE}
        else:
            g, h = seq[p], seq[p + 1]
            res = {}
            swapped = seq[:p] + (h, g) + seq[p + 2 :]
            for mono, c in self.normal_form(swapped).items():
                s = res.get(mono, 0) + c
                if s:
                    res[mono] = s
                else:
                    res.pop(mono, None)
            for gen, c2 in self.commutator_terms(g, h):
                shorter = seq[:p] + (gen,) + seq[p + 2 :]
                for mono, c in self.normal_form(shorter).items():
                    s = res.get(mono, 0) + c2 * c
                    if s:
                        res[mono] = s
                    else:
                        res.pop(mono, None)
        self._nf[seq] = res
        return res

    def normal_form_random(self, seq: Sequence[Gen], rng) -> Dict[Mono, Fraction]:
        """Normal form resolving a *random* inversion each step (no cache).

        Used to test confluence of the rewriting: any swap schedule must
        produce the same expansion as the leftmost-first strategy.
        """
        key = self.sort_key
        out: Dict[Mono, Fraction] = {}
        stack: List[Tuple[Mono, Fraction]] = [(tuple(seq), _ONE)]
        while stack:
            cur, coeff = stack.pop()
            inversions = [
                a for a in range(len(cur) - 1) if key(cur[a]) > key(cur[a + 1])
            ]
            if not inversions:
                s = out.get(cur, 0) + coeff
                if s:
                    out[cur] = s
                else:
                    out.pop(cur, None)
                continue
            p = rng.choice(inversions)
            g, h = cur[p], cur[p + 1]
            stack.append((cur[:p] + (h, g) + cur[p + 2 :], coeff))
            for gen, c2 in self.commutator_terms(g, h):
                stack.append((cur[:p] + (gen,) + cur[p + 2 :], coeff * c2))
        return out

    # -- elements -----------------------------------------------------------

    def element(self, terms: Mapping[Mono, ScalarLike]) -> "UElement":
        return UElement(self, terms)

    def zero(self) -> "UElement":
        return UElement(self, {})

    def one(self) -> "UElement":
        return UElement(self, {(): _ONE})

    def gen(self, i: int, j: int, b: int = 0) -> "UElement":
        self.sort_key((i, j, b))  # validates
        return UElement(self, {((i, j, b),): _ONE})

    def multiply(self, u: "UElement", v: "UElement") -> "UElement":
        u._compat(self)
        v._compat(self)
        out: Dict[Mono, Fraction] = {}
        for m1, c1 in u.terms.items():
            for m2, c2 in v.terms.items():
                cc = c1 * c2
                for mono, c in self.normal_form(m1 + m2).items():
                    s = out.get(mono, 0) + cc * c
                    if s:
                        out[mono] = s
                    else:
                        out.pop(mono, None)
        return UElement(self, out)

    # -- gl(N, C) action ----------------------------------------------------

    def _ad_mono(self, i: int, j: int, mono: Mono) -> Dict[Mono, Fraction]:
        """[E_ij, mono] as a derivation, re-expanded to normal form."""
        out: Dict[Mono, Fraction] = {}
        for pos, (k, l, b) in enumerate(mono):
            repl: List[Tuple[Gen, int]] = []
            if k == j:
                repl.append(((i, l, b), 1))
            if l == i:
                repl.append(((k, j, b), -1))
            for gen, sign in repl:
                seq = mono[:pos] + (gen,) + mono[pos + 1 :]
                for m2, c in self.normal_form(seq).items():
                    s = out.get(m2, 0) + sign * c
                    if s:
                        out[m2] = s
                    else:
                        out.pop(m2, None)
        return out

    def ad_E(self, i: int, j: int, u: "UElement") -> "UElement":
        """Action of E_ij in gl(N, C) on U(gl(N, Omega)) by derivations."""
        u._compat(self)
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise StructureError("ad index (%d, %d) out of range" % (i, j))
        out: Dict[Mono, Fraction] = {}
        for mono, c in u.terms.items():
            for m2, c2 in self._ad_mono(i, j, mono).items():
                s = out.get(m2, 0) + c * c2
                if s:
                    out[m2] = s
                else:
                    out.pop(m2, None)
        return UElement(self, out)

    def mono_weight(self, mono: Mono, a: Optional[int] = None) -> int:
        """Eigenvalue of ad E_aa on a monomial (default a = N)."""
        a = self.n if a is None else a
        return sum((1 if i == a else 0) - (1 if j == a else 0) for (i, j, _b) in mono)

    def weight(self, u: "UElement") -> Optional[int]:
        """Common E_NN-weight of the terms: 0 for the zero element, None if mixed."""
        u._compat(self)
        w: Optional[int] = None
        for mono in u.terms:
            mw = self.mono_weight(mono)
            if w is None:
                w = mw
            elif w != mw:
                return None
        return 0 if w is None else w

    def is_in_centralizer(self, u: "UElement", d: int) -> bool:
        """Does u commute with all E_ij, d+1 <= i, j <= N, of gl_d(N, C)?"""
        if not (0 <= d <= self.n):
            raise StructureError("need 0 <= d <= n")
        for i in range(d + 1, self.n + 1):
            for j in range(d + 1, self.n + 1):
                if self.ad_E(i, j, u).terms:
                    return False
        return True

    # -- special elements ---------------------------------------------------

    def e_elem(self, i: int, j: int, word: Word) -> "UElement":
        """Sum over index chains of E_{i a_1}(x_1) ... E_{a_{m-1} j}(x_m)."""
        word = tuple(word)
        key = (i, j, word)
        cached = self._e.get(key)
        if cached is not None:
            return cached
        m = len(word)
        if m < 1:
            raise StructureError("e_elem needs a nonempty word")
        acc: Dict[Mono, Fraction] = {}
        for chain in itertools.product(range(1, self.n + 1), repeat=m - 1):
            idx = (i,) + chain + (j,)
            seq = tuple((idx[r], idx[r + 1], word[r]) for r in range(m))
            for mono, c in self.normal_form(seq).items():
                s = acc.get(mono, 0) + c
                if s:
                    acc[mono] = s
                else:
                    acc.pop(mono, None)
        el = UElement(self, acc)
        self._e[key] = el
        return el

    def t_elem(self, i: int, j: int, word: Word, s: ScalarLike) -> "UElement":
        """Coagulation-corrected element; reduces to e_elem at s = -N.

        t_ij(x; N; s) = sum over compositions nu of len(x) of
        (-N - s)^(len(x) - len(nu)) e_ij(x * nu; N), with 0^0 = 1, so the
        s = -N specialization keeps only the finest composition.
        """
        word = tuple(word)
        s = as_scalar(s)
        key = (i, j, word, s)
        cached = self._t.get(key)
        if cached is not None:
            return cached
        m = len(word)
        base = Fraction(-self.n) - s
        acc: Dict[Mono, Fraction] = {}
        for nu in compositions(m):
            coeff = base ** (m - len(nu))
            if not coeff:
                continue
            for w2, c2 in coagulate_word(self.omega, word, nu).terms.items():
                cc = coeff * c2
                for mono, c in self.e_elem(i, j, w2).terms.items():
                    val = acc.get(mono, 0) + cc * c
                    if val:
                        acc[mono] = val
                    else:
                        acc.pop(mono, None)
        el = UElement(self, acc)
        self._t[key] = el
        return el

    def reparametrize_check(self, i: int, j: int, word: Word, s: ScalarLike, s2: ScalarLike) -> bool:
        """t_ij(x; N; s) == sum_nu (s2 - s)^(len(x)-len(nu)) t_ij(x*nu; N; s2)."""
        word = tuple(word)
        s = as_scalar(s)
        s2 = as_scalar(s2)
        lhs = self.t_elem(i, j, word, s)
        base = s2 - s
        rhs = self.zero()
        for nu in compositions(len(word)):
            coeff = base ** (len(word) - len(nu))
            if not coeff:
                continue
            for w2, c2 in coagulate_word(self.omega, word, nu).terms.items():
                rhs = rhs + self.t_elem(i, j, w2, s2).scale(coeff * c2)
        return lhs == rhs

    # -- projection ---------------------------------------------------------

    def project_down(self, u: "UElement", target: Optional["Enveloping"] = None) -> "UElement":
        """Delete index-N monomials and re-express in U(gl(N-1, Omega)).

        Requires ad E_NN u = 0.  Deletion is justified monomial by monomial:
        a weight-zero monomial containing index N must contain an E(*, N)
        factor (checked at runtime), so it lies in L(N) = ker of the
        projection.  Surviving monomials are re-sorted in the context one
        size down, whose PBW order differs.
        """
        u._compat(self)
        if self.n < 2:
            raise StructureError("cannot project below n = 1")
        if self.weight(u) != 0:
            raise StructureError("project_down needs an E_NN-invariant element")
        if target is None:
            target = Enveloping.get(self.omega, self.n - 1)
        if target.omega is not self.omega or target.n != self.n - 1:
            raise StructureError("target context must be one size down, same algebra")
        acc: Dict[Mono, Fraction] = {}
        for mono, c in u.terms.items():
            if any(i == self.n or j == self.n for (i, j, _b) in mono):
                if not any(j == self.n for (_i, j, _b) in mono):
                    # cannot happen for weight-zero monomials
                    raise StructureError(
                        "monomial %r touches index N without an E(*,N) factor" % (mono,)
                    )
                continue
            for m2, c2 in target.normal_form(mono).items():
                s = acc.get(m2, 0) + c * c2
                if s:
                    acc[m2] = s
                else:
                    acc.pop(m2, None)
        return UElement(target, acc)

    # -- enumeration and invariants ------------------------------------------

    def monomials(self, maxdeg: int, gens: Optional[Sequence[Gen]] = None) -> Iterator[Mono]:
        """All PBW monomials of degree <= maxdeg, degree by degree."""
        pool = self.gens() if gens is None else sorted(gens, key=self.sort_key)
        for deg in range(maxdeg + 1):
            for mono in itertools.combinations_with_replacement(pool, deg):
                yield mono

    def _torus_zero_monomials(self, d: int, maxdeg: int) -> List[Mono]:
        out = []
        acting = range(d + 1, self.n + 1)
        for mono in self.monomials(maxdeg):
            if all(self.mono_weight(mono, a) == 0 for a in acting):
                out.append(mono)
        return out

    def _invariant_constraints(self, d: int, cols: Sequence[Mono]) -> List[Dict]:
        """Rows of the ad-constraint system on the weight-zero monomial span."""
        rows: Dict = {}
        for ci, mono in enumerate(cols):
            for i in range(d + 1, self.n + 1):
                for j in range(d + 1, self.n + 1):
                    if i == j:
                        continue  # torus already accounted for by the column filter
                    for m2, c in self._ad_mono(i, j, mono).items():
                        row = rows.setdefault((i, j, m2), {})
                        row[ci] = row.get(ci, 0) + c
        return [
            {k: v for k, v in row.items() if v} for row in rows.values() if any(row.values())
        ]

    def invariant_dim(self, d: int, maxdeg: int) -> int:
        """Dimension of the gl_d(N, C)-invariants of filtration degree <= maxdeg."""
        if not (0 <= d <= self.n):
            raise StructureError("need 0 <= d <= n")
        cols = self._torus_zero_monomials(d, maxdeg)
        if not cols:
            return 0
        return len(cols) - rank(self._invariant_constraints(d, cols))

    def invariant_basis(self, d: int, maxdeg: int) -> List["UElement"]:
        cols = self._torus_zero_monomials(d, maxdeg)
        if not cols:
            return []
        kern = kernel_basis(self._invariant_constraints(d, cols), len(cols))
        return [
            UElement(self, {cols[ci]: c for ci, c in vec.items()}) for vec in kern
        ]

    # -- the two ideals -----------------------------------------------------

    def ideal_intersection_check(self, maxdeg: int) -> Dict[str, object]:
        """Desk verification that the left and right ideal intersections agree.

        Computes span{u E(i,N)(x)} and span{E(N,j)(x) u} up to filtration
        degree maxdeg, intersects each with the E_NN-invariant coordinate
        subspace, and reports whether the two agree, whether the invariant
        space splits as (index-N free part) + (intersection), and whether the
        intersection is stable under invariant degree-1 multipliers on both
        sides.
        """
        n = self.n
        right_gens = [(i, n, b) for i in range(1, n + 1) for b in range(self.omega.dim)]
        left_gens = [(n, j, b) for j in range(1, n + 1) for b in range(self.omega.dim)]
        lower = list(self.monomials(maxdeg - 1))

        def span_plus() -> List[Dict]:
            vecs = []
            for mono in lower:
                for g in right_gens:
                    vecs.append(self.normal_form(mono + (g,)))
            return vecs

        def span_minus() -> List[Dict]:
            vecs = []
            for mono in lower:
                for g in left_gens:
                    vecs.append(self.normal_form((g,) + mono))
            return vecs

        inside = lambda mono: self.mono_weight(mono) == 0
        plus = coordinate_intersection(span_plus(), inside)
        minus = coordinate_intersection(span_minus(), inside)
        equal = rref(plus) == rref(minus)

        # direct sum with the index-N free monomials inside the invariants
        wz = self._torus_zero_monomials(n - 1, maxdeg)  # E_NN-invariant monomials
        free = [
            m for m in wz if not any(i == n or j == n for (i, j, _b) in m)
        ]
        solver = SpanSolver()
        for m in free:
            solver.add({m: _ONE})
        direct = all(solver.add(row) is None for row in plus)
        spans = solver.rank == len(wz)

        # two-sidedness inside the truncation
        membership = SpanSolver()
        for row in plus:
            membership.add(row)
        wz_gens = [g for g in self.gens() if self.mono_weight((g,)) == 0]
        two_sided = True
        small = [self.element(r) for r in plus if all(len(m) < maxdeg for m in r)]
        for v in small:
            for g in wz_gens:
                gu = UElement(self, {(g,): _ONE})
                for prod in (self.multiply(gu, v), self.multiply(v, gu)):
                    if not membership.contains(prod.terms):
                        two_sided = False
        return {
            "intersections_equal": equal,
            "dim": len(plus),
            "direct_sum": direct and spans,
            "two_sided": two_sided,
            "passed": equal and direct and spans and two_sided,
        }


class UElement:
    """Sparse element of U(gl(n, omega)) in PBW coordinates."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Enveloping, terms: Mapping[Mono, ScalarLike]):
        self.ctx = ctx
        cleaned: Dict[Mono, Fraction] = {}
        for mono, c in terms.items():
            c = as_scalar(c)
            if c:
                cleaned[tuple(mono)] = c
        self.terms = cleaned

    def _compat(self, ctx: Enveloping) -> None:
        if self.ctx.omega is not ctx.omega or self.ctx.n != ctx.n:
            raise StructureError("element belongs to a different enveloping context")

    def __add__(self, other: "UElement") -> "UElement":
        other._compat(self.ctx)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return UElement(self.ctx, out)

    def __neg__(self) -> "UElement":
        return UElement(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "UElement") -> "UElement":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "UElement":
        c = as_scalar(c)
        return UElement(self.ctx, {m: c * v for m, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, UElement):
            return self.ctx.multiply(self, other)
        return NotImplemented

    def commutator(self, other: "UElement") -> "UElement":
        return self * other - other * self

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Filtration degree; -1 for the zero element."""
        return max((len(m) for m in self.terms), default=-1)

    def homogeneous(self, k: int) -> "UElement":
        return UElement(self.ctx, {m: c for m, c in self.terms.items() if len(m) == k})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UElement)
            and self.ctx.omega is other.ctx.omega
            and self.ctx.n == other.ctx.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.ctx.omega), self.ctx.n, tuple(sorted(self.terms.items()))))

    def canonical_str(self) -> str:
        """Deterministic text form: terms sorted by (degree, monomial)."""
        if not self.terms:
            return "0"
        labels = self.ctx.omega.basis
        bits = []
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            body = "".join("E(%d,%d,%s)" % (i, j, labels[b]) for (i, j, b) in mono)
            bits.append("%s * %s" % (self.terms[mono], body or "1"))
        return " + ".join(bits)

    def __repr__(self) -> str:
        return "<U(gl(%d)) %s>" % (self.ctx.n, self.canonical_str())
