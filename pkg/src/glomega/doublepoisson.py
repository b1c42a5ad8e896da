r"""Linear double Poisson brackets on the free tensor algebra of a table.

For a coefficient algebra :math:`\Omega` with product :math:`\mu`, the
bracket on single letters is

.. math::  \langle\!\langle x, y \rangle\!\rangle
           \;=\; 1 \boxtimes \mu(x, y) \;-\; \mu(y, x) \boxtimes 1,

and its Leibniz extension to arbitrary words :math:`x = x_1 \otimes \cdots
\otimes x_m`, :math:`y = y_1 \otimes \cdots \otimes y_n` is the double sum

.. math::  \sum_{r,s} (y^{<s} \otimes x^{>r}) \boxtimes
                      (x^{<r} \otimes x_r y_s \otimes y^{>s})
           \;-\; (y^{<s} \otimes y_s x_r \otimes x^{>r}) \boxtimes
                      (x^{<r} \otimes y^{>s}),

where :math:`x^{<r}` and :math:`x^{>r}` are the prefix before and the suffix
after the r-th letter.  The formula is defined for *any* bilinear
:math:`\mu`; skew-symmetry and both Leibniz rules hold identically, while
the double Jacobi identity holds precisely when :math:`\mu` is associative.
That equivalence is checked, not assumed (:func:`pvdw_equivalence`), and the
module deliberately accepts non-associative tables.

The bracket descends to two quotients, both realized here:

* the polynomial algebra on matrix-entry symbols ``p_ij(word)`` with the
  bracket :func:`poisson_smd` obtained by contracting Sweedler slots
  (``p_ab`` of the empty word is the scalar ``delta_ab``), and
* cyclic coinvariants (necklaces) with the trace bracket
  :func:`trace_bracket`: bracket the lifts, multiply the two slots, project
  cyclically.

Both are matched against top filtration parts of honest commutators in
U(gl(N, Omega)) by :func:`symbol_match_smd` and :func:`symbol_match_stc`,
at two consecutive sizes N and N+1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .enveloping import Enveloping, UElement
from .omega import AlgebraSpec, ScalarLike, StructureError, as_scalar, check_associativity
from .words import CyclicWord, Word, words_up_to


def _acc(d: Dict, k, v) -> None:
    s = d.get(k, 0) + v
    if s:
        d[k] = s
    else:
        d.pop(k, None)


class DoubleTensor:
    """Sparse element of T(Omega) (x) T(Omega); keys are pairs of words."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: AlgebraSpec, terms: Mapping[Tuple[Word, Word], ScalarLike]):
        self.spec = spec
        cleaned: Dict[Tuple[Word, Word], Fraction] = {}
        for (u, v), c in terms.items():
            c = as_scalar(c)
            if c:
                cleaned[(tuple(u), tuple(v))] = c
        self.terms = cleaned

    def _check(self, other: "DoubleTensor") -> None:
        if self.spec is not other.spec:
            raise StructureError("double tensors over different algebras")

    def __add__(self, other: "DoubleTensor") -> "DoubleTensor":
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            _acc(out, key, c)
        return DoubleTensor(self.spec, out)

    def __neg__(self) -> "DoubleTensor":
        return DoubleTensor(self.spec, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "DoubleTensor") -> "DoubleTensor":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "DoubleTensor":
        c = as_scalar(c)
        return DoubleTensor(self.spec, {k: c * v for k, v in self.terms.items()})

    def flip(self) -> "DoubleTensor":
        return DoubleTensor(self.spec, {(v, u): c for (u, v), c in self.terms.items()})

    # outer bimodule actions: b . (u (x) v) = bu (x) v and (u (x) v) . c = u (x) vc
    def outer_left(self, w: Word) -> "DoubleTensor":
        w = tuple(w)
        return DoubleTensor(self.spec, {(w + u, v): c for (u, v), c in self.terms.items()})

    def outer_right(self, w: Word) -> "DoubleTensor":
        w = tuple(w)
        return DoubleTensor(self.spec, {(u, v + w): c for (u, v), c in self.terms.items()})

    # inner bimodule actions: a * (u (x) v) = u (x) av and (u (x) v) * b = ub (x) v
    def inner_left(self, w: Word) -> "DoubleTensor":
        w = tuple(w)
        return DoubleTensor(self.spec, {(u, tuple(w) + v): c for (u, v), c in self.terms.items()})

    def inner_right(self, w: Word) -> "DoubleTensor":
        w = tuple(w)
        return DoubleTensor(self.spec, {(u + w, v): c for (u, v), c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DoubleTensor)
            and self.spec is other.spec
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "<DT 0>"
        word = lambda w: "(" + ",".join(self.spec.basis[i] for i in w) + ")" if w else "1"
        bits = [
            "%s*%s|%s" % (c, word(u), word(v))
            for (u, v), c in sorted(self.terms.items())
        ]
        return "<DT " + " + ".join(bits) + ">"


class TripleTensor:
    """Sparse element of T(Omega)^(x3); used by the double Jacobi sum."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: AlgebraSpec, terms: Mapping[Tuple[Word, Word, Word], ScalarLike]):
        self.spec = spec
        cleaned: Dict[Tuple[Word, Word, Word], Fraction] = {}
        for key, c in terms.items():
            c = as_scalar(c)
            if c:
                cleaned[tuple(map(tuple, key))] = c
        self.terms = cleaned

    def __add__(self, other: "TripleTensor") -> "TripleTensor":
        if self.spec is not other.spec:
            raise StructureError("triple tensors over different algebras")
        out = dict(self.terms)
        for key, c in other.terms.items():
            _acc(out, key, c)
        return TripleTensor(self.spec, out)

    def rotate(self) -> "TripleTensor":
        """u1 (x) u2 (x) u3  ->  u3 (x) u1 (x) u2."""
        return TripleTensor(
            self.spec, {(u3, u1, u2): c for (u1, u2, u3), c in self.terms.items()}
        )

    def is_zero(self) -> bool:
        return not self.terms


def double_bracket(spec: AlgebraSpec, x: Word, y: Word) -> DoubleTensor:
    """The linear double bracket of two basis words (zero if either is empty)."""
    x = tuple(x)
    y = tuple(y)
    out: Dict[Tuple[Word, Word], Fraction] = {}
    for r in range(len(x)):
        for s in range(len(y)):
            for k, c in spec.product(x[r], y[s]).items():
                _acc(out, (y[:s] + x[r + 1 :], x[:r] + (k,) + y[s + 1 :]), c)
            for k, c in spec.product(y[s], x[r]).items():
                _acc(out, (y[:s] + (k,) + x[r + 1 :], x[:r] + y[s + 1 :]), -c)
    return DoubleTensor(spec, out)


def letter_bracket_expected(spec: AlgebraSpec, i: int, j: int) -> DoubleTensor:
    """1 (x) mu(x_i, x_j) - mu(x_j, x_i) (x) 1, the defining formula on letters."""
    out: Dict[Tuple[Word, Word], Fraction] = {}
    for k, c in spec.product(i, j).items():
        _acc(out, ((), (k,)), c)
    for k, c in spec.product(j, i).items():
        _acc(out, ((k,), ()), -c)
    return DoubleTensor(spec, out)


def check_letter_bracket(spec: AlgebraSpec) -> Optional[Tuple[int, int]]:
    """First letter pair where the word formula disagrees with the letter formula."""
    for i in range(spec.dim):
        for j in range(spec.dim):
            if double_bracket(spec, (i,), (j,)) != letter_bracket_expected(spec, i, j):
                return (i, j)
    return None


def _word_list(spec: AlgebraSpec, maxlen: int, include_empty: bool) -> List[Word]:
    out: List[Word] = [()] if include_empty else []
    out.extend(words_up_to(spec, maxlen))
    return out


def check_skew(spec: AlgebraSpec, maxlen: int) -> Optional[Tuple[Word, Word]]:
    """<<x, y>> must equal -flip(<<y, x>>); pairs with an empty word vanish."""
    words = _word_list(spec, maxlen, include_empty=True)
    for a in words:
        for b in words:
            if double_bracket(spec, a, b) != (-(double_bracket(spec, b, a).flip())):
                return (a, b)
    return None


def check_leibniz(spec: AlgebraSpec, maxlen: int) -> Optional[Tuple[str, Word, Word, Word]]:
    """Both Leibniz rules, with concatenation products.

    Outer rule in the second argument:
        <<a, bc>> = <<a, b>> . c + b . <<a, c>>,
    inner rule in the first (equivalent via skew-symmetry):
        <<ab, c>> = a * <<b, c>> + <<a, c>> * b.
    Returns ("outer"|"inner", a, b, c) for the first failure.
    """
    heads = _word_list(spec, maxlen, include_empty=True)
    for a in heads:
        for b in heads:
            for c in heads:
                if len(b) + len(c) > maxlen:
                    continue
                lhs = double_bracket(spec, a, b + c)
                rhs = double_bracket(spec, a, b).outer_right(c) + double_bracket(
                    spec, a, c
                ).outer_left(b)
                if lhs != rhs:
                    return ("outer", a, b, c)
                lhs2 = double_bracket(spec, b + c, a)
                rhs2 = double_bracket(spec, c, a).inner_left(b) + double_bracket(
                    spec, b, a
                ).inner_right(c)
                if lhs2 != rhs2:
                    return ("inner", b, c, a)
    return None


def _bracket_into_first(spec: AlgebraSpec, a: Word, dt: DoubleTensor) -> TripleTensor:
    """<<a, ->>_L: bracket a into the first slot, third slot rides along."""
    out: Dict[Tuple[Word, Word, Word], Fraction] = {}
    for (u, v), c in dt.terms.items():
        inner = double_bracket(spec, a, u)
        for (p, q), c2 in inner.terms.items():
            _acc(out, (p, q, v), c * c2)
    return TripleTensor(spec, out)


def triple_jacobi_sum(spec: AlgebraSpec, a: Word, b: Word, c: Word) -> TripleTensor:
    """Cyclic sum <<a,<<b,c>>>>_L + rot <<b,<<c,a>>>>_L + rot^2 <<c,<<a,b>>>>_L."""
    t1 = _bracket_into_first(spec, a, double_bracket(spec, b, c))
    t2 = _bracket_into_first(spec, b, double_bracket(spec, c, a)).rotate()
    t3 = _bracket_into_first(spec, c, double_bracket(spec, a, b)).rotate().rotate()
    return t1 + t2 + t3


def check_double_jacobi(spec: AlgebraSpec, maxlen: int) -> Optional[Tuple[Word, Word, Word]]:
    """First word triple whose Jacobi sum is nonzero, or None.

    The letter-level sum carries exactly the associator values, so for a
    non-associative table a witness always exists already at length one.
    """
    words = list(words_up_to(spec, maxlen))
    words.sort(key=lambda w: (len(w), w))
    for a in words:
        for b in words:
            for c in words:
                if not triple_jacobi_sum(spec, a, b, c).is_zero():
                    return (a, b, c)
    return None


def pvdw_equivalence(spec: AlgebraSpec, maxlen: int) -> Dict[str, object]:
    """Double Jacobi holds iff the table is associative; report both sides."""
    assoc = check_associativity(spec)
    jacobi = check_double_jacobi(spec, maxlen)
    return {
        "assoc_witness": assoc,
        "jacobi_witness": jacobi,
        "equivalent": (assoc is None) == (jacobi is None),
    }


# ---------------------------------------------------------------------------
# the bracket on matrix-entry symbols


class PGen(NamedTuple):
    i: int
    j: int
    word: Word


def pgen_key(p: PGen) -> Tuple[int, int, int, Word]:
    return (p.i, p.j, len(p.word), p.word)


SMono = Tuple[PGen, ...]  # sorted by pgen_key; commutative monomial


class SPoly:
    """Polynomial in the symbols p_ij(word), exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[SMono, ScalarLike]):
        cleaned: Dict[SMono, Fraction] = {}
        for mono, c in terms.items():
            mono = tuple(sorted(mono, key=pgen_key))
            c = as_scalar(c)
            if c:
                cleaned[mono] = cleaned.get(mono, 0) + c
                if not cleaned[mono]:
                    del cleaned[mono]
        self.terms = cleaned

    @classmethod
    def zero(cls) -> "SPoly":
        return cls({})

    @classmethod
    def generator(cls, p: PGen) -> "SPoly":
        return cls({(p,): Fraction(1)})

    def __add__(self, other: "SPoly") -> "SPoly":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            _acc(out, mono, c)
        return SPoly(out)

    def __neg__(self) -> "SPoly":
        return SPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SPoly") -> "SPoly":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "SPoly":
        c = as_scalar(c)
        return SPoly({m: c * v for m, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SPoly):
            return NotImplemented
        out: Dict[SMono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _acc(out, tuple(sorted(m1 + m2, key=pgen_key)), c1 * c2)
        return SPoly(out)

    def part(self, factor_count: int) -> "SPoly":
        return SPoly({m: c for m, c in self.terms.items() if len(m) == factor_count})

    def part_at_least(self, factor_count: int) -> "SPoly":
        return SPoly({m: c for m, c in self.terms.items() if len(m) >= factor_count})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, SPoly) and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "<SPoly 0>"
        bits = []
        for mono in sorted(self.terms, key=lambda m: (len(m), tuple(map(pgen_key, m)))):
            body = "".join(
                "p(%d,%d;%s)" % (g.i, g.j, ",".join(map(str, g.word))) for g in mono
            )
            bits.append("%s*%s" % (self.terms[mono], body or "1"))
        return "<SPoly " + " + ".join(bits) + ">"


def poisson_pgen(spec: AlgebraSpec, p: PGen, q: PGen) -> SPoly:
    """{p_ij(x), p_kl(y)} = sum p_kj(first slot) p_il(second slot).

    Sweedler slots of the double bracket are contracted through the symbols;
    an empty slot contributes the scalar delta (p_ab of the empty word).
    """
    (i, j, x), (k, l, y) = p, q
    out: Dict[SMono, Fraction] = {}
    for (u, v), c in double_bracket(spec, x, y).terms.items():
        factors: List[PGen] = []
        if u:
            factors.append(PGen(k, j, u))
        elif k != j:
            continue
        if v:
            factors.append(PGen(i, l, v))
        elif i != l:
            continue
        _acc(out, tuple(sorted(factors, key=pgen_key)), c)
    return SPoly(out)


def poisson_smd(spec: AlgebraSpec, f: SPoly, g: SPoly) -> SPoly:
    """Leibniz extension of poisson_pgen to polynomials in the symbols."""
    out = SPoly.zero()
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            cc = c1 * c2
            for r in range(len(m1)):
                for t in range(len(m2)):
                    rest = m1[:r] + m1[r + 1 :] + m2[:t] + m2[t + 1 :]
                    bracket = poisson_pgen(spec, m1[r], m2[t])
                    for mb, cb in bracket.terms.items():
                        out = out + SPoly({tuple(sorted(rest + mb, key=pgen_key)): cc * cb})
    return out


# ---------------------------------------------------------------------------
# the trace (necklace) bracket on cyclic coinvariants


def trace_bracket(spec: AlgebraSpec, a: Iterable[int], b: Iterable[int]) -> Dict[CyclicWord, Fraction]:
    """Bracket two cyclic classes: bracket lifts, multiply slots, project.

    The result does not depend on the chosen lifts; the tests rotate the
    inputs to confirm.
    """
    wa, wb = tuple(a), tuple(b)
    out: Dict[CyclicWord, Fraction] = {}
    for (u, v), c in double_bracket(spec, wa, wb).terms.items():
        w = u + v
        _acc(out, CyclicWord(w), c)
    return out


NMono = Tuple[CyclicWord, ...]  # sorted tuple


class NecklacePoly:
    """Polynomial in cyclic-word classes with the trace bracket."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[NMono, ScalarLike]):
        cleaned: Dict[NMono, Fraction] = {}
        for mono, c in terms.items():
            mono = tuple(sorted(CyclicWord(w) for w in mono))
            c = as_scalar(c)
            if c:
                cleaned[mono] = cleaned.get(mono, 0) + c
                if not cleaned[mono]:
                    del cleaned[mono]
        self.terms = cleaned

    @classmethod
    def cls_of(cls, word: Iterable[int]) -> "NecklacePoly":
        return cls({(CyclicWord(word),): Fraction(1)})

    def __add__(self, other: "NecklacePoly") -> "NecklacePoly":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            _acc(out, mono, c)
        return NecklacePoly(out)

    def __neg__(self) -> "NecklacePoly":
        return NecklacePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "NecklacePoly") -> "NecklacePoly":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "NecklacePoly":
        c = as_scalar(c)
        return NecklacePoly({m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NecklacePoly):
            return NotImplemented
        out: Dict[NMono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _acc(out, tuple(sorted(m1 + m2)), c1 * c2)
        return NecklacePoly(out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, NecklacePoly) and self.terms == other.terms

    def __repr__(self) -> str:
        return "<NecklacePoly %r>" % (self.terms,)


def poisson_stc(spec: AlgebraSpec, f: NecklacePoly, g: NecklacePoly) -> NecklacePoly:
    """Leibniz extension of the trace bracket to necklace polynomials."""
    out = NecklacePoly({})
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            cc = c1 * c2
            for r in range(len(m1)):
                for t in range(len(m2)):
                    rest = m1[:r] + m1[r + 1 :] + m2[:t] + m2[t + 1 :]
                    for w, cb in trace_bracket(spec, m1[r], m2[t]).items():
                        out = out + NecklacePoly({tuple(sorted(rest + (w,))): cc * cb})
    return out


# ---------------------------------------------------------------------------
# symbol matches against honest commutators


def spoly_symbol_image(p: SPoly, ctx: Enveloping) -> UElement:
    """Evaluate p through p_ab(w) -> e_ab(w; N) products (symbol level)."""
    out = ctx.zero()
    for mono, c in p.terms.items():
        cur = ctx.one()
        for g in mono:
            cur = ctx.multiply(cur, ctx.e_elem(g.i, g.j, g.word))
        out = out + cur.scale(c)
    return out


def symbol_match_smd(
    omega: AlgebraSpec,
    i: int,
    j: int,
    k: int,
    l: int,
    x: Word,
    y: Word,
    d: int,
    s: ScalarLike,
    n: int,
) -> Dict[str, object]:
    """Top part of [t_ij(x;N;s), t_kl(y;N;s)] vs the symbol bracket, at N, N+1."""
    x, y = tuple(x), tuple(y)
    if max(i, j, k, l) > d:
        raise StructureError("generator indices must be <= d")
    if d > n - 1:
        raise StructureError("need d <= N-1 so the acting block is nontrivial")
    deg = len(x) + len(y) - 1
    p = poisson_pgen(omega, PGen(i, j, x), PGen(k, l, y))
    by_n: Dict[int, bool] = {}
    for size in (n, n + 1):
        ctx = Enveloping.get(omega, size)
        tx = ctx.t_elem(i, j, x, s)
        ty = ctx.t_elem(k, l, y, s)
        lhs = tx.commutator(ty).homogeneous(deg)
        rhs = spoly_symbol_image(p, ctx).homogeneous(deg)
        by_n[size] = lhs == rhs
    return {"degree": deg, "by_n": by_n, "match": all(by_n.values())}


def trace_elem(ctx: Enveloping, word: Word) -> UElement:
    """Sum of e_aa(word; N) over a = 1..N; invariant under all of gl(N, C)."""
    out = ctx.zero()
    for a in range(1, ctx.n + 1):
        out = out + ctx.e_elem(a, a, tuple(word))
    return out


def symbol_match_stc(omega: AlgebraSpec, x: Word, y: Word, n: int) -> Dict[str, object]:
    """Top part of the full-trace commutator vs the necklace bracket, at N, N+1."""
    x, y = tuple(x), tuple(y)
    deg = len(x) + len(y) - 1
    classes = trace_bracket(omega, x, y)
    by_n: Dict[int, bool] = {}
    for size in (n, n + 1):
        ctx = Enveloping.get(omega, size)
        lhs = trace_elem(ctx, x).commutator(trace_elem(ctx, y)).homogeneous(deg)
        rhs = ctx.zero()
        for w, c in classes.items():
            rhs = rhs + trace_elem(ctx, tuple(w)).scale(c)
        by_n[size] = lhs == rhs.homogeneous(deg)
    return {"degree": deg, "by_n": by_n, "match": all(by_n.values())}
