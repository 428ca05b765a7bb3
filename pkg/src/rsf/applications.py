"""Pipelines built on top of the multiplicity machinery.

Everything here composes the same few steps: build a nice rational
Hilbert series from structural data (partitions with multiplicities,
Jordan cell sizes, weighted generators), run the multiplicity pipeline,
and specialize the result.  The builders return plain NiceRational
values so the pieces combine freely.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .cyclotomic import cyclo_factor
from .errors import MathError, ParseError
from .poly import (
    MvPoly, MvTerm, Rat, ExponentVector, VarId, ROLE_X,
    m_make, m_mul, m_sort_key, m_var, xvar, vvar, tvar,
)
from .rational import NiceRational, BinomialFactor, STANDARD, nr_equal
from .schur import as_partition, schur_poly, multiplicity_series

TVAR = tvar()


# ---------------------------------------------------------------------------
# Module descriptions and their weight multisets.


class ModuleSpec:
    """A direct sum of irreducible summands, each given by a partition.

    `summands` is a sequence of (partition, multiplicity) pairs and `d`
    the number of underlying variables.  The empty partition is the
    one-dimensional trivial summand; it only makes sense for graded
    series, which the builders enforce where it matters.
    """

    __slots__ = ("summands", "d")

    def __init__(self, summands: Iterable[tuple[Sequence[int], int]],
                 d: int):
        if d < 1:
            raise MathError("need at least one variable")
        out = []
        for lam, k in summands:
            lam = as_partition(lam)
            if k < 1:
                raise MathError("summand multiplicity must be positive")
            if len(lam) > d:
                raise MathError(
                    "partition %s has more rows than variables (d=%d)"
                    % (list(lam), d))
            out.append((lam, k))
        if not out:
            raise MathError("module with no summands")
        self.summands = tuple(out)
        self.d = d

    def __repr__(self) -> str:
        body = " + ".join(
            "%d*%s" % (k, list(lam)) if k > 1 else "%s" % (list(lam),)
            for lam, k in self.summands)
        return "ModuleSpec(%s, d=%d)" % (body, self.d)


def parse_module_spec(text: str, d: int) -> ModuleSpec:
    """Parse the module mini-language: "3", "2,1", "3 + 2", "2*(1,1)".

    Summands are joined with '+'; an optional "k*" prefix repeats a
    summand; a bare integer n is the one-row partition (n).
    """
    summands = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError("empty summand in module spec %r" % (text,))
        k = 1
        if "*" in chunk:
            head, _, chunk = chunk.partition("*")
            chunk = chunk.strip()
            try:
                k = int(head.strip())
            except ValueError:
                raise ParseError(
                    "bad multiplicity %r in module spec" % (head.strip(),))
            if k < 1:
                raise ParseError("summand multiplicity must be positive")
        if chunk.startswith("(") and chunk.endswith(")"):
            chunk = chunk[1:-1]
        parts = []
        for tok in chunk.split(","):
            tok = tok.strip()
            try:
                parts.append(int(tok))
            except ValueError:
                raise ParseError(
                    "bad partition entry %r in module spec" % (tok,))
        summands.append((tuple(parts), k))
    return ModuleSpec(summands, d)


class JordanShape:
    """Cell sizes of a nilpotent Jordan matrix."""

    __slots__ = ("cells",)

    def __init__(self, cells: Iterable[int]):
        cells = tuple(int(c) for c in cells)
        if not cells:
            raise MathError("shape with no cells")
        if any(c < 1 for c in cells):
            raise MathError("cell sizes must be positive")
        self.cells = cells

    def total(self) -> int:
        return sum(self.cells)

    def __repr__(self) -> str:
        return "JordanShape%s" % (list(self.cells),)


def weights_of_module(spec: ModuleSpec) -> list[ExponentVector]:
    """The weight multiset of a module: one exponent vector per basis
    element of each summand, with repetition."""
    out: list[ExponentVector] = []
    for lam, k in spec.summands:
        s = schur_poly(lam, spec.d)
        for mono in sorted(s.terms, key=m_sort_key):
            out.extend([mono] * (int(s.terms[mono]) * k))
    return out


# ---------------------------------------------------------------------------
# Symmetric algebras and their invariants.


def hilbert_symmetric_algebra(spec: ModuleSpec,
                              graded: bool = False) -> NiceRational:
    """Hilbert series of the symmetric algebra on a module.

    The denominator is one binomial per weight; with `graded` each
    weight also carries one power of t.
    """
    dens = []
    for w in weights_of_module(spec):
        if graded:
            w = m_mul(w, m_var(TVAR, 1))
        elif not w:
            raise MathError("zero-weight summand in ungraded mode")
        dens.append(BinomialFactor(w, 1, STANDARD))
    return NiceRational(MvPoly.one(), dens)


def specialize_values(h: NiceRational,
                      values: dict[VarId, int]) -> NiceRational:
    """Substitute constants (typically 0 or 1) for some variables."""
    images = {v: MvTerm(Rat(c)) for v, c in values.items()}
    return h.substitute(images)


def _group_values(group: str, d: int) -> dict[VarId, int]:
    g = group.lower()
    if g == "sl":
        vals = {vvar(i): 0 for i in range(1, d)}
        vals[vvar(d)] = 1
        return vals
    if g == "ut":
        return {vvar(i): 1 for i in range(1, d + 1)}
    raise MathError("unknown group %r (expected sl or ut)" % (group,))


def invariants_hilbert(spec: ModuleSpec, group: str,
                       strategy: str = "pf") -> NiceRational:
    """Hilbert series of the invariants of the symmetric algebra under
    the special-linear or unitriangular subgroup, as a series in t."""
    h = hilbert_symmetric_algebra(spec, graded=True)
    _, mp = multiplicity_series(h, spec.d, graded=True, strategy=strategy)
    return specialize_values(mp, _group_values(group, spec.d))


def _cell_weights(shape: JordanShape) -> list[ExponentVector]:
    out = []
    for c in shape.cells:
        top = c - 1
        for j in range(c):
            pairs = []
            if top - j:
                pairs.append((xvar(1), top - j))
            if j:
                pairs.append((xvar(2), j))
            out.append(m_make(pairs))
    return out


def weitzenbock_hilbert(shape: JordanShape,
                        strategy: str = "pf") -> NiceRational:
    """Hilbert series of the constants of the linear locally nilpotent
    derivation with the given Jordan cell sizes, acting on a polynomial
    algebra.  The kernel coincides with the unitriangular invariants of
    the corresponding two-variable weight structure."""
    dens = []
    for w in _cell_weights(shape):
        dens.append(BinomialFactor(m_mul(w, m_var(TVAR, 1)), 1, STANDARD))
    f = NiceRational(MvPoly.one(), dens)
    _, mp = multiplicity_series(f, 2, graded=True, strategy=strategy)
    return specialize_values(mp, _group_values("ut", 2))


# ---------------------------------------------------------------------------
# The complete-intersection numerator test.


def cyclotomic_numerator_status(f: NiceRational,
                                bound: Optional[int] = None) -> str:
    """Classify the numerator of a univariate series.

    "yes" when it is a rational constant times a power of the variable
    times a product of cyclotomic polynomials of index at most `bound`;
    "no" when it provably is not; "bound-limited" when the capped
    search gave up before deciding.  The default bound is twice the
    numerator degree plus four.
    """
    num = f.num
    if num.is_zero() or num.is_const():
        return "yes"
    if bound is None:
        deg = max(sum(e for _, e in m) for m in num.terms)
        bound = 2 * deg + 4
    status, _, _, _, _ = cyclo_factor(num, bound)
    return status


def cyclotomic_numerator_check(f: NiceRational,
                               bound: Optional[int] = None) -> bool:
    """True iff the numerator factors completely into cyclotomics, up
    to a constant and a monomial; a bound miss counts as False."""
    return cyclotomic_numerator_status(f, bound) == "yes"


# ---------------------------------------------------------------------------
# Combining two identity-ideal Hilbert series.


def tideal_product_hilbert(h1: NiceRational, h2: NiceRational,
                           d: int) -> NiceRational:
    """Hilbert series of the relatively free algebra for the product of
    two identity ideals, from the two factors' series:
    H = H1 + H2 + ((x1 + ... + xd) - 1) * H1 * H2."""
    s = MvPoly.zero()
    for i in range(1, d + 1):
        s = s + MvPoly.var(xvar(i))
    link = NiceRational.from_poly(s - MvPoly.one())
    return h1 + h2 + link * h1 * h2


# ---------------------------------------------------------------------------
# Built-in reference series.


def _poly_algebra(d: int) -> NiceRational:
    dens = [BinomialFactor(m_var(xvar(i), 1)) for i in range(1, d + 1)]
    return NiceRational(MvPoly.one(), dens)


def _mono(*pairs) -> ExponentVector:
    return m_make([(v, e) for v, e in pairs if e])


def _t32_series() -> NiceRational:
    x1, x2 = xvar(1), xvar(2)
    dens = [
        BinomialFactor(_mono((x1, 1)), 2),
        BinomialFactor(_mono((x2, 1)), 2),
        BinomialFactor(_mono((x1, 2))),
        BinomialFactor(_mono((x2, 2))),
        BinomialFactor(_mono((x1, 1), (x2, 1)), 2),
        BinomialFactor(_mono((x1, 2), (x2, 1))),
        BinomialFactor(_mono((x1, 1), (x2, 2))),
    ]
    return NiceRational(MvPoly.one(), dens)


def _t23_series() -> NiceRational:
    xs = [xvar(i) for i in range(1, 4)]
    dens = [BinomialFactor(_mono((x, 1)), 2) for x in xs]
    for i in range(3):
        for j in range(i + 1, 3):
            dens.append(BinomialFactor(_mono((xs[i], 1), (xs[j], 1))))
    return NiceRational(MvPoly.one(), dens)


def _t24_series() -> NiceRational:
    xs = [xvar(i) for i in range(1, 5)]
    dens = [BinomialFactor(_mono((x, 1)), 2) for x in xs]
    for i in range(4):
        for j in range(i + 1, 4):
            dens.append(BinomialFactor(_mono((xs[i], 1), (xs[j], 1))))
    num = MvPoly.one() - MvPoly.monomial(m_make((x, 1) for x in xs))
    return NiceRational(num, dens)


def _m2_multiplicity_series() -> NiceRational:
    v1, v2, v3, v4 = vvar(1), vvar(2), vvar(3), vvar(4)

    def b(*pairs):
        return BinomialFactor(_mono(*pairs))

    def bp(power, *pairs):
        return BinomialFactor(_mono(*pairs), power)

    lead = NiceRational(MvPoly.one(), [
        bp(2, (v1, 1)), bp(2, (v2, 1)), bp(2, (v3, 1)), b((v4, 1))])
    mid_num = (MvPoly.var(v2) + MvPoly.var(v1)
               * (MvPoly.one() - MvPoly.var(v2)))
    mid = NiceRational(mid_num, [bp(2, (v1, 1)), b((v2, 1))])
    tail = NiceRational(MvPoly.var(v3) + MvPoly.var(v4), [b((v1, 1))])
    return lead - mid - tail


def builtin_series(name: str, d: Optional[int] = None) -> NiceRational:
    """A named reference series.

    polynomial-algebra and F-U2K take the variable count d; the trace
    and matrix series are fixed transcriptions.
    """
    key = name.strip().lower()
    if key in ("polynomial-algebra", "f-u2k"):
        if d is None or d < 1:
            raise MathError("series %r needs a variable count" % (name,))
        if key == "polynomial-algebra":
            return _poly_algebra(d)
        h = _poly_algebra(d)
        return tideal_product_hilbert(h, h, d)
    if d is not None:
        raise MathError("series %r does not take a variable count" % (name,))
    if key == "t32":
        return _t32_series()
    if key == "t23":
        return _t23_series()
    if key == "t24":
        return _t24_series()
    if key == "m2-multiplicity-series":
        return _m2_multiplicity_series()
    raise MathError("unknown builtin series %r" % (name,))


# ---------------------------------------------------------------------------
# Invariants of algebras with weighted generators.


def _x_variables(h: NiceRational) -> list[VarId]:
    return sorted((v for v in h.vars() if v.role is ROLE_X),
                  key=lambda v: v.sort_key)


def _substituted_symmetric(f: NiceRational, d: int) -> bool:
    for i in range(1, d):
        a, b = xvar(i), xvar(i + 1)
        swapped = f.substitute({a: MvTerm.of_var(b), b: MvTerm.of_var(a)})
        if not nr_equal(f, swapped):
            return False
    return True


def _weighted_multiplicity(h: NiceRational, weights: list[ExponentVector],
                           d: int, strategy: str) -> NiceRational:
    """Substitute weight monomials times t for the generators of h and
    return the full multiplicity series of the result."""
    gens = _x_variables(h)
    if len(gens) != len(weights):
        raise MathError("weight count mismatch")
    images = {}
    for g, w in zip(gens, sorted(weights, key=m_sort_key)):
        images[g] = MvTerm.of_mono(m_mul(w, m_var(TVAR, 1)))
    f = h.substitute(images)
    if not _substituted_symmetric(f, d):
        raise MathError("substituted series not symmetric")
    _, mp = multiplicity_series(f, d, graded=True, strategy=strategy)
    return mp


def noncommutative_invariants(h: NiceRational,
                              weights: list[ExponentVector], d: int,
                              group: str,
                              strategy: str = "pf") -> NiceRational:
    """Invariants series for an algebra whose p generators carry the
    given weight multiset over x1..xd.  h is the Hilbert series of the
    algebra in its p generator variables."""
    mp = _weighted_multiplicity(h, weights, d, strategy)
    return specialize_values(mp, _group_values(group, d))


def noncommutative_weitzenbock(h: NiceRational, shape: JordanShape,
                               strategy: str = "pf") -> NiceRational:
    """Constants series of the cell-structure derivation acting on an
    algebra with Hilbert series h in shape.total() generators."""
    mp = _weighted_multiplicity(h, _cell_weights(shape), 2, strategy)
    return specialize_values(mp, _group_values("ut", 2))
