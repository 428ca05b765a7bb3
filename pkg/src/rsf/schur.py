"""Schur polynomials and multiplicity series.

A symmetric power series f(X) in x1..xd decomposes as a sum of Schur
polynomials, f = sum m(lambda) S_lambda(X).  The multiplicity series
M(f;X) = sum m(lambda) X^lambda collects the coefficients, and M' is
the same series rewritten in the variables v_i = x1*...*xi.  M is
computed from f by one Omega elimination per auxiliary z-variable:
multiply by the Vandermonde product, twist x_i by z_(i-1)^-1 * z_i,
keep the nonnegative z-part, and divide off the staircase monomial.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Optional, Sequence

from .errors import InternalError, MathError
from .omega import eliminate_all
from .poly import (
    MvPoly, MvTerm, Rat, ROLE_INERT, ROLE_X, VarId, m_get, m_inv, m_make,
    m_mul, m_var, staircase_monomial, vandermonde_product, xvar, vvar, zvar,
)
from .rational import NiceRational, nr_equal, series_truncate


Partition = tuple        # weakly decreasing nonnegative ints, no trailing zeros


def as_partition(parts: Iterable[int]) -> Partition:
    """Normalize a sequence into a partition tuple."""
    lam = list(parts)
    for a in lam:
        if a != int(a) or a < 0:
            raise MathError("partition parts must be nonnegative integers")
    lam = [int(a) for a in lam]
    while lam and lam[-1] == 0:
        lam.pop()
    for i in range(len(lam) - 1):
        if lam[i] < lam[i + 1]:
            raise MathError("not weakly decreasing: %s" % (tuple(parts),))
    return tuple(lam)


_schur_cache: dict = {}


def schur_poly(lam: Iterable[int], d: int) -> MvPoly:
    """The Schur polynomial S_lambda(x1,...,xd) via the bialternant."""
    lam = as_partition(lam)
    if d < 1:
        raise MathError("need at least one variable")
    if len(lam) > d:
        raise MathError(
            "partition %s has more than %d parts" % (lam, d))
    key = (lam, d)
    hit = _schur_cache.get(key)
    if hit is not None:
        return hit
    full = lam + (0,) * (d - len(lam))
    # alternant det(x_j^(lam_i + d - i)) over sign-weighted permutations
    exps = [full[i] + d - 1 - i for i in range(d)]
    terms = {}
    for sigma in permutations(range(d)):
        mono = m_make((xvar(j + 1), exps[i]) for i, j in enumerate(sigma))
        c = terms.get(mono, 0) + _perm_sign(sigma)
        if c:
            terms[mono] = Rat(c)
        else:
            terms.pop(mono, None)
    alternant = MvPoly(terms)
    if d == 1:
        result = alternant
    else:
        result = alternant.try_div(vandermonde_product(d))
        if result is None:
            raise InternalError("alternant not divisible by Vandermonde")
    _schur_cache[key] = result
    return result


def _perm_sign(sigma: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(sigma)
    for i in range(len(sigma)):
        if seen[i]:
            continue
        j = i
        size = 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            size += 1
        if size % 2 == 0:
            sign = -sign
    return sign


def _check_symmetric(f: NiceRational, d: int) -> None:
    """Adjacent transpositions generate the symmetric group."""
    for i in range(1, d):
        a, b = xvar(i), xvar(i + 1)
        swapped = f.substitute({a: MvTerm.of_var(b), b: MvTerm.of_var(a)})
        if not nr_equal(f, swapped):
            raise MathError("input not symmetric (x%d <-> x%d)" % (i, i + 1))


def _check_variables(f: NiceRational, d: int, graded: bool) -> None:
    allowed = {xvar(i) for i in range(1, d + 1)}
    for v in sorted(f.vars()):
        if v in allowed:
            continue
        if v.role is not ROLE_INERT or not graded:
            raise MathError("unexpected variable %s for d=%d" % (v.name, d))


def multiplicity_series(f: NiceRational, d: int, graded: bool = False,
                        strategy: str = "pf"
                        ) -> tuple[NiceRational, NiceRational]:
    """Return (M, M') for a symmetric nice rational function in x1..xd.

    With `graded` the input may carry extra inert variables (a homogeneity
    grade) which ride along untouched.  `strategy` selects the elimination
    route and is handed to the Omega layer unchanged.
    """
    _check_variables(f, d, graded)
    _check_symmetric(f, d)
    g = f * NiceRational.from_poly(vandermonde_product(d))
    images = {}
    for i in range(1, d + 1):
        mono = m_var(xvar(i))
        if i > 1:
            mono = m_mul(mono, m_var(zvar(i - 1), -1))
        if i < d:
            mono = m_mul(mono, m_var(zvar(i)))
        images[xvar(i)] = MvTerm.of_mono(mono)
    g = g.substitute(images)
    kept = eliminate_all(g, [zvar(i) for i in range(1, d)], strategy=strategy)
    m_num = _staircase_divide(kept.num, d)
    m_series = NiceRational(m_num, kept.den)
    return m_series, x_to_v(m_series, d)


def _staircase_divide(num: MvPoly, d: int) -> MvPoly:
    stair = staircase_monomial(d)
    for mono in num.terms:
        for i in range(1, d):
            if m_get(mono, xvar(i)) < d - i:
                raise InternalError("staircase division failed")
    return num.mul_mono(m_inv(stair))


def x_to_v(h: NiceRational, d: int) -> NiceRational:
    """Rewrite a multiplicity series from X-variables to v_i = x1*...*xi."""
    images = {}
    for i in range(1, d + 1):
        mono = m_var(vvar(i))
        if i > 1:
            mono = m_mul(mono, m_var(vvar(i - 1), -1))
        images[xvar(i)] = MvTerm.of_mono(mono)
    num = h.num.substitute(images)
    if not num.is_proper():
        raise InternalError("multiplicity numerator not expressible in v")
    den = []
    for fac in h.den:
        parts = [(v, e) for v, e in fac.mono if v.role is not ROLE_X]
        lam = [m_get(fac.mono, xvar(i)) for i in range(1, d + 1)]
        for i in range(d - 1):
            if lam[i] < lam[i + 1]:
                raise InternalError(
                    "denominator exponents not weakly decreasing: %s"
                    % fac.render())
        for i in range(d):
            e = lam[i] - (lam[i + 1] if i + 1 < d else 0)
            if e:
                parts.append((vvar(i + 1), e))
        den.append(fac.__class__(m_make(parts), fac.power))
    return NiceRational(num, den)


def v_to_x(h: NiceRational, d: int) -> NiceRational:
    """Inverse rewriting: v1 -> x1, v_i -> v_(i-1)*x_i."""
    images = {}
    for i in range(1, d + 1):
        mono = m_make((xvar(j), 1) for j in range(1, i + 1))
        images[vvar(i)] = MvTerm.of_mono(mono)
    return h.substitute(images)


def verify_multiplicity(f: NiceRational, h: NiceRational, d: int) -> bool:
    """Check h = M(f;X) by the alternating-sum identity.

    f * prod(x_i - x_j) must equal the signed sum over permutations of
    the staircase monomial times h with permuted variables.
    """
    lhs = f * NiceRational.from_poly(vandermonde_product(d))
    rhs = NiceRational.zero()
    for sigma in permutations(range(1, d + 1)):
        images = {xvar(i): MvTerm.of_var(xvar(sigma[i - 1]))
                  for i in range(1, d + 1)}
        stair = m_make((xvar(sigma[i - 1]), d - i) for i in range(1, d))
        term = h.substitute(images) * NiceRational.from_poly(
            MvPoly.monomial(stair, _perm_sign([s - 1 for s in sigma])))
        rhs = rhs + term
    return nr_equal(lhs, rhs)


class SchurExpansion:
    """Schur coefficients of a symmetric series, truncated by degree."""

    __slots__ = ("entries", "degree")

    def __init__(self, entries: dict, degree: int):
        self.entries = dict(entries)
        self.degree = degree

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.degree == other.degree and self.entries == other.entries

    def __repr__(self) -> str:
        return "SchurExpansion(%s, degree=%d)" % (self.entries, self.degree)

    def multiplicity(self, lam: Iterable[int]) -> Rat:
        return self.entries.get(as_partition(lam), Rat(0))

    def as_poly(self) -> MvPoly:
        """The truncated multiplicity series sum m(lambda) X^lambda."""
        return MvPoly.from_terms(
            (m_make((xvar(i + 1), lam[i]) for i in range(len(lam))), c)
            for lam, c in self.entries.items())

    def to_json(self) -> dict:
        items = sorted(self.entries.items(),
                       key=lambda kv: (sum(kv[0]), kv[0]))
        return {"N": self.degree,
                "entries": [{"lambda": list(lam), "m": _int_or_str(c)}
                            for lam, c in items]}

    @classmethod
    def from_json(cls, data: dict) -> "SchurExpansion":
        entries = {as_partition(e["lambda"]): Rat(e["m"])
                   for e in data["entries"]}
        return cls(entries, int(data["N"]))


def _int_or_str(c: Rat):
    if c.denominator == 1:
        return int(c.numerator)
    return "%s/%s" % (c.numerator, c.denominator)


def schur_expand(f: NiceRational, d: int, bound: int) -> SchurExpansion:
    """Greedy Schur decomposition of the series of f up to total degree."""
    p = series_truncate(f, bound)
    for v in p.vars():
        if v.role is not ROLE_X:
            raise MathError("unexpected variable %s in Schur expansion"
                            % v.name)
    order = [xvar(i) for i in range(1, d + 1)]
    entries = {}
    while not p.is_zero():
        mono = max(p.terms, key=lambda m: tuple(m_get(m, v) for v in order))
        lam = tuple(m_get(mono, v) for v in order)
        for i in range(d - 1):
            if lam[i] < lam[i + 1]:
                raise MathError("non-partition leading term %s" %
                                (lam,))
        lam = as_partition(lam)
        c = p.terms[mono]
        entries[lam] = c
        p = p - schur_poly(lam, d) * MvPoly.const(c)
    return SchurExpansion(entries, bound)


def young_rule(m: int, mu: Iterable[int], d: int) -> list:
    """Partitions nu obtained from mu by adding a horizontal strip of m."""
    mu = as_partition(mu)
    if len(mu) > d:
        raise MathError("partition %s has more than %d parts" % (mu, d))
    if m < 0:
        raise MathError("strip size must be nonnegative")
    full = mu + (0,) * (d - len(mu))
    out = []

    def place(i: int, rest: int, prefix: tuple) -> None:
        if i == d:
            if rest == 0:
                out.append(as_partition(prefix))
            return
        hi = prefix[-1] if prefix else full[0] + rest
        hi = min(hi, full[i] + rest)
        if i > 0:
            hi = min(hi, full[i - 1])
        for nu_i in range(hi, full[i] - 1, -1):
            place(i + 1, rest - (nu_i - full[i]), prefix + (nu_i,))

    place(0, m, ())
    return out
