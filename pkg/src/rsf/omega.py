"""Elimination of one auxiliary variable z at a time.

Given a nice rational function whose denominator factors carry positive
or negative powers of an elimination variable z, the positive-part
operator keeps exactly the part of the two-sided series expansion with
nonnegative z exponents and then sets z to 1.  Expansion happens in the
region where every factor monomial is small, so factors with positive z
powers expand around z = 0 and factors with negative z powers around
z = infinity.

Two independent strategies are implemented:

* `partial_fractions_z` / `omega_geq`: pivot the negative factors,
  split every two-term factor into its cyclotomic pieces, build a
  pairwise coprime basis, decompose by an extended Euclid in z, keep
  the polynomial part and the fractions whose basis factor divides a
  standard 1 - B z^b, and set z = 1 term by term.
* `elliott_reduce`: repeatedly apply the classical identity

      1/((1-Az^a)(1-B/z^b)) =
          (1/(1-ABz^(a-b))) * (1/(1-Az^a) + 1/(1-B/z^b) - 1)

  until no denominator mixes both signs of z, then collect the
  nonnegative part directly.  All arithmetic stays inside the nice
  class, which makes this a fully independent cross-check of the
  partial fraction route.
"""

from __future__ import annotations

import os
from typing import Iterable, Optional

from .cyclotomic import line_factor_pieces
from .errors import InternalError, MathError
from .gcdtools import (
    line_split, poly_gcd, u_deg, u_from, u_gcd, u_half_ext, u_is_zero,
    u_mod, u_mul, u_pow, u_prem, u_to,
)
from .poly import (
    MvPoly, QONE, QZERO, VarId, ExponentVector, M_ONE, ROLE_Z,
    m_deg, m_drop, m_get, m_inv, m_mul, m_pow, m_render, m_sort_key, m_var,
)
from .rational import (
    BinomialFactor, NiceRational, PIVOTED, STANDARD, nr_add_raw, nr_equal,
)

POLY_PART = "polynomial-part"
PURE_NEG = "pure-negative-power"
CONTRIB = "contributing-fraction"
DISCARD = "discarded-fraction"

DEFAULT_BUDGET = 100_000


def rewrite_budget() -> int:
    raw = os.environ.get("RSF_REWRITE_BUDGET", "")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise MathError("RSF_REWRITE_BUDGET is not an integer") from None
    return DEFAULT_BUDGET


class ZPartialFractionTerm:
    """One summand of the partial fraction decomposition in z.

    The value of the term is

        num / (prod(scale) * base^power * prod(zfree))

    where scale is a tuple of z-free polynomials, base is one
    coprime-basis factor in z (None for the polynomial part), and zfree
    is the z-free part of the input denominator, shared by all terms.
    The sum of the values over all returned terms equals the input.
    """

    __slots__ = ("kind", "num", "base", "power", "scale", "zfree", "closure")

    def __init__(self, kind: str, num: MvPoly, base: Optional[MvPoly],
                 power: int, scale: tuple[MvPoly, ...],
                 zfree: tuple[BinomialFactor, ...],
                 closure: Optional[ExponentVector] = None):
        self.kind = kind
        self.num = num
        self.base = base
        self.power = power
        self.scale = scale
        self.zfree = zfree
        self.closure = closure

    def value_pair(self) -> tuple[MvPoly, MvPoly]:
        """(numerator, denominator) of the term as expanded polynomials."""
        den = MvPoly.one()
        for s in self.scale:
            den = den * s
        if self.base is not None and self.power:
            den = den * self.base ** self.power
        for f in self.zfree:
            den = den * f.expanded()
        return self.num, den

    def __repr__(self) -> str:
        b = "" if self.base is None else " /(%s)^%d" % (
            self.base.render(), self.power)
        return "ZPFTerm(%s, %s%s)" % (self.kind, self.num.render(), b)


class _BasisPiece:
    __slots__ = ("poly", "mult", "origins", "closure")

    def __init__(self, poly: MvPoly, mult: int, origins: set,
                 closure: Optional[ExponentVector]):
        self.poly = poly
        self.mult = mult
        self.origins = origins
        self.closure = closure


def pivot_z_form(f: NiceRational, zv: VarId) -> NiceRational:
    """Rewrite factors with negative z powers into pivoted form.

    (1 - C z^-c)^p becomes (z^c - C)^p with the numerator picking up
    z^(c p).
    """
    num = f.num
    den = []
    shift = 0
    for bf in f.den:
        if bf.kind == PIVOTED:
            if bf.zv is zv or m_get(bf.mono, zv):
                raise InternalError("factor already pivoted in %s" % zv.name)
            den.append(bf)
            continue
        e = m_get(bf.mono, zv)
        if e >= 0:
            den.append(bf)
            continue
        c = -e
        rest = m_drop(bf.mono, zv)
        if not rest:
            raise MathError(
                "divergent elimination: pure %s factor %s"
                % (zv.name, bf.render()))
        den.append(BinomialFactor(rest, bf.power, PIVOTED, zv, c))
        shift += c * bf.power
    if shift:
        num = num.mul_mono(m_var(zv, shift))
    return NiceRational(num, den, normalize=False)


def _split_factor(bf: BinomialFactor, zv: VarId):
    """Cyclotomic pieces of one z-carrying factor, with origin labels."""
    origin = "std" if bf.kind == STANDARD else "piv"
    res = line_factor_pieces(bf.base_poly())
    if res is None:
        raise InternalError(
            "two-term factor %s did not split on a line" % bf.render())
    unit, mono, pieces = res
    out = []
    for pc in pieces:
        closure = pc.closure_mono() if origin == "std" else None
        out.append(_BasisPiece(pc.poly, pc.power * bf.power, {origin},
                               closure))
    return out, unit, mono


def _build_basis(zden: list[BinomialFactor], zv: VarId):
    """Split, deduplicate and coprime-check the z-carrying denominator.

    Returns (pieces, unit, mono): the product of the input factors
    equals unit * X^mono * prod(piece.poly ** piece.mult).
    """
    merged: dict[MvPoly, _BasisPiece] = {}
    unit = QONE
    mono = M_ONE
    for bf in zden:
        pieces, u, m = _split_factor(bf, zv)
        unit = unit * u ** bf.power
        mono = m_mul(mono, m_pow(m, bf.power))
        for pc in pieces:
            old = merged.get(pc.poly)
            if old is None:
                merged[pc.poly] = pc
            else:
                old.mult += pc.mult
                old.origins |= pc.origins
                if old.closure is None:
                    old.closure = pc.closure
    pieces = _refine_pairwise(list(merged.values()), zv)
    for pc in pieces:
        if len(pc.origins) > 1:
            raise InternalError(
                "ambiguous factor %s divides both standard and pivoted "
                "denominators" % pc.poly.render())
    pieces.sort(key=lambda pc: (u_deg(u_from(pc.poly, zv)),
                                pc.poly.render()))
    return pieces, unit, mono


def _refine_pairwise(pieces: list, zv: VarId) -> list:
    """gcd refinement guard; a no-op once the cyclotomic split ran."""
    work = list(pieces)
    i = 0
    while i < len(work):
        j = i + 1
        restart = False
        while j < len(work):
            a, b = work[i], work[j]
            g = u_gcd(u_from(a.poly, zv), u_from(b.poly, zv))
            if u_deg(g) > 0:
                gp = u_to(g, zv)
                qa = a.poly.exact_div(gp)
                qb = b.poly.exact_div(gp)
                repl = [
                    _BasisPiece(gp, a.mult + b.mult, a.origins | b.origins,
                                a.closure or b.closure)]
                if not qa.is_const():
                    repl.append(_BasisPiece(qa, a.mult, set(a.origins),
                                            a.closure))
                if not qb.is_const():
                    repl.append(_BasisPiece(qb, b.mult, set(b.origins),
                                            b.closure))
                del work[j]
                del work[i]
                work.extend(repl)
                restart = True
                break
            j += 1
        i = 0 if restart else i + 1
    return work


def partial_fractions_z(f: NiceRational, zv: VarId
                        ) -> list[ZPartialFractionTerm]:
    """Decompose f along the powers of one elimination variable.

    The sum of the returned term values equals f exactly.
    """
    f = pivot_z_form(f, zv)
    zfree: list[BinomialFactor] = []
    zden: list[BinomialFactor] = []
    for bf in f.den:
        if bf.kind == PIVOTED:
            if bf.zv is zv:
                zden.append(bf)
            elif m_get(bf.mono, zv):
                raise InternalError(
                    "pivot in %s involves %s" % (bf.zv.name, zv.name))
            else:
                zfree.append(bf)
        elif m_get(bf.mono, zv):
            zden.append(bf)
        else:
            zfree.append(bf)
    zfree_t = tuple(zfree)
    num = f.num
    one = (MvPoly.one(),)
    if not zden:
        keep = {m: c for m, c in num.terms.items() if m_get(m, zv) >= 0}
        drop = {m: c for m, c in num.terms.items() if m_get(m, zv) < 0}
        terms = []
        if keep:
            terms.append(ZPartialFractionTerm(
                POLY_PART, MvPoly(keep), None, 0, one, zfree_t))
        if drop:
            terms.append(ZPartialFractionTerm(
                PURE_NEG, MvPoly(drop), MvPoly.var(zv), 0, one, zfree_t))
        return terms
    pieces, unit, gmono = _build_basis(zden, zv)
    # fold the monomial produced by the basis split into the z power and
    # the z-free scale, and shift the numerator to a polynomial in z
    gz = m_get(gmono, zv)
    grest = m_drop(gmono, zv)
    low = num.min_degree_in(zv)
    s = max(0, gz - low)
    if s - gz:
        num = num.mul_mono(m_var(zv, s - gz))
    gscale = MvPoly.monomial(grest, unit)
    dall = u_pow({1: MvPoly.one()}, s) if s else {0: MvPoly.one()}
    piece_pows = []
    for pc in pieces:
        up = u_pow(u_from(pc.poly, zv), pc.mult)
        piece_pows.append(up)
        dall = u_mul(dall, up)
    un = u_from(num, zv)
    terms: list[ZPartialFractionTerm] = []
    mult0 = MvPoly.one()
    if u_deg(un) >= u_deg(dall):
        quo, rem, mult0 = u_prem(un, dall)
        if not u_is_zero(quo):
            terms.append(ZPartialFractionTerm(
                POLY_PART, u_to(quo, zv), None, 0, (mult0, gscale), zfree_t))
        un = rem
    if u_is_zero(un):
        return terms
    fracs = []
    if s:
        fracs.append(({1: MvPoly.one()}, s, None, PURE_NEG, None))
    for pc, up in zip(pieces, piece_pows):
        kind = CONTRIB if "std" in pc.origins else DISCARD
        fracs.append((u_from(pc.poly, zv), pc.mult, pc.poly, kind,
                      pc.closure))
    for ubase, power, base_poly, kind, closure in fracs:
        modulus = u_pow(ubase, power)
        rest = {0: MvPoly.one()}
        for ob, op, _, _, _ in fracs:
            if ob is ubase:
                continue
            rest = u_mul(rest, u_pow(ob, op))
        rest_red, mult1 = u_mod(rest, modulus)
        c, u = u_half_ext(modulus, rest_red)
        nj, mult2 = u_mod(u_mul(un, u), modulus)
        if u_is_zero(nj):
            continue
        if base_poly is None:
            base_poly = MvPoly.var(zv)
        # the true numerator is nj * mult1; c, mult2, mult0 and the
        # global scale sit in the denominator
        terms.append(ZPartialFractionTerm(
            kind, u_to(nj, zv) * mult1, base_poly, power,
            (c, mult2, mult0, gscale), zfree_t, closure))
    return terms


def omega_geq(f: NiceRational, zv) -> NiceRational:
    """Positive part at 1 in one z variable or an ordered sequence.

    Uses the partial fraction strategy; see omega_step / eliminate_all
    for strategy selection.
    """
    if not isinstance(zv, VarId):
        out = f
        for one in zv:
            out = _omega_geq_one(out, one)
        return out
    return _omega_geq_one(f, zv)


def _omega_geq_one(f: NiceRational, zv: VarId) -> NiceRational:
    if not f.num.has_var(zv) and not any(
            m_get(bf.mono, zv) or bf.zv is zv for bf in f.den):
        return f
    terms = partial_fractions_z(f, zv)
    zfree = terms[0].zfree if terms else ()
    kept: list[tuple[MvPoly, list[MvPoly], dict[ExponentVector, int]]] = []
    for term in terms:
        if term.kind in (PURE_NEG, DISCARD):
            continue
        if term.kind == POLY_PART:
            num1 = term.num.subs_one(zv)
            if not num1.is_zero():
                num1, scales = _cancel_scales(
                    num1, [p.subs_one(zv) for p in term.scale])
                kept.append((num1, scales, {}))
            continue
        w = term.closure
        if w is None:
            raise InternalError("contributing fraction without closure")
        closure_poly = MvPoly.one() - MvPoly.monomial(w)
        cof = closure_poly.try_div(term.base)
        if cof is None:
            raise InternalError("closure does not contain basis factor")
        w1 = m_drop(w, zv)
        if not w1:
            raise MathError(
                "divergent direction: closure %s collapses at %s = 1"
                % (m_render(w), zv.name))
        num1 = (term.num * cof ** term.power).subs_one(zv)
        if not num1.is_zero():
            num1, scales = _cancel_scales(
                num1, [p.subs_one(zv) for p in term.scale])
            kept.append((num1, scales, {w1: term.power}))
    if not kept:
        return NiceRational(MvPoly.zero(), ())
    out = _combine_kept(kept, zfree)
    if not all(e >= 0 or v.role is ROLE_Z for t in out.num.terms
               for v, e in t):
        raise InternalError("elimination left a Laurent numerator")
    return out


def _cancel_scales(num: MvPoly, scales: list[MvPoly]
                   ) -> tuple[MvPoly, list[MvPoly]]:
    """Cancel scale denominators into the numerator factor by factor.

    The scale polynomials are products of line-supported pieces, and
    most of them divide the numerator outright.  Splitting them first
    keeps the later common-denominator sum small; a whole-polynomial
    gcd here would choke on the large products.
    """
    out: list[MvPoly] = []
    for p in scales:
        if p.is_const():
            out.append(p)
            continue
        for q in line_split(p):
            if q.is_const():
                out.append(q)
                continue
            q2 = num.try_div(q)
            if q2 is not None:
                num = q2
            else:
                out.append(q)
    return num, out


def _combine_kept(kept, zfree) -> NiceRational:
    """Sum num/(scales * bins) pieces pairwise, cancelling as we go.

    A single common denominator over all pieces expands far beyond the
    final reduced size, so pieces are merged two at a time (cheapest
    union first) and after every merge each denominator factor is
    divided back out of the numerator as far as it will go.
    """
    items = []
    for num, scales, bins in kept:
        sc: dict[MvPoly, int] = {}
        for p in scales:
            if p.is_const():
                cv = p.const_value()
                if cv == 0:
                    raise InternalError("zero scale denominator")
                num = num * (QONE / cv)
                continue
            sc[p] = sc.get(p, 0) + 1
        num, sc = _cancel_counted(num, sc)
        num, bins = _cancel_bins(num, dict(bins))
        items.append((num, sc, bins))
    while len(items) > 1:
        best = None
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                cost = _merge_cost(items[i], items[j])
                if best is None or cost < best[0]:
                    best = (cost, i, j)
        _, i, j = best
        b = items.pop(j)
        a = items.pop(i)
        items.append(_merge_pair(a, b))
    num, sc, bins = items[0] if items else (MvPoly.zero(), {}, {})
    num_out, extra_bins = _reduce_junk(num, sc)
    bins_out = dict(bins)
    for w, k in extra_bins.items():
        bins_out[w] = bins_out.get(w, 0) + k
    den = [BinomialFactor(w, k) for w, k in bins_out.items()]
    den.extend(zfree)
    return NiceRational(num_out, den, normalize=True)


def _poly_key(p: MvPoly):
    """A deterministic ordering key; hash order varies between runs."""
    return (len(p.terms), sorted(m_sort_key(m) for m in p.terms))


def _cancel_counted(num: MvPoly, sc: dict[MvPoly, int]
                    ) -> tuple[MvPoly, dict[MvPoly, int]]:
    out: dict[MvPoly, int] = {}
    for p, k in sorted(sc.items(), key=lambda t: _poly_key(t[0])):
        while k:
            q = num.try_div(p)
            if q is None:
                break
            num = q
            k -= 1
        if k:
            out[p] = out.get(p, 0) + k
    return num, out


def _cancel_bins(num: MvPoly, bins: dict[ExponentVector, int]
                 ) -> tuple[MvPoly, dict[ExponentVector, int]]:
    out: dict[ExponentVector, int] = {}
    for w, k in sorted(bins.items(), key=lambda t: m_sort_key(t[0])):
        bp = MvPoly.one() - MvPoly.monomial(w)
        while k:
            q = num.try_div(bp)
            if q is None:
                break
            num = q
            k -= 1
        if k:
            out[w] = k
    return num, out


def _merge_cost(a, b) -> tuple[int, int]:
    na, sa, ba = a
    nb, sb, bb = b
    ca = len(na.terms)
    cb = len(nb.terms)
    for p in set(sa) | set(sb):
        d = sa.get(p, 0) - sb.get(p, 0)
        if d > 0:
            cb *= len(p.terms) ** d
        elif d:
            ca *= len(p.terms) ** (-d)
    for w in set(ba) | set(bb):
        d = ba.get(w, 0) - bb.get(w, 0)
        if d > 0:
            cb *= 2 ** d
        elif d:
            ca *= 2 ** (-d)
    return (ca + cb, len(set(sa) | set(sb)))


def _merge_pair(a, b):
    na, sa, ba = a
    nb, sb, bb = b
    sc = {p: max(sa.get(p, 0), sb.get(p, 0))
          for p in sorted(set(sa) | set(sb), key=_poly_key)}
    bins = {w: max(ba.get(w, 0), bb.get(w, 0))
            for w in sorted(set(ba) | set(bb), key=m_sort_key)}
    for own, num in ((sa, na), (sb, nb)):
        for p, k in sc.items():
            need = k - own.get(p, 0)
            if need:
                num = num * p ** need
        if own is sa:
            na = num
        else:
            nb = num
    for own, num in ((ba, na), (bb, nb)):
        for w, k in bins.items():
            need = k - own.get(w, 0)
            if need:
                num = num * (MvPoly.one() - MvPoly.monomial(w)) ** need
        if own is ba:
            na = num
        else:
            nb = num
    num, sc = _cancel_counted(na + nb, sc)
    num, bins = _cancel_bins(num, bins)
    return num, sc, bins


def _content_split(p: MvPoly):
    """Split p = content * primitive along some variable, if nontrivial.

    Products of factors living on different lattice lines (which arise
    as accumulated scale denominators) often reveal one factor as the
    gcd of the coefficients with respect to a single variable.
    """
    for v in sorted(p.vars(), key=lambda u: u.sort_key):
        lo = p.min_degree_in(v)
        hi = p.degree_in(v)
        if hi == lo:
            continue
        g = None
        for e in range(lo, hi + 1):
            c = p.coeff_of(v, e)
            if c.is_zero():
                continue
            g = c if g is None else poly_gcd(g, c)
            if g.is_const():
                break
        if g is not None and not g.is_const():
            return g, p.exact_div(g)
    return None


def _reduce_junk(num: MvPoly, junk: dict[MvPoly, int]
                 ) -> tuple[MvPoly, dict[ExponentVector, int]]:
    """Clear non-binomial denominators by recognition or cancellation.

    Every junk polynomial is either cyclotomic along a line with proper
    closure directions (then its reciprocal turns into binomial factors
    and a numerator cofactor) or must cancel into the numerator exactly;
    anything else would mean the result left the nice class, which is a
    guarded internal error.
    """
    bins: dict[ExponentVector, int] = {}
    mono_den = M_ONE
    unit_den = QONE
    queue: list[tuple[MvPoly, int]] = sorted(
        junk.items(), key=lambda t: _poly_key(t[0]), reverse=True)
    while queue:
        p, k = queue.pop()
        if p.is_const():
            unit_den = unit_den * p.const_value() ** k
            continue
        shift = p.mono_shift()
        if shift:
            p = p.mul_mono(m_inv(shift))
            mono_den = m_mul(mono_den, m_pow(shift, k))
        p, cont = p.primitive()
        if cont != 1:
            unit_den = unit_den * cont ** k
        if p.is_one():
            continue
        res = line_factor_pieces(p)
        if res is not None:
            plan = []
            for pc in res[2]:
                w = pc.closure_mono()
                if all(e > 0 or v.role is ROLE_Z for v, e in w):
                    plan.append((pc, w))
                else:
                    plan = None
                    break
            if plan is not None:
                unit, mono, _ = res
                unit_den = unit_den * unit ** k
                mono_den = m_mul(mono_den, m_pow(mono, k))
                for pc, w in plan:
                    closure_poly = MvPoly.one() - MvPoly.monomial(w)
                    cof = closure_poly.exact_div(pc.poly)
                    e = pc.power * k
                    num = num * cof ** e
                    bins[w] = bins.get(w, 0) + e
                continue
        parts = line_split(p)
        if len(parts) > 1:
            queue.extend((q, k) for q in parts)
            continue
        split = _content_split(p)
        if split is not None:
            queue.append((split[0], k))
            queue.append((split[1], k))
            continue
        q = num
        ok = True
        for _ in range(k):
            q2 = q.try_div(p)
            if q2 is None:
                ok = False
                break
            q = q2
        if ok:
            num = q
            continue
        g = poly_gcd(p, num)
        if not g.is_const() and g != p:
            q2 = p.try_div(g)
            if q2 is not None and not q2.is_const():
                queue.append((g, k))
                queue.append((q2, k))
                continue
        raise InternalError(
            "result left the nice class: irreducible denominator %s"
            % p.render())
    if unit_den != 1:
        num = num * (QONE / unit_den)
    if mono_den:
        num = num.mul_mono(m_inv(mono_den))
    return num, bins


# ---------------------------------------------------------------------------
# The Elliott rewriting strategy.


def _den_key(den_list) -> tuple:
    merged: dict[ExponentVector, int] = {}
    for m, p in den_list:
        merged[m] = merged.get(m, 0) + p
    return tuple(sorted(merged.items(), key=lambda t: (m_render(t[0]), t[1])))


def elliott_reduce(f: NiceRational, zv: VarId,
                   budget: Optional[int] = None) -> NiceRational:
    """Positive part in zv at zv = 1, via Elliott's identity.

    Fully independent of the partial fraction route: every rewrite step
    stays inside the nice rational class.  The number of rewrite events
    is capped by `budget` (RSF_REWRITE_BUDGET, default 100000).
    """
    if budget is None:
        budget = rewrite_budget()
    steps = 0
    for bf in f.den:
        if bf.kind == PIVOTED:
            raise InternalError("elliott_reduce expects standard factors")

    # Pieces are keyed by the multiset of z-carrying denominator factors
    # only; z-free factors ride along inside the NiceRational value, so
    # pieces that differ just by accumulated z-free history still merge.
    # All intermediate sums skip cancellation; one normalization happens
    # at the very end.
    pieces: dict[tuple, NiceRational] = {}
    done: dict[tuple, NiceRational] = {}

    def tick():
        nonlocal steps
        steps += 1
        if steps > budget:
            raise InternalError(
                "rewrite budget exceeded (%d); raise RSF_REWRITE_BUDGET"
                % budget)

    def add_piece(den_list, value: NiceRational):
        if value.is_zero():
            return
        key = _den_key(den_list)
        old = pieces.get(key)
        s = value if old is None else nr_add_raw(old, value)
        if s.is_zero():
            pieces.pop(key, None)
        else:
            pieces[key] = s

    def add_done(value: NiceRational):
        if value.is_zero():
            return
        key = tuple(sorted((bf.key(), bf.power) for bf in value.den))
        old = done.get(key)
        done[key] = value if old is None else nr_add_raw(old, value)

    zden = []
    zfree = []
    for bf in f.den:
        (zden if m_get(bf.mono, zv) else zfree).append(bf)
    add_piece([(bf.mono, bf.power) for bf in zden],
              NiceRational(f.num, zfree, normalize=False))

    while pieces:
        den_key = next(iter(pieces))
        value = pieces.pop(den_key)
        den = list(den_key)
        num = value.num
        pos = [i for i, (m, p) in enumerate(den) if m_get(m, zv) > 0]
        neg = [i for i, (m, p) in enumerate(den) if m_get(m, zv) < 0]
        if pos and neg:
            tick()
            # Pair choice drives the tree size: combining exponents of
            # near-equal magnitude reaches z-free products fastest (the
            # Euclidean descent on z-exponents), while mismatched pairs
            # spawn long chains of fresh mixed states.
            best = None
            for i2 in pos:
                a = m_get(den[i2][0], zv)
                for j2 in neg:
                    b = m_get(den[j2][0], zv)
                    score = (abs(a + b),
                             m_deg(den[i2][0]) + m_deg(den[j2][0]))
                    if best is None or score < best[0]:
                        best = (score, i2, j2)
            _, i, j = best
            ma, pa = den[i]
            mb, pb = den[j]
            rest = [den[k] for k in range(len(den)) if k not in (i, j)]
            if pa > 1:
                rest.append((ma, pa - 1))
            if pb > 1:
                rest.append((mb, pb - 1))
            e = m_mul(ma, mb)
            if not m_drop(e, zv):
                raise MathError(
                    "divergent elimination: factors %s and %s collapse"
                    % (m_render(ma), m_render(mb)))
            if m_get(e, zv):
                with_e = rest + [(e, 1)]
                shared = value
            else:
                with_e = rest
                shared = NiceRational(value.num,
                                      list(value.den) + [BinomialFactor(e)],
                                      normalize=False)
            add_piece(with_e + [(ma, 1)], shared)
            add_piece(with_e + [(mb, 1)], shared)
            add_piece(with_e, -shared)
            continue
        if neg:
            # only down factors left: push every numerator term with a
            # positive z exponent below zero, then keep the z^0 slice
            wrong = [(m, c) for m, c in num.terms.items() if m_get(m, zv) > 0]
            if wrong:
                tick()
                ii = neg[0]
                mb, pb = den[ii]
                b = -m_get(mb, zv)
                den_wo = list(den)
                if pb > 1:
                    den_wo[ii] = (mb, pb - 1)
                else:
                    del den_wo[ii]
                geom = {}
                pushed = {m: c for m, c in num.terms.items()
                          if m_get(m, zv) <= 0}
                for mono, c in wrong:
                    kk = -(-m_get(mono, zv) // b)
                    for k2 in range(kk):
                        m2 = m_mul(mono, m_pow(mb, k2))
                        geom[m2] = geom.get(m2, QZERO) + c
                    m2 = m_mul(mono, m_pow(mb, kk))
                    pushed[m2] = pushed.get(m2, QZERO) + c
                add_piece(den_wo, NiceRational(
                    MvPoly.from_terms(geom.items()), value.den,
                    normalize=False))
                add_piece(den, NiceRational(
                    MvPoly.from_terms(pushed.items()), value.den,
                    normalize=False))
                continue
            part = num.coeff_of(zv, 0)
            add_done(NiceRational(part, value.den, normalize=False))
            continue
        if pos:
            # only up factors left: push every numerator term with a
            # negative z exponent up to zero or above, then set z = 1
            wrong = [(m, c) for m, c in num.terms.items() if m_get(m, zv) < 0]
            if wrong:
                tick()
                ii = pos[0]
                ma, pa = den[ii]
                a = m_get(ma, zv)
                den_wo = list(den)
                if pa > 1:
                    den_wo[ii] = (ma, pa - 1)
                else:
                    del den_wo[ii]
                geom = {}
                pushed = {m: c for m, c in num.terms.items()
                          if m_get(m, zv) >= 0}
                for mono, c in wrong:
                    kk = -(m_get(mono, zv) // a)
                    for k2 in range(kk):
                        m2 = m_mul(mono, m_pow(ma, k2))
                        geom[m2] = geom.get(m2, QZERO) + c
                    m2 = m_mul(mono, m_pow(ma, kk))
                    pushed[m2] = pushed.get(m2, QZERO) + c
                add_piece(den_wo, NiceRational(
                    MvPoly.from_terms(geom.items()), value.den,
                    normalize=False))
                add_piece(den, NiceRational(
                    MvPoly.from_terms(pushed.items()), value.den,
                    normalize=False))
                continue
            num1 = num.subs_one(zv)
            add_done(NiceRational(
                num1, list(value.den)
                + [BinomialFactor(m_drop(m, zv), p) for m, p in den],
                normalize=False))
            continue
        kept = MvPoly({m: cc for m, cc in num.terms.items()
                       if m_get(m, zv) >= 0}).subs_one(zv)
        add_done(NiceRational(kept, value.den, normalize=False))
    vals = list(done.values())
    while len(vals) > 1:
        nxt = [nr_add_raw(vals[i], vals[i + 1])
               for i in range(0, len(vals) - 1, 2)]
        if len(vals) % 2:
            nxt.append(vals[-1])
        vals = nxt
    result = vals[0] if vals else NiceRational.zero()
    return result.normalized()


# ---------------------------------------------------------------------------
# Strategy wrappers.


def omega_step(f: NiceRational, zv: VarId,
               strategy: str = "pf") -> NiceRational:
    """One elimination step under the chosen strategy."""
    if strategy == "pf":
        return omega_geq(f, zv)
    if strategy == "elliott":
        return elliott_reduce(f, zv)
    if strategy == "both":
        a = omega_geq(f, zv)
        b = elliott_reduce(f, zv)
        if not nr_equal(a, b):
            raise InternalError(
                "strategy disagreement eliminating %s: pf=%s elliott=%s"
                % (zv.name, a.render(), b.render()))
        return a
    raise MathError("unknown strategy %r" % (strategy,))


def omega_eq0(f: NiceRational, zv: VarId,
              strategy: str = "pf") -> NiceRational:
    """The z^0 slice: omega_geq(f) - omega_geq(f / z)."""
    shifted = NiceRational(f.num.mul_mono(m_var(zv, -1)), f.den,
                           normalize=False)
    return omega_step(f, zv, strategy) - omega_step(shifted, zv, strategy)


def eliminate_all(f: NiceRational, zvars: Iterable[VarId],
                  strategy: str = "pf") -> NiceRational:
    """Eliminate several z variables in the given order."""
    out = f
    for zv in zvars:
        out = omega_step(out, zv, strategy)
    return out
