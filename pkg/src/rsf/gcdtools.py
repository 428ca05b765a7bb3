"""Polynomial gcd machinery.

Two layers live here:

* a "upoly" view of an `MvPoly` as a dense-in-one-variable polynomial
  with `MvPoly` coefficients (a dict exponent -> coefficient), used for
  pseudo-division, primitive-PRS gcds and the extended half-gcd that
  partial fraction decomposition needs;
* `poly_gcd`, the multivariate gcd normalized to a primitive polynomial
  with nonnegative exponents and positive leading coefficient.  It
  includes the common monomial content of its arguments.
"""

from __future__ import annotations

from typing import Optional

from .errors import InternalError
from .poly import (
    MvPoly, Rat, QONE, QZERO, VarId, ExponentVector,
    M_ONE, m_inv, m_make, m_mul, m_var,
)

UPoly = dict[int, MvPoly]


def u_from(p: MvPoly, var: VarId) -> UPoly:
    return {e: q for e, q in p.split_by(var).items() if not q.is_zero()}


def u_to(u: UPoly, var: VarId) -> MvPoly:
    out = MvPoly.zero()
    for e, q in u.items():
        out = out + q.mul_mono(m_var(var, e))
    return out


def u_deg(u: UPoly) -> int:
    return max(u) if u else -1


def u_lc(u: UPoly) -> MvPoly:
    return u[max(u)]


def u_is_zero(u: UPoly) -> bool:
    return not u


def u_add(a: UPoly, b: UPoly) -> UPoly:
    out = dict(a)
    for e, q in b.items():
        s = out.get(e)
        s = q if s is None else s + q
        if s.is_zero():
            out.pop(e, None)
        else:
            out[e] = s
    return out


def u_neg(a: UPoly) -> UPoly:
    return {e: -q for e, q in a.items()}


def u_sub(a: UPoly, b: UPoly) -> UPoly:
    return u_add(a, u_neg(b))


def u_scale(a: UPoly, c: MvPoly) -> UPoly:
    if c.is_zero():
        return {}
    if c.is_one():
        return a
    return {e: q * c for e, q in a.items()}


def u_shift(a: UPoly, k: int) -> UPoly:
    if k == 0:
        return a
    return {e + k: q for e, q in a.items()}


def u_mul(a: UPoly, b: UPoly) -> UPoly:
    out: UPoly = {}
    for ea, qa in a.items():
        for eb, qb in b.items():
            e = ea + eb
            s = out.get(e)
            prod = qa * qb
            s = prod if s is None else s + prod
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
    return out


def u_pow(a: UPoly, k: int) -> UPoly:
    out: UPoly = {0: MvPoly.one()}
    base = a
    while k:
        if k & 1:
            out = u_mul(out, base)
        k >>= 1
        if k:
            base = u_mul(base, base)
    return out


def u_rat_scale(a: UPoly, c: Rat) -> UPoly:
    return {e: q * c for e, q in a.items()}


def u_prem(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly, MvPoly]:
    """Pseudo-division: returns (quo, rem, mult) with mult*a == quo*b + rem.

    mult is a power of the leading coefficient of b; rem is zero or has
    degree below deg b.
    """
    db = u_deg(b)
    if db < 0:
        raise InternalError("pseudo-division by zero")
    lb = u_lc(b)
    r = dict(a)
    quo: UPoly = {}
    mult = MvPoly.one()
    while r and u_deg(r) >= db:
        dr = u_deg(r)
        lr = r[dr]
        # r := lb*r - lr * x^(dr-db) * b ; the leading terms cancel.
        r = u_sub(u_scale(r, lb), u_shift(u_scale(b, lr), dr - db))
        r.pop(dr, None)
        quo = u_add(u_shift({0: lr}, dr - db), u_scale(quo, lb))
        mult = mult * lb
    return quo, r, mult


def u_joint_strip(rows: list[UPoly]) -> list[UPoly]:
    """Divide all rows by the common rational content of their coefficients."""
    num_gcd = 0
    den_lcm = 1
    for row in rows:
        for q in row.values():
            c = q.rat_content()
            num_gcd = _gcd_int(num_gcd, abs(int(c.numerator)))
            den_lcm = _lcm_int(den_lcm, int(c.denominator))
    if num_gcd in (0, 1) and den_lcm == 1:
        return rows
    scale = Rat(den_lcm, num_gcd)
    return [u_rat_scale(row, scale) for row in rows]


def u_content(u: UPoly) -> MvPoly:
    """gcd of the coefficient polynomials (monomial content included)."""
    it = iter(u.values())
    g = next(it, MvPoly.zero())
    for q in it:
        if g.is_one():
            break
        g = poly_gcd(g, q)
    return g


def u_primitive(u: UPoly) -> tuple[UPoly, MvPoly]:
    c = u_content(u)
    if c.is_zero() or c.is_one():
        return u, MvPoly.one()
    return {e: q.exact_div(c) for e, q in u.items()}, c


def u_gcd(a: UPoly, b: UPoly) -> UPoly:
    """gcd of the primitive parts via a primitive PRS (content dropped)."""
    if u_is_zero(a):
        return b
    if u_is_zero(b):
        return a
    f, _ = u_primitive(a)
    g, _ = u_primitive(b)
    if u_deg(f) < u_deg(g):
        f, g = g, f
    while True:
        _, r, _ = u_prem(f, g)
        if u_is_zero(r):
            return g
        r, _ = u_primitive(r)
        f, g = g, r
        if u_deg(g) == 0:
            return {0: MvPoly.one()}


def u_half_ext(p: UPoly, q: UPoly) -> tuple[MvPoly, UPoly]:
    """Solve u*q == c (mod p) with c a nonzero coefficient polynomial.

    Requires p, q coprime in the main variable; raises InternalError
    otherwise.  Used to invert a cofactor modulo a basis factor power.
    """
    r0, u0 = dict(p), {}
    r1, u1 = dict(q), {0: MvPoly.one()}
    if u_is_zero(r1):
        raise InternalError("half-gcd of zero")
    while not u_is_zero(r1) and u_deg(r1) > 0:
        quo, r2, mult = u_prem(r0, r1)
        # mult*r0 == quo*r1 + r2, so the cofactor row transforms the same way.
        u2 = u_sub(u_scale(u0, mult), u_mul(quo, u1))
        r2, u2 = _strip_pair(r2, u2)
        r0, u0, r1, u1 = r1, u1, r2, u2
    if u_is_zero(r1):
        raise InternalError("moduli are not coprime in the main variable")
    return r1[0], u1


def _strip_pair(r: UPoly, u: UPoly) -> tuple[UPoly, UPoly]:
    stripped = u_joint_strip([r, u])
    return stripped[0], stripped[1]


def u_mod(a: UPoly, b: UPoly) -> tuple[UPoly, MvPoly]:
    """(rem, mult) with mult*a == b*quo + rem, deg rem < deg b."""
    _, r, mult = u_prem(a, b)
    return r, mult


# ---------------------------------------------------------------------------
# Splitting products of line-supported polynomials.
#
# The scale denominators that partial fraction coefficient arithmetic
# accumulates are products of polynomials whose supports are lattice
# segments (evaluations of binomials at monomial roots).  Multivariate
# PRS gcds on such products swell badly, but the factors can be peeled
# off with directional contents, which need only univariate integer
# gcds: for a candidate direction w, group the support into residue
# classes modulo w; a common univariate divisor of all classes is a
# factor supported on the line through w.


def line_split(p: MvPoly) -> list[MvPoly]:
    """Split p into factors each supported on a single lattice line.

    The product of the returned parts is exactly p.  Anything that
    resists peeling is returned whole, so the caller must still cope
    with a composite part in degenerate cases.
    """
    out: list[MvPoly] = []
    stack = [p]
    while stack:
        q = stack.pop()
        if q.is_const() or _support_on_line(q):
            out.append(q)
            continue
        parts = _peel_line(q)
        if parts is None:
            out.append(q)
        else:
            stack.extend(parts)
    return out


def _support_on_line(p: MvPoly) -> bool:
    if len(p.terms) <= 2:
        return True
    return _line_direction(p) is not None


def _line_direction(p: MvPoly):
    """The primitive direction of a line-supported polynomial, else None."""
    monos = list(p.terms)
    if len(monos) < 2:
        return None
    base = dict(monos[0])
    d0 = None
    for u in monos[1:]:
        d = _evec_diff(dict(u), base)
        if d0 is None:
            d0 = _evec_prim(d)
            continue
        if not _evec_multiple(d, d0):
            return None
    return d0


def _evec_diff(a: dict, b: dict) -> dict:
    out = dict(a)
    for v, e in b.items():
        ne = out.get(v, 0) - e
        if ne:
            out[v] = ne
        else:
            out.pop(v, None)
    return out


def _evec_prim(d: dict) -> dict:
    g = 0
    for e in d.values():
        g = _gcd_int(g, abs(e))
    if g > 1:
        d = {v: e // g for v, e in d.items()}
    ordered = sorted(d.items(), key=lambda kv: kv[0].sort_key)
    if ordered and ordered[0][1] < 0:
        d = {v: -e for v, e in d.items()}
    return d


def _evec_multiple(d: dict, d0: dict) -> bool:
    if set(d) != set(d0):
        return False
    k = None
    for v, e in d0.items():
        q, r = divmod(d[v], e)
        if r:
            return False
        if k is None:
            k = q
        elif q != k:
            return False
    return True


def _peel_line(p: MvPoly):
    monos = list(p.terms)
    v0 = min(monos, key=_peel_order)
    base = dict(v0)
    seen = set()
    cands = []
    for u in monos:
        d = _evec_prim(_evec_diff(dict(u), base))
        if not d:
            continue
        key = m_make(d.items())
        if key in seen:
            continue
        seen.add(key)
        cands.append((sum(abs(e) for e in d.values()), key, d))
    cands.sort(key=lambda t: (t[0], t[1]))
    for _, _, w in cands:
        res = _directional_content(p, w)
        if res is not None:
            return list(res)
    return None


def _peel_order(m: ExponentVector):
    return (sum(e for _, e in m), tuple((v.sort_key, -e) for v, e in m))


def _directional_content(p: MvPoly, w: dict):
    """A nontrivial factor of p supported on direction w, with cofactor.

    Returns (factor, cofactor) with factor*cofactor == p exactly, or
    None when the residue classes of the support modulo w share no
    univariate divisor.
    """
    anchor = sorted(w.items(), key=lambda kv: kv[0].sort_key)[0]
    v_c, e_c = anchor
    if e_c < 0:
        w = {v: -e for v, e in w.items()}
        e_c = -e_c
    classes: dict[ExponentVector, dict[int, Rat]] = {}
    for m, c in p.terms.items():
        md = dict(m)
        k = md.get(v_c, 0) // e_c
        entries = []
        for v in set(md) | set(w):
            e = md.get(v, 0) - k * w.get(v, 0)
            if e:
                entries.append((v, e))
        classes.setdefault(m_make(entries), {})[k] = c
    g: Optional[list[int]] = None
    for coeffs in classes.values():
        if len(coeffs) == 1:
            return None
        f = _rat_slice_to_int(coeffs)
        g = f if g is None else _int_gcd_lists(g, f)
        if len(g) <= 1:
            return None
    if g is None or len(g) <= 1:
        return None
    factor = MvPoly.from_terms(
        (m_make((v, e * k) for v, e in w.items() if e * k),
         Rat(c)) for k, c in enumerate(g) if c)
    cof = p.try_div(factor)
    if cof is None:
        return None
    return factor, cof


def _rat_slice_to_int(coeffs: dict[int, Rat]) -> list[int]:
    kmin = min(coeffs)
    kmax = max(coeffs)
    out = [coeffs.get(k, QZERO) for k in range(kmin, kmax + 1)]
    den = 1
    for c in out:
        den = _lcm_int(den, int(c.denominator))
    return _int_primitive([int(c * den) for c in out])


def _int_gcd_lists(fa: list[int], fb: list[int]) -> list[int]:
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        fa, fb = fb, _int_prem(fa, fb)
    return _int_primitive(list(fa))


def _line_gcd(a: MvPoly, b: MvPoly, w: dict):
    """gcd of a line-supported a against any b, by univariate slices.

    The Newton polytope of a product is the Minkowski sum of the
    factors', so a divisor of a line-supported polynomial is itself
    supported on a parallel line, and dividing by it acts on each
    residue class of the support modulo w independently.  The gcd is
    then the integer gcd of a's coefficient list with every class
    slice of b.  Returns None to decline (degree span too large for
    the dense slices), which sends the caller down the generic route.
    """
    anchor = sorted(w.items(), key=lambda kv: kv[0].sort_key)[0]
    v_c, e_c = anchor
    if e_c < 0:
        w = {v: -e for v, e in w.items()}
        e_c = -e_c
    span = max(a.degree_in(v_c), b.degree_in(v_c)) // e_c
    if span > 50000:
        return None
    g = _slice_fold(a, w, v_c, e_c, None)
    if g is not None and len(g) > 1:
        g = _slice_fold(b, w, v_c, e_c, g)
    if g is None or len(g) <= 1:
        return MvPoly.one()
    return _normalize(MvPoly.from_terms(
        (m_make((v, e * k) for v, e in w.items() if e * k), Rat(c))
        for k, c in enumerate(g) if c))


def _slice_fold(p: MvPoly, w: dict, v_c: VarId, e_c: int, g):
    classes: dict[ExponentVector, dict[int, Rat]] = {}
    for m, c in p.terms.items():
        md = dict(m)
        k = md.get(v_c, 0) // e_c
        entries = []
        for v in set(md) | set(w):
            e = md.get(v, 0) - k * w.get(v, 0)
            if e:
                entries.append((v, e))
        classes.setdefault(m_make(entries), {})[k] = c
    for coeffs in classes.values():
        f = _rat_slice_to_int(coeffs)
        g = f if g is None else _int_gcd_lists(g, f)
        if len(g) <= 1:
            return g
    return g


# ---------------------------------------------------------------------------
# Multivariate gcd.


def poly_gcd(a: MvPoly, b: MvPoly) -> MvPoly:
    """A maximal common divisor, canonical up to nothing further.

    The result is a genuine polynomial (nonnegative exponents), integer
    primitive with positive leading coefficient, and contains the
    common monomial content of the operands.
    """
    if a.is_zero():
        return _normalize(b)
    if b.is_zero():
        return _normalize(a)
    sa = a.mono_shift()
    sb = b.mono_shift()
    a0 = a.mul_mono(m_inv(sa)) if sa else a
    b0 = b.mul_mono(m_inv(sb)) if sb else b
    mono_g = _mono_gcd(sa, sb)
    a0, _ = a0.primitive()
    b0, _ = b0.primitive()
    core = _gcd_core(a0, b0)
    if mono_g:
        core = core.mul_mono(mono_g)
    return core


def _mono_gcd(sa: ExponentVector, sb: ExponentVector) -> ExponentVector:
    ea = dict(sa)
    eb = dict(sb)
    out = []
    for v in set(ea) | set(eb):
        e = min(ea.get(v, 0), eb.get(v, 0))
        if e > 0:
            out.append((v, e))
    return m_make(out)


def _normalize(p: MvPoly) -> MvPoly:
    if p.is_zero():
        return p
    shift = p.mono_shift()
    if any(e < 0 for _, e in shift):
        keep = m_make((v, e) for v, e in shift if e > 0)
        p = p.mul_mono(m_inv(shift)).mul_mono(keep)
    p, _ = p.primitive()
    return p


def _gcd_core(a: MvPoly, b: MvPoly) -> MvPoly:
    if a.is_const() or b.is_const():
        return MvPoly.one()
    if a == b:
        return _normalize(a)
    va, vb = a.vars(), b.vars()
    common = va & vb
    if not common:
        return MvPoly.one()
    wa = _line_direction(a)
    if wa is not None:
        got = _line_gcd(a, b, wa)
        if got is not None:
            return got
    else:
        wb = _line_direction(b)
        if wb is not None:
            got = _line_gcd(b, a, wb)
            if got is not None:
                return got
    if len(va) == 1 and len(vb) == 1:
        return _uni_gcd(a, b, next(iter(common)))
    # pick the common variable with the smallest larger-degree to keep the
    # PRS short
    var = min(common, key=lambda v: (max(a.degree_in(v), b.degree_in(v)),
                                     v.sort_key))
    ua, ca = u_primitive(u_from(a, var))
    ub, cb = u_primitive(u_from(b, var))
    cont = poly_gcd(ca, cb) if not (ca.is_one() or cb.is_one()) \
        else MvPoly.one()
    if u_deg(ua) < u_deg(ub):
        ua, ub = ub, ua
    while True:
        _, r, _ = u_prem(ua, ub)
        if u_is_zero(r):
            g = u_to(ub, var)
            break
        r, _ = u_primitive(r)
        if u_deg(r) == 0:
            g = MvPoly.one()
            break
        ua, ub = ub, r
    if not g.is_one() and not cont.is_one():
        g = g * cont
    elif g.is_one():
        g = cont
    return _normalize(g)


def _uni_gcd(a: MvPoly, b: MvPoly, var: VarId) -> MvPoly:
    """Integer-coefficient Euclid for two univariate polynomials."""
    fa = _int_coeffs(a, var)
    fb = _int_coeffs(b, var)
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        fa, fb = fb, _int_prem(fa, fb)
    g = _int_primitive(fa)
    return MvPoly.from_terms(
        (m_var(var, e), Rat(c)) for e, c in enumerate(g) if c)


def _int_coeffs(p: MvPoly, var: VarId) -> list[int]:
    d = p.degree_in(var)
    out = [Rat(0)] * (d + 1)
    for mono, c in p.terms.items():
        e = mono[0][1] if mono else 0
        out[e] = out[e] + c
    den = 1
    for c in out:
        den = _lcm_int(den, int(c.denominator))
    ints = [int(c * den) for c in out]
    return _int_primitive(ints)


def _int_primitive(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    if not f:
        return f
    g = 0
    for c in f:
        g = _gcd_int(g, abs(c))
    if f[-1] < 0:
        g = -g
    return [c // g for c in f]


def _int_prem(fa: list[int], fb: list[int]) -> list[int]:
    r = list(fa)
    db = len(fb) - 1
    lb = fb[-1]
    while len(r) - 1 >= db and r:
        dr = len(r) - 1
        lr = r[-1]
        r = [c * lb for c in r]
        for i, c in enumerate(fb):
            r[i + dr - db] -= c * lr
        while r and r[-1] == 0:
            r.pop()
    return _int_primitive(r)


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _lcm_int(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return a // _gcd_int(a, b) * b
