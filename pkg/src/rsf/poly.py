"""Exact sparse arithmetic for multivariate Laurent polynomials.

Variables are interned `VarId` objects carrying a role.  The role
decides where negative exponents are legal (only on elimination
variables) and fixes the global variable order used for canonical
printing and term ordering:

    x1 < x2 < ... < v1 < v2 < ... < z1 < z2 < ... < inert names

Monomials are sorted tuples of ``(VarId, exponent)`` pairs with no zero
exponents; the empty tuple is the constant monomial.  Polynomials are
dictionaries mapping monomials to nonzero rational coefficients.
"""

from __future__ import annotations

import heapq
import math
import re
from typing import Iterable, Iterator, Optional

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is present in normal installs
    from fractions import Fraction as Rat

from .errors import MathError, NotDivisibleError

QONE = Rat(1)
QZERO = Rat(0)

ROLE_X = "symmetric-X"
ROLE_V = "multiplicity-V"
ROLE_Z = "elimination-Z"
ROLE_INERT = "inert"

_ROLE_RANK = {ROLE_X: 0, ROLE_V: 1, ROLE_Z: 2, ROLE_INERT: 3}
_NAME_RE = re.compile(r"\A[a-z][a-z0-9]*\Z")
_NUMBERED_RE = re.compile(r"\A([xvz])([1-9][0-9]*)\Z")


class VarId:
    """An interned variable identifier with a role and sort position.

    Two `VarId` objects with the same name are the same object, so
    identity comparison and hashing are cheap.  The role is inferred
    from the name (x<k>, v<k>, z<k> are special; everything else is
    inert) and may not be overridden inconsistently.
    """

    __slots__ = ("name", "role", "sort_key")
    _registry: dict[str, "VarId"] = {}

    def __new__(cls, name: str, role: Optional[str] = None) -> "VarId":
        cached = cls._registry.get(name)
        if cached is not None:
            if role is not None and role != cached.role:
                raise ValueError(
                    "variable %r already has role %s" % (name, cached.role))
            return cached
        if not _NAME_RE.match(name):
            raise ValueError("bad variable name %r" % (name,))
        inferred, number = _infer_role(name)
        if role is None:
            role = inferred
        elif role != inferred and inferred != ROLE_INERT:
            raise ValueError(
                "name %r implies role %s, not %s" % (name, inferred, role))
        self = object.__new__(cls)
        self.name = name
        self.role = role
        self.sort_key = (_ROLE_RANK[role], number, name)
        cls._registry[name] = self
        return self

    def __repr__(self) -> str:
        return "VarId(%r)" % (self.name,)

    def __lt__(self, other: "VarId") -> bool:
        return self.sort_key < other.sort_key


def _infer_role(name: str) -> tuple[str, int]:
    m = _NUMBERED_RE.match(name)
    if not m:
        return ROLE_INERT, 0
    head, number = m.group(1), int(m.group(2))
    role = {"x": ROLE_X, "v": ROLE_V, "z": ROLE_Z}[head]
    return role, number


def xvar(i: int) -> VarId:
    return VarId("x%d" % i)


def vvar(i: int) -> VarId:
    return VarId("v%d" % i)


def zvar(i: int) -> VarId:
    return VarId("z%d" % i)


def tvar() -> VarId:
    return VarId("t")


# ---------------------------------------------------------------------------
# Monomials.
#
# An ExponentVector is a tuple of (VarId, exponent) pairs, sorted by the
# variable sort key, with all exponents nonzero.  Negative exponents are
# produced freely by m_div; legality outside elimination variables is
# checked where it matters (m_is_proper).

ExponentVector = tuple[tuple[VarId, int], ...]

M_ONE: ExponentVector = ()


def m_make(pairs: Iterable[tuple[VarId, int]]) -> ExponentVector:
    """Build a monomial from possibly unsorted, possibly repeated pairs."""
    acc: dict[VarId, int] = {}
    for v, e in pairs:
        e2 = acc.get(v, 0) + e
        if e2:
            acc[v] = e2
        elif v in acc:
            del acc[v]
    return tuple(sorted(acc.items(), key=lambda p: p[0].sort_key))


def m_var(v: VarId, e: int = 1) -> ExponentVector:
    if e == 0:
        return M_ONE
    return ((v, e),)


def m_mul(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    """Product of two monomials (merge of sorted pair lists)."""
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        va, ea = a[i]
        vb, eb = b[j]
        if va is vb:
            e = ea + eb
            if e:
                out.append((va, e))
            i += 1
            j += 1
        elif va.sort_key < vb.sort_key:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def m_inv(a: ExponentVector) -> ExponentVector:
    return tuple((v, -e) for v, e in a)


def m_div(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return m_mul(a, m_inv(b))


def m_pow(a: ExponentVector, k: int) -> ExponentVector:
    if k == 0:
        return M_ONE
    if k == 1:
        return a
    return tuple((v, e * k) for v, e in a)


def m_deg(a: ExponentVector) -> int:
    return sum(e for _, e in a)


def m_deg_non_z(a: ExponentVector) -> int:
    """Total degree ignoring elimination variables."""
    return sum(e for v, e in a if v.role is not ROLE_Z)


def m_get(a: ExponentVector, var: VarId) -> int:
    for v, e in a:
        if v is var:
            return e
    return 0


def m_drop(a: ExponentVector, var: VarId) -> ExponentVector:
    return tuple((v, e) for v, e in a if v is not var)


def m_is_proper(a: ExponentVector) -> bool:
    """True when negative exponents occur only on elimination variables."""
    return all(e > 0 or v.role is ROLE_Z for v, e in a)


def m_is_nonneg(a: ExponentVector) -> bool:
    return all(e > 0 for _, e in a)


def m_vars(a: ExponentVector) -> Iterator[VarId]:
    return (v for v, _ in a)


def m_sort_key(a: ExponentVector):
    """Graded order key; ties broken so earlier-variable powers sort first.

    The key is compatible with multiplication, so max() over it is a
    valid leading term for division.
    """
    return (m_deg(a), tuple((v.sort_key, -e) for v, e in a))


class _DownKey:
    """Wraps a sort key so a min-heap pops the largest monomial first."""

    __slots__ = ("key",)

    def __init__(self, key):
        self.key = key

    def __lt__(self, other) -> bool:
        return self.key > other.key


def _line_rep(qterms: dict):
    """Recognize a divisor supported on one lattice line.

    Returns (w, anchor var, anchor step, bottom monomial, coefficient
    list along the line) or None.  The list g satisfies
    q = X^bottom * sum g[k] (X^w)^k with g[0] and g[-1] nonzero.
    """
    monos = list(qterms)
    mb = min(monos, key=m_sort_key)
    base = dict(mb)
    ordered = [mb] + [m for m in monos if m is not mb]
    w: Optional[dict] = None
    ks: list[int] = [0]
    for m in ordered[1:]:
        d = dict(m)
        for v, e in base.items():
            ne = d.get(v, 0) - e
            if ne:
                d[v] = ne
            else:
                d.pop(v, None)
        if w is None:
            g = 0
            for e in d.values():
                g = math.gcd(g, abs(e))
            w = {v: e // g for v, e in d.items()}
            ks.append(g)
            continue
        if len(d) != len(w):
            return None
        k = None
        for v, e in w.items():
            if v not in d:
                return None
            qk, r = divmod(d[v], e)
            if r or (k is not None and qk != k):
                return None
            k = qk
        if k is None or k <= 0:
            return None
        ks.append(k)
    if w is None:
        return None
    g = [QZERO] * (max(ks) + 1)
    for m, k in zip(ordered, ks):
        g[k] = qterms[m]
    if not g[0] or not g[-1]:
        return None
    vc = sorted(w, key=lambda u: u.sort_key)[0]
    return w, vc, w[vc], mb, g


def _div_line(pterms: dict, lr) -> Optional[dict]:
    """Exact quotient of p by a line-supported divisor, or None.

    Groups the dividend into residue classes modulo the line direction
    and divides each class by the divisor's coefficient list, which
    costs linear time in the support instead of a full reduction."""
    w, vc, ec, mb, g = lr
    wm = m_make(w.items())
    dg = len(g) - 1
    classes: dict[ExponentVector, dict[int, Rat]] = {}
    for m, c in pterms.items():
        md = dict(m)
        s = md.get(vc, 0) // ec
        entries = []
        for v in set(md) | set(w):
            e = md.get(v, 0) - s * w.get(v, 0)
            if e:
                entries.append((v, e))
        classes.setdefault(m_make(entries), {})[s] = c
    out: dict[ExponentVector, Rat] = {}
    hi = g[dg]
    for rm, coeffs in classes.items():
        smin = min(coeffs)
        smax = max(coeffs)
        span = smax - smin + 1
        if span - 1 < dg:
            return None
        r = [QZERO] * span
        for s, c in coeffs.items():
            r[s - smin] = c
        qu = [QZERO] * (span - dg)
        for i in range(span - 1, dg - 1, -1):
            c = r[i]
            if not c:
                continue
            c = c / hi
            qu[i - dg] = c
            for j in range(dg + 1):
                if g[j]:
                    r[i - dg + j] = r[i - dg + j] - c * g[j]
        if any(r[:dg]):
            return None
        shift = m_div(rm, mb)
        for u, c in enumerate(qu):
            if c:
                out[m_mul(shift, m_pow(wm, smin + u))] = c
    return out


def _uni_image(terms: dict, v: VarId) -> Optional[list[int]]:
    """Integer coefficient list of the polynomial with all other
    variables set to 1, or None when the image degenerates to zero."""
    acc: dict[int, Rat] = {}
    for m, c in terms.items():
        e = 0
        for u, ee in m:
            if u is v:
                e = ee
                break
        acc[e] = acc.get(e, QZERO) + c
    lo = min(acc)
    hi = max(acc)
    out = [acc.get(e, QZERO) for e in range(lo, hi + 1)]
    den = 1
    for c in out:
        if c.denominator != 1:
            den = den * c.denominator // math.gcd(den, c.denominator)
    f = [int(c * den) for c in out]
    while f and f[-1] == 0:
        f.pop()
    return f or None


def _uni_rejects(fa: list[int], fb: list[int]) -> bool:
    """True when fb certainly does not divide fa over the rationals.

    Uses a pseudo-remainder, which vanishes exactly when the division
    is exact up to a power of the leading coefficient."""
    if len(fb) < 2:
        return False
    if len(fa) < len(fb):
        return True
    r = list(fa)
    db = len(fb) - 1
    lb = fb[-1]
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        lr = r[-1]
        r = [c * lb for c in r]
        for i, c in enumerate(fb):
            r[i + dr - db] -= c * lr
        while r and r[-1] == 0:
            r.pop()
    return bool(r)


def m_render(a: ExponentVector) -> str:
    if not a:
        return "1"
    parts = []
    for v, e in a:
        if e == 1:
            parts.append(v.name)
        else:
            parts.append("%s^%d" % (v.name, e))
    return "*".join(parts)


# ---------------------------------------------------------------------------
# Polynomials.


class MvPoly:
    """A sparse multivariate Laurent polynomial with rational coefficients.

    Instances are immutable by convention: no method mutates ``terms``
    after construction, and code handing a dict to ``__init__`` gives up
    ownership.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[dict[ExponentVector, Rat]] = None):
        self.terms = terms if terms is not None else {}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MvPoly":
        return cls({})

    @classmethod
    def const(cls, c) -> "MvPoly":
        c = Rat(c)
        if c == 0:
            return cls({})
        return cls({M_ONE: c})

    @classmethod
    def one(cls) -> "MvPoly":
        return cls.const(1)

    @classmethod
    def var(cls, v: VarId, e: int = 1) -> "MvPoly":
        return cls({m_var(v, e): QONE})

    @classmethod
    def monomial(cls, mono: ExponentVector, c=1) -> "MvPoly":
        c = Rat(c)
        if c == 0:
            return cls({})
        return cls({mono: c})

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[ExponentVector, Rat]]) -> "MvPoly":
        acc: dict[ExponentVector, Rat] = {}
        for mono, c in pairs:
            c2 = acc.get(mono, QZERO) + c
            if c2:
                acc[mono] = c2
            elif mono in acc:
                del acc[mono]
        return cls(acc)

    # -- predicates and views ---------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and M_ONE in self.terms)

    def const_value(self) -> Rat:
        if not self.terms:
            return QZERO
        if len(self.terms) == 1 and M_ONE in self.terms:
            return self.terms[M_ONE]
        raise MathError("polynomial is not constant")

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get(M_ONE) == 1

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def vars(self) -> set[VarId]:
        out: set[VarId] = set()
        for mono in self.terms:
            for v, _ in mono:
                out.add(v)
        return out

    def has_var(self, var: VarId) -> bool:
        return any(m_get(mono, var) for mono in self.terms)

    def degree(self) -> int:
        """Total degree over all variables; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(m_deg(m) for m in self.terms)

    def degree_non_z(self) -> int:
        if not self.terms:
            return 0
        return max(m_deg_non_z(m) for m in self.terms)

    def degree_in(self, var: VarId) -> int:
        if not self.terms:
            return 0
        return max(m_get(m, var) for m in self.terms)

    def min_degree_in(self, var: VarId) -> int:
        if not self.terms:
            return 0
        return min(m_get(m, var) for m in self.terms)

    def is_proper(self) -> bool:
        return all(m_is_proper(m) for m in self.terms)

    def sorted_terms(self) -> list[tuple[ExponentVector, Rat]]:
        return sorted(self.terms.items(), key=lambda kv: m_sort_key(kv[0]))

    def leading(self) -> tuple[ExponentVector, Rat]:
        """The term maximal in the graded order (used for division)."""
        mono = max(self.terms, key=m_sort_key)
        return mono, self.terms[mono]

    def coeff(self, mono: ExponentVector) -> Rat:
        return self.terms.get(mono, QZERO)

    # -- hashing and equality ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, MvPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Rat)):
            return self.terms == MvPoly.const(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(
                (m, hash(c)) for m, c in self.terms.items()))
        return self._hash

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "MvPoly":
        if isinstance(other, (int, Rat)):
            other = MvPoly.const(other)
        if not isinstance(other, MvPoly):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        big, small = self.terms, other.terms
        if len(big) < len(small):
            big, small = small, big
        acc = dict(big)
        for mono, c in small.items():
            c2 = acc.get(mono, QZERO) + c
            if c2:
                acc[mono] = c2
            else:
                del acc[mono]
        return MvPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "MvPoly":
        return MvPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "MvPoly":
        if isinstance(other, (int, Rat)):
            other = MvPoly.const(other)
        if not isinstance(other, MvPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MvPoly":
        return (-self) + other

    def __mul__(self, other) -> "MvPoly":
        if isinstance(other, (int, Rat)):
            c = Rat(other)
            if c == 0:
                return MvPoly.zero()
            if c == 1:
                return self
            return MvPoly({m: cc * c for m, cc in self.terms.items()})
        if not isinstance(other, MvPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return MvPoly.zero()
        if len(a) < len(b):
            a, b = b, a
        acc: dict[ExponentVector, Rat] = {}
        get = acc.get
        for mb, cb in b.items():
            if not mb:
                for ma, ca in a.items():
                    c2 = get(ma, QZERO) + ca * cb
                    if c2:
                        acc[ma] = c2
                    elif ma in acc:
                        del acc[ma]
                continue
            for ma, ca in a.items():
                mono = m_mul(ma, mb)
                c2 = get(mono, QZERO) + ca * cb
                if c2:
                    acc[mono] = c2
                elif mono in acc:
                    del acc[mono]
        return MvPoly(acc)

    __rmul__ = __mul__

    def mul_mono(self, mono: ExponentVector, c=QONE) -> "MvPoly":
        if not mono and c == 1:
            return self
        return MvPoly({m_mul(m, mono): cc * c for m, cc in self.terms.items()})

    def __pow__(self, k: int) -> "MvPoly":
        if k < 0:
            raise MathError("negative polynomial power")
        out = MvPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return out

    # -- division ----------------------------------------------------------

    def mono_shift(self) -> ExponentVector:
        """The per-variable minimum exponent monomial of the support.

        Dividing by it (``mul_mono`` of the inverse) makes the
        polynomial a genuine polynomial with every occurring variable
        hitting exponent zero somewhere.
        """
        if not self.terms:
            return M_ONE
        mins: dict[VarId, int] = {}
        seen: dict[VarId, int] = {}
        n = 0
        for mono in self.terms:
            n += 1
            for v, e in mono:
                cnt = seen.get(v, 0) + 1
                seen[v] = cnt
                old = mins.get(v)
                if old is None or e < old:
                    mins[v] = e
        total = len(self.terms)
        out = []
        for v, e in mins.items():
            if seen[v] < total:
                e = min(e, 0)
            if e:
                out.append((v, e))
        return m_make(out)

    def try_div(self, q: "MvPoly") -> Optional["MvPoly"]:
        """Exact quotient self / q, or None when q does not divide.

        Works on Laurent polynomials by shifting both operands to
        nonnegative exponents first, so termination is guaranteed.
        """
        if q.is_zero():
            raise MathError("division by zero polynomial")
        if not self.terms:
            return MvPoly.zero()
        if q.is_const():
            return self * (QONE / q.const_value())
        lr = _line_rep(q.terms)
        if lr is not None:
            got = _div_line(self.terms, lr)
            if got is None:
                return None
            return MvPoly.from_terms(got.items())
        sp = self.mono_shift()
        sq = q.mono_shift()
        p = self.mul_mono(m_inv(sp)) if sp else self
        qq = q.mul_mono(m_inv(sq)) if sq else q
        if len(p.terms) * len(qq.terms) > 512:
            # Cheap certain-failure checks before the full division: the
            # quotient degree in each variable cannot be negative, and
            # setting all variables but one to 1 is a ring map, so the
            # univariate image of q must divide the image of self.
            degs: dict[VarId, int] = {}
            for m in qq.terms:
                for v, e in m:
                    if e > degs.get(v, 0):
                        degs[v] = e
            pdegs: dict[VarId, int] = {}
            for m in p.terms:
                for v, e in m:
                    if e > pdegs.get(v, 0):
                        pdegs[v] = e
            for v, e in degs.items():
                if pdegs.get(v, 0) < e:
                    return None
            for v in sorted(degs, key=lambda u: u.sort_key):
                fb = _uni_image(qq.terms, v)
                if fb is None or len(fb) < 2:
                    continue
                fa = _uni_image(p.terms, v)
                if fa is not None and _uni_rejects(fa, fb):
                    return None
        lm, lc = qq.leading()
        tail = [(m, c) for m, c in qq.terms.items() if m != lm]
        # Reduce monomials strictly downward: a min-heap over inverted
        # keys hands out the current maximum, and entries whose monomial
        # has already been cancelled out of `rem` are skipped on pop.
        rem: dict[ExponentVector, Rat] = dict(p.terms)
        serial = 0
        heap = []
        for m in rem:
            heap.append((_DownKey(m_sort_key(m)), serial, m))
            serial += 1
        heapq.heapify(heap)
        quo: dict[ExponentVector, Rat] = {}
        while heap:
            _, _, rm = heapq.heappop(heap)
            rc = rem.pop(rm, None)
            if not rc:
                continue
            t = m_div(rm, lm)
            if any(e < 0 for _, e in t):
                return None
            c = rc / lc
            quo[t] = quo.get(t, QZERO) + c
            for m2, c2 in tail:
                mm = m_mul(t, m2)
                old = rem.get(mm)
                if old is None:
                    rem[mm] = -c * c2
                    heapq.heappush(
                        heap, (_DownKey(m_sort_key(mm)), serial, mm))
                    serial += 1
                else:
                    nv = old - c * c2
                    if nv:
                        rem[mm] = nv
                    else:
                        del rem[mm]
        result = MvPoly.from_terms(quo.items())
        shift = m_div(sp, sq)
        if shift:
            result = result.mul_mono(shift)
        return result if result.terms else MvPoly.zero()

    def exact_div(self, q: "MvPoly") -> "MvPoly":
        out = self.try_div(q)
        if out is None:
            raise NotDivisibleError("polynomial division is not exact")
        return out

    def divisible_by(self, q: "MvPoly") -> bool:
        return self.try_div(q) is not None

    # -- substitution ------------------------------------------------------

    def substitute(self, images: dict[VarId, "MvTerm"]) -> "MvPoly":
        """Replace each variable by a scaled monomial (see substitute_monomials)."""
        acc: dict[ExponentVector, Rat] = {}
        for mono, c in self.terms.items():
            new = []
            scale = c
            dead = False
            for v, e in mono:
                img = images.get(v)
                if img is None:
                    new.append((v, e))
                    continue
                if img.coef == 0:
                    if e > 0:
                        dead = True
                        break
                    raise MathError("negative power of a zero substitution")
                if e >= 0:
                    scale = scale * (img.coef ** e)
                else:
                    scale = scale / (img.coef ** (-e))
                new.extend((w, we * e) for w, we in img.mono)
            if dead:
                continue
            key = m_make(new)
            c2 = acc.get(key, QZERO) + scale
            if c2:
                acc[key] = c2
            elif key in acc:
                del acc[key]
        return MvPoly(acc)

    def subs_one(self, var: VarId) -> "MvPoly":
        """Set a variable to 1."""
        if not self.has_var(var):
            return self
        acc: dict[ExponentVector, Rat] = {}
        for mono, c in self.terms.items():
            key = m_drop(mono, var)
            c2 = acc.get(key, QZERO) + c
            if c2:
                acc[key] = c2
            elif key in acc:
                del acc[key]
        return MvPoly(acc)

    def split_by(self, var: VarId) -> dict[int, "MvPoly"]:
        """Collect coefficients of the powers of one variable."""
        slices: dict[int, dict[ExponentVector, Rat]] = {}
        for mono, c in self.terms.items():
            e = m_get(mono, var)
            rest = m_drop(mono, var) if e else mono
            slices.setdefault(e, {})[rest] = c
        return {e: MvPoly(d) for e, d in slices.items()}

    def coeff_of(self, var: VarId, e: int) -> "MvPoly":
        acc = {}
        for mono, c in self.terms.items():
            if m_get(mono, var) == e:
                acc[m_drop(mono, var)] = c
        return MvPoly(acc)

    def truncate_non_z(self, bound: int) -> "MvPoly":
        """Drop terms whose non-elimination degree exceeds the bound."""
        return MvPoly({m: c for m, c in self.terms.items()
                       if m_deg_non_z(m) <= bound})

    # -- contents ----------------------------------------------------------

    def rat_content(self) -> Rat:
        """Positive rational c with self/c having integer, gcd-1 coefficients.

        The sign is normalized so the leading coefficient of self/c is
        positive.  Returns 0 for the zero polynomial.
        """
        if not self.terms:
            return QZERO
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = _int_gcd(num_gcd, abs(int(c.numerator)))
            den_lcm = _int_lcm(den_lcm, int(c.denominator))
        content = Rat(num_gcd, den_lcm)
        if self.leading()[1] < 0:
            content = -content
        return content

    def primitive(self) -> tuple["MvPoly", Rat]:
        """(primitive part, content) with self == content * part."""
        c = self.rat_content()
        if c == 0:
            return self, QONE
        if c == 1:
            return self, QONE
        return self * (QONE / c), c

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        """Canonical text in the expression grammar."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for mono, c in self.sorted_terms():
            frag = _render_term(mono, c, first=not parts)
            parts.append(frag)
        return "".join(parts)

    def __repr__(self) -> str:
        return "MvPoly(%s)" % (self.render(),)


class MvTerm:
    """A scaled monomial used as a substitution image."""

    __slots__ = ("coef", "mono")

    def __init__(self, coef, mono: ExponentVector = M_ONE):
        self.coef = Rat(coef)
        self.mono = mono

    @classmethod
    def of_var(cls, v: VarId, e: int = 1) -> "MvTerm":
        return cls(QONE, m_var(v, e))

    @classmethod
    def of_mono(cls, mono: ExponentVector) -> "MvTerm":
        return cls(QONE, mono)

    def __repr__(self) -> str:
        return "MvTerm(%s, %s)" % (self.coef, m_render(self.mono))


def _render_term(mono: ExponentVector, c: Rat, first: bool) -> str:
    neg = c < 0
    ac = -c if neg else c
    if not mono:
        body = _render_rat(ac)
    elif ac == 1:
        body = m_render(mono)
    else:
        body = "%s*%s" % (_render_rat(ac), m_render(mono))
    if first:
        return "-" + body if neg else body
    return (" - " if neg else " + ") + body


def _render_rat(c: Rat) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return "%s/%s" % (c.numerator, c.denominator)


def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _int_lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return a // _int_gcd(a, b) * b


# ---------------------------------------------------------------------------
# Named operations used throughout the higher layers.


def poly_ring_ops() -> dict[str, object]:
    """The core ring API as a name -> callable map (introspection aid)."""
    return {
        "add": MvPoly.__add__,
        "sub": MvPoly.__sub__,
        "mul": MvPoly.__mul__,
        "pow": MvPoly.__pow__,
        "exact_div": MvPoly.exact_div,
        "substitute": MvPoly.substitute,
        "render": MvPoly.render,
    }


def substitute_monomials(p: MvPoly, images: dict[VarId, MvTerm]) -> MvPoly:
    """Substitute scaled monomials for variables in a polynomial."""
    return p.substitute(images)


def vandermonde_product(d: int, start: int = 1) -> MvPoly:
    """The product of (x_i - x_j) over start <= i < j < start + d."""
    out = MvPoly.one()
    for i in range(start, start + d):
        for j in range(i + 1, start + d):
            out = out * (MvPoly.var(xvar(i)) - MvPoly.var(xvar(j)))
    return out


def staircase_monomial(d: int) -> ExponentVector:
    """x1^(d-1) x2^(d-2) ... x_(d-1)."""
    return m_make((xvar(i), d - i) for i in range(1, d))
