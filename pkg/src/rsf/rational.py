"""Nice rational functions.

A nice rational function is a polynomial numerator over a product of
binomial factors (1 - X^a)^b.  During elimination a factor may appear
in pivoted form (z^c - X^a)^b, flagged by its kind.  The denominator is
kept as a factored multiset and never expanded unless an operation
requires it.
"""

from __future__ import annotations

import json
from typing import Iterable, Optional, Union

from .errors import InternalError, MathError, NotDivisibleError, ParseError
from .poly import (
    MvPoly, MvTerm, Rat, QONE, QZERO, VarId, ExponentVector, M_ONE,
    ROLE_Z, m_deg_non_z, m_inv, m_is_proper, m_make, m_mul, m_pow,
    m_render, m_sort_key, m_var,
)

STANDARD = "standard"
PIVOTED = "pivoted"


class BinomialFactor:
    """One denominator factor: (1 - X^mono)^power or (z^zexp - X^mono)^power."""

    __slots__ = ("kind", "mono", "power", "zv", "zexp")

    def __init__(self, mono: ExponentVector, power: int = 1,
                 kind: str = STANDARD, zv: Optional[VarId] = None,
                 zexp: int = 0):
        if power < 1:
            raise InternalError("factor power must be positive")
        if not mono:
            raise MathError("denominator factor with empty monomial")
        if kind == STANDARD:
            if not m_is_proper(mono):
                raise MathError(
                    "negative exponent outside Z in factor %s" %
                    m_render(mono))
            if zv is not None or zexp:
                raise InternalError("standard factor with pivot data")
        elif kind == PIVOTED:
            if zv is None or zv.role is not ROLE_Z or zexp < 1:
                raise InternalError("bad pivot data")
            if any(v is zv for v, _ in mono):
                raise InternalError("pivot variable inside factor monomial")
        else:
            raise InternalError("unknown factor kind %r" % (kind,))
        self.kind = kind
        self.mono = mono
        self.power = power
        self.zv = zv
        self.zexp = zexp

    def key(self):
        if self.kind == STANDARD:
            return (0, m_sort_key(self.mono), "", 0)
        return (1, m_sort_key(self.mono), self.zv.name, self.zexp)

    def with_power(self, power: int) -> "BinomialFactor":
        return BinomialFactor(self.mono, power, self.kind, self.zv, self.zexp)

    def base_poly(self) -> MvPoly:
        """The factor without its power, as a polynomial."""
        if self.kind == STANDARD:
            return MvPoly.one() - MvPoly.monomial(self.mono)
        return MvPoly.var(self.zv, self.zexp) - MvPoly.monomial(self.mono)

    def expanded(self) -> MvPoly:
        return _binom_power(self.mono, self.power) if self.kind == STANDARD \
            else self.base_poly() ** self.power

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinomialFactor):
            return NotImplemented
        return (self.kind == other.kind and self.mono == other.mono
                and self.power == other.power and self.zv is other.zv
                and self.zexp == other.zexp)

    def __hash__(self) -> int:
        return hash((self.kind, self.mono, self.power, self.zexp,
                     None if self.zv is None else self.zv.name))

    def render(self) -> str:
        if self.kind == STANDARD:
            base = "(1-%s)" % _mono_text(self.mono)
        else:
            zpart = self.zv.name if self.zexp == 1 else \
                "%s^%d" % (self.zv.name, self.zexp)
            base = "(%s-%s)" % (zpart, _mono_text(self.mono))
        if self.power == 1:
            return base
        return "%s^%d" % (base, self.power)

    def __repr__(self) -> str:
        return "BinomialFactor[%s]" % (self.render(),)


def _mono_text(mono: ExponentVector) -> str:
    return m_render(mono)


def _binom_power(mono: ExponentVector, p: int) -> MvPoly:
    """Expanded (1 - X^mono)^p via binomial coefficients."""
    terms = {}
    c = 1
    for k in range(p + 1):
        terms[m_pow(mono, k)] = Rat(c if k % 2 == 0 else -c)
        c = c * (p - k) // (k + 1)
    return MvPoly(terms)


FactorLike = Union[BinomialFactor, tuple]


def _coerce_factor(f: FactorLike) -> BinomialFactor:
    if isinstance(f, BinomialFactor):
        return f
    mono, power = f
    return BinomialFactor(mono, power)


class NiceRational:
    """num / prod(factors), with the denominator kept factored."""

    __slots__ = ("num", "den")

    def __init__(self, num: MvPoly, den: Iterable[FactorLike] = (),
                 normalize: bool = True):
        merged: dict = {}
        for f in den:
            f = _coerce_factor(f)
            k = f.key()
            old = merged.get(k)
            merged[k] = f if old is None else old.with_power(
                old.power + f.power)
        if num.is_zero():
            merged = {}
        self.num = num
        self.den = tuple(merged[k] for k in sorted(merged))
        if normalize and self.den and not num.is_zero():
            self._strip()

    def _strip(self) -> None:
        """Cancel standard factors that exactly divide the numerator."""
        num = self.num
        out = []
        changed = False
        for f in self.den:
            if f.kind != STANDARD:
                out.append(f)
                continue
            base = f.base_poly()
            power = f.power
            while power > 0:
                q = num.try_div(base)
                if q is None:
                    break
                num = q
                power -= 1
                changed = True
            if power:
                out.append(f.with_power(power))
        if changed:
            self.num = num
            self.den = tuple(out)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "NiceRational":
        return cls(MvPoly.zero(), ())

    @classmethod
    def one(cls) -> "NiceRational":
        return cls(MvPoly.one(), ())

    @classmethod
    def from_poly(cls, p: MvPoly) -> "NiceRational":
        return cls(p, ())

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def den_map(self) -> dict:
        return {f.key(): f for f in self.den}

    def den_expanded(self) -> MvPoly:
        out = MvPoly.one()
        for f in self.den:
            out = out * f.expanded()
        return out

    def has_pivots(self) -> bool:
        return any(f.kind == PIVOTED for f in self.den)

    def vars(self) -> set[VarId]:
        out = self.num.vars()
        for f in self.den:
            for v, _ in f.mono:
                out.add(v)
            if f.zv is not None:
                out.add(f.zv)
        return out

    def normalized(self) -> "NiceRational":
        return NiceRational(self.num, self.den, normalize=True)

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "NiceRational":
        return NiceRational(-self.num, self.den, normalize=False)

    def __add__(self, other) -> "NiceRational":
        other = _coerce_nr(other)
        if other is NotImplemented:
            return NotImplemented
        return _add_over_union(self, other, normalize=True)

    __radd__ = __add__

    def __sub__(self, other) -> "NiceRational":
        other = _coerce_nr(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "NiceRational":
        return (-self) + other

    def __mul__(self, other) -> "NiceRational":
        if isinstance(other, (int, Rat)):
            return NiceRational(self.num * other, self.den,
                                normalize=False)
        if isinstance(other, MvPoly):
            return NiceRational(self.num * other, self.den)
        if not isinstance(other, NiceRational):
            return NotImplemented
        return NiceRational(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "NiceRational":
        other = _coerce_nr(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise MathError("division by zero")
        num = self.num * _expand_all(other.den)
        q = num.try_div(other.num)
        if q is not None:
            return NiceRational(q, self.den)
        # fall back on recognizing the divisor numerator as a product of
        # line-cyclotomic factors
        from .cyclotomic import nice_reciprocal_parts
        unit, mono, extra, bins = nice_reciprocal_parts(other.num)
        num = (num * extra * unit).mul_mono(mono)
        if not num.is_proper():
            raise MathError("quotient leaves the nice rational class")
        den = list(self.den) + [BinomialFactor(w, e) for w, e in bins]
        return NiceRational(num, den)

    def __pow__(self, k: int) -> "NiceRational":
        if k < 0:
            raise MathError("negative power of a nice rational")
        out = NiceRational.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        other = _coerce_nr(other)
        if other is NotImplemented:
            return NotImplemented
        return nr_equal(self, other)

    def __hash__(self):
        raise TypeError("NiceRational is not hashable")

    # -- substitution and specialization -----------------------------------

    def substitute(self, images: dict[VarId, MvTerm]) -> "NiceRational":
        """Apply scaled-monomial images to numerator and denominator.

        Raises MathError when a factor specializes to a pole or to a
        binomial outside the class.
        """
        num = self.num.substitute(images)
        scale = QONE
        den: list[BinomialFactor] = []
        for f in self.den:
            s = QONE
            parts = []
            for v, e in f.mono:
                img = images.get(v)
                if img is None:
                    parts.append((v, e))
                    continue
                if img.coef == 0:
                    if e > 0:
                        s = QZERO
                        break
                    raise MathError("negative power of a zero value")
                s = s * img.coef ** e if e >= 0 else s / img.coef ** (-e)
                parts.extend((w, we * e) for w, we in img.mono)
            if s == 0:
                # the factor became (1 - 0) = 1
                if f.kind != STANDARD:
                    raise MathError("pivoted factor specialized to z^c")
                continue
            mono = m_make(parts)
            if f.kind == PIVOTED:
                if s != 1 or not mono:
                    raise MathError(
                        "pivoted factor left the class under substitution")
                den.append(BinomialFactor(mono, f.power, PIVOTED,
                                          f.zv, f.zexp))
                continue
            if not mono:
                if s == 1:
                    raise MathError("specialization hit a pole 1/(1-1)")
                scale = scale / (QONE - s) ** f.power
                continue
            if s != 1:
                raise MathError(
                    "factor (1-%s*X^a) left the class under substitution"
                    % (s,))
            den.append(BinomialFactor(mono, f.power))
        if scale != 1:
            num = num * scale
        return NiceRational(num, den)

    # -- series ------------------------------------------------------------

    def series(self, bound: int) -> MvPoly:
        """Truncated expansion up to total non-Z degree `bound`."""
        acc = self.num.truncate_non_z(bound)
        for f in self.den:
            if acc.is_zero():
                return acc
            acc = acc * _factor_series(f, bound)
            acc = acc.truncate_non_z(bound)
        return acc

    # -- rendering and serialization ----------------------------------------

    def render(self) -> str:
        if not self.den:
            return self.num.render()
        num = self.num.render()
        if len(self.num) > 1 or self.num.rat_content() < 0:
            num = "(%s)" % num
        den = "*".join(f.render() for f in self.den)
        if len(self.den) > 1:
            return "%s/(%s)" % (num, den)
        return "%s/%s" % (num, den)

    def __repr__(self) -> str:
        return "NiceRational(%s)" % (self.render(),)

    def to_json(self) -> dict:
        num = [{"c": _rat_str(c), "e": {v.name: e for v, e in mono}}
               for mono, c in self.num.sorted_terms()]
        den = []
        for f in self.den:
            entry = {"kind": f.kind,
                     "mono": {v.name: e for v, e in f.mono},
                     "pow": f.power}
            if f.kind == PIVOTED:
                entry["zvar"] = f.zv.name
                entry["zexp"] = f.zexp
            den.append(entry)
        return {"num": num, "den": den}

    @classmethod
    def from_json(cls, data: dict) -> "NiceRational":
        num = MvPoly.from_terms(
            (m_make((VarId(n), e) for n, e in t["e"].items()),
             Rat(t["c"])) for t in data["num"])
        den = []
        for entry in data["den"]:
            mono = m_make((VarId(n), e) for n, e in entry["mono"].items())
            if entry["kind"] == PIVOTED:
                den.append(BinomialFactor(
                    mono, entry["pow"], PIVOTED,
                    VarId(entry["zvar"]), entry["zexp"]))
            else:
                den.append(BinomialFactor(mono, entry["pow"]))
        return cls(num, den, normalize=False)


def _coerce_nr(x) -> "NiceRational":
    if isinstance(x, NiceRational):
        return x
    if isinstance(x, MvPoly):
        return NiceRational.from_poly(x)
    if isinstance(x, (int, Rat)):
        return NiceRational.from_poly(MvPoly.const(x))
    return NotImplemented


def _union_factors(amap: dict, bmap: dict):
    keys = sorted(set(amap) | set(bmap))
    return [(k, amap.get(k) or bmap[k]) for k in keys]


def _add_over_union(a: "NiceRational", b: "NiceRational",
                    normalize: bool) -> "NiceRational":
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    amap, bmap = a.den_map(), b.den_map()
    acomp, bcomp = [], []
    for k in set(amap) | set(bmap):
        fa, fb = amap.get(k), bmap.get(k)
        pa = fa.power if fa else 0
        pb = fb.power if fb else 0
        f = fa or fb
        if pa < pb:
            acomp.append(f.with_power(pb - pa))
        elif pb < pa:
            bcomp.append(f.with_power(pa - pb))
    num = a.num * _expand_all(acomp) + b.num * _expand_all(bcomp)
    den = [f.with_power(max(amap[k].power if k in amap else 0,
                            bmap[k].power if k in bmap else 0))
           for k, f in _union_factors(amap, bmap)]
    return NiceRational(num, den, normalize=normalize)


def nr_add_raw(a: "NiceRational", b: "NiceRational") -> "NiceRational":
    """Sum over the union denominator without attempting cancellation.

    Useful in inner loops where normalization cost dominates; callers
    normalize once at the end.
    """
    return _add_over_union(a, b, normalize=False)


def _expand_all(factors: Iterable[BinomialFactor]) -> MvPoly:
    out = MvPoly.one()
    for f in factors:
        out = out * f.expanded()
    return out


def _factor_series(f: BinomialFactor, bound: int) -> MvPoly:
    """Series of 1/factor^power up to non-Z degree `bound`.

    A standard factor expands as a negative binomial series in X^mono.
    A pivoted factor expands around z = infinity:
    1/(z^c - C)^p = z^(-cp) (1 - C z^-c)^(-p).
    """
    d = m_deg_non_z(f.mono)
    if d <= 0:
        raise MathError(
            "non-expandable factor %s in series expansion" % f.render())
    kmax = bound // d
    p = f.power
    terms = {}
    c = 1
    for k in range(kmax + 1):
        mono = m_pow(f.mono, k)
        if f.kind == PIVOTED:
            mono = m_mul(mono, m_var(f.zv, -f.zexp * (k + p)))
        terms[mono] = Rat(c)
        # next binomial(p + k, k)
        c = c * (p + k) // (k + 1)
    return MvPoly(terms)


def _rat_str(c: Rat) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return "%s/%s" % (c.numerator, c.denominator)


# ---------------------------------------------------------------------------
# Module-level operation names.


def nr_arith(op: str, a: NiceRational, b: Optional[NiceRational] = None
             ) -> NiceRational:
    """Dispatch arithmetic in the nice rational class by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    raise ParseError("unknown arithmetic op %r" % (op,))


def series_truncate(f: NiceRational, bound: int) -> MvPoly:
    """Total-degree truncation of the series expansion of f."""
    return f.series(bound)


def nr_equal(a: NiceRational, b: NiceRational) -> bool:
    """Exact equality as rational functions (zero tolerance)."""
    amap, bmap = a.den_map(), b.den_map()
    acomp, bcomp = [], []
    for k in set(amap) | set(bmap):
        fa, fb = amap.get(k), bmap.get(k)
        pa = fa.power if fa else 0
        pb = fb.power if fb else 0
        f = fa or fb
        if pa < pb:
            acomp.append(f.with_power(pb - pa))
        elif pb < pa:
            bcomp.append(f.with_power(pa - pb))
    return a.num * _expand_all(acomp) == b.num * _expand_all(bcomp)


def specialize(f: NiceRational, values: dict) -> NiceRational:
    """Substitute values or scaled monomials for variables.

    `values` maps VarId to an MvTerm, a VarId, or a rational constant.
    Pole and out-of-class situations raise MathError.
    """
    images = {}
    for v, val in values.items():
        if isinstance(val, MvTerm):
            images[v] = val
        elif isinstance(val, VarId):
            images[v] = MvTerm.of_var(val)
        else:
            images[v] = MvTerm(Rat(val))
    return f.substitute(images)
