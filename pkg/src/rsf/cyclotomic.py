"""Recognition of polynomials that are cyclotomic along a monomial line.

A polynomial whose support lies on an arithmetic progression of
exponent vectors, base + k*gamma, is univariate in the Laurent monomial
U = X^gamma.  When that univariate polynomial is a product of
cyclotomic polynomials, the original factors into binomials 1 - X^w up
to a monomial and a sign, which is what lets reciprocals stay inside
the nice rational class.  This module provides:

* `cyclotomic_coeffs(n)`: integer coefficients of Phi_n
* `line_profile(p)`: the (base, gamma, coefficient) view of a line
  polynomial
* `cyclo_factor(p, nmax)`: factor p as unit * X^base * prod Phi_n(U)^e
* `line_factor_pieces(p)`: the cleared irreducible pieces of a line
  polynomial together with the data needed to rebuild p
* `nice_reciprocal_parts(p)`: express 1/p with binomial denominators
"""

from __future__ import annotations

from typing import Optional

from .errors import MathError
from .poly import (
    MvPoly, Rat, QONE, ExponentVector, M_ONE, VarId, ROLE_Z,
    m_div, m_inv, m_make, m_mul, m_pow, m_sort_key,
)

# -- integer univariate helpers ---------------------------------------------

_cyclo_cache: dict[int, tuple[int, ...]] = {1: (-1, 1)}


def divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def mobius(n: int) -> int:
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low degree first."""
    cached = _cyclo_cache.get(n)
    if cached is not None:
        return cached
    # (u^n - 1) divided by the product of the proper-divisor cyclotomics
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    for d in divisors(n):
        if d == n:
            continue
        num = _int_div_exact(num, list(cyclotomic_coeffs(d)))
    out = tuple(num)
    _cyclo_cache[n] = out
    return out


def _int_div_exact(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) - len(b) + 1)
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    for i in range(len(out) - 1, -1, -1):
        c = r[i + db]
        if c % lb:
            raise MathError("inexact integer polynomial division")
        c //= lb
        out[i] = c
        if c:
            for j, bc in enumerate(b):
                r[i + j] -= c * bc
    if any(r):
        raise MathError("inexact integer polynomial division")
    return out


def _rat_divmod(a: list[Rat], b: list[int]) -> tuple[list[Rat], bool]:
    """Divide rational coefficient list a by integer list b; (quotient, exact)."""
    if len(a) < len(b):
        return [], False
    out = [Rat(0)] * (len(a) - len(b) + 1)
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    for i in range(len(out) - 1, -1, -1):
        c = r[i + db] / lb
        out[i] = c
        if c:
            for j, bc in enumerate(b):
                r[i + j] = r[i + j] - c * bc
    if any(r):
        return [], False
    return out, True


# -- line geometry ----------------------------------------------------------


def _primitive_direction(diff: ExponentVector) -> ExponentVector:
    g = 0
    for _, e in diff:
        g = _gcd_int(g, abs(e))
    if g <= 1:
        return diff
    return tuple((v, e // g) for v, e in diff)


def _ratio_along(diff: ExponentVector, gamma: ExponentVector) -> Optional[int]:
    """k with diff == k*gamma, or None."""
    if not diff:
        return 0
    if not gamma or len(diff) != len(gamma):
        return None
    k = None
    for (dv, de), (gv, ge) in zip(diff, gamma):
        if dv is not gv or de % ge:
            return None
        k2 = de // ge
        if k is None:
            k = k2
        elif k2 != k:
            return None
    return k


def line_profile(p: MvPoly) -> Optional[tuple[ExponentVector, ExponentVector,
                                              dict[int, Rat]]]:
    """(base, gamma, coeffs) with p == sum coeffs[k] * X^(base + k*gamma).

    gamma is primitive and oriented so its first exponent is positive;
    coeffs[0] is always present.  Returns None when the support is not
    on a single line.  Single-term polynomials yield gamma == () and
    coeffs == {0: c}.
    """
    monos = list(p.terms)
    if not monos:
        return None
    if len(monos) == 1:
        return monos[0], M_ONE, {0: p.terms[monos[0]]}
    base0 = monos[0]
    gamma = None
    for m in monos[1:]:
        d = m_div(m, base0)
        if d:
            gamma = _primitive_direction(d)
            break
    if gamma is None:
        return None
    if gamma[0][1] < 0:
        gamma = m_inv(gamma)
    ks = []
    for m in monos:
        k = _ratio_along(m_div(m, base0), gamma)
        if k is None:
            return None
        ks.append(k)
    kmin = min(ks)
    base = m_mul(base0, m_pow(gamma, kmin))
    coeffs = {k - kmin: p.terms[m] for k, m in zip(ks, monos)}
    return base, gamma, coeffs


# -- cyclotomic factorization along a line ----------------------------------


def complete_bound(degree: int) -> int:
    """An n beyond which Phi_n cannot divide a degree-`degree` polynomial."""
    return 6 * max(degree, 1) + 6


def cyclo_factor(p: MvPoly, nmax: Optional[int] = None):
    """Try to write p as unit * X^base * prod_n Phi_n(X^gamma)^(e_n).

    Returns (status, unit, base, gamma, exps) where status is one of
    "yes", "no", "bound-limited".  On "yes" the factorization is exact
    and complete.  "bound-limited" means a divisor search capped at
    nmax gave up before deciding.
    """
    prof = line_profile(p)
    if prof is None:
        return "no", None, None, None, None
    base, gamma, coeffs = prof
    deg = max(coeffs)
    if deg == 0:
        return "yes", coeffs[0], base, gamma, {}
    vec: list[Rat] = [Rat(0)] * (deg + 1)
    for k, c in coeffs.items():
        vec[k] = c
    full = complete_bound(deg)
    limit = full if nmax is None else min(nmax, full)
    exps: dict[int, int] = {}
    n = 1
    while n <= limit and len(vec) > 1:
        phi = list(cyclotomic_coeffs(n))
        if len(phi) - 1 <= len(vec) - 1:
            while True:
                q, ok = _rat_divmod(vec, phi)
                if not ok:
                    break
                vec = q
                exps[n] = exps.get(n, 0) + 1
                if len(vec) == 1:
                    break
        n += 1
    if len(vec) > 1:
        status = "no" if limit >= full else "bound-limited"
        return status, None, None, None, None
    return "yes", vec[0], base, gamma, exps


def phi_cleared(n: int, gamma: ExponentVector) -> tuple[MvPoly, ExponentVector]:
    """(piece, shift) with piece * X^shift == Phi_n(X^gamma), piece cleared.

    "Cleared" means every variable occurring in piece has minimum
    exponent zero, so piece is a genuine polynomial.
    """
    raw = MvPoly.from_terms(
        (m_pow(gamma, k), Rat(c))
        for k, c in enumerate(cyclotomic_coeffs(n)) if c)
    shift = raw.mono_shift()
    if shift:
        return raw.mul_mono(m_inv(shift)), shift
    return raw, M_ONE


class LinePiece:
    """One cleared cyclotomic piece of a line polynomial."""

    __slots__ = ("poly", "n", "gamma", "power")

    def __init__(self, poly: MvPoly, n: int, gamma: ExponentVector,
                 power: int):
        self.poly = poly
        self.n = n
        self.gamma = gamma
        self.power = power

    def closure_mono(self) -> ExponentVector:
        """w with piece dividing 1 - X^w exactly (w = n*gamma)."""
        return m_pow(self.gamma, self.n)

    def __repr__(self) -> str:
        return "LinePiece(%s, n=%d, pow=%d)" % (
            self.poly.render(), self.n, self.power)


def line_factor_pieces(p: MvPoly) -> Optional[
        tuple[Rat, ExponentVector, list[LinePiece]]]:
    """Factor a line polynomial into cleared cyclotomic pieces.

    Returns (unit, mono, pieces) with
        p == unit * X^mono * prod piece.poly^piece.power
    or None when p is not cyclotomic along a line.
    """
    status, unit, base, gamma, exps = cyclo_factor(p)
    if status != "yes":
        return None
    mono = base
    pieces = []
    for n, e in sorted(exps.items()):
        piece, shift = phi_cleared(n, gamma)
        mono = m_mul(mono, m_pow(shift, e))
        low = min(piece.terms, key=m_sort_key)
        if piece.terms[low] < 0:
            piece = -piece
            unit = unit * Rat((-1) ** e)
        pieces.append(LinePiece(piece, n, gamma, e))
    return unit, mono, pieces


# -- reciprocals inside the nice class --------------------------------------


def _one_signed_outside_z(w: ExponentVector) -> bool:
    return all(e > 0 or v.role is ROLE_Z for v, e in w)


def nice_reciprocal_parts(p: MvPoly) -> tuple[
        Rat, ExponentVector, MvPoly, list[tuple[ExponentVector, int]]]:
    """Express 1/p == unit * X^mono * extra / prod (1 - X^M_i)^(e_i).

    extra is a genuine polynomial and each M_i is one-signed outside
    the elimination variables.  Raises MathError when p is not a unit
    times a product of line-cyclotomic factors admitting such a form.
    """
    status, u0, base, gamma, exps = cyclo_factor(p)
    if status != "yes":
        raise MathError("denominator factor is not cyclotomic on a line")
    # p == u0 * sign * X^base * prod_d (1 - U^d)^(F_d), U = X^gamma
    fmap: dict[int, int] = {}
    sign = 1
    for n, e in exps.items():
        if n == 1:
            # Phi_1(U) = U - 1 = -(1 - U)
            sign *= (-1) ** e
            fmap[1] = fmap.get(1, 0) + e
        else:
            for d in divisors(n):
                fmap[d] = fmap.get(d, 0) + mobius(n // d) * e
    unit = QONE / (u0 * sign)
    mono = m_inv(base)
    extra = MvPoly.one()
    bins: dict[ExponentVector, int] = {}
    for d, f in sorted(fmap.items()):
        if f == 0:
            continue
        w = m_pow(gamma, d)
        if f > 0:
            # denominator side of 1/p
            if _one_signed_outside_z(w):
                bins[w] = bins.get(w, 0) + f
            elif _one_signed_outside_z(m_inv(w)):
                # (1 - X^w) == -X^w * (1 - X^-w)
                bins[m_inv(w)] = bins.get(m_inv(w), 0) + f
                unit = unit * Rat((-1) ** f)
                mono = m_mul(mono, m_pow(m_inv(w), f))
            else:
                raise MathError(
                    "binomial direction has mixed signs outside Z")
        else:
            # numerator side: (1 - X^w)^(-f) cleared to a polynomial
            two = MvPoly.one() - MvPoly.monomial(w)
            shift = two.mono_shift()
            if shift:
                two = two.mul_mono(m_inv(shift))
                mono = m_mul(mono, m_pow(shift, -f))
            extra = extra * two ** (-f)
    return unit, mono, extra, sorted(bins.items())


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
