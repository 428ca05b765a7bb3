import sys, time
sys.path.insert(0, "src")

from rsf.poly import MvPoly, VarId, m_make, Rat
from rsf.rational import NiceRational, BinomialFactor, STANDARD, nr_equal
from rsf.schur import multiplicity_series

x1, x2, x3 = VarId("x1"), VarId("x2"), VarId("x3")
v1, v2, v3 = VarId("v1"), VarId("v2"), VarId("v3")
tv = VarId("t")

one = MvPoly.one()


def mp(*pairs):
    return MvPoly.monomial(m_make(pairs))


def bf(pairs, power=1):
    return BinomialFactor(m_make(pairs), power, STANDARD)


def wmono(w):
    return mp(*(list(w) + [(tv, 1)]))


def f_u2(weights):
    """Hilbert series of the rank-p metabelian relatively free algebra with
    generator j carrying weight monomial weights[j] times the grading t."""
    prodp = one
    s = MvPoly.zero()
    for w in weights:
        prodp = prodp * (one - wmono(w))
        s = s + wmono(w)
    num = prodp * 2 + s - one
    dens = [bf(list(w) + [(tv, 1)], 2) for w in weights]
    return NiceRational(num, dens)


def specialize(nr, vals):
    """Substitute 0/1 for the given variables in a nice rational function."""
    num = nr.num
    for v, val in vals.items():
        num = num.coeff_of(v, 0) if val == 0 else num.subs_one(v)
    dens = []
    for fct in nr.den:
        dead = False
        out = []
        for v, e in fct.mono:
            if v in vals:
                if vals[v] == 0:
                    dead = True
                    break
            else:
                out.append((v, e))
        if dead:
            continue
        assert out, "denominator factor vanished under substitution"
        dens.append(BinomialFactor(m_make(out), fct.power, STANDARD))
    return NiceRational(num, dens)


def den_poly(nr):
    out = one
    for fct in nr.den:
        out = out * fct.expanded()
    return out


def fx_equal(got, num_p, den_p):
    return got.num * den_p == num_p * den_poly(got)


def ppow(p, n):
    out = one
    for _ in range(n):
        out = out * p
    return out


def tp(k):
    return mp((tv, k))


def tb(k):
    return one - tp(k)


# ---- linear metabelian, d = 2 ----
t0 = time.time()
f2 = f_u2([((x1, 1),), ((x2, 1),)])
M, Mp = multiplicity_series(f2, 2, graded=True)
sl = specialize(Mp, {v1: 0, v2: 1})
ut = specialize(Mp, {v1: 1, v2: 1})
ok_sl = fx_equal(sl, one, tb(2))
ok_ut = fx_equal(ut, one - tp(1) + tp(3), ppow(tb(1), 2) * tb(2))
print("linear d=2: %.2fs sl: %s ut: %s" % (time.time() - t0, ok_sl, ok_ut))
assert ok_sl and ok_ut

# ---- linear metabelian, d = 3 ----
t0 = time.time()
f3 = f_u2([((x1, 1),), ((x2, 1),), ((x3, 1),)])
M, Mp = multiplicity_series(f3, 3, graded=True)
sl = specialize(Mp, {v1: 0, v2: 0, v3: 1})
ut = specialize(Mp, {v1: 1, v2: 1, v3: 1})
ok_sl = fx_equal(sl, one + tp(3), one)
ok_ut = fx_equal(ut, one - tp(1) * 2 + tp(2) * 2, ppow(tb(1), 3))
print("linear d=3: %.2fs sl: %s ut: %s" % (time.time() - t0, ok_sl, ok_ut))
assert ok_sl and ok_ut

# ---- rank 3, generators spanning the second fundamental weight, d = 3 ----
t0 = time.time()
fw = f_u2([((x1, 1), (x2, 1)), ((x1, 1), (x3, 1)), ((x2, 1), (x3, 1))])
M, Mp = multiplicity_series(fw, 3, graded=True)
want = NiceRational(
    one - mp((v2, 1), (tv, 1))
    + (mp((v1, 1), (v2, 1)) + mp((v3, 1))) * mp((v3, 1), (tv, 3)),
    [bf([(v2, 1), (tv, 1)], 2), bf([(v1, 1), (v3, 1), (tv, 2)])])
ok_fix = nr_equal(Mp, want)
sl = specialize(Mp, {v1: 0, v2: 0, v3: 1})
ut = specialize(Mp, {v1: 1, v2: 1, v3: 1})
ok_sl = fx_equal(sl, one + tp(3), one)
ok_ut = fx_equal(ut, one - tp(1) * 2 + tp(2) * 2, ppow(tb(1), 3))
print("rank3 pair-weight d=3: %.2fs fixture: %s sl: %s ut: %s"
      % (time.time() - t0, ok_fix, ok_sl, ok_ut))
assert ok_fix and ok_sl and ok_ut

# ---- rank 6, generators spanning all squares, d = 3 ----
t0 = time.time()
f6 = f_u2([((x1, 2),), ((x2, 2),), ((x3, 2),),
           ((x1, 1), (x2, 1)), ((x1, 1), (x3, 1)), ((x2, 1), (x3, 1))])
M, Mp = multiplicity_series(f6, 3, graded=True)
dt = time.time() - t0
sl = specialize(Mp, {v1: 0, v2: 0, v3: 1})
ut = specialize(Mp, {v1: 1, v2: 1, v3: 1})
ok_sl = fx_equal(sl, one - tp(3) * 3 + tp(6) * 6 - tp(9) * 2, ppow(tb(3), 4))
p_ut = (one - tp(1) * 2 + tp(3) * 7 + tp(4) * 11 + tp(5) * 6 - tp(6) * 10
        + tp(7) + tp(8) * 6 + tp(9) * 4 - tp(10) * 2 - tp(11) * 4 + tp(12) * 2)
ok_ut = fx_equal(ut, p_ut, ppow(tb(1) * tb(2) * tb(3), 3))
print("rank6 square-weight d=3: %.2fs sl: %s ut: %s" % (dt, ok_sl, ok_ut))
assert dt < 60.0
assert ok_sl and ok_ut

# ---- mixed trace algebra of two generic 2x2 matrices, 4 generators ----
# weights x1^2, x1x2, x2^2, 1 on the generators; numerator 1 - x1^3x2^3t^4
t0 = time.time()
f24 = NiceRational(
    one - mp((x1, 3), (x2, 3), (tv, 4)),
    [bf([(tv, 1)], 2),
     bf([(x1, 2), (tv, 1)], 2), bf([(x1, 1), (x2, 1), (tv, 1)], 2),
     bf([(x2, 2), (tv, 1)], 2),
     bf([(x1, 2), (tv, 2)]), bf([(x1, 1), (x2, 1), (tv, 2)]),
     bf([(x2, 2), (tv, 2)]),
     bf([(x1, 3), (x2, 1), (tv, 2)]), bf([(x1, 2), (x2, 2), (tv, 2)]),
     bf([(x1, 1), (x2, 3), (tv, 2)])])
M, Mp = multiplicity_series(f24, 2, graded=True)
dt = time.time() - t0
sl = specialize(Mp, {v1: 0, v2: 1})
ut = specialize(Mp, {v1: 1, v2: 1})
n_sl = (one - tp(1) + tp(2) + tp(4) * 2 + tp(6) - tp(7) + tp(8))
d_sl = ppow(tb(1), 3) * ppow(tb(2), 2) * ppow(tb(3), 3) * ppow(tb(4), 2)
ok_sl = fx_equal(sl, n_sl, d_sl)
n_ut = (one - tp(1) + tp(2)) * (one + tp(2) * 3 + tp(3) * 4 + tp(4) * 6
                                + tp(5) * 4 + tp(6) * 3 + tp(8))
d_ut = ppow(tb(1), 5) * ppow(tb(2), 2) * ppow(tb(3), 3) * ppow(tb(4), 2)
ok_ut = fx_equal(ut, n_ut, d_ut)
print("trace 2x2 rank4: %.2fs sl: %s ut: %s" % (dt, ok_sl, ok_ut))
assert dt < 60.0 and ok_sl and ok_ut

# ---- mixed trace algebra, 3 generators (no unit weight) ----
t0 = time.time()
f23 = NiceRational(one, [
    bf([(x1, 2), (tv, 1)], 2), bf([(x1, 1), (x2, 1), (tv, 1)], 2),
    bf([(x2, 2), (tv, 1)], 2),
    bf([(x1, 3), (x2, 1), (tv, 2)]), bf([(x1, 2), (x2, 2), (tv, 2)]),
    bf([(x1, 1), (x2, 3), (tv, 2)])])
M, Mp = multiplicity_series(f23, 2, graded=True)
dt = time.time() - t0
sl = specialize(Mp, {v1: 0, v2: 1})
ut = specialize(Mp, {v1: 1, v2: 1})
ok_sl = fx_equal(sl, one + tp(4), ppow(tb(2), 3) * ppow(tb(3), 2) * tb(4))
ok_ut = fx_equal(ut, one + tp(2) * 2 + tp(3) * 2 + tp(4) * 2 + tp(6),
                 ppow(tb(1), 2) * ppow(tb(2), 3) * ppow(tb(3), 2) * tb(4))
print("trace 2x2 rank3: %.2fs sl: %s ut: %s" % (dt, ok_sl, ok_ut))
assert dt < 60.0 and ok_sl and ok_ut

# ---- constants of a cell-structure derivation: one 3-cell, metabelian ----
t0 = time.time()
fc3 = f_u2([((x1, 2),), ((x1, 1), (x2, 1)), ((x2, 2),)])
M, Mp = multiplicity_series(fc3, 2, graded=True)
dt = time.time() - t0
num_fix = (one - (mp((v1, 2)) + mp((v2, 1))) * tp(1)
           + (mp((v1, 2)) * 2 - mp((v2, 1))) * mp((v2, 1)) * tp(2)
           + (mp((v1, 2)) + mp((v2, 1))) * mp((v2, 2)) * tp(3) * 2
           - mp((v1, 2), (v2, 3)) * tp(4) * 2)
want = NiceRational(num_fix, [
    bf([(v1, 2), (tv, 1)], 2), bf([(v2, 1), (tv, 1)]),
    bf([(v2, 2), (tv, 2)], 2)])
ok_fix = nr_equal(Mp, want)
ut = specialize(Mp, {v1: 1, v2: 1})
ok_d = fx_equal(ut, one - tp(1) * 2 + tp(2) + tp(3) * 4 - tp(4) * 2,
                ppow(tb(1), 3) * ppow(tb(2), 2))
print("one 3-cell constants: %.2fs fixture: %s value: %s" % (dt, ok_fix, ok_d))
assert ok_fix and ok_d

# ---- two 2-cells, metabelian ----
t0 = time.time()
fc22 = f_u2([((x1, 1),), ((x2, 1),), ((x1, 1),), ((x2, 1),)])
M, Mp = multiplicity_series(fc22, 2, graded=True)
dt = time.time() - t0
ut = specialize(Mp, {v1: 1, v2: 1})
ok_d = fx_equal(ut,
                one + tp(3) * 10 + tp(4) * 23 + tp(5) * 2 - tp(6) * 8
                + tp(8) * 2,
                ppow(tb(1), 2) * ppow(tb(2), 5))
print("two 2-cell constants: %.2fs value: %s" % (dt, ok_d))
assert ok_d
print("all good")
