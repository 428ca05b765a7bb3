import sys, time
sys.path.insert(0, "src")

from rsf.poly import MvPoly, VarId, m_make, Rat
from rsf.rational import NiceRational, BinomialFactor, STANDARD, nr_equal
from rsf.schur import multiplicity_series, verify_multiplicity

x1, x2 = VarId("x1"), VarId("x2")
v1, v2 = VarId("v1"), VarId("v2")


def mp(*pairs):
    return MvPoly.monomial(m_make(pairs))


def bf(pairs, power=1):
    return BinomialFactor(m_make(pairs), power, STANDARD)


one = MvPoly.const(Rat(1))

# trace ring of two generic 3x3 matrices restricted to the 2x2 block pattern
f = NiceRational(one, [
    bf([(x1, 1)], 2),
    bf([(x2, 1)], 2),
    bf([(x1, 2)]),
    bf([(x2, 2)]),
    bf([(x1, 1), (x2, 1)], 2),
    bf([(x1, 2), (x2, 1)]),
    bf([(x1, 1), (x2, 2)]),
])

t0 = time.time()
M, Mp = multiplicity_series(f, 2)
dt = time.time() - t0
print("T32 d=2 pipeline: %.2fs" % dt)
assert dt < 60.0

# h-form fixture: (v1^3 h3 + v1^2 h2 + v1 h1 + h0) / ((1-v1)^3 (1+v1) (1-v1v2) (1-v2)^7 (1+v2)^4 (1+v2^2))
h3 = mp((v2, 6)) - mp((v2, 5)) + mp((v2, 4)) * 3 - mp((v2, 3)) + mp((v2, 2))
h2 = mp((v2, 5)) * 2 - mp((v2, 4)) * 4 + mp((v2, 3)) - mp((v2, 2)) - mp((v2, 1))
h1 = mp((v2, 5)) * -1 - mp((v2, 4)) + mp((v2, 3)) - mp((v2, 2)) * 4 + mp((v2, 1)) * 2
h0 = mp((v2, 4)) - mp((v2, 3)) + mp((v2, 2)) * 3 - mp((v2, 1)) + one

h_num = mp((v1, 3)) * h3 + mp((v1, 2)) * h2 + mp((v1, 1)) * h1 + h0

om_v1 = one - mp((v1, 1))          # 1 - v1
op_v1 = one + mp((v1, 1))          # 1 + v1
om_v1v2 = one - mp((v1, 1), (v2, 1))
om_v2 = one - mp((v2, 1))
op_v2 = one + mp((v2, 1))
op_v22 = one + mp((v2, 2))


def ppow(p, n):
    out = one
    for _ in range(n):
        out = out * p
    return out


h_den = ppow(om_v1, 3) * op_v1 * om_v1v2 * ppow(om_v2, 7) * ppow(op_v2, 4) * op_v22

mp_den = one
for fct in Mp.den:
    mp_den = mp_den * fct.expanded()

lhs = Mp.num * h_den
rhs = h_num * mp_den
print("T32 h-form fixture match:", lhs == rhs)
assert lhs == rhs

# alternative decomposition: a3/(1-v1)^3 + a2/(1-v1)^2 + a1/(1-v1) + b/(1+v1) + c/(1-v1v2)
# a3 = 1/(2(1-v2)^6(1+v2)^2)
# a2 = (3v2^2-2v2+1)/(4(1-v2)^7(1+v2)^3)
# a1 = (v2^4-6v2^3+14v2^2-6v2+1)/(8(1-v2)^8(1+v2)^4)
# b  = 1/(8(1-v2)^2(1+v2)^4(1+v2^2))
# c  = -v2^4/((1-v2)^8(1+v2)^4(1+v2^2))
half = MvPoly.const(Rat(1, 2))
quarter = MvPoly.const(Rat(1, 4))
eighth = MvPoly.const(Rat(1, 8))

terms = [
    (half, ppow(om_v2, 6) * ppow(op_v2, 2) * ppow(om_v1, 3)),
    (quarter * (mp((v2, 2)) * 3 - mp((v2, 1)) * 2 + one),
     ppow(om_v2, 7) * ppow(op_v2, 3) * ppow(om_v1, 2)),
    (eighth * (mp((v2, 4)) - mp((v2, 3)) * 6 + mp((v2, 2)) * 14 - mp((v2, 1)) * 6 + one),
     ppow(om_v2, 8) * ppow(op_v2, 4) * om_v1),
    (eighth, ppow(om_v2, 2) * ppow(op_v2, 4) * op_v22 * op_v1),
    (mp((v2, 4)) * -1, ppow(om_v2, 8) * ppow(op_v2, 4) * op_v22 * om_v1v2),
]

abc_num, abc_den = MvPoly.zero(), one
for n, d in terms:
    abc_num = abc_num * d + n * abc_den
    abc_den = abc_den * d

print("T32 a/b/c form matches h-form:", abc_num * h_den == h_num * abc_den)
assert abc_num * h_den == h_num * abc_den

ok = verify_multiplicity(f, M, 2)
print("T32 verify:", ok)
assert ok
print("all good")
