import sys, time
sys.path.insert(0, "src")
from itertools import combinations_with_replacement
from rsf.poly import MvPoly, VarId, Rat, m_make
from rsf.rational import BinomialFactor, NiceRational, nr_equal
from rsf.schur import multiplicity_series, verify_multiplicity

x = [VarId("x%d" % (i + 1)) for i in range(3)]
v1, v2, v3 = (VarId("v%d" % (i + 1)) for i in range(3))

def mono(*pairs):
    return m_make(pairs)

def mp(*pairs):
    return MvPoly.monomial(m_make(pairs))

one = MvPoly.one()

dens = []
for c in combinations_with_replacement(range(3), 3):
    e = {}
    for i in c:
        e[x[i]] = e.get(x[i], 0) + 1
    dens.append(BinomialFactor(m_make(e.items())))
f = NiceRational(MvPoly.one(), dens)

t0 = time.time()
M, Mp = multiplicity_series(f, 3)
dt = time.time() - t0
print("W(3) d=3 pipeline: %.2fs" % dt)
assert dt < 60.0

p = [None] * 9
p[0] = one + mp((v2, 9), (v3, 6))
p[1] = -(mp((v2, 1))
         * (one
            - mp((v2, 3), (v3, 2)) * (one + mp((v3, 2)) + mp((v3, 3)))
            - mp((v2, 6), (v3, 2)) * (one + mp((v3, 2)))
            + mp((v2, 9), (v3, 5)) * (one + mp((v3, 1)))))
p[2] = (mp((v2, 2))
        * ((one + mp((v3, 2)) + mp((v3, 4)))
           - mp((v2, 3), (v3, 5)) * (one - mp((v3, 1)))
           - mp((v2, 6), (v3, 2)) * (one + mp((v3, 2)))
           + mp((v2, 9), (v3, 5))))
p[3] = -(((one - mp((v2, 3), (v3, 3))) * mp((v3, 1))
          + mp((v2, 6))
          + mp((v2, 9), (v3, 4)) * (one + mp((v3, 2)) + mp((v3, 3))))
         * mp((v3, 2)))
p[4] = (mp((v2, 1), (v3, 2))
        * ((one + mp((v3, 1)) * 2 + mp((v3, 3)))
           - mp((v2, 3), (v3, 1)) * (mp((v3, 1)) + mp((v2, 3)))
             * (one + mp((v3, 2))) * (one + mp((v3, 1)) + mp((v3, 2)))
           + mp((v2, 9), (v3, 4)) * (one + mp((v3, 2)) * 2 + mp((v3, 3)))))
p[5] = -(mp((v2, 2), (v3, 2))
         * (one + mp((v3, 1)) + mp((v3, 3)) + mp((v2, 3), (v3, 7))
            - mp((v2, 6), (v3, 3)) + mp((v2, 9), (v3, 6))))
p[6] = ((mp((v3, 1))
         - mp((v2, 3), (v3, 2)) * (one + mp((v3, 2)))
         + mp((v2, 6)) * (one - mp((v3, 1)))
         + mp((v2, 9), (v3, 2)) * (one + mp((v3, 2)) + mp((v3, 4))))
        * mp((v3, 5)))
p[7] = -(mp((v2, 1), (v3, 5))
         * (one + mp((v3, 1))
            - mp((v2, 3), (v3, 2)) * (one + mp((v3, 2)))
            - mp((v2, 6), (v3, 1)) * (one + mp((v3, 1)) + mp((v3, 3)))
            + mp((v2, 9), (v3, 6))))
p[8] = mp((v2, 2), (v3, 5)) * (one + mp((v2, 9), (v3, 6)))

num = MvPoly.zero()
for i in range(9):
    num = num + mp((v1, i)) * p[i]

want = NiceRational(num, [
    BinomialFactor(mono((v1, 3))),
    BinomialFactor(mono((v1, 1), (v2, 1))),
    BinomialFactor(mono((v1, 3), (v3, 2))),
    BinomialFactor(mono((v1, 3), (v3, 3))),
    BinomialFactor(mono((v2, 6))),
    BinomialFactor(mono((v2, 3), (v3, 1))),
    BinomialFactor(mono((v2, 3), (v3, 3))),
    BinomialFactor(mono((v3, 4))),
    BinomialFactor(mono((v3, 6))),
])

same = nr_equal(Mp, want)
print("fixture match:", same)
assert same

ok = verify_multiplicity(f, M, 3)
print("verify:", ok)
assert ok
print("W3D3 OK")
