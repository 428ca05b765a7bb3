import sys, time
sys.path.insert(0, "src")
from rsf.poly import MvPoly, VarId, ROLE_X, Rat, m_make
from rsf.gcdtools import line_split

x1 = VarId("x1")
x2 = VarId("x2")
x3 = VarId("x3")

def mono(*pairs):
    return m_make(pairs)

def binom(m, sign=-1):
    return MvPoly.from_terms([(mono(), Rat(1)), (m, Rat(sign))])

one = MvPoly.one()

f1 = binom(mono((x1, 1), (x2, 1), (x3, 1)), +1)    # 1 + x1 x2 x3
f2 = binom(mono((x1, 1), (x2, 1)), +1)             # 1 + x1 x2
f3 = binom(mono((x1, 2), (x3, 1)))                 # 1 - x1^2 x3
f4 = binom(mono((x2, 3)))                          # 1 - x2^3
f5 = binom(mono((x1, 1), (x2, 2), (x3, 3)))        # 1 - x1 x2^2 x3^3
f6 = MvPoly.from_terms([(mono(), Rat(1)),
                        (mono((x1, 2), (x2, 1)), Rat(-1)),
                        (mono((x1, 4), (x2, 2)), Rat(1))])  # cyclotomic line

for name, prod, n in [
    ("pair", f1 * f2, 2),
    ("triple", f1 * f3 * f4, 3),
    ("quad", f1 * f2 * f3 * f4, 4),
    ("five", f1 * f2 * f3 * f4 * f5, 5),
    ("repeat", f1 * f1 * f3, 2),
    ("cyclo", f6 * f4 * f3, 3),
]:
    t0 = time.time()
    parts = line_split(prod)
    dt = time.time() - t0
    back = MvPoly.one()
    for q in parts:
        back = back * q
    ok = back == prod
    print("%-8s parts=%d exact=%s %.3fs sizes=%s"
          % (name, len(parts), ok, dt, sorted(len(q.terms) for q in parts)))
    assert ok, name
    assert len(parts) >= n, name

# something that is not a product of line pieces must come back whole
g = MvPoly.from_terms([(mono(), Rat(1)), (mono((x1, 1)), Rat(1)),
                       (mono((x2, 1)), Rat(1)),
                       (mono((x1, 2), (x2, 2)), Rat(1))])
parts = line_split(g)
back = MvPoly.one()
for q in parts:
    back = back * q
print("stubborn parts=%d exact=%s" % (len(parts), back == g))
assert back == g

# Laurent support
h = (f1 * f3).mul_mono(mono((x1, -2), (x3, -1)))
parts = line_split(h)
back = MvPoly.one()
for q in parts:
    back = back * q
print("laurent  parts=%d exact=%s" % (len(parts), back == h))
assert back == h
print("peel ok")
