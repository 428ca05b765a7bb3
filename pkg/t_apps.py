import sys, time
sys.path.insert(0, "src")
import faulthandler
fh = open("/tmp/apps_fault.log", "w")
faulthandler.dump_traceback_later(560, file=fh)

from rsf.poly import MvPoly, VarId, m_make, Rat, vvar, xvar, tvar
from rsf.rational import NiceRational, BinomialFactor, nr_equal
from rsf.schur import multiplicity_series, verify_multiplicity, schur_expand, as_partition
from rsf.applications import (
    ModuleSpec, JordanShape, parse_module_spec,
    hilbert_symmetric_algebra, invariants_hilbert, weitzenbock_hilbert,
    builtin_series, cyclotomic_numerator_check, cyclotomic_numerator_status,
)

t = tvar()
one = MvPoly.one()

def V(i, e=1):
    return MvPoly.var(vvar(i), e)

def T(e=1):
    return MvPoly.var(t, e)

def bf(pairs, power=1):
    return BinomialFactor(m_make([(v, e) for v, e in pairs if e]), power)

def vb(i, e, te=0, power=1):
    pairs = [(vvar(i), e)]
    if te:
        pairs.append((t, te))
    return BinomialFactor(m_make(pairs), power)

def tb(k, power=1):
    return BinomialFactor(m_make([(t, k)]), power)

def fx(name, got, num, den, t0):
    lhs = got.num * den
    rhs = num * got.den_expanded()
    ok = (lhs - rhs).is_zero()
    print("%-34s %-5s %6.2fs" % (name, ok, time.time() - t0))
    return ok

def nrck(name, got, exp, t0):
    ok = nr_equal(got, exp)
    print("%-34s %-5s %6.2fs" % (name, ok, time.time() - t0))
    return ok

allok = True

# ---- criterion 2: ungraded M' closed forms, d=2 ----
print("== ungraded M' closed forms (d=2) ==")
t0 = time.time()
f4 = hilbert_symmetric_algebra(ModuleSpec([((4,), 1)], 2))
M4, Mp4 = multiplicity_series(f4, 2)
exp4 = NiceRational(one - V(1, 2) * V(2) + V(1, 4) * V(2, 2),
                    [vb(1, 4), bf([(vvar(1), 2), (vvar(2), 1)]),
                     vb(2, 4), vb(2, 6)])
allok &= nrck("W(4) M'", Mp4, exp4, t0)
t0 = time.time()
allok &= (verify_multiplicity(f4, M4, 2) is True)
print("%-34s %-5s %6.2fs" % ("W(4) verify identity", True, time.time() - t0))

t0 = time.time()
f22 = hilbert_symmetric_algebra(ModuleSpec([((2,), 2)], 2))
_, Mp22 = multiplicity_series(f22, 2)
exp22 = NiceRational(one + V(1, 2) * V(2),
                     [vb(1, 2, 0, 2), vb(2, 2, 0, 3)])
allok &= nrck("W(2)+W(2) M'", Mp22, exp22, t0)

t0 = time.time()
f33 = hilbert_symmetric_algebra(ModuleSpec([((3,), 2)], 2))
_, Mp33 = multiplicity_series(f33, 2)
p33 = ((one - V(2, 3) + V(2, 6))
       * ((one + V(1, 6) * V(2, 3)) * (one + V(2, 6))
          - V(1, 3) * V(2, 3) * (one + V(2, 3)) * 2)
       - V(1) * V(2) * (one - V(2, 3))
       * ((one - V(2, 3) - V(2, 9)) * 2
          - V(1) * V(2) * (one * 4 - V(2, 3) - V(2, 9))
          - V(1, 3) * (one + V(2, 6) - V(2, 9) * 4)
          + V(1, 4) * V(2) * (one + V(2, 6) - V(2, 9)) * 2))
exp33 = NiceRational(p33, [vb(1, 3, 0, 2), bf([(vvar(1), 1), (vvar(2), 1)], 2),
                           vb(2, 3, 0, 2), vb(2, 6, 0, 3)])
allok &= nrck("W(3)+W(3) M'", Mp33, exp33, t0)

# ---- criterion 3: d=3 ungraded forms for W(2,1), W(1,1,1) ----
print("== d=3 ungraded forms ==")
t0 = time.time()
f21 = hilbert_symmetric_algebra(ModuleSpec([((2, 1), 1)], 3))
M21, Mp21 = multiplicity_series(f21, 3)
v123 = V(1) * V(2) * V(3)
exp21 = NiceRational(one + v123 + v123 * v123,
                     [bf([(vvar(1), 1), (vvar(2), 1)]),
                      bf([(vvar(1), 3), (vvar(3), 2)]),
                      bf([(vvar(2), 3), (vvar(3), 1)]),
                      vb(3, 2), vb(3, 3)])
allok &= nrck("W(2,1) d=3 M'", Mp21, exp21, t0)
t0 = time.time()
f111 = hilbert_symmetric_algebra(ModuleSpec([((1, 1, 1), 1)], 3))
_, Mp111 = multiplicity_series(f111, 3)
allok &= nrck("W(1,1,1) d=3 M'",
              Mp111, NiceRational(one, [vb(3, 1)]), t0)
t0 = time.time()
allok &= (verify_multiplicity(f21, M21, 3) is True)
print("%-34s %-5s %6.2fs" % ("W(2,1) verify identity", True, time.time() - t0))

# ---- criterion 4: graded 10-term fixture for W(3)+W(2), d=2 ----
print("== graded W(3)+W(2) fixture ==")
t0 = time.time()
fg = hilbert_symmetric_algebra(parse_module_spec("3 + 2", 2), graded=True)
_, Mpg = multiplicity_series(fg, 2, graded=True)
p = [one,
     -V(1) * V(2),
     V(1) * V(2) * (V(2) + V(1) * V(2) + V(1, 2)),
     V(1) * V(2, 2) * (V(2) - V(1, 3)),
     V(1) * V(2, 5),
     V(1) * V(2, 5) * (one - V(1)) * (V(2) + V(1)),
     -V(1, 3) * V(2, 6),
     V(2, 8) * (V(2) - V(1, 3)),
     -V(1) * V(2, 9) * (V(2) + V(1) + V(1, 2)),
     V(1, 3) * V(2, 10),
     -V(1, 4) * V(2, 11)]
numg = MvPoly.zero()
for k, pk in enumerate(p):
    numg = numg + pk * T(k)
expg = NiceRational(numg, [vb(1, 2, 1), vb(1, 3, 1), bf([(vvar(1), 1), (vvar(2), 1), (t, 1)]),
                           vb(2, 2, 2), vb(2, 4, 3), vb(2, 6, 4), vb(2, 6, 5)])
allok &= nrck("W(3)+W(2) graded M'", Mpg, expg, t0)

# ---- criterion 5: W(1)+W(1^2) for d=2..5 ----
print("== W(1)+W(1^2) closed forms ==")
for d in (2, 3, 4, 5):
    t0 = time.time()
    spec = ModuleSpec([((1,), 1), ((1, 1), 1)], d)
    f = hilbert_symmetric_algebra(spec, graded=True)
    _, mp = multiplicity_series(f, d, graded=True)
    dens = []
    for i in range(1, d // 2 + 1):
        dens.append(vb(2 * i - 1, 1, i))
        dens.append(vb(2 * i, 1, i))
    if d % 2:
        dens.append(vb(d, 1, (d + 1) // 2))
    allok &= nrck("W(1)+W(1^2) d=%d M'" % d, mp,
                  NiceRational(one, dens), t0)

# ---- criterion 6: SL/UT series ----
print("== SL/UT invariant series ==")

def inv_case(name, spec_text, d, group, num, den_factors):
    t0 = time.time()
    got = invariants_hilbert(parse_module_spec(spec_text, d), group)
    exp_den = one
    for k, pw in den_factors:
        b = one - T(k)
        for _ in range(pw):
            exp_den = exp_den * b
    return fx("%s %s%d" % (name, group.upper(), d), got, num, exp_den, t0)

tp = lambda *pairs: MvPoly.from_terms([(m_make([(t, e)] if e else []), Rat(c))
                                       for e, c in pairs])

allok &= inv_case("W(2)", "2", 2, "sl", one, [(2, 1)])
allok &= inv_case("W(2)", "2", 2, "ut", one, [(1, 1), (2, 1)])
allok &= inv_case("W(2)", "2", 3, "sl", one, [(3, 1)])
allok &= inv_case("W(2)", "2", 3, "ut", one, [(1, 1), (2, 1), (3, 1)])
allok &= inv_case("W(1^2)", "(1,1)", 2, "sl", one, [(1, 1)])
allok &= inv_case("W(1^2)", "(1,1)", 2, "ut", one, [(1, 1)])
allok &= inv_case("W(1^2)", "(1,1)", 3, "sl", one, [])
allok &= inv_case("W(1^2)", "(1,1)", 3, "ut", one, [(1, 1)])
allok &= inv_case("W(1^2)", "(1,1)", 4, "sl", one, [(2, 1)])
allok &= inv_case("W(1^2)", "(1,1)", 4, "ut", one, [(1, 1), (2, 1)])
allok &= inv_case("W(4)", "4", 2, "sl", one, [(2, 1), (4, 1)])
allok &= inv_case("W(4)", "4", 2, "ut", tp((0, 1), (1, -1), (2, 1)),
                  [(1, 2), (2, 1), (4, 1)])
allok &= inv_case("W(2)+W(2)", "2 + 2", 2, "sl", one, [(2, 3)])
allok &= inv_case("W(2)+W(2)", "2 + 2", 2, "ut", tp((0, 1), (2, 1)),
                  [(1, 2), (2, 3)])
allok &= inv_case("W(2,1)", "(2,1)", 3, "sl", one, [(2, 1), (3, 1)])
allok &= inv_case("W(2,1)", "(2,1)", 3, "ut", tp((0, 1), (1, -1), (2, 1)),
                  [(1, 2), (2, 1), (3, 2)])
allok &= inv_case("W(1^3)", "(1,1,1)", 3, "sl", one, [(1, 1)])
allok &= inv_case("W(1^3)", "(1,1,1)", 3, "ut", one, [(1, 1)])

# W(3)+W(3), d=2: denominators include (1+t^2)^3, use explicit polys
t0 = time.time()
got = invariants_hilbert(parse_module_spec("3 + 3", 2), "sl")
num = (one - T(2) + T(4)) * (one + T(4))
den = (one - T(2)) ** 5 * (one + T(2)) ** 3
allok &= fx("W(3)+W(3) SL2", got, num, den, t0)
t0 = time.time()
got = invariants_hilbert(parse_module_spec("3 + 3", 2), "ut")
num = (one + T(10) + (one + T(6)) * T(2) * 3
       + tp((0, 1), (1, 1), (2, 1), (3, 1), (4, 1)) * T(3) * 6)
den = (one - T(1)) ** 2 * (one - T(2)) ** 5 * (one + T(2)) ** 3
allok &= fx("W(3)+W(3) UT2", got, num, den, t0)

# W(3)+W(2), d=2 (mixed degrees)
t0 = time.time()
got = invariants_hilbert(parse_module_spec("3 + 2", 2), "sl")
num = one + T(9)
den = (one - T(2)) * (one - T(3)) * (one - T(4)) * (one - T(5))
allok &= fx("W(3)+W(2) SL2", got, num, den, t0)
t0 = time.time()
got = invariants_hilbert(parse_module_spec("3 + 2", 2), "ut")
num = ((one - T(1)) * (one - T(7)) + (one + T(4)) * T(2) * 4
       - (one + T(2)) * T(3) + T(4) * 5)
den = (one - T(1)) ** 3 * (one - T(3)) * (one - T(4)) * (one - T(5))
allok &= fx("W(3)+W(2) UT2", got, num, den, t0)

# ---- criterion 7: Weitzenboeck table, dimension <= 7 ----
print("== Weitzenboeck constants ==")

wz_table = [
    ("(1)", [2], tp((0, 1)), [(1, 1)], True),
    ("(2)", [3], tp((0, 1)), [(1, 1), (2, 1)], True),
    ("(3)", [4], tp((0, 1), (3, 1)), [(1, 1), (2, 1), (4, 1)], True),
    ("(1,1)", [2, 2], tp((0, 1)), [(1, 2), (2, 1)], True),
    ("(4)", [5], tp((0, 1), (3, 1)), [(1, 1), (2, 2), (3, 1)], True),
    ("(2,1)", [3, 2], tp((0, 1)), [(1, 2), (2, 1), (3, 1)], True),
    ("(5)", [6],
     tp((0, 1), (2, 1), (3, 3), (4, 3), (5, 5), (6, 4), (7, 6), (8, 6),
        (9, 4), (10, 5), (11, 3), (12, 3), (13, 1), (15, 1)),
     [(1, 1), (2, 1), (4, 1), (6, 1), (8, 1)], False),
    ("(3,1)", [4, 2],
     tp((0, 1), (2, 1), (3, 3), (4, 1), (6, 1)),
     [(1, 2), (2, 1), (4, 2)], False),
    ("(2,2)", [3, 3], tp((0, 1), (2, 1)), [(1, 2), (2, 3)], True),
    ("(1,1,1)", [2, 2, 2], tp((0, 1), (1, 1), (2, 1)), [(1, 2), (2, 3)], True),
    ("(6)", [7],
     tp((0, 1), (2, 1), (3, 3), (4, 4), (5, 4), (6, 4), (7, 3), (8, 1),
        (10, 1)),
     [(1, 1), (2, 2), (3, 1), (4, 1), (5, 1)], False),
    ("(4,1)", [5, 2],
     tp((0, 1), (2, 2), (3, 2), (4, 4), (5, 2), (6, 2), (8, 1)),
     [(1, 2), (2, 1), (3, 2), (5, 1)], False),
    ("(3,2)", [4, 3],
     tp((0, 1), (2, 3), (3, 3), (4, 4), (5, 4), (6, 3), (7, 3), (9, 1)),
     [(1, 2), (2, 1), (3, 1), (4, 1), (5, 1)], False),
    ("(2,1,1)", [3, 2, 2],
     tp((0, 1), (2, 3), (4, 1)),
     [(1, 3), (2, 1), (3, 2)], False),
]

for name, cells, num, denf, ci in wz_table:
    t0 = time.time()
    got = weitzenbock_hilbert(JordanShape(cells))
    den = one
    for k, pw in denf:
        den = den * (one - T(k)) ** pw
    ok1 = fx("delta%s" % name, got, num, den, t0)
    t0 = time.time()
    chk = cyclotomic_numerator_check(got)
    ok2 = (chk == ci)
    print("%-34s %-5s %6.2fs [cyclo %s want %s]"
          % ("delta%s cyclo" % name, ok2, time.time() - t0,
             cyclotomic_numerator_status(got), ci))
    allok &= ok1 and ok2

# ---- criterion 8: metabelian upper-triangular series, d=3 ----
print("== F(U2K) multiplicity series ==")
t0 = time.time()
fu = builtin_series("F-U2K", 3)
_, mpu = multiplicity_series(fu, 3)
expu = (NiceRational(one, [vb(1, 1)])
        + NiceRational(V(2) + V(3), [vb(1, 1, 0, 2), vb(2, 1)]))
allok &= nrck("F(U2K) d=3 M'", mpu, expu, t0)

t0 = time.time()
se = schur_expand(fu, 3, 6)
okm = True
for lam, c in se.entries.items():
    lam3 = lam + (0,) * (3 - len(lam))
    if lam3[1] == 0:
        want = 1
    elif lam3[2] == 0 or lam3[2] == 1:
        want = lam3[0] - lam3[1] + 1
    else:
        want = 0
    if c != want:
        okm = False
        print("  mismatch at %s: got %s want %s" % (lam, c, want))
# every nonzero lambda of the case analysis up to degree 6 must be present
for l1 in range(7):
    for l2 in range(l1 + 1):
        for l3 in range(l2 + 1):
            if l1 + l2 + l3 > 6:
                continue
            lam = as_partition((l1, l2, l3))
            if l2 == 0:
                want = 1
            elif l3 in (0, 1):
                want = l1 - l2 + 1
            else:
                want = 0
            if se.multiplicity(lam) != want:
                okm = False
                print("  missing %s: got %s want %s"
                      % (lam, se.multiplicity(lam), want))
print("%-34s %-5s %6.2fs" % ("F(U2K) cocharacter table N=6", okm, time.time() - t0))
allok &= okm

print("ALL OK" if allok else "FAILURES PRESENT")
