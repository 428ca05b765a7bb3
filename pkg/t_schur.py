import sys, time
sys.path.insert(0, "src")

from rsf.poly import MvPoly, xvar, vvar, tvar, m_make, m_var
from rsf.rational import NiceRational, BinomialFactor, nr_equal, series_truncate
from rsf.schur import (
    schur_poly, multiplicity_series, verify_multiplicity, schur_expand,
    young_rule, as_partition, x_to_v, v_to_x,
)

x1, x2, x3 = xvar(1), xvar(2), xvar(3)
v1, v2, v3 = vvar(1), vvar(2), vvar(3)


def mono(*pairs):
    return m_make(pairs)


def nr(num, *monos):
    return NiceRational(num, [BinomialFactor(m) for m in monos])


def check(label, ok):
    print(("PASS" if ok else "FAIL"), label)
    if not ok:
        sys.exit(1)


# --- schur_poly ---------------------------------------------------------
s3 = schur_poly((3,), 2)
want = (MvPoly.var(x1, 3) + MvPoly.monomial(mono((x1, 2), (x2, 1)))
        + MvPoly.monomial(mono((x1, 1), (x2, 2))) + MvPoly.var(x2, 3))
check("S_(3) two vars", s3 == want)
check("S_(1) three vars", schur_poly((1,), 3) ==
      MvPoly.var(x1) + MvPoly.var(x2) + MvPoly.var(x3))
check("S_(1,1) two vars", schur_poly((1, 1), 2) ==
      MvPoly.monomial(mono((x1, 1), (x2, 1))))
check("S_() is 1", schur_poly((), 2).is_one())
s21 = schur_poly((2, 1), 3)
# dimension of W(2,1) for GL_3 is 8
check("dim S_(2,1) d=3", sum(s21.terms.values()) == 8)
try:
    schur_poly((1, 1, 1), 2)
    check("long partition rejected", False)
except Exception as e:
    check("long partition rejected", "parts" in str(e))

# symmetry of schur polys
from rsf.poly import MvTerm
sw = s21.substitute({x1: MvTerm.of_var(x2), x2: MvTerm.of_var(x1)})
check("S_(2,1) symmetric", sw == s21)

# --- multiplicity_series, d=2 headline case -----------------------------
t0 = time.time()
h_w3 = nr(MvPoly.one(), mono((x1, 3)), mono((x1, 2), (x2, 1)),
          mono((x1, 1), (x2, 2)), mono((x2, 3)))
M, Mp = multiplicity_series(h_w3, 2)
num_want = (MvPoly.one() - MvPoly.monomial(mono((v1, 1), (v2, 1)))
            + MvPoly.monomial(mono((v1, 2), (v2, 2))))
mp_want = NiceRational(num_want, [BinomialFactor(mono((v1, 3))),
                                  BinomialFactor(mono((v1, 1), (v2, 1))),
                                  BinomialFactor(mono((v2, 6)))])
check("W(3) d=2 M'", nr_equal(Mp, mp_want))
m_want = v_to_x(mp_want, 2)
check("W(3) d=2 M", nr_equal(M, m_want))
check("W(3) verify_multiplicity", verify_multiplicity(h_w3, M, 2))
print("  d=2 W(3) pipeline: %.2fs" % (time.time() - t0))

# intermediate omega value: staircase * M should match the displayed form
# x1*(1-x1^2x2+x1^4x2^2)/((1-x1^3)(1-x1^2x2)(1-x1^6x2^6))
om_want = NiceRational(
    MvPoly.var(x1) * (MvPoly.one() - MvPoly.monomial(mono((x1, 2), (x2, 1)))
                      + MvPoly.monomial(mono((x1, 4), (x2, 2)))),
    [BinomialFactor(mono((x1, 3))), BinomialFactor(mono((x1, 2), (x2, 1))),
     BinomialFactor(mono((x1, 6), (x2, 6)))])
om_got = M * NiceRational.from_poly(MvPoly.var(x1))
check("W(3) d=2 intermediate omega", nr_equal(om_got, om_want))

# --- both strategies agree ---------------------------------------------
M2, Mp2 = multiplicity_series(h_w3, 2, strategy="both")
check("strategy=both agrees", nr_equal(Mp2, mp_want))

# --- trivial single Schur summand --------------------------------------
f = NiceRational.from_poly(schur_poly((2, 1), 2))
M, Mp = multiplicity_series(f, 2)
check("M(S_(2,1)) = x1^2 x2",
      nr_equal(M, NiceRational.from_poly(
          MvPoly.monomial(mono((x1, 2), (x2, 1))))))

# --- Thrall W(2), several d --------------------------------------------
for d in (1, 2, 3):
    xs = [xvar(i) for i in range(1, d + 1)]
    dens = []
    for i in range(d):
        for j in range(i, d):
            dens.append(mono((xs[i], 1)) if i == j else None)
    dens = []
    for i in range(d):
        for j in range(i, d):
            dens.append(m_make([(xs[i], 2)]) if i == j
                        else m_make([(xs[i], 1), (xs[j], 1)]))
    hw2 = nr(MvPoly.one(), *dens)
    M, Mp = multiplicity_series(hw2, d)
    vs = [vvar(i) for i in range(1, d + 1)]
    want = NiceRational(MvPoly.one(),
                        [BinomialFactor(m_make([(v, 2)])) for v in vs])
    check("W(2) d=%d M' = prod 1/(1-v_i^2)" % d, nr_equal(Mp, want))

# --- not symmetric ------------------------------------------------------
try:
    multiplicity_series(nr(MvPoly.one(), mono((x1, 1))), 2)
    check("asymmetric rejected", False)
except Exception as e:
    check("asymmetric rejected", "not symmetric" in str(e))

# --- graded flag and inert variable -------------------------------------
t = tvar()
try:
    multiplicity_series(nr(MvPoly.one(), mono((x1, 1), (t, 1)),
                           mono((x2, 1), (t, 1))), 2)
    check("t rejected when ungraded", False)
except Exception as e:
    check("t rejected when ungraded", "unexpected variable" in str(e))
M, Mp = multiplicity_series(nr(MvPoly.one(), mono((x1, 1), (t, 1)),
                               mono((x2, 1), (t, 1))), 2, graded=True)
# prod 1/(1-xi t) = sum_n S_(n) t^n, so only single-row shapes appear
want = NiceRational(MvPoly.one(),
                    [BinomialFactor(mono((v1, 1), (t, 1)))])
check("graded W(1) d=2", nr_equal(Mp, want))
# the Littlewood product picks up every shape with weight t^|lambda|
M, Mp = multiplicity_series(nr(MvPoly.one(), mono((x1, 1), (t, 1)),
                               mono((x2, 1), (t, 1)),
                               mono((x1, 1), (x2, 1), (t, 2))),
                            2, graded=True)
want = NiceRational(MvPoly.one(),
                    [BinomialFactor(mono((v1, 1), (t, 1))),
                     BinomialFactor(mono((v2, 1), (t, 2)))])
check("graded Littlewood d=2", nr_equal(Mp, want))

# --- verify_multiplicity negatives -------------------------------------
check("verify rejects wrong h",
      not verify_multiplicity(nr(MvPoly.one(), mono((x1, 1), (x2, 1))),
                              NiceRational.zero(), 2))
check("verify trivial", verify_multiplicity(
    NiceRational.one(), NiceRational.one(), 2))

# --- schur_expand -------------------------------------------------------
hw2_d2 = nr(MvPoly.one(), mono((x1, 2)), mono((x1, 1), (x2, 1)),
            mono((x2, 2)))
se = schur_expand(hw2_d2, 2, 4)
check("W(2) expand entries",
      se.entries == {(): 1, (2,): 1, (4,): 1, (2, 2): 1})
se2 = schur_expand(NiceRational.from_poly(schur_poly((1,), 2)), 2, 1)
check("S_(1) expand", se2.entries == {(1,): 1})
# cross-check against M for the W(3) case at N=6
M, Mp = multiplicity_series(h_w3, 2)
se3 = schur_expand(h_w3, 2, 6)
check("expand matches M series (W3, N=6)",
      se3.as_poly() == series_truncate(M, 6))
js = se.to_json()
check("expansion json roundtrip",
      type(se).from_json(js) == se)

# --- young_rule ---------------------------------------------------------
check("young m=0", young_rule(0, (2, 1), 3) == [(2, 1)])
check("young pieri", sorted(young_rule(1, (1,), 2)) == [(1, 1), (2,)])
import itertools
ok = True
for m in range(0, 4):
    for mu in [(), (1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)]:
        for d in (1, 2, 3):
            if len(mu) > d:
                continue
            nus = young_rule(m, mu, d)
            if len(set(nus)) != len(nus):
                ok = False
            lhs = schur_poly((m,), d) * schur_poly(mu, d)
            rhs = MvPoly.zero()
            for nu in nus:
                rhs = rhs + schur_poly(nu, d)
            if lhs != rhs:
                print("   mismatch", m, mu, d, nus)
                ok = False
check("young rule vs product oracle", ok)

# --- M(S_lambda) = X^lambda sweep --------------------------------------
t0 = time.time()
ok = True
for d in (1, 2, 3):
    lams = set()
    for n in range(0, 5):
        for lam in itertools.product(range(5), repeat=d):
            lam = tuple(sorted(lam, reverse=True))
            if sum(lam) == n:
                lams.add(as_partition(lam))
    for lam in sorted(lams):
        f = NiceRational.from_poly(schur_poly(lam, d))
        M, Mp = multiplicity_series(f, d)
        want = NiceRational.from_poly(MvPoly.monomial(
            m_make((xvar(i + 1), lam[i]) for i in range(len(lam)))))
        if not nr_equal(M, want):
            print("   M(S_%s) d=%d failed" % (lam, d))
            ok = False
check("M(S_lambda)=X^lambda sweep (deg<=4, d<=3)", ok)
print("  sweep: %.2fs" % (time.time() - t0))

# --- d=3: W(1,1,1) and W(2,1) closed forms ------------------------------
t0 = time.time()
f111 = nr(MvPoly.one(), mono((x1, 1), (x2, 1), (x3, 1)))
M, Mp = multiplicity_series(f111, 3)
check("W(1^3) d=3 M' = 1/(1-v3)",
      nr_equal(Mp, nr(MvPoly.one(), mono((v3, 1)))))
print("  d=3 W(1^3): %.2fs" % (time.time() - t0))

t0 = time.time()
dens = [mono((x1, 1), (x2, 1), (x3, 1))] * 2
for i in range(1, 4):
    for j in range(1, 4):
        if i != j:
            dens.append(m_make([(xvar(i), 2), (xvar(j), 1)]))
h21 = nr(MvPoly.one(), *dens)
M, Mp = multiplicity_series(h21, 3)
num_want = (MvPoly.one()
            + MvPoly.monomial(mono((v1, 1), (v2, 1), (v3, 1)))
            + MvPoly.monomial(mono((v1, 2), (v2, 2), (v3, 2))))
want = NiceRational(num_want,
                    [BinomialFactor(mono((v1, 1), (v2, 1))),
                     BinomialFactor(mono((v1, 3), (v3, 2))),
                     BinomialFactor(mono((v2, 3), (v3, 1))),
                     BinomialFactor(mono((v3, 2))),
                     BinomialFactor(mono((v3, 3)))])
check("W(2,1) d=3 M'", nr_equal(Mp, want))
check("W(2,1) verify", verify_multiplicity(h21, M, 3))
print("  d=3 W(2,1) pipeline: %.2fs" % (time.time() - t0))

print("ALL SCHUR SMOKE TESTS PASSED")
