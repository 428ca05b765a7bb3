import sys, time
sys.path.insert(0, "src")

from rsf.poly import MvPoly, VarId, m_make, m_render, Rat, vvar, tvar
from rsf.rational import NiceRational, BinomialFactor, nr_equal
from rsf.applications import (
    ModuleSpec, JordanShape, parse_module_spec, weights_of_module,
    hilbert_symmetric_algebra, invariants_hilbert, weitzenbock_hilbert,
    specialize_values, tideal_product_hilbert, builtin_series,
    cyclotomic_numerator_status, noncommutative_invariants,
)

t = tvar()

def bf(pairs, power=1):
    return BinomialFactor(m_make([(VarId(n), e) for n, e in pairs]), power)

# module-spec parsing
ms = parse_module_spec("3", 2)
print("parse '3' ->", ms)
ms2 = parse_module_spec("2*(1,1) + 4", 3)
print("parse '2*(1,1) + 4' ->", ms2)

# weights of W(3) d=2: x1^3, x1^2 x2, x1 x2^2, x2^3
ws = weights_of_module(parse_module_spec("3", 2))
print("W(3) d=2 weights:", [m_render(w) for w in ws])

# symmetric algebra, graded
h = hilbert_symmetric_algebra(parse_module_spec("3", 2), graded=True)
print("H(K[W(3)], t):", h.render())

# SL2 / UT2 of W(3): expect 1/(1-t^4) and (1-t+t^2)/((1-t)^2(1-t^4))
t0 = time.time()
sl = invariants_hilbert(parse_module_spec("3", 2), "sl")
ut = invariants_hilbert(parse_module_spec("3", 2), "ut")
print("W(3) SL2:", sl.render(), " UT2:", ut.render(), " (%.2fs)" % (time.time() - t0))

exp_sl = NiceRational(MvPoly.one(), [bf([("t", 4)])])
num_ut = MvPoly.from_terms([(m_make([]), Rat(1)), (m_make([(t, 1)]), Rat(-1)), (m_make([(t, 2)]), Rat(1))])
exp_ut = NiceRational(num_ut, [bf([("t", 1)], 2), bf([("t", 4)])])
print("SL2 match:", nr_equal(sl, exp_sl), "UT2 match:", nr_equal(ut, exp_ut))

# Weitzenboeck delta(2) -> cells sizes (3): expect 1/((1-t)(1-t^2))
t0 = time.time()
w2 = weitzenbock_hilbert(JordanShape([3]))
exp_w2 = NiceRational(MvPoly.one(), [bf([("t", 1)]), bf([("t", 2)])])
print("delta(2):", w2.render(), "match:", nr_equal(w2, exp_w2), " (%.2fs)" % (time.time() - t0))

# builtin series
print("poly-algebra d=2:", builtin_series("polynomial-algebra", 2).render())
fu = builtin_series("F-U2K", 2)
print("F-U2K d=2:", fu.render())
# check against direct formula: 2/((1-x1)(1-x2)) + (x1+x2-1)/((1-x1)^2(1-x2)^2)
two = NiceRational(MvPoly.const(2), [bf([("x1", 1)]), bf([("x2", 1)])])
xs = MvPoly.var(VarId("x1")) + MvPoly.var(VarId("x2")) - MvPoly.one()
rest = NiceRational(xs, [bf([("x1", 1)], 2), bf([("x2", 1)], 2)])
print("F-U2K match:", nr_equal(fu, two + rest))
print("T32 den count:", len(builtin_series("T32").den_map()))
print("M2 series:", builtin_series("M2-multiplicity-series").render()[:100])

# cyclotomic status on (1-t+t^2)/... numerator: 1-t+t^2 = Phi_6 -> yes
print("cyclo status UT2 W(3):", cyclotomic_numerator_status(ut))

# noncommutative invariants smoke: free metabelian, 2 gens weight x1, x2, d=2
hfp = builtin_series("F-U2K", 2)
w_lin = [m_make([(VarId("x1"), 1)]), m_make([(VarId("x2"), 1)])]
w_lin = [m_make([(VarId("x1"), 1)]), m_make([(VarId("x2"), 1)])]
t0 = time.time()
nc_sl = noncommutative_invariants(hfp, w_lin, 2, "sl")
print("F-2(U2K) SL2:", nc_sl.render(), " (%.2fs)" % (time.time() - t0))
exp_nc = NiceRational(MvPoly.one(), [bf([("t", 2)])])
print("match 1/(1-t^2):", nr_equal(nc_sl, exp_nc))
print("smoke OK")
