import sys
sys.path.insert(0, "src")

from rsf.poly import MvPoly, xvar, zvar, m_var, m_mul, m_get, m_drop, QONE
from rsf.rational import BinomialFactor, NiceRational, nr_equal, series_truncate
from rsf.omega import (
    partial_fractions_z, omega_geq, elliott_reduce, omega_eq0, omega_step,
    POLY_PART, PURE_NEG, CONTRIB, DISCARD,
)

x = xvar(1)
y = xvar(2)
w = xvar(3)
z = zvar(1)


def nr(num_terms, den_specs):
    num = MvPoly.from_terms([(m, QONE * c) for m, c in num_terms])
    den = [BinomialFactor(m, p) for m, p in den_specs]
    return NiceRational(num, den, normalize=False)


def mono(*pairs):
    out = ()
    for v, e in pairs:
        out = m_mul(out, m_var(v, e))
    return out


def check_equal(got, want, label):
    assert nr_equal(got, want), "%s:\n got  %s\n want %s" % (
        label, got.render(), want.render())
    print("ok", label, "->", got.render())


def series_slice_oracle(f, res, zv, bound, label):
    """Slice the direct series of f at z>=0, z=1; compare with res."""
    s_in = f.series(bound)
    acc = {}
    for m, c in s_in.terms.items():
        if m_get(m, zv) >= 0:
            key = m_drop(m, zv)
            acc[key] = acc.get(key, 0) + c
    sliced = MvPoly({m: c for m, c in acc.items() if c})
    s_out = series_truncate(res, bound)
    assert sliced == s_out, "%s series mismatch:\n sliced %s\n out    %s" % (
        label, sliced.render(), s_out.render())
    print("ok series oracle", label)


def reconstruction(f, zv, label):
    terms = partial_fractions_z(f, zv)
    n_sum, d_sum = MvPoly.zero(), MvPoly.one()
    for t in terms:
        n, d = t.value_pair()
        n_sum = n_sum * d + n * d_sum
        d_sum = d_sum * d
    fn = f.num
    fd = MvPoly.one()
    for bf in f.den:
        fd = fd * bf.expanded()
    assert n_sum * fd == fn * d_sum, "%s reconstruction failed" % label
    kinds = sorted(set(t.kind for t in terms))
    print("ok reconstruction", label, kinds)


# 1. the classic crossing identity
f1 = nr([(mono(), 1)], [(mono((x, 1), (z, 1)), 1),
                        (mono((y, 1), (z, -1)), 1)])
want1 = nr([(mono(), 1)], [(mono((x, 1)), 1), (mono((x, 1), (y, 1)), 1)])
reconstruction(f1, z, "crossing")
r1 = omega_geq(f1, z)
check_equal(r1, want1, "omega crossing")
series_slice_oracle(f1, r1, z, 6, "crossing")
check_equal(elliott_reduce(f1, z), want1, "elliott crossing")

# 2. z^2 below
f2 = nr([(mono(), 1)], [(mono((x, 1), (z, 1)), 1),
                        (mono((y, 1), (z, -2)), 1)])
want2 = nr([(mono(), 1)], [(mono((x, 1)), 1),
                           (mono((x, 2), (y, 1)), 1)])
reconstruction(f2, z, "deep")
r2 = omega_geq(f2, z)
check_equal(r2, want2, "omega deep")
series_slice_oracle(f2, r2, z, 6, "deep")
check_equal(elliott_reduce(f2, z), want2, "elliott deep")

# 3. numerator shift: z / ((1-xz)(1-y/z)) -> (1+y-xy)/((1-x)(1-xy))
f3 = nr([(mono((z, 1)), 1)], [(mono((x, 1), (z, 1)), 1),
                              (mono((y, 1), (z, -1)), 1)])
want3 = NiceRational(
    MvPoly.from_terms([(mono(), QONE), (mono((y, 1)), QONE),
                       (mono((x, 1), (y, 1)), -QONE)]),
    [BinomialFactor(mono((x, 1)), 1),
     BinomialFactor(mono((x, 1), (y, 1)), 1)])
reconstruction(f3, z, "shifted")
r3 = omega_geq(f3, z)
check_equal(r3, want3, "omega shifted")
series_slice_oracle(f3, r3, z, 6, "shifted")
check_equal(elliott_reduce(f3, z), want3, "elliott shifted")

# 4. double pole above
f4 = nr([(mono(), 1)], [(mono((x, 1), (z, 1)), 2),
                        (mono((y, 1), (z, -1)), 1)])
want4 = NiceRational(
    MvPoly.from_terms([(mono(), QONE), (mono((x, 2), (y, 1)), -QONE)]),
    [BinomialFactor(mono((x, 1)), 2),
     BinomialFactor(mono((x, 1), (y, 1)), 2)])
reconstruction(f4, z, "double")
r4 = omega_geq(f4, z)
check_equal(r4, want4, "omega double")
series_slice_oracle(f4, r4, z, 7, "double")
check_equal(elliott_reduce(f4, z), want4, "elliott double")

# 5. three factors
f5 = nr([(mono(), 1)], [(mono((x, 1), (z, 1)), 1),
                        (mono((y, 1), (z, 1)), 1),
                        (mono((w, 1), (z, -1)), 1)])
want5 = NiceRational(
    MvPoly.from_terms([(mono(), QONE),
                       (mono((x, 1), (y, 1), (w, 1)), -QONE)]),
    [BinomialFactor(mono((x, 1)), 1), BinomialFactor(mono((y, 1)), 1),
     BinomialFactor(mono((x, 1), (w, 1)), 1),
     BinomialFactor(mono((y, 1), (w, 1)), 1)])
reconstruction(f5, z, "three")
r5 = omega_geq(f5, z)
check_equal(r5, want5, "omega three")
series_slice_oracle(f5, r5, z, 6, "three")
check_equal(elliott_reduce(f5, z), want5, "elliott three")

# 6. equal slice
r6 = omega_eq0(f1, z)
want6 = nr([(mono(), 1)], [(mono((x, 1), (y, 1)), 1)])
check_equal(r6, want6, "eq0 crossing")
r6e = omega_eq0(f1, z, strategy="elliott")
check_equal(r6e, want6, "eq0 elliott")

# 7. no z in denominator
f7 = nr([(mono((x, 1), (z, -1)), 1), (mono((y, 1)), 1)],
        [(mono((x, 1)), 1)])
r7 = omega_geq(f7, z)
want7 = nr([(mono((y, 1)), 1)], [(mono((x, 1)), 1)])
check_equal(r7, want7, "num only")
reconstruction(f7, z, "num only")

# 8. untouched input passes through
f8 = nr([(mono((x, 1)), 1)], [(mono((x, 1), (y, 1)), 2)])
assert omega_geq(f8, z) is f8
print("ok passthrough")

# 9. strategy both + cross-check on a higher structure:
#    1/((1-xz)(1-y z)(1-w/z^2))
f9 = nr([(mono(), 1)], [(mono((x, 1), (z, 1)), 1),
                        (mono((y, 1), (z, 1)), 1),
                        (mono((w, 1), (z, -2)), 1)])
reconstruction(f9, z, "depth2")
r9 = omega_step(f9, z, strategy="both")
series_slice_oracle(f9, r9, z, 7, "depth2")
print("ok both-strategy depth2 ->", r9.render())

# 10. omega over a factor with z^2 above: 1/((1-x z^2)(1-y/z))
f10 = nr([(mono(), 1)], [(mono((x, 1), (z, 2)), 1),
                         (mono((y, 1), (z, -1)), 1)])
reconstruction(f10, z, "above2")
r10 = omega_step(f10, z, strategy="both")
series_slice_oracle(f10, r10, z, 8, "above2")
print("ok both-strategy above2 ->", r10.render())

print("ALL OMEGA SMOKE TESTS PASSED")
