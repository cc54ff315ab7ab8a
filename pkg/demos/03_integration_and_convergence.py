"""
Integration, the modulus inequality and dominated convergence
=============================================================

Finite integrals of bicomplex functions against D-measures, the
componentwise triangle inequality, and a dominated-convergence run
with its full L1 trace.
"""

from hypmeasure import (
    Bicomplex,
    FiniteSpace,
    Hyperbolic,
    TFunction,
    TMeasure,
    dct_run,
    integrate,
    leq_d,
)

space = FiniteSpace(("a", "b"))
mu = TMeasure.from_atoms(space, {"a": Bicomplex(1, 1), "b": Bicomplex(1, 1)})

# A sign flip between the atoms makes the first component cancel
# while its modulus integral does not: the inequality is strict in
# the first slot and tight in the second.
f = TFunction.from_atoms(space, {"a": Bicomplex(1, 1), "b": Bicomplex(-1, 1)})
lhs = integrate(f, mu).d_modulus()
rhs = integrate(f.d_modulus(), mu)
rhs_h = Hyperbolic(rhs.e1.real, rhs.e2.real)
print("|integral|      =", lhs)
print("integral of |f| =", rhs_h)
print("lhs <= rhs      :", leq_d(lhs, rhs_h))
assert leq_d(lhs, rhs_h)

# Dominated convergence: f_k = f + g/(k+1) with the constant g = 4
# dominating every term. The L1 gaps must fall below the tolerance
# within the budget, and every term must stay under the dominator.
limit = TFunction.from_atoms(space, {"a": Bicomplex(1, 1), "b": Bicomplex(1, 1)})
seq = []
for k in range(1, 40):
    off = 1.0 / (k + 1)
    seq.append(
        TFunction.from_atoms(
            space,
            {
                "a": Bicomplex(1 + off, 1 - off),
                "b": Bicomplex(1 - off, 1 + off),
            },
        )
    )
g = TFunction.constant(space, 4.0)
report = dct_run(seq, limit, g, mu, tol=0.25)
print("dominated       :", report.domination_ok)
print("first L1 gap    =", report.l1_limit[0])
print("final L1 gap    =", report.final_gap)
print("converged       :", report.success)
assert report.domination_ok and report.success
assert report.final_gap.e1 < report.l1_limit[0].e1

print("\nintegration identities hold")
