"""
Hyperbolic and bicomplex arithmetic, idempotents and the D-order
================================================================

A walkthrough of the scalar layer: the two idempotent components,
zero divisors, the canonical representation, and the componentwise
partial order with its suprema.
"""

from hypmeasure import Bicomplex, Hyperbolic, compare_d, leq_d, lt_d, sup_d

# A hyperbolic number is a pair of real idempotent components. All
# arithmetic acts componentwise, so the algebra is transparent.
a = Hyperbolic(2.0, 1.0)
b = Hyperbolic(0.5, 2.0)
print("a          =", a)
print("b          =", b)
print("a * b      =", a * b)
print("1 / a      =", a.reciprocal())

# The unit j = e1 - e2 squares to one: the split-complex signature.
j = Hyperbolic(1.0, -1.0)
print("j * j      =", j * j)
assert j * j == Hyperbolic(1.0, 1.0)

# Bicomplex numbers carry one complex number per idempotent slot.
# from_canonical accepts the z1 + i2*z2 form and lands on the same
# componentwise representation.
z = Bicomplex.from_canonical(1.0, 1.0j)
print("canonical (1, i) ->", z)
z1, z2 = z.to_canonical()
print("and back         ->", (z1, z2))
assert (z1, z2) == (1.0, 1.0j)

# Zero divisors are exactly the nonzero elements with a vanishing
# component; equivalently z1^2 + z2^2 = 0 in canonical coordinates.
e1 = Bicomplex(1.0, 0.0)
print("e1 zero divisor? ", e1.is_zero_divisor())
w1, w2 = e1.to_canonical()
print("z1^2 + z2^2      =", w1 * w1 + w2 * w2)
assert e1.is_zero_divisor()

# The D-order compares both components at once, so most pairs are
# simply incomparable; sup_d still exists and is attained
# componentwise.
x = Hyperbolic(-1.0, 0.0)
y = Hyperbolic(0.0, -1.0)
print("compare_d(x, y)  =", compare_d(x, y))
print("x <= sup         :", leq_d(x, sup_d([x, y])))
print("sup_d([x, y])    =", sup_d([x, y]))
assert sup_d([x, y]) == Hyperbolic(0.0, 0.0)
assert not lt_d(x, y) and not lt_d(y, x)

print("\nall scalar identities hold")
