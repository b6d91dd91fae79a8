"""
Chi-bounding functions and Ramsey numbers
=========================================

Bounding functions are memoised, checked to be non-decreasing, and
evaluated with exact integers, so even enormous values are exact.
"""

from chibound.bounds import (
    fr_recursion,
    identity_bound,
    multicolor_ramsey_upper,
    product_bound,
    ramsey_exact,
    ramsey_upper,
    rk1_guard_bound,
    self_guard_bound,
    vizing_bound,
)

# Small Ramsey numbers by enumerating every Ramsey graph up to isomorphism.
print("R(3,3) =", ramsey_exact(3, 3), " R(3,4) =", ramsey_exact(3, 4))
print("upper bounds: R(4,4) <=", ramsey_upper(4, 4), " R_3(3) <=", multicolor_ramsey_upper(3, 3))

# Products of bounds bound intersections.
f = product_bound([vizing_bound(), vizing_bound()])
print("(w+1)^2 table:", f.table(4))

# Intersecting with rK1-free graphs costs a Ramsey number.
print("rK1 guard with r=3:", rk1_guard_bound(identity_bound(), 3).table(3))

# The recursion f_r(n) = 2 f_r(n-1) + f_{r-1}(n) from the identity.
for r in range(3):
    print(f"f_{r}:", [v for _, v in fr_recursion(identity_bound(), r).table(6)])

# The self-guarding recursion multiplies by (t+2)^(t(R-1)) * R at every step.
value = self_guard_bound([identity_bound()], 1, (3, 1))
print("self-guard f(3,1) has", len(str(value)), "digits")
