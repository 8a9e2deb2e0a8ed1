"""
Linear programming in exact rational arithmetic
===============================================

"""

from fractions import Fraction

from symcone.exactlin import LexVal, lp_solve

# maximise x + y over the triangle  x >= 0, y >= 0, 3x + 7y <= 21;
# constraints are written a.x >= b, so the roof flips sign
res = lp_solve((1, 1), [((1, 0), 0), ((0, 1), 0), ((-3, -7), -21)])
print(res.status, "at", res.certificate, "value", res.value)
assert res.value == 7          # the corner (7, 0), exactly, no rounding

# Fractions pass through untouched: shrink the roof to 21/5
res = lp_solve((1, 1), [((1, 0), 0), ((0, 1), 0),
                        ((-3, -7), Fraction(-21, 5))])
print(res.status, "at", res.certificate, "value", res.value)
assert res.value == Fraction(7, 5)

# drop the roof and the program escapes along a ray
res = lp_solve((1, 1), [((1, 0), 0), ((0, 1), 0)])
print(res.status, "along", res.certificate)

# contradictory bounds give Farkas multipliers instead
res = lp_solve((1, 0), [((1, 0), 3), ((-1, 0), -2)])
print(res.status, "with multipliers", res.certificate)

# right-hand sides may be symbolic: b_i - eps_i with eps_1 >> eps_2 >> 0
# breaks the tie that plain arithmetic cannot see
tie = lp_solve((0, -1), [((0, 1), LexVal((0, -1, 0))),
                         ((1, 1), LexVal((0, 0, -1))),
                         ((-1, 0), -5)])
print("max of -y comes back symbolic, eps_1 exactly:", tie.value.parts)
assert tie.value.parts == (0, 1, 0)
