"""A short tour of the Cayley-Dickson tower over Q and Q(i).

Run: python demos/octonions.py
"""

from e6quad.composition import CDNum, bracket, cd_conj, cd_mul, invert, norm_form
from e6quad.scalars import I
from e6quad.verify import find_nonassociative_units, find_noncommutative_units

e = CDNum.unit

# Levels 1 and 2 are the complex numbers and the quaternions.
i, j = e(1, 2), e(2, 2)
print("quaternions: ij =", cd_mul(i, j), " ji =", cd_mul(j, i))

# Level 3 loses associativity but keeps the composition law.
u, v, w = find_nonassociative_units(3)
print("(uv)w =", cd_mul(cd_mul(u, v), w), " u(vw) =", cd_mul(u, cd_mul(v, w)))
print("a non-commuting pair of octonion units:", find_noncommutative_units(3))

x = CDNum([1, 2, 0, -1, 3, 0, 0, 5], 3)
y = CDNum([0, 1, 1, 0, 0, -2, 1, 0], 3)
print("N(xy) =", norm_form(cd_mul(x, y)), "=", norm_form(x), "*", norm_form(y))
print("x * x^-1 =", cd_mul(x, invert(x)))

# The bracket moves a factor across as its conjugate, on the right.
z = CDNum([2, 0, 1, 0, 0, 1, 0, -1], 3)
print("<xy|z> =", bracket(cd_mul(x, y), z),
      " <x|z conj(y)> =", bracket(x, cd_mul(z, cd_conj(y))),
      " <x|conj(y) z> =", bracket(x, cd_mul(cd_conj(y), z)))

# Over Q(i) the norm is isotropic: 1 + i e1 is a null octonion.
null = e(0, scale=1) + e(1, scale=I)
print("N(1 + i e1) =", norm_form(null))
try:
    invert(null)
except ArithmeticError as exc:
    print("invert(1 + i e1):", exc)
