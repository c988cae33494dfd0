"""Hermitian 3x3 octonion matrices: Jordan product, determinant, cross product."""

import random

from e6quad import jordan as jd
from e6quad.jordan import Herm3

rng = random.Random(1)
X, Y = jd.random_herm3(rng, "Q"), jd.random_herm3(rng, "Q")

print("X =", X)
print("det X (closed form) =", jd.det(X))
print("det X (trace form)  =", jd.det_trace(X))
print("(X, X, X)           =", jd.trilinear(X, X, X))

X2 = jd.jordan_mul(X, X)
lhs = jd.jordan_mul(jd.jordan_mul(X2, Y), X)
rhs = jd.jordan_mul(X2, jd.jordan_mul(Y, X))
print("Jordan identity holds:", lhs == rhs)

S = jd.cross_square(X)
print("adjoint identity (X#)# = det(X) X:", jd.cross(S, S) == X.scale(jd.det(X)))

E1, E2 = Herm3.E(1), Herm3.E(2)
print("E1 x E2 =", jd.cross(E1, E2))
print("E1 o E2 is zero:", jd.jordan_mul(E1, E2).is_zero())
