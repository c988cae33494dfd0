"""Weak versus strong isotropy of Veronese points.

A point is weakly isotropic when h(X, X) = 0.  Strong isotropy is decided
twice: by the identity 4 H(X) x (X x T) = h(T, X) X on a basis of T, and
by the explicit equation system in the coordinates of X.  The two
decisions must agree, and this script shows them side by side.
"""

import json

from e6quad import liegroups as lg
from e6quad import veronese as vr
from e6quad.composition import CDNum


def show(label, X):
    cert = vr.classify(X)
    keys = ("veronese", "weak", "strong", "agreement", "failed_equation")
    print(f"{label:28s}", json.dumps({k: cert.get(k) for k in keys}))


show("E1", vr.rank_one((1, 0, 0)))
show("strong fixture v v^T, v=011", vr.STRONG_FIXTURE)
show("(2,0,0; 0, 1 + i e1, 0)", vr.weak_family_member(1, CDNum.one(), CDNum.unit(1)))

# the invariance group moves the fixture around while keeping it strong
for g in lg.default_orbit_generators():
    show(f"{g}(fixture)", g(vr.STRONG_FIXTURE))

# strongly isotropic neighbours collinear with the fixture
for k in (1, 2):
    Y = vr.strong_neighbour(k)
    print(f"neighbour e{k}: strong={vr.is_strongly_isotropic(Y)}",
          f"collinear with fixture={vr.collinear(Y, vr.STRONG_FIXTURE)}")
