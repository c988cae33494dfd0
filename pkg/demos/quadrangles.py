"""The classical quadrangle of (C^6, h6) next to samples of the E6 quadrangle."""

import random

from e6quad import geometry as geo
from e6quad import plucker as pl
from e6quad.verify import e6_sample

print("Witt index of h6:", pl.witt_index("h6"), " of h2 on the exterior square:", pl.witt_index("h2"))

# a totally isotropic plane of C^6 and its Plücker ray
rng = random.Random(3)
L = geo.random_line(rng)
u = pl.plucker_embed(L)
print("line strongly isotropic in the exterior square:", pl.is_strongly_isotropic_biv(u))
print("round trip recovers the plane:", pl.inverse_plucker(u) == L)

# the unique projection of a point onto a line
p, M = geo.random_nonincident_pair(rng)
r = geo.classical_projection(p, M)
print("projection certificate:", r.certificate)

# axioms on finite samples
print("W(2):", geo.check_gq_axioms(geo.w2_fixture()).to_json()["verdict"])
grid = geo.check_gq_axioms(geo.grid_fixture())
print("3x3 grid thick:", grid.thick)

S = e6_sample(depth=2)
audit = geo.check_gq_axioms(S.incidence, sample_local=True)
print(f"E6 sample: {len(S.points)} points, {len(S.incidence.lines)} lines,",
      f"{len(audit.digons)} digons, {len(audit.triangles)} triangles")
