"""
Stiefel-Whitney classes of small triangulated manifolds
=======================================================

Every simplex enters at the scale of its dimension, so the whole
triangulation is present from the top scale on.  We read off which classes
are nonzero there.
"""

import warnings

from perssw import persistent_cohomology, sw_at_scale
from perssw.fixtures import cp2, klein9, rp2, sphere2, torus7

warnings.simplefilter("ignore")

cases = [("sphere", sphere2, 2), ("torus", torus7, 2), ("Klein bottle", klein9, 2),
         ("projective plane", rp2, 2), ("complex projective plane", cp2, 4)]

for label, build, n in cases:
    fc = build()
    top = fc.scales[-1]
    classes = persistent_cohomology(fc, n)
    report = sw_at_scale(fc, top, n, classes)
    nonzero = [f"w{k}" for k, flag in sorted(report.nontrivial.items()) if flag]
    print(f"{label:26s} {len(fc):4d} cells  nonzero: {', '.join(nonzero) or '-'}")

# The Klein bottle and RP^2 are not orientable, which shows up as w1.  RP^2 and
# CP^2 also carry w2; the torus and the sphere carry nothing.
