"""
Cup products and Steenrod squares on cochains
=============================================

The projective plane has a single degree-1 class ``a`` whose square is the
top class.  Sq^1 on degree 1 is the cup square, so it must agree.
"""

import warnings

from perssw import Cochain, basis_at_scale, cup_product, is_cohomologous, persistent_cohomology, steenrod_square
from perssw.fixtures import cp2, rp2
from perssw.persistence import TopDegreeWarning

# closed fixtures have no missing higher cells, so the top degree is exact
warnings.simplefilter("ignore", TopDegreeWarning)

fc = rp2()
classes = persistent_cohomology(fc, 2)
(a,) = basis_at_scale(classes, 1, 2.0, fc)
print("a is supported on", len(a), "edges")

# cup square and Sq^1 live on triangles
aa = cup_product(a, a, fc)
sq = steenrod_square(1, a, fc)
zero = Cochain.zero(2, 2.0)
print("a^2 nonzero:", not is_cohomologous(aa, zero, fc))
print("Sq^1 a ~ a^2:", is_cohomologous(sq, aa, fc))

# The same check one dimension up: on CP^2, Sq^2 of the degree-2 generator
# is its square, the fundamental class.
fc = cp2()
(x,) = basis_at_scale(persistent_cohomology(fc, 4), 2, 4.0, fc)
print("CP^2  Sq^2 x ~ x^2:", is_cohomologous(steenrod_square(2, x, fc), cup_product(x, x, fc), fc))
