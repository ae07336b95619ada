"""
When the Wu criterion breaks inside an interval
===============================================

RP^2 sits at scale 0; at scale 1 a cone over a non-contractible loop kills
the degree-1 class and leaves a sphere.  The Wu classes solved at scale 1
are all zero, which is wrong for the RP^2 at scale 0, so the report over
[0, 1] is rejected and names the bar where the check failed.
"""

import warnings

from perssw import persistent_cohomology, persistent_sw
from perssw.fixtures import rp2_coned
from perssw.persistence import TopDegreeWarning

# closed fixtures have no missing higher cells, so the top degree is exact
warnings.simplefilter("ignore", TopDegreeWarning)

fc = rp2_coned()
classes = persistent_cohomology(fc, 2)

for s, t in [(1.0, 1.0), (0.0, 0.0), (0.0, 1.0)]:
    report = persistent_sw(fc, s, t, 2, classes)
    verdict = "valid" if report.valid else f"invalid: {report.failure}"
    print(f"[{s}, {t}]  {verdict}")
