"""
How many samples recover a manifold's classes?
==============================================

The bound depends on the reach ``tau``, the volume, the dimension, the
radius ``eps`` and the failure probability ``delta``.  Here: a flat torus
of volume 4 pi^2 and reach 1.
"""

import math

from perssw import nsw_sample_bound

vol = 4 * math.pi**2
print(" eps   delta     samples")
for eps in (0.05, 0.1, 0.25, 0.45):
    for delta in (0.1, 0.01):
        n = nsw_sample_bound(tau=1.0, vol=vol, n=2, eps=eps, delta=delta)
        print(f"{eps:5.2f} {delta:6.2f} {math.ceil(n):11d}")

# eps must stay below tau / 2
try:
    nsw_sample_bound(1.0, vol, 2, 0.5, 0.01)
except ValueError as err:
    print("rejected:", err)
