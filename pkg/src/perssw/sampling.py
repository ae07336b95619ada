"""Sample-size bound for recovering a manifold's topology from a Čech complex."""

from __future__ import annotations

import math


def ball_volume(n: int, r: float) -> float:
    """Volume of the Euclidean ``n``-ball of radius ``r``."""
    return r**n * math.pi ** (n / 2) / math.gamma(n / 2 + 1)


def nsw_sample_bound(tau: float, vol: float, n: int, eps: float, delta: float) -> float:
    """Number of uniform samples that suffices, with probability ``1 - delta``.

    ``tau`` bounds the reach from below, ``vol`` the ``n``-volume from above,
    and ``eps`` is the ball radius, which must satisfy ``eps < tau / 2``.
    """
    if tau <= 0 or vol <= 0 or eps <= 0:
        raise ValueError("tau, vol and eps must be positive")
    if n < 1:
        raise ValueError("dimension n must be at least 1")
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    if eps >= tau / 2:
        raise ValueError(f"the bound requires eps < tau/2, got eps={eps}, tau={tau}")
    # covering counts for balls of radius eps/4 and eps/8, corrected for curvature
    coarse = vol / (math.cos(math.asin(eps / (8 * tau))) ** n * ball_volume(n, eps / 4))
    fine = vol / (math.cos(math.asin(eps / (16 * tau))) ** n * ball_volume(n, eps / 8))
    return coarse * (math.log(fine) + math.log(1 / delta))
