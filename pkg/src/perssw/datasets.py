"""Synthetic point clouds sampled from embedded manifolds."""

from __future__ import annotations

import numpy as np


def klein_bottle_embedding(u, v, R: float = 2.0, r: float = 1.0) -> np.ndarray:
    """The standard embedding of the Klein bottle in R^4.

    ``(u + 2 pi, v)`` and ``(u, -v)`` map to the same point.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    ring = R + r * np.cos(v)
    return np.stack(
        [ring * np.cos(u), ring * np.sin(u), r * np.sin(v) * np.cos(u / 2), r * np.sin(v) * np.sin(u / 2)],
        axis=-1,
    )


def _klein_area_density(v, R, r):
    # |d/du x d/dv|; the two tangent vectors are orthogonal
    return r * np.sqrt((R + r * np.cos(v)) ** 2 + (r * np.sin(v)) ** 2 / 4)


def sample_klein_bottle(n: int, R: float = 2.0, r: float = 1.0, seed: int = 0) -> np.ndarray:
    """``n`` points drawn uniformly by area from the R^4 Klein bottle."""
    rng = np.random.default_rng(seed)
    peak = r * np.sqrt((R + r) ** 2 + r**2 / 4)
    out = []
    while len(out) < n:
        u = rng.uniform(0, 2 * np.pi, size=4 * n)
        v = rng.uniform(0, 2 * np.pi, size=4 * n)
        keep = rng.uniform(0, peak, size=4 * n) < _klein_area_density(v, R, r)
        out.extend(zip(u[keep], v[keep]))
    u, v = np.array(out[:n]).T
    return klein_bottle_embedding(u, v, R, r)


def maxmin_subsample(points, n: int, start: int = 0) -> np.ndarray:
    """Greedy farthest-point subsample of ``n`` points, beginning at ``start``."""
    p = np.asarray(points, dtype=float)
    chosen = [start]
    dist = np.linalg.norm(p - p[start], axis=1)
    for _ in range(1, min(n, len(p))):
        i = int(np.argmax(dist))
        chosen.append(i)
        dist = np.minimum(dist, np.linalg.norm(p - p[i], axis=1))
    return p[chosen]


def klein_bottle_cloud(n: int = 150, R: float = 2.0, r: float = 1.0, seed: int = 0, oversample: int = 20) -> np.ndarray:
    """Evenly spread landmarks: a maxmin subsample of a dense uniform sample."""
    dense = sample_klein_bottle(n * oversample, R, r, seed)
    return maxmin_subsample(dense, n)
