"""Čech filtrations of point clouds.

A simplex enters at the radius of the smallest closed ball containing its
vertices.  Candidates are cliques of the proximity graph at ``2 * max_scale``,
grown one dimension at a time; a candidate is only considered when all of
its facets were accepted, since enclosing radii never shrink under adding
points.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .complex import FilteredComplex

_TOL = 1e-12


def as_point_cloud(points) -> np.ndarray:
    p = np.asarray(points, dtype=np.float64)
    if p.size == 0:
        return p.reshape(0, p.shape[1] if p.ndim == 2 else 1)
    if p.ndim != 2 or p.shape[1] < 1:
        raise ValueError(f"expected an (N, D) array of points, got shape {p.shape}")
    if not np.all(np.isfinite(p)):
        raise ValueError("point cloud contains non-finite coordinates")
    return p


def _circumball(support: list[np.ndarray]) -> tuple[np.ndarray, float]:
    """Smallest ball with every support point on its boundary, centred in their affine hull."""
    p0 = support[0]
    if len(support) == 1:
        return p0, 0.0
    diffs = np.array([q - p0 for q in support[1:]])
    gram = 2.0 * diffs @ diffs.T
    rhs = np.einsum("ij,ij->i", diffs, diffs)
    alpha = np.linalg.lstsq(gram, rhs, rcond=None)[0]
    center = p0 + alpha @ diffs
    radius = max(float(np.linalg.norm(q - center)) for q in support)
    return center, radius


def _welzl(points: list[np.ndarray], boundary: list[np.ndarray], dim: int):
    if not points or len(boundary) == dim + 1:
        if not boundary:
            return None, -1.0
        return _circumball(boundary)
    p = points[-1]
    center, radius = _welzl(points[:-1], boundary, dim)
    if center is not None and np.linalg.norm(p - center) <= radius * (1 + 1e-9) + _TOL:
        return center, radius
    return _welzl(points[:-1], boundary + [p], dim)


def meb_radius(points) -> float:
    """Radius of the smallest enclosing ball of a handful of points."""
    pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
    if len(pts) == 0:
        raise ValueError("need at least one point")
    if len(pts) == 1:
        return 0.0
    if len(pts) == 2:
        return float(np.linalg.norm(pts[0] - pts[1])) / 2
    _, radius = _welzl(list(pts), [], pts.shape[1])
    return radius


def _neighbour_masks(p: np.ndarray, threshold: float) -> list[int]:
    n = len(p)
    masks = [0] * n
    sq = np.einsum("ij,ij->i", p, p)
    d2 = np.maximum(sq[:, None] + sq[None, :] - 2.0 * p @ p.T, 0.0)
    close = d2 <= threshold * threshold * (1 + 1e-12)
    for i in range(n):
        m = 0
        for j in np.flatnonzero(close[i]):
            if j != i:
                m |= 1 << int(j)
        masks[i] = m
    return masks


def cech_filtration(points, max_dim: int, max_scale: float, threads: int = 1) -> FilteredComplex:
    """Čech filtration up to dimension ``max_dim`` and radius ``max_scale``."""
    if max_dim < 1:
        raise ValueError("max_dim must be at least 1")
    if max_scale <= 0:
        raise ValueError("max_scale must be positive")
    p = as_point_cloud(points)
    n = len(p)
    if n == 0:
        return FilteredComplex([])
    cells: dict[tuple, float] = {(i,): 0.0 for i in range(n)}
    nb = _neighbour_masks(p, 2 * max_scale)

    # edges: the enclosing radius is half the length
    level = []
    for i in range(n):
        m = nb[i] >> (i + 1)
        j = i + 1
        while m:
            if m & 1:
                level.append((i, j))
            m >>= 1
            j += 1
    radii = [float(np.linalg.norm(p[a] - p[b])) / 2 for a, b in level]
    accepted = [(s, r) for s, r in zip(level, radii) if r <= max_scale]
    cells.update(accepted)

    for _ in range(2, max_dim + 1):
        candidates = []
        for s, _r in accepted:
            common = ~0
            for v in s:
                common &= nb[v]
            common >>= s[-1] + 1
            w = s[-1] + 1
            while common:
                if common & 1:
                    c = s + (w,)
                    if all(c[:k] + c[k + 1:] in cells for k in range(len(c) - 1)):
                        candidates.append(c)
                common >>= 1
                w += 1
        if not candidates:
            break
        radii = _radii(p, candidates, threads)
        accepted = []
        for c, r in zip(candidates, radii):
            if r > max_scale:
                continue
            # keep the filtration monotone under floating-point noise
            r = max([r] + [cells[c[:k] + c[k + 1:]] for k in range(len(c))])
            accepted.append((c, r))
        cells.update(accepted)
    return FilteredComplex(cells.items(), validate=False)


def _radii(p: np.ndarray, simplices: list[tuple], threads: int) -> list[float]:
    def work(chunk):
        return [meb_radius(p[list(s)]) for s in chunk]

    if threads <= 1 or len(simplices) < 256:
        return work(simplices)
    size = -(-len(simplices) // (threads * 4))
    chunks = [simplices[i:i + size] for i in range(0, len(simplices), size)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return [r for part in pool.map(work, chunks) for r in part]
