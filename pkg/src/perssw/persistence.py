"""Persistent cohomology over Z/2 with representative cocycles.

The coboundary matrix is reduced column by column, visiting cells in
decreasing filtration order, so each reduced column only absorbs cells that
enter later.  The accumulated column operations of a birth cell are then a
cocycle on every complex strictly before the matching death cell, which is
exactly the representative a bar needs.  Columns of cells already known to
be deaths in the previous degree are skipped (clearing).
"""

from __future__ import annotations

import bisect
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .complex import Cochain, FilteredComplex, restrict
from .z2 import EchelonBasis, cochain_vector, coboundary_image, cohomology_rank

INF = math.inf


class TopDegreeWarning(UserWarning):
    """Cohomology requested in the top dimension of a possibly truncated complex."""


class BasisError(RuntimeError):
    """Restricted representatives failed to form a basis of cohomology."""


@dataclass(frozen=True)
class PersistentClass:
    """One bar ``[birth, death)`` of degree ``degree``.

    ``representative`` is a cocycle on ``X^anchor``, where the anchor is the
    last filtration value before ``death`` (the maximal scale for infinite
    bars).
    """

    index: int
    degree: int
    birth: float
    death: float
    representative: Cochain

    @property
    def anchor(self) -> float:
        return self.representative.scale

    @property
    def is_infinite(self) -> bool:
        return self.death == INF

    def contains(self, r: float) -> bool:
        return self.birth <= r < self.death


def persistent_cohomology(fc: FilteredComplex, max_degree: int) -> list[PersistentClass]:
    """Barcodes and representatives in degrees ``0..max_degree``.

    Zero-length bars (birth and death at the same scale) are dropped.  Bars
    are returned sorted by ``(degree, birth, death, birth cell)``.
    """
    if len(fc) == 0 or max_degree < 0:
        return []
    if max_degree >= fc.max_dimension:
        warnings.warn(
            f"H^{max_degree} requested on a complex of dimension {fc.max_dimension}; "
            "cocycle kernels in the top degree may be overestimated if the complex is truncated",
            TopDegreeWarning,
            stacklevel=2,
        )
    cells = fc.cells
    order = {s: i for i, (s, _) in enumerate(cells)}
    cof = fc.cofaces
    max_scale = fc.scales[-1]

    raw = []  # (degree, birth_idx, death_idx or None, V column)
    cleared: set[int] = set()
    for p in range(min(max_degree, fc.max_dimension) + 1):
        pivots: dict[int, int] = {}  # low coface -> owning column cell
        reduced: dict[int, int] = {}
        ops: dict[int, int] = {}
        deaths: set[int] = set()
        pcells = [order[s] for s in fc.simplices(p)]
        for i in reversed(pcells):
            if i in cleared:
                continue
            col = 0
            for t in cof[cells[i][0]]:
                col |= 1 << order[t]
            v = 1 << i
            while col:
                low = (col & -col).bit_length() - 1
                j = pivots.get(low)
                if j is None:
                    break
                col ^= reduced[j]
                v ^= ops[j]
            ops[i] = v
            if col:
                low = (col & -col).bit_length() - 1
                pivots[low] = i
                reduced[i] = col
                deaths.add(low)
                raw.append((p, i, low, v))
            else:
                raw.append((p, i, None, v))
        # cells killed here are the births' partners, never classes in degree p+1
        cleared = deaths

    # a zero column that survived clearing is an essential class
    bars = []
    for p, i, j, v in raw:
        birth = cells[i][1]
        if j is None:
            death = INF
            anchor = max_scale
        else:
            death = cells[j][1]
            if death <= birth:
                continue
            anchor = fc.scale_before(death)
        support = []
        while v:
            k = v.bit_length() - 1
            v ^= 1 << k
            s, r = cells[k]
            if r <= anchor:
                support.append(s)
        bars.append((p, birth, death, i, Cochain(p, anchor, frozenset(support))))
    bars.sort(key=lambda b: (b[0], b[1], b[2], b[3]))
    return [
        PersistentClass(index=k, degree=p, birth=b, death=d, representative=rep)
        for k, (p, b, d, _, rep) in enumerate(bars)
    ]


def betti_at(classes, degree: int, r: float) -> int:
    return sum(1 for c in classes if c.degree == degree and c.contains(r))


def restrict_to(c: Cochain, r: float, fc: FilteredComplex) -> Cochain:
    """Restrict ``c`` to ``X^r`` for any ``r`` at which ``X^r`` is a sub-complex.

    ``r`` need not be a filtration value: ``X^r`` equals ``X^f`` for the last
    filtration value ``f <= r``, and the result is labelled with ``r``.
    """
    if r >= c.scale:
        floor = fc.floor_scale(r)
        if floor is not None and floor > c.scale:
            raise ValueError(f"cannot restrict a cochain at scale {c.scale} up to {r}")
        return Cochain(c.degree, r, c.support)
    return restrict(c, r, fc)


def basis_at_scale(classes, degree: int, r: float, fc: FilteredComplex) -> list[Cochain]:
    """Representatives of the degree-``degree`` bars alive at ``r``, restricted to ``r``.

    The result is checked to be a basis of ``H^degree(X^r)``: its size must
    equal the Betti number computed from coboundary ranks, and the cocycles
    must stay independent modulo coboundaries.  Raises :class:`BasisError`
    otherwise.
    """
    alive = [c for c in classes if c.degree == degree and c.contains(r)]
    basis = [restrict_to(c.representative, r, fc) for c in alive]
    expected = cohomology_rank(fc, degree, r)
    if len(basis) != expected:
        raise BasisError(
            f"{len(basis)} bars contain scale {r} in degree {degree}, "
            f"but dim H^{degree}(X^{r}) = {expected}"
        )
    image = coboundary_image(fc, degree, r)
    residues = _independent(image, [cochain_vector(b, fc) for b in basis])
    if residues != len(basis):
        raise BasisError(
            f"restricted representatives in degree {degree} at scale {r} are dependent "
            "modulo coboundaries"
        )
    return basis


def stable_interval(classes, scales, betti) -> tuple[float, float] | None:
    """Widest ``[s, t]`` over which the Betti numbers persist as ``betti``.

    Both endpoints are taken from ``scales``; the Betti numbers in degrees
    ``0 .. len(betti) - 1`` equal ``betti`` at ``s`` and at ``t``, and every
    class alive at ``s`` survives past ``t``.  Short bars born and dying
    strictly inside are allowed.  Returns None when no scale qualifies.
    """
    target = np.asarray(betti)
    top = len(target)
    bars = [c for c in classes if c.degree < top]
    if not bars or len(scales) == 0:
        return None
    scales = np.asarray(sorted(scales), dtype=float)
    deg = np.array([c.degree for c in bars])
    birth = np.array([c.birth for c in bars])
    death = np.array([c.death for c in bars])
    counts = np.zeros((len(scales), top), dtype=int)
    for p in range(top):
        b = np.sort(birth[deg == p])
        d = np.sort(death[deg == p])
        counts[:, p] = np.searchsorted(b, scales, side="right") - np.searchsorted(d, scales, side="right")
    good = scales[(counts == target).all(axis=1)]
    best = None
    for s in good:
        alive = (birth <= s) & (death > s)
        limit = death[alive].min() if alive.any() else math.inf
        j = bisect.bisect_left(good, limit) - 1
        t = good[j]
        if best is None or t - s > best[1] - best[0]:
            best = (float(s), float(t))
    return best


def alive_classes(classes, degree: int, r: float) -> list[PersistentClass]:
    return [c for c in classes if c.degree == degree and c.contains(r)]


def _independent(image, vectors) -> int:
    span = EchelonBasis()
    for v in vectors:
        span.add(image.normal_form(v))
    return len(span)
