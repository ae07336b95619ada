"""Small triangulated manifolds as dimension-based filtrations.

Every simplex enters at the scale equal to its dimension, so the full
triangulation is present from scale ``dim`` on.
"""

from __future__ import annotations

from itertools import combinations

from .complex import FilteredComplex


def closure(facets) -> set[tuple]:
    cells = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            cells.update(combinations(f, k))
    return cells


def dimension_filtration(facets) -> FilteredComplex:
    return FilteredComplex((s, len(s) - 1) for s in closure(facets))


def sphere2():
    """Boundary of the tetrahedron."""
    return dimension_filtration(combinations(range(4), 3))


def circle():
    """Three vertices at scale 0 and three edges at scale 1."""
    return dimension_filtration(combinations(range(3), 2))


def torus7():
    """Moebius' 7-vertex torus."""
    facets = []
    for i in range(7):
        facets.append((i, (i + 1) % 7, (i + 3) % 7))
        facets.append((i, (i + 2) % 7, (i + 3) % 7))
    return dimension_filtration(facets)


RP2_FACETS = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
]


def rp2():
    """The 6-vertex real projective plane (half an icosahedron)."""
    return dimension_filtration(RP2_FACETS)


def _grid_facets(m: int, twisted: bool):
    def vid(i, j):
        if j >= m:
            j -= m
            if twisted:
                i = -i
        return (i % m) * m + j % m

    facets = set()
    for i in range(m):
        for j in range(m):
            a, b, c, d = vid(i, j), vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1)
            facets.add(tuple(sorted((a, b, d))))
            facets.add(tuple(sorted((a, c, d))))
    return sorted(facets)


def torus9():
    """3x3 grid torus."""
    return dimension_filtration(_grid_facets(3, False))


def klein9():
    """3x3 grid with one side glued with a flip: a 9-vertex Klein bottle."""
    return dimension_filtration(_grid_facets(3, True))


CP2_FACETS = [
    (1, 2, 3, 4, 5), (1, 2, 3, 4, 7), (1, 2, 3, 5, 8), (1, 2, 3, 7, 8), (1, 2, 4, 5, 6),
    (1, 2, 4, 6, 7), (1, 2, 5, 6, 8), (1, 2, 6, 7, 9), (1, 2, 6, 8, 9), (1, 2, 7, 8, 9),
    (1, 3, 4, 5, 9), (1, 3, 4, 7, 8), (1, 3, 4, 8, 9), (1, 3, 5, 6, 8), (1, 3, 5, 6, 9),
    (1, 3, 6, 8, 9), (1, 4, 5, 6, 7), (1, 4, 5, 7, 9), (1, 4, 7, 8, 9), (1, 5, 6, 7, 9),
    (2, 3, 4, 5, 9), (2, 3, 4, 6, 7), (2, 3, 4, 6, 9), (2, 3, 5, 7, 8), (2, 3, 5, 7, 9),
    (2, 3, 6, 7, 9), (2, 4, 5, 6, 8), (2, 4, 5, 8, 9), (2, 4, 6, 8, 9), (2, 5, 7, 8, 9),
    (3, 4, 6, 7, 8), (3, 4, 6, 8, 9), (3, 5, 6, 7, 8), (3, 5, 6, 7, 9), (4, 5, 6, 7, 8),
    (4, 5, 7, 8, 9),
]


def cp2():
    """Kuehnel's 9-vertex complex projective plane, relabelled to vertices 0..8."""
    return dimension_filtration([tuple(v - 1 for v in f) for f in CP2_FACETS])


def rp2_coned():
    """RP^2 at scale 0; at scale 1 a cone over a non-contractible 3-cycle.

    The cone kills the degree-1 class, so the result is a sphere from scale 1
    on, while the top class survives.  Useful for a filtration whose Wu class
    at the top scale fails the criterion on an earlier bar.
    """
    base = closure(RP2_FACETS)
    cells = {s: 0.0 for s in base}
    apex = 6
    loop = [(0, 1), (1, 3), (0, 3)]
    cells[(apex,)] = 1.0
    for e in loop:
        for v in e:
            cells[(v, apex)] = 1.0
        cells[e + (apex,)] = 1.0
    return FilteredComplex(cells.items())


def suspension(facets, top: int | None = None):
    """Facets of the suspension: every facet joined with each of two new apices."""
    facets = [tuple(sorted(f)) for f in facets]
    top = max(v for f in facets for v in f) if top is None else top
    north, south = top + 1, top + 2
    return [f + (north,) for f in facets] + [f + (south,) for f in facets]


def suspended_rp2():
    """Suspension of RP^2: Sq^1 is nonzero from degree 2 to 3 while H^1 vanishes."""
    return dimension_filtration(suspension(RP2_FACETS))


def disjoint_union(*fcs: FilteredComplex) -> FilteredComplex:
    """Vertex ids of later complexes are shifted past those of earlier ones."""
    cells = []
    offset = 0
    for fc in fcs:
        top = -1
        for s, r in fc:
            cells.append((tuple(v + offset for v in s), r))
            top = max(top, s[-1])
        offset += top + 1
    return FilteredComplex(cells)


def surfaces():
    """RP^2, the 7-vertex torus and the Klein bottle side by side."""
    return disjoint_union(rp2(), torus7(), klein9())


FIXTURES = {
    "sphere2": (sphere2, 2),
    "torus7": (torus7, 2),
    "torus9": (torus9, 2),
    "klein9": (klein9, 2),
    "rp2": (rp2, 2),
    "cp2": (cp2, 4),
    "surfaces": (surfaces, 2),
}
