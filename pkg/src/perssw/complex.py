"""Filtered simplicial complexes and Z/2 cochains.

Simplices are plain tuples of strictly increasing non-negative vertex ids.
A :class:`FilteredComplex` is immutable once built; sub-complexes and
cochains reference it by scale rather than copying cells.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field, replace
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Simplex = tuple


class ComplexError(ValueError):
    """Raised when a complex is not face-closed, not monotone or malformed."""


def make_simplex(vertices: Iterable[int]) -> Simplex:
    s = tuple(int(v) for v in vertices)
    if not s:
        raise ComplexError("empty simplex")
    if any(v < 0 for v in s):
        raise ComplexError(f"negative vertex id in {s}")
    if any(a >= b for a, b in zip(s, s[1:])):
        raise ComplexError(f"vertices of {s} are not strictly increasing")
    return s


def faces(simplex: Simplex) -> Iterator[Simplex]:
    """Codimension-one faces of ``simplex``."""
    if len(simplex) < 2:
        return iter(())
    return combinations(simplex, len(simplex) - 1)


def _cell_key(cell):
    s, r = cell
    return (r, len(s), s)


class FilteredComplex:
    """A face-closed simplicial complex with a monotone scale per cell.

    Cells are kept in the canonical order ``(scale, dimension, vertices)``.
    Construction validates face closure and monotonicity and raises
    :class:`ComplexError` naming the first offending simplex.
    """

    def __init__(self, cells: Iterable[tuple[Sequence[int], float]], *, validate: bool = True):
        items = []
        for s, r in cells:
            r = float(r)
            if validate:
                s = make_simplex(s)
                if not math.isfinite(r) or r < 0:
                    raise ComplexError(f"invalid scale {r!r} for simplex {s}")
            items.append((tuple(s), r))
        items.sort(key=_cell_key)
        self._cells: tuple[tuple[Simplex, float], ...] = tuple(items)
        self._scale = {}
        for s, r in self._cells:
            if s in self._scale:
                raise ComplexError(f"duplicate simplex {s}")
            self._scale[s] = r
        if validate:
            self._validate()
        self._cache: dict = {}

    def _validate(self) -> None:
        for s, r in self._cells:
            for f in faces(s):
                rf = self._scale.get(f)
                if rf is None:
                    raise ComplexError(f"simplex {s} is missing its face {f}")
                if rf > r:
                    raise ComplexError(
                        f"simplex {s} at scale {r} precedes its face {f} at scale {rf}"
                    )

    @classmethod
    def _trusted(cls, cells) -> "FilteredComplex":
        # cells already sorted and validated
        obj = cls.__new__(cls)
        obj._cells = tuple(cells)
        obj._scale = dict(obj._cells)
        obj._cache = {}
        return obj

    # -- container protocol ------------------------------------------------
    def __len__(self) -> int:
        return len(self._cells)

    def __iter__(self) -> Iterator[tuple[Simplex, float]]:
        return iter(self._cells)

    def __contains__(self, simplex) -> bool:
        return tuple(simplex) in self._scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, FilteredComplex):
            return NotImplemented
        return self._cells == other._cells

    def __hash__(self) -> int:
        return hash(self._cells)

    def __repr__(self) -> str:
        counts = [len(self.simplices(d)) for d in range(self.max_dimension + 1)]
        return f"FilteredComplex(cells={len(self)}, f_vector={counts})"

    # -- queries -----------------------------------------------------------
    @property
    def cells(self) -> tuple[tuple[Simplex, float], ...]:
        return self._cells

    @cached_property
    def max_dimension(self) -> int:
        return max((len(s) - 1 for s, _ in self._cells), default=-1)

    def scale(self, simplex) -> float:
        return self._scale[tuple(simplex)]

    def get_scale(self, simplex, default=None):
        return self._scale.get(tuple(simplex), default)

    @cached_property
    def scales(self) -> tuple[float, ...]:
        """Distinct filtration values in increasing order."""
        return tuple(sorted({r for _, r in self._cells}))

    @cached_property
    def _by_dim(self) -> list[list[Simplex]]:
        out: list[list[Simplex]] = [[] for _ in range(self.max_dimension + 1)]
        for s, _ in self._cells:
            out[len(s) - 1].append(s)
        return out

    @cached_property
    def _by_dim_scales(self) -> list[list[float]]:
        return [[self._scale[s] for s in cells] for cells in self._by_dim]

    @cached_property
    def _dim_index(self) -> dict[Simplex, int]:
        return {s: i for cells in self._by_dim for i, s in enumerate(cells)}

    def simplices(self, dim: int, r: float | None = None) -> list[Simplex]:
        """``dim``-simplices present at scale ``r`` (all scales if ``r`` is None).

        Within a dimension cells are ordered by scale, so each sub-scale set is
        a prefix of the full list.
        """
        if dim < 0 or dim > self.max_dimension:
            return []
        cells = self._by_dim[dim]
        if r is None:
            return cells
        return cells[: self.count(dim, r)]

    def count(self, dim: int, r: float | None = None) -> int:
        if dim < 0 or dim > self.max_dimension:
            return 0
        if r is None:
            return len(self._by_dim[dim])
        return bisect.bisect_right(self._by_dim_scales[dim], r)

    def dim_index(self, simplex) -> int:
        """Position of ``simplex`` among the cells of its dimension."""
        return self._dim_index[tuple(simplex)]

    @cached_property
    def cofaces(self) -> dict[Simplex, list[Simplex]]:
        out: dict[Simplex, list[Simplex]] = {s: [] for s, _ in self._cells}
        for s, _ in self._cells:
            for f in faces(s):
                out[f].append(s)
        return out

    def floor_scale(self, r: float) -> float | None:
        """Largest filtration value ``<= r``; None if ``r`` precedes every cell."""
        i = bisect.bisect_right(self.scales, r)
        return self.scales[i - 1] if i else None

    def scale_before(self, r: float) -> float | None:
        """Largest filtration value strictly below ``r``."""
        i = bisect.bisect_left(self.scales, r)
        return self.scales[i - 1] if i else None


def sub_complex(fc: FilteredComplex, r: float) -> FilteredComplex:
    """Cells of ``fc`` with scale at most ``r``."""
    if r < 0:
        raise ValueError(f"scale must be non-negative, got {r}")
    cells = fc.cells
    n = bisect.bisect_right([c[1] for c in cells], r)
    return FilteredComplex._trusted(cells[:n])


@dataclass(frozen=True)
class Cochain:
    """A Z/2 cochain: the set of ``degree``-simplices on which it is 1.

    ``scale`` names the complex ``X^scale`` the cochain lives on.
    """

    degree: int
    scale: float
    support: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.support, frozenset):
            object.__setattr__(self, "support", frozenset(tuple(s) for s in self.support))

    def __add__(self, other: "Cochain") -> "Cochain":
        if self.degree != other.degree or self.scale != other.scale:
            raise ValueError(
                f"cannot add cochains of degree/scale {self.degree}/{self.scale} "
                f"and {other.degree}/{other.scale}"
            )
        return replace(self, support=self.support ^ other.support)

    def __bool__(self) -> bool:
        return bool(self.support)

    def __len__(self) -> int:
        return len(self.support)

    def sorted_support(self) -> list[Simplex]:
        return sorted(self.support)

    @classmethod
    def zero(cls, degree: int, scale: float) -> "Cochain":
        return cls(degree, scale, frozenset())


def unit_cochain(fc: FilteredComplex, r: float) -> Cochain:
    """Sum of all vertex duals at scale ``r``."""
    return Cochain(0, r, frozenset(fc.simplices(0, r)))


def check_cochain(c: Cochain, fc: FilteredComplex) -> None:
    for s in c.support:
        rs = fc.get_scale(s)
        if rs is None or len(s) - 1 != c.degree or rs > c.scale:
            raise ValueError(f"simplex {s} is not a {c.degree}-cell of X^{c.scale}")


def restrict(c: Cochain, r: float, fc: FilteredComplex) -> Cochain:
    """Pull ``c`` back along the inclusion ``X^r -> X^{c.scale}``."""
    if r > c.scale:
        raise ValueError(f"cannot restrict a cochain at scale {c.scale} up to {r}")
    if r == c.scale:
        return c
    support = frozenset(s for s in c.support if fc.scale(s) <= r)
    return Cochain(c.degree, r, support)


def coboundary(c: Cochain, fc: FilteredComplex) -> Cochain:
    """Z/2 coboundary of ``c`` inside ``X^{c.scale}``."""
    out: set = set()
    cof = fc.cofaces
    r = c.scale
    for s in c.support:
        for t in cof[s]:
            if fc.scale(t) <= r:
                if t in out:
                    out.remove(t)
                else:
                    out.add(t)
    return Cochain(c.degree + 1, r, frozenset(out))


def is_cocycle(c: Cochain, fc: FilteredComplex) -> bool:
    return not coboundary(c, fc).support
