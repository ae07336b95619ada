"""Linear algebra over Z/2 on bit-packed rows.

Rows are Python integers: bit ``j`` of a row is the entry in column ``j``.
Arbitrary-precision ints give word-level XOR for free, so a row operation
costs one ``^`` regardless of width.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .complex import Cochain, FilteredComplex


@dataclass(frozen=True)
class BitMatrix:
    rows: int
    cols: int
    data: tuple = field(default=())

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        data = tuple(int(x) for x in self.data) or (0,) * self.rows
        if len(data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(data)}")
        limit = 1 << self.cols
        if any(x < 0 or x >= limit for x in data):
            raise ValueError("row has bits beyond the column count")
        object.__setattr__(self, "data", data)

    @classmethod
    def from_dense(cls, a) -> "BitMatrix":
        a = np.asarray(a, dtype=np.uint8) & 1
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        rows, cols = a.shape
        weights = [1 << j for j in range(cols)]
        data = tuple(sum(w for w, bit in zip(weights, row) if bit) for row in a.tolist())
        return cls(rows, cols, data)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for i, x in enumerate(self.data):
            j = 0
            while x:
                if x & 1:
                    out[i, j] = 1
                x >>= 1
                j += 1
        return out

    def __getitem__(self, ij) -> int:
        i, j = ij
        return (self.data[i] >> j) & 1

    def matvec(self, x: Sequence[int]) -> list[int]:
        xv = pack_bits(x)
        return [(row & xv).bit_count() & 1 for row in self.data]


def pack_bits(bits: Sequence[int]) -> int:
    v = 0
    for j, b in enumerate(bits):
        if int(b) & 1:
            v |= 1 << j
    return v


def unpack_bits(v: int, n: int) -> list[int]:
    return [(v >> j) & 1 for j in range(n)]


def _lowbit(x: int) -> int:
    return (x & -x).bit_length() - 1


def row_reduce(m: BitMatrix) -> tuple[BitMatrix, int, list[int]]:
    """Reduced row echelon form of ``m`` over Z/2.

    Returns ``(reduced, rank, pivot_columns)``; the nonzero rows of
    ``reduced`` come first, ordered by increasing pivot column.
    """
    rows = list(m.data)
    pivots: list[int] = []
    r = 0
    for col in range(m.cols):
        bit = 1 << col
        p = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= pr
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return BitMatrix(m.rows, m.cols, tuple(rows)), r, pivots


def rank(m: BitMatrix) -> int:
    return row_reduce(m)[1]


def solve(a: BitMatrix, b: Sequence[int]) -> list[int] | None:
    """A solution of ``a @ x = b`` over Z/2, or None when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if len(b) != a.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {a.rows} rows")
    n = a.cols
    aug = BitMatrix(a.rows, n + 1, tuple(row | ((int(bi) & 1) << n) for row, bi in zip(a.data, b)))
    red, rk, pivots = row_reduce(aug)
    if pivots and pivots[-1] == n:
        return None
    x = [0] * n
    for i, col in enumerate(pivots):
        x[col] = (red.data[i] >> n) & 1
    return x


class EchelonBasis:
    """Incrementally built echelon basis of a subspace of (Z/2)^N.

    Each stored vector owns its highest set bit, so :meth:`normal_form` maps
    every coset of the subspace to one canonical representative.
    """

    def __init__(self):
        self.pivots: dict[int, int] = {}
        self._mask = 0

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce_top(self, v: int) -> int:
        piv = self.pivots
        while v:
            top = v.bit_length() - 1
            w = piv.get(top)
            if w is None:
                break
            v ^= w
        return v

    def add(self, v: int) -> bool:
        """Insert ``v``; return True if it enlarged the span."""
        v = self.reduce_top(v)
        if not v:
            return False
        top = v.bit_length() - 1
        self.pivots[top] = v
        self._mask |= 1 << top
        return True

    def normal_form(self, v: int) -> int:
        piv = self.pivots
        w = v & self._mask
        while w:
            top = w.bit_length() - 1
            v ^= piv[top]
            w = v & self._mask & ((1 << top) - 1)
        return v

    def contains(self, v: int) -> bool:
        return self.normal_form(v) == 0


def cochain_vector(c: Cochain, fc: FilteredComplex) -> int:
    """Bit vector of ``c`` indexed by the per-dimension cell order of ``fc``."""
    idx = fc.dim_index
    v = 0
    for s in c.support:
        v |= 1 << idx(s)
    return v


def vector_cochain(v: int, degree: int, r: float, fc: FilteredComplex) -> Cochain:
    cells = fc.simplices(degree)
    support = []
    while v:
        j = v.bit_length() - 1
        support.append(cells[j])
        v ^= 1 << j
    return Cochain(degree, r, frozenset(support))


def coboundary_image(fc: FilteredComplex, degree: int, r: float) -> EchelonBasis:
    """Echelon basis of ``im(delta: C^{degree-1}(X^r) -> C^degree(X^r))``.

    Cached on ``fc``; the columns are the coboundaries of the
    ``(degree-1)``-cell duals, in canonical cell order.
    """
    key = ("image", degree, r)
    cached = fc._cache.get(key)
    if cached is not None:
        return cached
    basis = EchelonBasis()
    if degree >= 1:
        idx = fc.dim_index
        limit = fc.count(degree, r)
        cof = fc.cofaces
        for s in fc.simplices(degree - 1, r):
            v = 0
            for t in cof[s]:
                j = idx(t)
                if j < limit:
                    v |= 1 << j
            if v:
                basis.add(v)
    fc._cache[key] = basis
    return basis


def coboundary_matrix(fc: FilteredComplex, degree: int, r: float) -> BitMatrix:
    """Matrix of ``delta: C^{degree-1}(X^r) -> C^degree(X^r)``; rows are ``degree``-cells."""
    n_rows = fc.count(degree, r)
    n_cols = fc.count(degree - 1, r) if degree >= 1 else 0
    rows = [0] * n_rows
    if degree >= 1:
        idx = fc.dim_index
        for j, s in enumerate(fc.simplices(degree - 1, r)):
            for t in fc.cofaces[s]:
                i = idx(t)
                if i < n_rows:
                    rows[i] |= 1 << j
    return BitMatrix(n_rows, n_cols, tuple(rows))


def cohomology_rank(fc: FilteredComplex, degree: int, r: float) -> int:
    """``dim H^degree(X^r; Z/2)`` from the ranks of the two adjacent coboundaries."""
    n = fc.count(degree, r)
    rank_in = len(coboundary_image(fc, degree, r))
    rank_out = len(coboundary_image(fc, degree + 1, r))
    return n - rank_out - rank_in


def _check_pair(c1: Cochain, c2: Cochain) -> None:
    if c1.degree != c2.degree:
        raise ValueError(f"degree mismatch: {c1.degree} vs {c2.degree}")
    if c1.scale != c2.scale:
        raise ValueError(f"scale mismatch: {c1.scale} vs {c2.scale}")


def is_cohomologous(c1: Cochain, c2: Cochain, fc: FilteredComplex) -> bool:
    """True iff ``c1 + c2`` is a coboundary in ``X^r``, ``r`` the common scale."""
    _check_pair(c1, c2)
    diff = cochain_vector(c1, fc) ^ cochain_vector(c2, fc)
    if not diff:
        return True
    return coboundary_image(fc, c1.degree, c1.scale).contains(diff)


def is_cohomologous_by_solve(c1: Cochain, c2: Cochain, fc: FilteredComplex) -> bool:
    """Same test as :func:`is_cohomologous` via an explicit augmented solve."""
    _check_pair(c1, c2)
    a = coboundary_matrix(fc, c1.degree, c1.scale)
    diff = cochain_vector(c1, fc) ^ cochain_vector(c2, fc)
    return solve(a, unpack_bits(diff, a.rows)) is not None
