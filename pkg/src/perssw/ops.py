"""Cup products, cup-i coproducts and Steenrod squares on Z/2 cochains."""

from __future__ import annotations

import warnings
from collections import defaultdict
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from .complex import Cochain, FilteredComplex, Simplex


class CoproductTerm(NamedTuple):
    left: Simplex
    right: Simplex


def _same_scale(c1: Cochain, c2: Cochain) -> None:
    if c1.scale != c2.scale:
        raise ValueError(f"scale mismatch: {c1.scale} vs {c2.scale}")


def cup_product(c1: Cochain, c2: Cochain, fc: FilteredComplex) -> Cochain:
    """Front-face/back-face cup product; signs vanish over Z/2.

    A ``(p+q)``-simplex ``a + b[1:]`` appears once for every pair with
    ``a[-1] == b[0]``, so the support is just the set of such joins present
    at the common scale.
    """
    _same_scale(c1, c2)
    p, q = c1.degree, c2.degree
    r = c1.scale
    if p + q > fc.max_dimension:
        warnings.warn(
            f"cup product of degrees {p} and {q} exceeds complex dimension {fc.max_dimension}",
            stacklevel=2,
        )
        return Cochain.zero(p + q, r)
    by_first = defaultdict(list)
    for b in c2.support:
        by_first[b[0]].append(b)
    out = set()
    for a in c1.support:
        for b in by_first.get(a[-1], ()):
            c = a + b[1:]
            rc = fc.get_scale(c)
            if rc is not None and rc <= r:
                out.add(c)
    return Cochain(p + q, r, frozenset(out))


@lru_cache(maxsize=None)
def _coproduct_pattern(n: int, i: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Positions kept in the left/right factor for each term of ``Delta_i`` on an n-simplex."""
    terms = []
    full = range(n + 1)
    for U in combinations(full, n - i):
        drop_left = {u for pos, u in enumerate(U) if (pos + u) % 2 == 1}
        drop_right = set(U) - drop_left
        left = tuple(x for x in full if x not in drop_left)
        right = tuple(x for x in full if x not in drop_right)
        terms.append((left, right))
    return tuple(terms)


def cup_i_coproduct(s: Simplex, i: int) -> list[CoproductTerm]:
    """Terms of the cup-``i`` coproduct of ``s``, one per subset ``U`` of size ``dim(s) - i``.

    A vertex at position ``u`` in ``U`` is removed from the left factor when
    ``(index of u in U) + u`` is odd (0-based), otherwise from the right.
    """
    n = len(s) - 1
    if not 0 <= i <= n:
        raise ValueError(f"cup-{i} coproduct needs 0 <= i <= {n}")
    return [
        CoproductTerm(tuple(s[x] for x in left), tuple(s[x] for x in right))
        for left, right in _coproduct_pattern(n, i)
    ]


@lru_cache(maxsize=None)
def _square_pattern(p: int, k: int):
    # only terms whose factors are both p-dimensional contribute
    return tuple(
        (left, right)
        for left, right in _coproduct_pattern(p + k, p - k)
        if len(left) == len(right) == p + 1
    )


def steenrod_square(k: int, c: Cochain, fc: FilteredComplex) -> Cochain:
    """``Sq^k`` of a degree-``p`` cocycle via ``(c (x) c)(Delta_{p-k})``.

    ``Sq^0`` returns ``c`` itself and ``k > p`` gives the zero cochain.
    """
    p = c.degree
    r = c.scale
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return c
    if k > p or not c.support:
        return Cochain.zero(p + k, r)
    pattern = _square_pattern(p, k)
    supp = c.support
    # only (p+k)-simplices with a p-face in the support can contribute
    cof = fc.cofaces
    frontier = set(supp)
    for _ in range(k):
        nxt = set()
        for s in frontier:
            for t in cof[s]:
                if fc.scale(t) <= r:
                    nxt.add(t)
        frontier = nxt
    out = []
    for sigma in frontier:
        odd = 0
        for left, right in pattern:
            if tuple(sigma[x] for x in left) in supp and tuple(sigma[x] for x in right) in supp:
                odd ^= 1
        if odd:
            out.append(sigma)
    return Cochain(p + k, r, frozenset(out))


def cochain_sum(cochains, degree: int, r: float) -> Cochain:
    support: set = set()
    for c in cochains:
        if c.degree != degree or c.scale != r:
            raise ValueError("summands must share degree and scale")
        support ^= c.support
    return Cochain(degree, r, frozenset(support))
