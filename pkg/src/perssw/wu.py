"""Wu classes and Stiefel-Whitney classes of type n.

The Wu criterion ``v ⌣ x ~ Sq^k(x)`` is linear in ``v``.  Writing
``v = sum_j lam_j b_j`` over a cohomology basis and reducing every product
to its normal form modulo coboundaries turns the search for ``v`` into one
Z/2 linear system per degree; the class exists and is unique exactly when
that system has a single solution.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .complex import Cochain, FilteredComplex, restrict, unit_cochain
from .ops import cochain_sum, cup_product, steenrod_square
from .persistence import (
    alive_classes,
    basis_at_scale,
    betti_at,
    persistent_cohomology,
)
from .z2 import BitMatrix, coboundary_image, cochain_vector, is_cohomologous, row_reduce, solve

log = logging.getLogger(__name__)

UNIQUE, MISSING, AMBIGUOUS = "unique", "missing", "ambiguous"


@dataclass(frozen=True)
class WuClass:
    n: int
    k: int
    representative: Cochain
    unique: bool = True
    bars: tuple[int, ...] = ()  # bars whose representatives sum to this class


@dataclass(frozen=True)
class EndpointCheck:
    bar: int
    degree: int
    k: int
    endpoint: float
    passed: bool


@dataclass
class SWReport:
    n: int
    interval: tuple[float, float]
    wu: dict[int, WuClass] = field(default_factory=dict)
    sw: dict[int, Cochain] = field(default_factory=dict)
    nontrivial: dict[int, bool] = field(default_factory=dict)
    constituents: dict[int, tuple[int, ...]] = field(default_factory=dict)
    endpoint_checks: list[EndpointCheck] = field(default_factory=list)
    betti_changes: dict[int, bool] = field(default_factory=dict)
    valid: bool = False
    failure: str | None = None

    @property
    def scale(self) -> float:
        return self.interval[1]


def _classes_for(fc: FilteredComplex, n: int, classes):
    if classes is None:
        classes = persistent_cohomology(fc, min(n, fc.max_dimension))
    return classes


def _solve_combination(columns: list[int], target: int):
    """Solve ``sum_j lam_j columns[j] = target`` over Z/2.

    Only bit positions touched by some vector become equations.  Returns
    ``(solution or None, rank)``.
    """
    m = len(columns)
    touched = target
    for c in columns:
        touched |= c
    rows, rhs = [], []
    while touched:
        pos = touched.bit_length() - 1
        touched ^= 1 << pos
        row = 0
        for j, c in enumerate(columns):
            if (c >> pos) & 1:
                row |= 1 << j
        rows.append(row)
        rhs.append((target >> pos) & 1)
    a = BitMatrix(len(rows), m, tuple(rows))
    return solve(a, rhs), row_reduce(a)[1]


def solve_wu(fc: FilteredComplex, r: float, n: int, k: int, classes=None):
    """Return ``(status, WuClass or None)`` for the ``k``-th Wu class of type ``n`` at ``r``.

    ``status`` is ``"unique"``, ``"missing"`` (criterion unsatisfiable) or
    ``"ambiguous"`` (several classes satisfy it).
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if k == 0:
        return UNIQUE, WuClass(n, 0, unit_cochain(fc, r))
    classes = _classes_for(fc, n, classes)
    bars = alive_classes(classes, k, r)
    b = basis_at_scale(classes, k, r, fc)
    x = basis_at_scale(classes, n - k, r, fc)
    image = coboundary_image(fc, n, r)
    nf = lambda c: image.normal_form(cochain_vector(c, fc))  # noqa: E731

    # stack the per-x_i systems into one: block i lives at bit offset i * width
    width = fc.count(n, r)
    columns = [0] * len(b)
    target = 0
    for i, xi in enumerate(x):
        shift = i * width
        target |= nf(steenrod_square(k, xi, fc)) << shift
        for j, bj in enumerate(b):
            columns[j] |= nf(cup_product(bj, xi, fc)) << shift
    lam, rk = _solve_combination(columns, target)
    if lam is None:
        return MISSING, None
    if rk < len(b):
        return AMBIGUOUS, None
    chosen = [bj for bj, l in zip(b, lam) if l]
    rep = cochain_sum(chosen, k, r)
    used = tuple(bar.index for bar, l in zip(bars, lam) if l)
    return UNIQUE, WuClass(n, k, rep, True, used)


def wu_class(fc: FilteredComplex, r: float, n: int, k: int, classes=None) -> WuClass | None:
    """The unique ``k``-th Wu class of type ``n`` at scale ``r``, or None."""
    return solve_wu(fc, r, n, k, classes)[1]


def express_in_basis(c: Cochain, classes, fc: FilteredComplex) -> tuple[int, ...]:
    """Indices of the bars alive at ``c.scale`` whose representatives sum to ``[c]``."""
    bars = alive_classes(classes, c.degree, c.scale)
    basis = basis_at_scale(classes, c.degree, c.scale, fc)
    image = coboundary_image(fc, c.degree, c.scale)
    columns = [image.normal_form(cochain_vector(bj, fc)) for bj in basis]
    lam, _ = _solve_combination(columns, image.normal_form(cochain_vector(c, fc)))
    if lam is None:
        raise ValueError("cochain is not a combination of the basis cocycles")
    return tuple(bar.index for bar, l in zip(bars, lam) if l)


def _wu_classes(fc, r, n, classes, report: SWReport) -> bool:
    for k in range(n + 1):
        status, wu = solve_wu(fc, r, n, k, classes)
        if status != UNIQUE:
            what = "does not exist" if status == MISSING else "is not unique"
            report.failure = f"Wu class v_({k},{n}) at scale {r} {what}"
            log.info(report.failure)
            return False
        report.wu[k] = wu
    return True


def _sw_from_wu(fc, r, n, classes, report: SWReport) -> None:
    zero = {}
    for k in range(1, n + 1):
        terms = [steenrod_square(k - j, report.wu[j].representative, fc) for j in range(k + 1)]
        w = cochain_sum(terms, k, r)
        report.sw[k] = w
        zero.setdefault(k, Cochain.zero(k, r))
        report.nontrivial[k] = not is_cohomologous(w, zero[k], fc)
        report.constituents[k] = express_in_basis(w, classes, fc) if report.nontrivial[k] else ()


def sw_at_scale(fc: FilteredComplex, r: float, n: int, classes=None) -> SWReport:
    """Wu and Stiefel-Whitney classes of type ``n`` on ``X^r``."""
    if n < 1:
        raise ValueError("type n must be at least 1")
    classes = _classes_for(fc, n, classes)
    report = SWReport(n=n, interval=(r, r), betti_changes={k: False for k in range(n + 1)})
    if _wu_classes(fc, r, n, classes, report):
        _sw_from_wu(fc, r, n, classes, report)
        report.valid = True
    return report


def _endpoint_check(fc, bar, wu: WuClass) -> EndpointCheck:
    tl = bar.anchor
    v = restrict(wu.representative, tl, fc)
    x = bar.representative
    lhs = cup_product(v, x, fc)
    rhs = steenrod_square(wu.k, x, fc)
    ok = is_cohomologous(lhs, rhs, fc)
    return EndpointCheck(bar.index, bar.degree, wu.k, tl, ok)


def persistent_sw(
    fc: FilteredComplex, s: float, t: float, n: int, classes=None, threads: int = 1
) -> SWReport:
    """Persistent Stiefel-Whitney classes of type ``n`` over ``[s, t]``.

    Wu classes are solved at ``t``; the criterion is then re-checked at the
    right endpoint of every bar of degree ``n - k`` that ends inside
    ``[s, t)``.  When every check passes, the classes ``sw[k]`` at ``t``
    restrict to the persistent classes on the whole interval.
    """
    if s > t:
        raise ValueError(f"empty interval [{s}, {t}]")
    if n < 1:
        raise ValueError("type n must be at least 1")
    classes = _classes_for(fc, n, classes)
    report = SWReport(n=n, interval=(s, t))
    grid = [s] + [r for r in fc.scales if s < r <= t]
    for k in range(n + 1):
        report.betti_changes[k] = len({betti_at(classes, k, r) for r in grid}) > 1
    if not _wu_classes(fc, t, n, classes, report):
        return report

    jobs = []
    for k in range(n + 1):
        for bar in classes:
            if bar.degree == n - k and not bar.is_infinite and s <= bar.anchor < t:
                jobs.append((bar, report.wu[k]))
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            checks = list(pool.map(lambda job: _endpoint_check(fc, *job), jobs))
    else:
        checks = [_endpoint_check(fc, *job) for job in jobs]
    report.endpoint_checks = checks

    failed = next((c for c in checks if not c.passed), None)
    if failed is not None:
        report.failure = (
            f"Wu criterion for v_({failed.k},{n}) fails on bar {failed.bar} "
            f"(degree {failed.degree}) at endpoint {failed.endpoint}"
        )
        return report
    _sw_from_wu(fc, t, n, classes, report)
    report.valid = True
    return report
