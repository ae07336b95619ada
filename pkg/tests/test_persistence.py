import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from perssw.complex import Cochain, FilteredComplex, coboundary, is_cocycle, restrict
from perssw.fixtures import circle, rp2_coned, sphere2, torus7
from perssw.persistence import (
    BasisError,
    PersistentClass,
    TopDegreeWarning,
    basis_at_scale,
    betti_at,
    persistent_cohomology,
    restrict_to,
    stable_interval,
)
from perssw.z2 import is_cohomologous

from oracles import betti, persistent_betti, random_filtration


def intervals(classes, degree):
    return sorted((c.birth, c.death) for c in classes if c.degree == degree)


def test_circle_barcode():
    classes = persistent_cohomology(circle(), 1)
    assert intervals(classes, 0) == [(0.0, 1.0), (0.0, 1.0), (0.0, math.inf)]
    assert intervals(classes, 1) == [(1.0, math.inf)]


def test_sphere_all_at_zero():
    fc = FilteredComplex((s, 0.0) for s, _ in sphere2())
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TopDegreeWarning)
        classes = persistent_cohomology(fc, 2)
    assert intervals(classes, 0) == [(0.0, math.inf)]
    assert intervals(classes, 1) == []
    assert intervals(classes, 2) == [(0.0, math.inf)]


def test_empty():
    assert persistent_cohomology(FilteredComplex([]), 2) == []


def test_top_degree_warns():
    with pytest.warns(TopDegreeWarning):
        persistent_cohomology(sphere2(), 2)


def test_zero_length_bars_dropped():
    # the edge kills a component at the scale it is born
    fc = FilteredComplex([((0,), 0.0), ((1,), 1.0), ((0, 1), 1.0)])
    assert intervals(persistent_cohomology(fc, 0), 0) == [(0.0, math.inf)]


def test_indices_follow_sorted_order():
    classes = persistent_cohomology(torus7(), 1)
    assert [c.index for c in classes] == list(range(len(classes)))
    keys = [(c.degree, c.birth, c.death) for c in classes]
    assert keys == sorted(keys)


def test_deterministic():
    a = persistent_cohomology(torus7(), 2)
    b = persistent_cohomology(torus7(), 2)
    assert a == b


class TestBasis:
    def test_circle_degree_one(self):
        fc = circle()
        basis = basis_at_scale(persistent_cohomology(fc, 1), 1, 1.0, fc)
        assert len(basis) == 1
        assert not is_cohomologous(basis[0], Cochain.zero(1, 1.0), fc)

    def test_no_bars(self):
        fc = circle()
        assert basis_at_scale(persistent_cohomology(fc, 1), 1, 0.0, fc) == []

    def test_torus_degree_one(self):
        fc = torus7()
        basis = basis_at_scale(persistent_cohomology(fc, 2), 1, 2.0, fc)
        assert len(basis) == 2
        a, b = basis
        zero = Cochain.zero(1, 2.0)
        assert not is_cohomologous(a, zero, fc)
        assert not is_cohomologous(b, zero, fc)
        assert not is_cohomologous(a, b, fc)

    def test_failure_is_loud(self):
        fc = circle()
        classes = persistent_cohomology(fc, 1)
        bar = next(c for c in classes if c.degree == 1)
        fake = PersistentClass(bar.index, 1, bar.birth, bar.death, Cochain.zero(1, bar.anchor))
        with pytest.raises(BasisError):
            basis_at_scale([fake], 1, 1.0, fc)

    def test_coned_rp2_loses_degree_one(self):
        fc = rp2_coned()
        classes = persistent_cohomology(fc, 2)
        assert betti_at(classes, 1, 0.0) == 1
        assert betti_at(classes, 1, 1.0) == 0
        assert betti_at(classes, 2, 1.0) == 1


def test_restrict_to_beyond_anchor():
    fc = circle()
    bar = next(c for c in persistent_cohomology(fc, 1) if c.degree == 1)
    assert restrict_to(bar.representative, 5.0, fc) == Cochain(1, 5.0, bar.representative.support)


def _random_case(seed):
    cells = random_filtration(np.random.default_rng(seed))
    return cells, FilteredComplex(cells.items())


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 1_000_000))
def test_multiplicities_match_rank_oracle(seed):
    cells, fc = _random_case(seed)
    top = fc.max_dimension
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TopDegreeWarning)
        classes = persistent_cohomology(fc, top)
    scales = fc.scales
    for p in range(top + 1):
        for i, a in enumerate(scales):
            for b in scales[i:]:
                count = sum(1 for c in classes if c.degree == p and c.birth <= a and c.death > b)
                assert count == persistent_betti(cells, p, a, b)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 1_000_000))
def test_representatives(seed):
    cells, fc = _random_case(seed)
    classes = persistent_cohomology(fc, max(fc.max_dimension - 1, 0))
    for c in classes:
        rep = c.representative
        assert rep.scale == c.anchor
        assert is_cocycle(rep, fc)
        for r in fc.scales:
            if c.birth <= r <= c.anchor:
                x = restrict(rep, r, fc)
                assert not is_cohomologous(x, Cochain.zero(c.degree, r), fc)
    for p in range(fc.max_dimension):
        for r in fc.scales:
            assert len(basis_at_scale(classes, p, r, fc)) == betti(cells, p, r)


class TestStableInterval:
    @staticmethod
    def bar(degree, birth, death):
        return PersistentClass(0, degree, birth, death, Cochain.zero(degree, 0.0))

    def test_circle(self):
        fc = circle()
        assert stable_interval(persistent_cohomology(fc, 1), fc.scales, (1, 1)) == (1.0, 1.0)

    def test_unreachable(self):
        fc = circle()
        assert stable_interval(persistent_cohomology(fc, 1), fc.scales, (1, 2)) is None

    def test_noise_inside_is_allowed(self):
        bars = [self.bar(0, 0, math.inf), self.bar(1, 1, 9), self.bar(1, 3, 4)]
        assert stable_interval(bars, [0, 1, 2, 3, 4, 5, 8, 9], (1, 1)) == (1.0, 8.0)

    def test_endpoint_must_match(self):
        # the long class dies at 6; the noise bar makes 5 a bad endpoint
        bars = [self.bar(0, 0, math.inf), self.bar(1, 1, 6), self.bar(1, 5, 7)]
        assert stable_interval(bars, [0, 1, 2, 5, 6], (1, 1)) == (1.0, 2.0)

    def test_classes_alive_at_start_must_survive(self):
        bars = [self.bar(0, 0, math.inf), self.bar(1, 1, 3), self.bar(1, 3, 9)]
        assert stable_interval(bars, [1, 2, 3, 8], (1, 1)) == (3.0, 8.0)
