import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from perssw.cech import cech_filtration, meb_radius
from perssw.complex import sub_complex
from perssw.io import load_complex, save_complex

from oracles import meb_brute, meb_qp

EQUILATERAL = np.array([[0.0, 0.0], [1.0, 0.0], [0.5, math.sqrt(3) / 2]])

coords = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def clouds(max_points=5, dims=(1, 4)):
    return st.integers(*dims).flatmap(
        lambda d: st.integers(1, max_points).flatmap(lambda n: arrays(np.float64, (n, d), elements=coords))
    )


class TestMEB:
    def test_single_point(self):
        assert meb_radius([[3.0, 4.0]]) == 0.0

    def test_pair(self):
        assert meb_radius([[0.0, 0.0], [3.0, 4.0]]) == 2.5

    def test_equilateral(self):
        assert meb_radius(EQUILATERAL) == pytest.approx(1 / math.sqrt(3), abs=1e-12)
        assert meb_qp(EQUILATERAL) == pytest.approx(1 / math.sqrt(3), abs=1e-6)

    def test_collinear(self):
        pts = [[0.0], [1.0], [2.0]]
        assert meb_radius(pts) == pytest.approx(1.0, abs=1e-12)
        assert meb_qp(pts) == pytest.approx(1.0, abs=1e-6)

    def test_obtuse_triangle_uses_long_edge(self):
        pts = [[0.0, 0.0], [4.0, 0.0], [2.0, 0.5]]
        assert meb_radius(pts) == pytest.approx(2.0, abs=1e-12)

    @pytest.mark.parametrize("seed", range(200))
    def test_random_against_brute_force(self, seed):
        rng = np.random.default_rng(seed)
        pts = rng.normal(size=(int(rng.integers(1, 6)), 4))
        assert meb_radius(pts) == pytest.approx(meb_brute(pts), abs=1e-9)

    @pytest.mark.parametrize("seed", range(20))
    def test_random_against_cone_program(self, seed):
        rng = np.random.default_rng(1000 + seed)
        pts = rng.normal(size=(int(rng.integers(2, 6)), 4))
        assert meb_radius(pts) == pytest.approx(meb_qp(pts), abs=1e-6)

    @settings(max_examples=200, deadline=None)
    @given(clouds())
    def test_encloses_and_matches_brute(self, pts):
        r = meb_radius(pts)
        assert r == pytest.approx(meb_brute(pts), abs=1e-9 * max(1.0, r))

    @settings(max_examples=150, deadline=None)
    @given(clouds(max_points=4), st.data())
    def test_monotone_under_insertion(self, pts, data):
        extra = data.draw(arrays(np.float64, (1, pts.shape[1]), elements=coords))
        assert meb_radius(np.vstack([pts, extra])) >= meb_radius(pts) - 1e-9

    @settings(max_examples=150, deadline=None)
    @given(clouds(dims=(2, 4)), st.integers(0, 2**31))
    def test_rigid_motion_invariant(self, pts, seed):
        rng = np.random.default_rng(seed)
        q, _ = np.linalg.qr(rng.normal(size=(pts.shape[1], pts.shape[1])))
        moved = pts @ q.T + rng.normal(size=pts.shape[1]) * 5
        assert meb_radius(moved) == pytest.approx(meb_radius(pts), abs=1e-9 * max(1.0, meb_radius(pts)))


class TestCechFiltration:
    def test_equilateral(self):
        fc = cech_filtration(EQUILATERAL, 2, 1.0)
        cells = dict(fc.cells)
        assert [cells[(v,)] for v in range(3)] == [0.0, 0.0, 0.0]
        for e in [(0, 1), (0, 2), (1, 2)]:
            assert cells[e] == pytest.approx(0.5, abs=1e-12)
        assert cells[(0, 1, 2)] == pytest.approx(1 / math.sqrt(3), abs=1e-12)

    def test_coincident_points(self):
        fc = cech_filtration([[1.0, 1.0], [1.0, 1.0]], 1, 1.0)
        assert dict(fc.cells)[(0, 1)] == 0.0

    def test_collinear_triple(self):
        fc = cech_filtration([[0.0], [1.0], [2.0]], 2, 5.0)
        assert dict(fc.cells)[(0, 1, 2)] == pytest.approx(1.0, abs=1e-12)

    def test_empty(self):
        assert len(cech_filtration(np.zeros((0, 3)), 2, 1.0)) == 0

    def test_threshold_excludes(self):
        fc = cech_filtration(EQUILATERAL, 2, 0.55)
        assert (0, 1, 2) not in fc and (0, 1) in fc

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            cech_filtration(EQUILATERAL, 0, 1.0)
        with pytest.raises(ValueError):
            cech_filtration(EQUILATERAL, 2, 0.0)
        with pytest.raises(ValueError):
            cech_filtration([[0.0, np.nan]], 2, 1.0)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**31))
    def test_matches_direct_enumeration(self, seed):
        from itertools import combinations

        rng = np.random.default_rng(seed)
        pts = rng.uniform(size=(int(rng.integers(2, 9)), 3))
        max_scale = float(rng.uniform(0.1, 0.6))
        fc = cech_filtration(pts, 3, max_scale)
        expected = {}
        for k in range(1, 5):
            for s in combinations(range(len(pts)), k):
                r = meb_brute(pts[list(s)])
                if r <= max_scale:
                    expected[s] = r
        got = dict(fc.cells)
        # ties at the threshold may go either way under rounding
        borderline = {s for s, r in expected.items() if abs(r - max_scale) < 1e-9}
        assert set(got) - borderline == set(expected) - borderline
        for s, r in got.items():
            assert r == pytest.approx(expected.get(s, r), abs=1e-9)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 2**31))
    def test_permutation_invariant(self, seed):
        rng = np.random.default_rng(seed)
        pts = rng.uniform(size=(10, 3))
        perm = rng.permutation(10)
        a = cech_filtration(pts, 3, 0.4)
        b = cech_filtration(pts[perm], 3, 0.4)
        relabelled = {tuple(sorted(int(perm[v]) for v in s)): r for s, r in b}
        original = dict(a.cells)
        assert relabelled.keys() == original.keys()
        for s, r in original.items():
            assert relabelled[s] == pytest.approx(r, abs=1e-12)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 2**31), st.floats(0.05, 0.5), st.floats(0.05, 0.5))
    def test_sub_complex_of_larger_threshold(self, seed, a, b):
        lo, hi = sorted((a, b))
        pts = np.random.default_rng(seed).uniform(size=(10, 3))
        assert sub_complex(cech_filtration(pts, 3, hi), lo) == cech_filtration(pts, 3, lo)

    def test_threads_do_not_change_output(self):
        pts = np.random.default_rng(3).uniform(size=(40, 3))
        assert cech_filtration(pts, 3, 0.35, threads=4) == cech_filtration(pts, 3, 0.35)

    def test_output_passes_load_validation(self, tmp_path):
        pts = np.random.default_rng(5).uniform(size=(30, 4))
        fc = cech_filtration(pts, 3, 0.5)
        save_complex(fc, tmp_path / "c.txt")
        assert load_complex(tmp_path / "c.txt") == fc
