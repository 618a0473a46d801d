import math

import numpy as np
import pytest

from studykin import (BadInputError, ControlStructure, DesignObjective,
                      DualQuaternion, Quaternion, decasteljau_eval,
                      farin_pose, fig_height_demo_scene, max_x0_excursion,
                      motion_curve, optimize_heights, quadratic_demo_scene,
                      transform_point3, transform_point4, x0_shift)
from studykin.design import FreeParameters
from studykin.quaternions import QI, QJ

# frozen from a 100001-point grid scan of the bundled quadratic scene
DEMO_EXCURSION = 1.2741345346195363


def rotation_only_scene():
    e2 = Quaternion(math.sqrt(0.5), math.sqrt(0.5))
    return ControlStructure(
        [DualQuaternion.identity(), DualQuaternion(e2), DualQuaternion(QI)],
        [0.5, 0.5])


def random_scene(rng, n=4):
    ctrl = []
    for i in range(n):
        e = Quaternion(*rng.uniform(-1, 1, 4))
        while e.norm() < 0.3:
            e = Quaternion(*rng.uniform(-1, 1, 4))
        t = Quaternion(*rng.uniform(-1, 1, 4))
        if i in (0, n - 1):
            t = t - (e.dot(t) / e.norm2()) * e
        ctrl.append(DualQuaternion(e, t))
    return ControlStructure(ctrl, rng.uniform(0.2, 0.8, n - 1))


def rational_fit_residual(ts, xs, deg):
    """Smallest relative singular value of the linear system for a common-
    denominator rational curve of the given degree.  Fit oracle."""
    n = len(ts)
    powers = np.stack([np.asarray(ts) ** k for k in range(deg + 1)], axis=1)
    rows = []
    for j in range(4):
        block = np.zeros((n, 5 * (deg + 1)))
        block[:, j * (deg + 1):(j + 1) * (deg + 1)] = -powers
        block[:, 4 * (deg + 1):] = powers * xs[:, j:j + 1]
        rows.append(block)
    s = np.linalg.svd(np.vstack(rows), compute_uv=False)
    return s[-1] / s[0]


class TestControlStructure:
    def test_validation(self):
        with pytest.raises(BadInputError):
            ControlStructure([DualQuaternion.identity()], [])
        with pytest.raises(BadInputError):
            ControlStructure([DualQuaternion.identity(), DualQuaternion(QI)], [])
        with pytest.raises(BadInputError):
            ControlStructure([DualQuaternion.identity(), DualQuaternion(QI)], [1.0])
        with pytest.raises(BadInputError):
            # end pose off the quadric
            ControlStructure([DualQuaternion.identity(),
                              DualQuaternion(QI, QI)], [0.5])
        with pytest.raises(BadInputError):
            ControlStructure([DualQuaternion.identity(),
                              DualQuaternion(Quaternion(), QJ)], [0.5])

    def test_weights_encode_ratio(self):
        cs = quadratic_demo_scene()
        w = cs.weights()
        for i, f in enumerate(cs.farin):
            assert w[i + 1] / w[i] == pytest.approx(f / (1 - f), rel=1e-14)

    def test_kappa_edit_keeps_projection(self):
        cs = quadratic_demo_scene()
        moved = cs.with_kappa(1, -0.3)
        assert moved.kappa(1) == pytest.approx(-0.3, abs=1e-14)
        a = cs.ctrl[1]
        b = moved.ctrl[1]
        from studykin import study_projection
        assert study_projection(a).isclose(study_projection(b), tol=1e-12)

    def test_json_round_trip_bit_exact(self):
        cs = quadratic_demo_scene()
        again = ControlStructure.from_json(cs.to_json())
        for a, b in zip(cs.ctrl, again.ctrl):
            assert (a.coords() == b.coords()).all()
        assert cs.farin == again.farin


class TestDeCasteljau:
    def test_endpoint_interpolation_exact(self):
        rng = np.random.default_rng(70)
        cs = random_scene(rng)
        assert (decasteljau_eval(cs, 0.0).coords() == cs.ctrl[0].coords()).all()
        end = decasteljau_eval(cs, 1.0)
        w_last = cs.weights()[-1]
        assert (end.coords() == w_last * cs.ctrl[-1].coords()).all()

    def test_constant_curve(self):
        cs = ControlStructure([DualQuaternion.identity()] * 3, [0.3, 0.7])
        for t in (0.2, 0.6, 0.9):
            assert decasteljau_eval(cs, t).isclose(DualQuaternion.identity(), tol=1e-14)

    def test_matches_bernstein_form(self):
        rng = np.random.default_rng(71)
        cs = random_scene(rng, n=4)
        w = cs.weights()
        pts = np.stack([wi * c.coords() for wi, c in zip(w, cs.ctrl)])
        for t in np.linspace(0, 1, 9):
            bern = np.array([math.comb(3, i) * (1 - t) ** (3 - i) * t ** i
                             for i in range(4)])
            expected = bern @ pts
            got = decasteljau_eval(cs, float(t)).coords()
            scale = np.abs(expected).max()
            assert np.abs(expected - got).max() < 1e-12 * scale

    def test_quartic_trajectories(self):
        cs = quadratic_demo_scene()
        rng = np.random.default_rng(72)
        ts = np.linspace(0, 1, 9)
        for _ in range(3):
            p = rng.uniform(-1, 1, 4)
            xs = np.stack([transform_point4(decasteljau_eval(cs, float(t)), p)
                           for t in ts])
            assert rational_fit_residual(ts, xs, 4) < 1e-8
            assert rational_fit_residual(ts, xs, 3) > 1e-8

    def test_projective_invariance_of_common_scale(self):
        rng = np.random.default_rng(73)
        cs = random_scene(rng)
        scaled = ControlStructure([c.scaled(-2.5) for c in cs.ctrl], cs.farin)
        for t in (0.15, 0.5, 0.85):
            assert decasteljau_eval(cs, t).isclose(decasteljau_eval(scaled, t), tol=1e-12)
            assert x0_shift(decasteljau_eval(cs, t)) == pytest.approx(
                x0_shift(decasteljau_eval(scaled, t)), rel=1e-12, abs=1e-12)
        assert max_x0_excursion(cs, 65) == pytest.approx(
            max_x0_excursion(scaled, 65), rel=1e-12)


class TestFarinPoses:
    def test_equal_weight_midpoint(self):
        cs = fig_height_demo_scene()  # farin 1/2, weights all 1
        pose, _ = farin_pose(cs, 0)
        expected = 0.5 * (cs.ctrl[0].coords() + cs.ctrl[1].coords())
        assert np.abs(pose.coords() - expected).max() < 1e-15

    def test_collinear_with_segment(self):
        rng = np.random.default_rng(74)
        cs = random_scene(rng)
        for i in range(len(cs.farin)):
            pose, _ = farin_pose(cs, i)
            m = np.stack([cs.ctrl[i].coords(), pose.coords(), cs.ctrl[i + 1].coords()])
            sv = np.linalg.svd(m, compute_uv=False)
            assert sv[2] < 1e-12 * sv[0]

    def test_locus_is_the_segment_line(self):
        rng = np.random.default_rng(75)
        cs = random_scene(rng)
        poses = []
        for f in (0.1, 0.35, 0.6, 0.9):
            poses.append(farin_pose(cs.with_farin(0, f), 0)[0].coords())
        sv = np.linalg.svd(np.stack(poses), compute_uv=False)
        assert sv[2] < 1e-12 * sv[0]

    def test_reconstructed_weights_reproduce_points(self):
        rng = np.random.default_rng(76)
        cs = random_scene(rng)
        again = ControlStructure.from_json(cs.to_json())
        for i in range(len(cs.farin)):
            assert farin_pose(cs, i)[0].isclose(farin_pose(again, i)[0], tol=1e-13)

    def test_fig_height_labels(self):
        cs = fig_height_demo_scene()
        labels = [cs.height(0), farin_pose(cs, 0)[1], cs.height(1),
                  farin_pose(cs, 1)[1], cs.height(2)]
        assert labels == [0.0, 0.75, 1.0, 0.75, 0.0]


class TestMotionCurve:
    def test_end_heights_zero(self):
        curve = motion_curve(quadratic_demo_scene(), 9)
        assert curve[0][2] == 0.0
        assert curve[-1][2] == 0.0

    def test_demo_control_height_label(self):
        cs = quadratic_demo_scene()
        assert abs(cs.height(1) - (-28.0 / 9.0)) < 1e-12
        again = ControlStructure.from_json(cs.to_json())
        assert abs(again.height(1) - (-28.0 / 9.0)) < 1e-12

    def test_heights_continuous(self):
        cs = quadratic_demo_scene()
        h101 = np.array([h for _, _, h in motion_curve(cs, 101)])
        h201 = np.array([h for _, _, h in motion_curve(cs, 201)])
        jump101 = np.abs(np.diff(h101)).max()
        jump201 = np.abs(np.diff(h201)).max()
        assert jump201 < 0.75 * jump101 + 1e-12

    def test_emitted_poses_are_rigid(self):
        for _, pose, _ in motion_curve(quadratic_demo_scene(), 17):
            o = transform_point3(pose, [0, 0, 0])
            r = np.stack([transform_point3(pose, e) - o for e in np.eye(3)], axis=1)
            assert np.abs(r.T @ r - np.eye(3)).max() < 1e-10


class TestExcursion:
    def test_zero_on_quadric_curve(self):
        assert max_x0_excursion(rotation_only_scene(), 65) < 1e-12

    def test_demo_regression_value(self):
        cs = quadratic_demo_scene()
        assert max_x0_excursion(cs, 257) == pytest.approx(DEMO_EXCURSION, abs=1e-9)
        assert max_x0_excursion(cs, 257) > 1.0

    def test_rescaled_pose_with_compensating_farin(self):
        # scaling one interior pose by lam while dividing its weight by lam
        # leaves the weighted tuples, hence the curve, untouched
        cs = quadratic_demo_scene()
        lam = 3.7
        w1 = cs.weights()[1] / lam  # compensated weight of the scaled pose
        f0 = w1 / (1.0 + w1)
        ratio = cs.weights()[2] / w1
        f1 = ratio / (1.0 + ratio)
        other = ControlStructure(
            [cs.ctrl[0], cs.ctrl[1].scaled(lam), cs.ctrl[2]], [f0, f1])
        assert max_x0_excursion(cs, 129) == pytest.approx(
            max_x0_excursion(other, 129), abs=1e-10)


class TestOptimizer:
    def test_mask_validation(self):
        cs = quadratic_demo_scene()
        with pytest.raises(BadInputError):
            optimize_heights(cs, FreeParameters())
        with pytest.raises(BadInputError):
            optimize_heights(cs, FreeParameters(heights=(0,)))
        with pytest.raises(BadInputError):
            optimize_heights(cs, FreeParameters(farin=(5,)))

    def test_optimal_scene_unchanged(self):
        cs = rotation_only_scene()
        result = optimize_heights(cs, FreeParameters(heights=(1,)),
                                  DesignObjective(grid=65))
        for a, b in zip(cs.ctrl, result.structure.ctrl):
            assert (a.coords() == b.coords()).all()
        assert result.trace[0] < 1e-12

    def test_single_height_matches_brute_force(self):
        cs = quadratic_demo_scene()
        obj = DesignObjective(grid=65, tol=1e-10)
        result = optimize_heights(cs, FreeParameters(heights=(1,)), obj)
        opt_height = result.structure.height(1)

        # brute force over the height in [-10, 10], step 1e-4: the curve
        # height is affine in the free kappa, so precompute the two slices
        ts = np.linspace(0, 1, obj.grid)
        a = np.array([x0_shift(decasteljau_eval(cs.with_kappa(1, 0.0), float(t)))
                      for t in ts])
        b = np.array([x0_shift(decasteljau_eval(cs.with_kappa(1, 1.0), float(t)))
                      for t in ts]) - a
        heights = np.arange(-10.0, 10.0 + 1e-9, 1e-4)
        kappas = -heights / 2.0
        best_h, best_v = None, np.inf
        for chunk in np.array_split(kappas, 40):
            vals = np.abs(a[None, :] + chunk[:, None] * b[None, :]).max(axis=1)
            i = int(np.argmin(vals))
            if vals[i] < best_v:
                best_v, best_h = float(vals[i]), float(-2.0 * chunk[i])
        assert abs(opt_height - best_h) <= 1e-4
        assert result.trace[-1] <= best_v + 1e-6

    def test_two_farin_trace_non_increasing(self):
        cs = quadratic_demo_scene()
        result = optimize_heights(cs, FreeParameters(farin=(0, 1)),
                                  DesignObjective(grid=65, tol=1e-8))
        trace = np.array(result.trace)
        assert (np.diff(trace) <= 1e-15).all()
        assert result.trace[-1] <= max_x0_excursion(cs, 65) + 1e-12

    def test_deterministic(self):
        cs = quadratic_demo_scene()
        obj = DesignObjective(grid=65, tol=1e-8)
        r1 = optimize_heights(cs, FreeParameters(heights=(1,), farin=(0,)), obj)
        r2 = optimize_heights(cs, FreeParameters(heights=(1,), farin=(0,)), obj)
        assert r1.trace == r2.trace
        for a, b in zip(r1.structure.ctrl, r2.structure.ctrl):
            assert (a.coords() == b.coords()).all()
