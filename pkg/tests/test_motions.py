import math

import numpy as np
import pytest

from studykin import (CircularDarboux, DarbouxParams, DegenerateLineError,
                      DualQuaternion, GeneratorSpaceError, MotionLine,
                      PlaneRotation, Quaternion, Translation,
                      circular_translation, classify_line, darboux_type1,
                      is_circular, motion_at, projective_circularity,
                      sample_trajectory, study_bilinear, trajectory_to_csv,
                      transform_point4)
from studykin.motions import Trajectory
from studykin.quaternions import ONE, QI, QJ, QK

SPAN = np.linspace(-0.8, 1.8, 9)


def rand_dq(rng, min_rot=0.2):
    e = Quaternion(*rng.uniform(-1, 1, 4))
    while e.norm() < min_rot:
        e = Quaternion(*rng.uniform(-1, 1, 4))
    return DualQuaternion(e, Quaternion(*rng.uniform(-1, 1, 4)))


def canonical_darboux_line(c, rho):
    a = DualQuaternion.identity()
    b = DualQuaternion(QI, Quaternion(-c * math.cos(rho), c * math.sin(rho)))
    return MotionLine(a, b)


class TestMotionLine:
    def test_rejects_double_point(self):
        a = DualQuaternion.from_coords([1, 0, 0, 0, 2, 0, 0, 0])
        with pytest.raises(DegenerateLineError):
            MotionLine(a, a.scaled(-3.0))

    def test_rejects_line_inside_generator_space(self):
        with pytest.raises(DegenerateLineError):
            MotionLine(DualQuaternion(Quaternion(), QI),
                       DualQuaternion(Quaternion(), QJ))

    def test_endpoints(self):
        rng = np.random.default_rng(40)
        line = MotionLine(rand_dq(rng), rand_dq(rng))
        assert motion_at(line, 1.0).isclose(line.a.normalized(), tol=1e-12)
        assert motion_at(line, 0.0).isclose(line.b.normalized(), tol=1e-12)

    def test_midpoint_normalization(self):
        line = MotionLine(DualQuaternion.identity(), DualQuaternion(QI))
        mid = motion_at(line, 0.5)
        s = math.sqrt(0.5)
        assert np.allclose(mid.coords(), [s, s, 0, 0, 0, 0, 0, 0], atol=1e-14)

    def test_translation_pencil_keeps_rotation(self):
        line = MotionLine(DualQuaternion(ONE, QI), DualQuaternion(ONE, QJ))
        for s in (0.2, 0.5, 0.9):
            assert motion_at(line, s).e.isclose(ONE, tol=1e-12)

    def test_puncture_signaled(self):
        line = MotionLine(DualQuaternion(Quaternion(), QJ), DualQuaternion.identity())
        with pytest.raises(GeneratorSpaceError):
            motion_at(line, 1.0)  # endpoint a has zero rotation part
        motion_at(line, 0.5)  # elsewhere the pose exists


class TestClassification:
    def test_translation_case(self):
        line = MotionLine(DualQuaternion.identity(), DualQuaternion(ONE, QI))
        cls = classify_line(line)
        assert isinstance(cls, Translation)
        assert np.allclose(cls.direction, [0, 1, 0, 0], atol=1e-14)

    def test_translation_with_generator_point(self):
        line = MotionLine(DualQuaternion(Quaternion(), QJ), DualQuaternion.identity())
        cls = classify_line(line)
        assert isinstance(cls, Translation)

    def test_plane_rotation_case(self):
        line = MotionLine(DualQuaternion.identity(), DualQuaternion(QI))
        cls = classify_line(line)
        assert isinstance(cls, PlaneRotation)
        assert np.allclose(cls.plane.direction(), [1, 0, 0], atol=1e-12)
        assert np.allclose(cls.plane.point(), np.zeros(4), atol=1e-12)

    def test_plane_rotation_relative_poses_on_quadric(self):
        # constant quadric defect along the line means on-quadric relative motions
        line = MotionLine(DualQuaternion(QI, QJ), DualQuaternion(QK, QJ - QI))
        cls = classify_line(line)
        if isinstance(cls, PlaneRotation):
            for s in (0.1, 0.45, 0.8):
                rel = motion_at(line, s) * motion_at(line, 0.3).inverse()
                reln = rel.normalized()
                assert abs(study_bilinear(reln, reln)) < 1e-9

    def test_canonical_darboux_recovery(self):
        for c, rho in [(0.5, 0.0), (1.0, 1.2), (2.5, -2.0), (0.05, 3.0)]:
            cls = classify_line(canonical_darboux_line(c, rho))
            assert isinstance(cls, CircularDarboux)
            assert cls.c == pytest.approx(c, abs=1e-12)
            assert cls.rho == pytest.approx(rho, abs=1e-12)
            assert np.allclose(cls.plane.direction(), [1, 0, 0], atol=1e-12)

    def test_darboux_minimal_orbit_lies_in_plane(self):
        rng = np.random.default_rng(41)
        for _ in range(10):
            line = MotionLine(rand_dq(rng), rand_dq(rng))
            cls = classify_line(line)
            assert isinstance(cls, CircularDarboux)
            p0 = transform_point4(line.a.inverse(), cls.plane.point())
            traj = sample_trajectory(line, p0, SPAN)
            cert = is_circular(traj, tol=1e-6)
            assert cert.circular
            assert cert.radius == pytest.approx(cls.c, abs=1e-7)
            assert all(cls.plane.contains4(p, tol=1e-7) for _, p in traj.samples)

    def test_classification_matches_trajectory_oracle(self):
        rng = np.random.default_rng(42)
        count = {"translation": 0, "plane-rotation": 0, "circular-darboux": 0}
        for _ in range(100):
            line = MotionLine(rand_dq(rng), rand_dq(rng))
            cls = classify_line(line)
            count[cls.kind] += 1
            for point in rng.uniform(-1, 1, (3, 4)):
                traj = sample_trajectory(line, point, SPAN)
                cert = is_circular(traj, tol=1e-8)
                if cls.kind == "translation":
                    assert cert.verdict in ("segment", "point")
                elif cls.kind == "circular-darboux":
                    assert cert.circular and cert.radius > 0
        assert count["circular-darboux"] >= 95  # random lines are generic

    def test_reverse_direction_reembeds_as_line(self):
        rng = np.random.default_rng(43)
        cases = [
            classify_line(MotionLine(DualQuaternion.identity(), DualQuaternion(ONE, QI))),
            classify_line(MotionLine(DualQuaternion.identity(), DualQuaternion(QI, QJ))),
            classify_line(MotionLine(rand_dq(rng), rand_dq(rng))),
        ]
        for cls in cases:
            poses = np.stack([cls.pose(t).coords() for t in (0.4, 1.0, 2.3)])
            sv = np.linalg.svd(poses, compute_uv=False)
            assert sv[2] < 1e-9 * sv[0]
            regen = classify_line(MotionLine(
                DualQuaternion.from_coords(poses[0]),
                DualQuaternion.from_coords(poses[2])))
            assert regen.kind == cls.kind

    def test_frame_covariance(self):
        rng = np.random.default_rng(44)
        g = rand_dq(rng)
        for _ in range(10):
            line = MotionLine(rand_dq(rng), rand_dq(rng))
            cls = classify_line(line)
            conj = classify_line(line.conjugated(g))
            assert conj.kind == cls.kind
            if isinstance(cls, CircularDarboux):
                assert conj.c == pytest.approx(cls.c, rel=1e-9)
        # rotation lines map to rotation lines with transformed plane
        rot = MotionLine(DualQuaternion.identity(), DualQuaternion(QI))
        conj = classify_line(rot.conjugated(g))
        assert isinstance(conj, PlaneRotation)


class TestDarbouxFamily:
    def test_zero_parameter_is_identity(self):
        rng = np.random.default_rng(45)
        params = DarbouxParams(beta=1.0, gamma=2.0, nu=0.7)
        for p in rng.uniform(-2, 2, (5, 4)):
            assert np.allclose(darboux_type1(params, 0.0, p), p, atol=1e-14)

    def test_parameter_ranges_enforced(self):
        with pytest.raises(Exception):
            DarbouxParams(beta=-0.1, gamma=2.0)
        with pytest.raises(Exception):
            DarbouxParams(beta=1.0, gamma=0.5)

    def test_vertical_component_breaks_circularity(self):
        params = DarbouxParams(beta=1.0, gamma=2.0, nu=0.3)
        taus = np.linspace(0.3, 5.8, 7)
        pts = np.stack([darboux_type1(params, t, np.zeros(4)) for t in taus])
        cert = is_circular(Trajectory(params=taus, points=pts), tol=1e-8)
        assert not cert.circular

    def test_limit_is_circular_translation_of_half_radius(self):
        # beta = c/sqrt(gamma), gamma -> inf: the translation tends to the
        # circular one with radius c/2 (the leading terms are
        # (c/2) sin(tau) and (c/2)(1-cos(tau)))
        c, gamma = 1.3, 1e6
        params = DarbouxParams(beta=c / math.sqrt(gamma), gamma=gamma, nu=0.0)
        taus = np.linspace(0.0, 2 * math.pi, 17)
        worst = max(np.abs(darboux_type1(params, t, np.zeros(4))
                           - circular_translation(c / 2.0, 0.0, t)).max()
                    for t in taus)
        assert worst < 1e-5
        pts = np.stack([darboux_type1(params, t, np.zeros(4)) for t in taus[:-1]])
        assert is_circular(Trajectory(params=taus[:-1], points=pts), tol=1e-5).circular


class TestCircularTranslation:
    def test_zero_radius(self):
        for tau in (0.0, 1.0, 4.0):
            assert np.allclose(circular_translation(0.0, 0.7, tau), np.zeros(4))

    def test_half_turn_value(self):
        assert np.allclose(circular_translation(1.0, 0.0, math.pi), [0, 2, 0, 0],
                           atol=1e-12)

    def test_traces_circle_of_radius_c(self):
        taus = np.linspace(0.2, 6.0, 9)
        for c, rho in [(0.5, 0.3), (2.0, -1.0)]:
            pts = np.stack([circular_translation(c, rho, t) for t in taus])
            cert = is_circular(Trajectory(params=taus, points=pts), tol=1e-9)
            assert cert.circular
            assert cert.radius == pytest.approx(c, abs=1e-9)


class TestTrajectories:
    def test_translation_line_collinear(self):
        line = MotionLine(DualQuaternion.identity(), DualQuaternion(ONE, QI))
        traj = sample_trajectory(line, [0.5, 1, 2, 3], np.linspace(0.05, 0.95, 7))
        assert is_circular(traj).verdict == "segment"

    def test_rotation_line_fixes_plane_points(self):
        line = MotionLine(DualQuaternion.identity(), DualQuaternion(QI))
        traj = sample_trajectory(line, [2.0, -1.0, 0, 0], SPAN)
        assert is_circular(traj).verdict == "point"

    def test_darboux_line_concyclic(self):
        traj = sample_trajectory(canonical_darboux_line(1.0, 0.5),
                                 [0.2, 0.4, 0.8, -0.3], SPAN[:5])
        assert is_circular(traj, tol=1e-9).circular

    def test_samples_match_polynomial_data(self):
        rng = np.random.default_rng(46)
        line = MotionLine(rand_dq(rng), rand_dq(rng))
        traj = sample_trajectory(line, rng.uniform(-1, 1, 4), SPAN)
        powers = np.stack([np.ones_like(traj.params), traj.params, traj.params ** 2])
        num = traj.num_coeffs @ powers  # (4, n)
        den = traj.den_coeffs @ powers  # (n,)
        assert np.abs(num / den - traj.points.T).max() < 1e-10

    def test_projective_certificate_agrees(self):
        rng = np.random.default_rng(47)
        for _ in range(20):
            line = MotionLine(rand_dq(rng), rand_dq(rng))
            traj = sample_trajectory(line, rng.uniform(-1, 1, 4), SPAN)
            metric = is_circular(traj, tol=1e-7)
            analytic = projective_circularity(traj, tol=1e-8)
            if metric.verdict in ("circle", "planar-not-circular"):
                assert analytic == metric.circular


class TestConcyclicityOracle:
    def test_exact_circle(self):
        taus = np.linspace(0, 2 * math.pi, 7)[:-1]
        pts = np.stack([[0, 2 * math.cos(t), 2 * math.sin(t), 0] for t in taus])
        cert = is_circular(Trajectory(params=taus, points=pts), tol=1e-12)
        assert cert.circular
        assert np.allclose(cert.center, np.zeros(4), atol=1e-12)
        assert cert.radius == pytest.approx(2.0, abs=1e-12)

    def test_parabola_rejected(self):
        ts = np.linspace(-1, 1, 9)
        pts = np.stack([[t, t * t, 0, 0] for t in ts])
        assert not is_circular(Trajectory(params=ts, points=pts), tol=1e-8).circular

    def test_sphere_points_are_not_a_circle(self):
        rng = np.random.default_rng(48)
        v = rng.normal(size=(12, 4))
        pts = v / np.linalg.norm(v, axis=1, keepdims=True)
        cert = is_circular(Trajectory(params=np.arange(12.0), points=pts), tol=1e-8)
        assert cert.verdict == "non-planar"

    def test_coincident_samples(self):
        pts = np.tile(np.array([1.0, 2.0, 3.0, 4.0]), (6, 1))
        cert = is_circular(Trajectory(params=np.arange(6.0), points=pts))
        assert cert.verdict == "point"

    def test_too_few_samples(self):
        pts = np.array([[0, 1, 0, 0], [0, 0, 1, 0], [0, -1, 0, 0]])
        with pytest.raises(Exception):
            is_circular(Trajectory(params=np.arange(3.0), points=pts))


class TestCsvExport:
    def test_format_and_round_trip(self):
        line = MotionLine(DualQuaternion.identity(), DualQuaternion(ONE, QI))
        traj = sample_trajectory(line, [1, 0, 0, 0], [0.0, 0.25, 0.5])
        text = trajectory_to_csv(traj)
        lines = text.strip().split("\n")
        assert lines[0] == "s,x0,x1,x2,x3"
        assert len(lines) == 4
        row = lines[2].split(",")
        assert float(row[0]) == 0.25
        parsed = np.array([float(v) for v in row[1:]])
        assert (parsed == traj.points[1]).all()
