"""Straight lines of the parameter space are one-parameter motions.

Three kinds occur: translations, rotations about a fixed plane, and
circular Darboux motions (every point trajectory a circle).  The demo
classifies examples of each and certifies the circles two ways: metrically
from samples and projectively from the exact quadratic coordinates.
"""

import math

import numpy as np

from studykin import (DarbouxParams, DualQuaternion, MotionLine, Quaternion,
                      circular_translation, classify_line, darboux_type1,
                      is_circular, projective_circularity, sample_trajectory,
                      trajectory_to_csv)
from studykin.motions import Trajectory

S = np.linspace(-0.8, 1.8, 11)

print("== The three line types ==")
identity = DualQuaternion.identity()
for name, b in [
        ("translation pencil ", DualQuaternion(Quaternion(1), Quaternion(0, 1))),
        ("rotation pencil    ", DualQuaternion(Quaternion(0, 1))),
        ("generic line       ", DualQuaternion(Quaternion(0, 1), Quaternion(-0.4, 0.9, 0.3, 0.1)))]:
    cls = classify_line(MotionLine(identity, b))
    extra = ""
    if cls.kind == "circular-darboux":
        extra = f" (radius c={cls.c:.4f}, phase rho={cls.rho:.4f})"
    print(f"{name} -> {cls.kind}{extra}")

print("\n== Circular trajectories of a generic line ==")
c, rho = 1.25, 0.8
line = MotionLine(identity, DualQuaternion(
    Quaternion(0, 1), Quaternion(-c * math.cos(rho), c * math.sin(rho))))
cls = classify_line(line)
print(f"classified: c={cls.c}, rho={cls.rho}")
for point in ([0, 0, 0, 0], [0, 0, 1, 0], [0.5, -1, 0.3, 2]):
    traj = sample_trajectory(line, point, S)
    cert = is_circular(traj, tol=1e-9)
    d = np.linalg.norm(np.asarray(point, float)[2:])  # distance to rotation plane
    print(f"point {point}: circle={cert.circular}  radius={cert.radius:.5f}"
          f"  sqrt(c^2+d^2)={math.hypot(c, d):.5f}"
          f"  projective certificate={projective_circularity(traj)}")

print("\n== The planar-trajectory family in matrix form ==")
taus = np.linspace(0.3, 5.9, 7)
for nu in (0.0, 0.5):
    params = DarbouxParams(beta=1.0, gamma=2.0, nu=nu)
    pts = np.stack([darboux_type1(params, t, np.zeros(4)) for t in taus])
    cert = is_circular(Trajectory(params=taus, points=pts), tol=1e-8)
    print(f"nu={nu}: origin trajectory circular -> {cert.circular}")

print("\nlarge-gamma limit of the family against the circular translation:")
gamma, cc = 1e6, 1.0
params = DarbouxParams(beta=cc / math.sqrt(gamma), gamma=gamma, nu=0.0)
worst = max(np.abs(darboux_type1(params, t, np.zeros(4))
                   - circular_translation(cc / 2, 0.0, t)).max()
            for t in np.linspace(0, 2 * math.pi, 25))
print(f"  max deviation from the radius-c/2 circle at gamma=1e6: {worst:.2e}")

print("\n== CSV export ==")
traj = sample_trajectory(line, [0, 0, 1, 0], np.linspace(0.0, 1.0, 5))
print(trajectory_to_csv(traj))
