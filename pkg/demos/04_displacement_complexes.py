"""Linear complexes of rigid displacements, and the screw-space analogy.

Fixing a pole tuple, the quadric displacements in its polar hyperplane form
a linear complex.  The relative motion from a member to the pole is always
an orthogonal 4-space displacement (pure dual part); for on-quadric poles
the members are reached by pure rotations about lines or pure translations.
"""

import numpy as np

from studykin import (DisplacementComplex, DualQuaternion, PlueckerLine,
                      Quaternion, ScrewCoords, complex_axis, complex_contains,
                      is_orthogonal_displacement, on_pluecker_quadric,
                      relative_motion, sample_members, screw_complex_contains,
                      se3_kind)

print("== Line-space warm-up ==")
line = PlueckerLine(1, 0, 0, 0, 0.3, -0.2)
print("tuple on the line quadric:", on_pluecker_quadric(line))
print("line inside its own path-normal complex:",
      screw_complex_contains(ScrewCoords(*line.coords()), line))

print("\n== A displacement complex ==")
pole = DualQuaternion(Quaternion(0.9, 0.1, -0.3, 0.2), Quaternion(0.4, 0.5, -0.2, 0.7))
cx = DisplacementComplex(pole)
axis = complex_axis(cx)
print("pole is off the quadric, its axis is the projected pose:")
print("  axis:", np.round(axis.normalized().coords(), 5))
print("  axis on quadric:", axis.on_study_quadric())

members = sample_members(cx, 4, seed=42)
print("\nsampled members (all inside the polar hyperplane):")
for m in members:
    rel = relative_motion(pole, m)
    print(f"  member check={complex_contains(cx, m)}  "
          f"relative motion orthogonal={is_orthogonal_displacement(rel)}  "
          f"dual scalar={rel.normalized().t.q0:+.2e}")

print("\n== On-quadric pole: members are rotations/translations away ==")
on_pole = DualQuaternion(Quaternion(0.6, 0.8), Quaternion(0.0, 0.0, 1.0, -0.75))
assert on_pole.on_study_quadric()
cx2 = DisplacementComplex(on_pole)
kinds = [se3_kind(relative_motion(on_pole, m)) for m in sample_members(cx2, 6, seed=7)]
print("relative-motion kinds:", kinds)
