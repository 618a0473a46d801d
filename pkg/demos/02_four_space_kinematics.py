"""Every 8-tuple moves 4-space; quadric tuples move each hyperplane x0 = k.

Off the quadric, the action shifts all of 4-space by a common amount along
x0.  Removing that shift is an orthogonal projection onto the quadric, and
annotating the projected pose with the lost shift gives the labeled
projection ("kotierte Projektion") that drives the design views.
"""

import numpy as np

from studykin import (DualQuaternion, Quaternion, displacement_axis,
                      invariant_plane, labeled_projection,
                      rotation_plane_and_angle, study_projection,
                      transform_point3, transform_point4, x0_shift)

print("== A lifted displacement ==")
x = DualQuaternion(Quaternion(0.8, 0.6), Quaternion(0.5, -0.3, 1.0, 0.2))
print("x0 shift of every point:", x0_shift(x))
p = np.array([0.0, 1.0, 2.0, 3.0])
print("image of", p, "->", transform_point4(x, p))

print("\n== Projection onto the quadric ==")
pose, height = labeled_projection(x)
print("projected pose:", np.round(pose.coords(), 6))
print("height label  :", height)
print("the projection only removes the x0 motion:")
print("  3-space part of the 4-space image:", transform_point4(x, p)[1:])
print("  3-space action of the projection :", transform_point3(pose, p[1:]))

print("\n== Rotation planes ==")
plane = rotation_plane_and_angle(x.normalized().e)
print("rotation part turns by", round(np.degrees(plane.angle), 3), "degrees")
print("about the plane through the x0-axis and", np.round(plane.dir_e, 4))

gamma = invariant_plane(x)
print("\ninvariant plane of the full displacement:")
print("  in-hyperplane direction:", np.round(gamma.direction(), 4))
print("  offset point           :", np.round(gamma.point(), 4))

print("\n== The displacement axis ==")
y = study_projection(x)
axis = displacement_axis(y)
print("axis of the projected rigid displacement (any hyperplane x0 = k):")
print("  point    :", np.round(axis.point, 4))
print("  direction:", np.round(axis.direction, 4))
