"""Dual-quaternion basics: the 8-tuple parameter space and the quadric.

A dual quaternion e + eps*t is kept as a homogeneous 8-tuple.  Tuples with
e.t = 0 form the quadric of rigid 3-space displacements; every tuple with a
nonzero rotation part is a displacement of 4-space.
"""

import numpy as np

from studykin import DualQuaternion, Quaternion, study_bilinear

rng = np.random.default_rng(0)

print("== Hamilton products ==")
i = Quaternion(0, 1)
j = Quaternion(0, 0, 1)
print("i*j =", (i * j).array(), " (the unit k)")
print("(1+i)(1-i) =", ((Quaternion(1) + i) * (Quaternion(1) - i)).array())

print("\n== The quadric membership form ==")
x = DualQuaternion.from_coords([1, 0, 0, 0, 0, 2, 0, 0])
y = DualQuaternion.from_coords([1, 0, 0, 0, 1, 0, 0, 0])
print("identity-rotation translation:  form =", study_bilinear(x, x), "(on quadric)")
print("tuple with e.t = 1:             form =", study_bilinear(y, y), "(off quadric)")

print("\n== Group structure ==")
a = DualQuaternion(Quaternion(*rng.uniform(-1, 1, 4)), Quaternion(*rng.uniform(-1, 1, 4)))
b = DualQuaternion(Quaternion(*rng.uniform(-1, 1, 4)), Quaternion(*rng.uniform(-1, 1, 4)))
prod = a * b
print("product of two generic tuples stays a motion:", not prod.in_generator_space())
print("x * x^-1 ~ identity:", (a * a.inverse()).isclose(DualQuaternion.identity()))

print("\n== Projective semantics ==")
print("x and -3x normalize to the same representative:",
      np.allclose(a.normalized().coords(), a.scaled(-3.0).normalized().coords()))

print("\n== The generator space ==")
g = DualQuaternion(Quaternion(), Quaternion(0, 1, 1, 0))
print("a tuple with zero rotation part carries no displacement:",
      g.in_generator_space())
