"""Rational motion design with labeled projections.

Control poses live anywhere in the parameter space; their heights above the
quadric are design freedoms.  The curve is evaluated by the projective
de Casteljau scheme, displayed as quadric poses with height labels, and the
design objective trims the maximal height excursion.
"""

import numpy as np

from studykin import (farin_pose, fig_height_demo_scene, max_x0_excursion,
                      motion_curve, optimize_heights, quadratic_demo_scene)
from studykin.design import DesignObjective, FreeParameters

print("== Height-label scene (start, weight point, control, weight point, end) ==")
fig = fig_height_demo_scene()
labels = [fig.height(0), farin_pose(fig, 0)[1], fig.height(1),
          farin_pose(fig, 1)[1], fig.height(2)]
print("labels:", labels, " -> (0, 3/4, 1, 3/4, 0)")

print("\n== Showcase quadratic scene ==")
cs = quadratic_demo_scene()
print("control heights:", [round(cs.height(i), 6) for i in range(3)],
      " (interior is -28/9)")
print("\nlabeled projection of the designed motion:")
for t, pose, h in motion_curve(cs, 9):
    print(f"  t={t:.3f}  height={h:+.4f}  pose={np.round(pose.coords(), 3)}")

print("\nmaximal height excursion:", max_x0_excursion(cs, 257))

print("\n== Minimizing the excursion over the interior height ==")
result = optimize_heights(cs, FreeParameters(heights=(1,)),
                          DesignObjective(grid=129, tol=1e-8))
print("objective trace:", [round(v, 6) for v in result.trace])
print("optimized interior height:", result.structure.height(1))
print("optimized excursion      :", max_x0_excursion(result.structure, 257))

print("\n== Freeing the weight parameters too ==")
result2 = optimize_heights(cs, FreeParameters(heights=(1,), farin=(0, 1)),
                           DesignObjective(grid=129, tol=1e-8))
print("objective trace:", [round(v, 6) for v in result2.trace])
print("final farin parameters:", [round(f, 4) for f in result2.structure.farin])
