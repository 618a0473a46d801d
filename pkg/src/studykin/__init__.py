"""Kinematics of the Study quadric and its ambient projective 7-space.

Homogeneous dual-quaternion 8-tuples act as displacements of Euclidean
4-space fixing the x0-direction; quadric points restrict to the rigid
displacements of 3-space.  The package covers the point actions, the
orthogonal projection back onto the quadric with height labels, straight
lines of the parameter space as one-parameter motions, linear complexes
of displacements, and rational motion design on top of all of it.
"""

from .errors import (BadInputError, DegenerateLineError, GeneratorSpaceError,
                     NotFoundError, OffQuadricError, StudyKinError)
from .quaternions import (DualQuaternion, Quaternion, embed_point3,
                          embed_point4, point3, point4, study_bilinear)
from .kinematics import (GrassmannPlane, Line3, PlaneThroughOrigin,
                         displacement_axis, invariant_plane,
                         labeled_projection, rotation_plane_and_angle,
                         se3_kind, study_projection, transform_point3,
                         transform_point4, translation_tuple, x0_shift)
from .motions import (CircularDarboux, CircularityCertificate, DarbouxParams,
                      MotionLine, PlaneRotation, Trajectory, Translation,
                      circular_translation, classify_line, darboux_type1,
                      is_circular, motion_at, projective_circularity,
                      sample_trajectory, trajectory_to_csv)
from .complexes import (DisplacementComplex, PlueckerLine, ScrewCoords,
                        complex_axis, complex_contains,
                        is_orthogonal_displacement, on_pluecker_quadric,
                        relative_motion, sample_members,
                        screw_complex_contains)
from .design import (ControlStructure, DesignObjective, decasteljau_eval,
                     farin_pose, fig_height_demo_scene, max_x0_excursion,
                     motion_curve, optimize_heights, quadratic_demo_scene)

__version__ = "0.1.0"
