"""Exact verification toolkit for the curve (X^q+X)(Y^q+Y) = c over towers
F_p < F_q < F_{q^2} < F_{q^4}."""

__version__ = "0.1.0"

from .ff import (FieldElement, TowerField, build_tower, trace_q,
                 trace_zero_set, subfield_member, absolute_trace,
                 quadratic_descriptor)
from .symbolic import MultiPoly, TruncatedSeries, PrecisionError, hensel_branch
from .curve import (CurveParams, AffinePoint, InfinitePlace, asm_curve,
                    curve_poly, homogeneous_poly, on_curve, enumerate_points,
                    sample_points, infinite_places, singularity_and_genus,
                    affine_branch, infinite_branch)
from .classic import (z_representation, hyperosculating_conic,
                      osculation_order, is_special_point, frobenius_checks,
                      conic_order_sequence)
from .adjoint import (adjoint_system, decompose_adjoint, multiplicity_at,
                      localize, divisor_check)
from .model import (SpacePoint, Matrix4, tau, affine_space_branch,
                    infinite_space_branch, space_order_sequence,
                    omega_prime_report, nonsingularity_check,
                    induced_space_matrix, pointset_invariant)
from .aut import (PlaneAut, identity_aut, xi, make_aut, generators, closure,
                  closure_and_structure, orbit_analysis, rational_point_form,
                  symbolic_invariance, linear_automorphism_search)
