"""Exact symbolic supergeometry on R^(m|2n): Berezin integrals over superballs and
superspheres, divergence, Laplacian and the mean value theorems for harmonic superfunctions."""

from .scalar import (ExactSum, ExactValue, RadialCoeff, gamma_half, gamma_half_continued,
                     sphere_monomial_integral)
from .grassmann import (SpaceDims, SuperFun, berezin_theta, render_superfun, superpower_R,
                        superradius_sq, theta_sq)
from .superlinalg import SuperMatrix, sm_inverse, superdet, supertrace
from .geometry import (Metric, OSpFrame, VectorField, christoffel, divergence, divergence_i,
                       divergence_ii, divergence_iii, euler_field, flat_metric, frame_expansion,
                       gradient, laplacian, laplacian_flat, noether_current, osp_frame_flat)
from .integrate import (GAMMA, STD, SphereIntegrand, ball_integral, ball_volume,
                        boundary_flux, boundary_term, boundary_term_direct, pullback_sphere,
                        sphere_integral, sphere_volume)
from .harmonic import (VerificationReport, check_fundamental_solution, harmonic_basis,
                       verify_conserved, verify_divergence_theorem, verify_green,
                       verify_mvt_ball, verify_mvt_sphere, verify_noether)
from .cli import parse, parse_superfun

__version__ = "0.1.0"
