"""Twisted and Euclidean spherical means on C^n and R^n: special functions,
sphere quadrature, bigraded harmonics, invariant operators, and
identity-verification suites."""

from .backend import backend_name, set_backend
from .harmonics import (HarmonicBasis, Poly, basis_from_json, basis_to_json,
                        build_bigraded_basis, build_real_basis,
                        harmonic_coefficients, laplacian, unitary_action)
from .means import (MeanQuery, determine_C, euclidean_mean,
                    hecke_bochner_check, lambda_reduction_residual,
                    radial_expand, radial_projection, twisted_mean,
                    twisted_translate, weighted_mean_prediction,
                    weighted_relation_constant, weighted_twisted_mean)
from .operators import OperatorSpec, apply, euclid_dbar, monomial_weyl, radial_ladder
from .profiles import RadialProfile, SampledProfile, StructuredFunction, StructuredSum
from .special_functions import (BesselRadialSpec, LaguerreFunctionSpec,
                                LaguerreSpec, b_constant, bessel_first_zero,
                                bessel_phi_eval, laguerre_deriv, laguerre_eval,
                                laguerre_zeros, phi_eval)
from .spheres import (SphereRule, WeightedRule, annulus_integrate,
                      build_sphere_rule, complex_nodes, exact_moment_complex,
                      exact_moment_real, integrate, surface_area, unit_rule,
                      weighted_integrate)

__version__ = "0.1.0"
