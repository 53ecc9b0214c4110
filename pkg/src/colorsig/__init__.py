"""Multivariable signature and nullity of colored links from C-complexes."""
from .bounds import (CobordismProfile, ObstructionReport, SurfaceProfile, cobordism_cost,
                     concordance_obstruction, default_grid, genus_bound_check,
                     genus_bound_report, surface_bound_check, surface_bound_report)
from .ccomplex import CComplexData, HermitianForm, hermitian_form, symbolic_form, validate
from .errors import (ColorsigError, ConfigurationError, ConsistencyError, DimensionError,
                     DomainError, InconsistencyError, IndeterminateInertiaError,
                     InvalidCertificateError, ValidationError)
from .inertia import (InertiaResult, alexander_nullity, inertia, signature_and_nullity,
                      torus_profile)
from .laurent import LaurentMatrix, LaurentPoly, augment, evaluate, is_in_U, rank_over_fraction_field
from .omega import OmegaClassification, classify, transport_certificate, verify_certificate
from .plumbing import (PlumbingGraph, Surface, boundary_kernel_generators, intersection_graph,
                       is_balanced, kernel_basis, sublink_linking, total_weight)
from .scalar import (Angle, CyclotomicScalar, RootOfUnity, TorusPoint, common_field,
                     cyclotomic_polynomial, is_root_of_unity_of_prime_power_order, parse_omega,
                     sign_of_real)

__version__ = "0.1.0"
