"""Exact computations of Poincare, E- and mixed-Hodge polynomials of character varieties."""

from .arith import FieldElem, UniPoly, UniRat, ZWPoly, field_arith, poly_assert, substitute
from .errors import (CacheVersionError, CharvarError, GenericityError, NotPolynomialError, SizeGuardError,
                     SizingError, SpecializationError, ValidationError)
from .fq import FqClassSpec, class_elements, count_points, fricke_count, group_size
from .kernel import hlv_kernel, hook_factor, omega, specialize_pair
from .macdonald import htilde, htilde_oracle
from .varieties import (EigenvalueSpec, PunctureData, SurfaceData, auto_surface, dim_charvar, dim_class,
                        e_polynomial, is_generic, mixed_hodge_conjectural, multiplicity_dim, poincare_ih,
                        poincare_ss, resolution_identity_check, s_mu_prime, twisted_poincare)

__version__ = "0.1.0"
