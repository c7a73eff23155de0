from .polycore import (AFFINE_PARAMETERS, CANONICAL_VARIABLES, PARAMETER_VARIABLES,
                       SPACE_VARIABLES, Polynomial, ProjPoint, coerce, common_ring,
                       dehomogenize, evaluate, gen, homogenize, homogenize_group,
                       is_homogeneous, multi_gcd, partial_derivative, poly_arith,
                       polynomial_ring, primitive_integer, ring_of, substitute, to_fraction,
                       to_qq, to_ring, total_degree, used_variables, variable_names)
from .parser import format_poly, parse_poly
