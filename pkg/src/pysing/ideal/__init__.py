from .groebner import (AUXILIARY, INFINITE, IdealBasis, MonomialOrder, colength, colon_saturate,
                       eliminate, groebner_basis, intersect_ideals, is_groebner_basis, normal_form,
                       s_polynomial, standard_monomials, unit_ideal)
from .localmult import (CHART_AFFINE, CHART_INFINITY, CHART_POINT, LocalPoint, MultiplicityReport,
                        affine_multiplicity, count_distinct_points, hilbert_multiplicity, local_colength,
                        projective_total_multiplicity, reduction_multiplicity)
