from .parametrization import SurfaceParam, divide_content
from .movplanes import (MovingPlane, MuBasis, follows, in_moving_surface_ideal, in_syzygy_module,
                        moving_planes_of_degree, moving_surface_ideal, mu_basis, outer_product,
                        plane_coordinates, special_planes, unimodular_completion, verify_mu_basis)
from .singular import (BasePointReport, CountCheck, SingularityReport, base_points,
                       check_implicit_degree, combined_planes_order, difference_curves,
                       fiber_charts_at_infinity, implicit_degree, mu_basis_order, recharted,
                       sing_order, verify_moving_plane_count, verify_moving_surface_count)
from .oracle import ImplicitSurface, classic_order, implicitize, map_degree
