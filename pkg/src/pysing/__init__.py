from .errors import PysingError, exit_code_for
from .helper import default_config, merge_config, parse_config
from .surface import SurfaceParam, base_points, implicitize, mu_basis, sing_order
from .analysis import SurfaceAnalyzer
