from .SurfaceAnalyzer import SurfaceAnalyzer
