import json

import numpy as np
import pytest

from pysing.surface import SurfaceParam

ROMAN = ("s*u", "t*u", "s*t", "s^2 + t^2 + u^2")
WHITNEY = ("s*t", "s*u", "t^2", "u^2")
SPHERE = ("2*s*u", "2*t*u", "s^2 + t^2 - u^2", "s^2 + t^2 + u^2")
PLANE = ("s", "t", "1", "1")


@pytest.fixture(scope="session")
def roman():
    return SurfaceParam.from_strings(ROMAN)


@pytest.fixture(scope="session")
def whitney():
    return SurfaceParam.from_strings(WHITNEY)


@pytest.fixture(scope="session")
def sphere():
    return SurfaceParam.from_strings(SPHERE)


@pytest.fixture(scope="session")
def plane():
    return SurfaceParam.from_strings(PLANE)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def surface_file(tmp_path):
    """Writes a surface file and returns its path."""
    def write(components, points=(), **extra):
        doc = {"surface": dict(zip("abcd", components)), "points": [list(p) for p in points]}
        doc.update(extra)
        path = tmp_path / "surface.json"
        path.write_text(json.dumps(doc))
        return str(path)
    return write
