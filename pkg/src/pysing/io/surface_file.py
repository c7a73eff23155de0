"""
Surface file reader for pysing.
A surface file is one JSON document:

    {"surface": {"a": "s*u", "b": "t*u", "c": "s*t", "d": "s^2+t^2+u^2"},
     "points": [["0", "0", "0", "1"]],
     "seed": 0,
     "degree_bound": 4}

Only ``surface`` is required. Components may be written in s, t or
homogeneously in s, t, u.
"""
import json
import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional

from ..errors import SurfaceFileError
from ..helper import parse_rational
from ..poly.polycore import ProjPoint
from ..surface.parametrization import COMPONENT_NAMES, SurfaceParam

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurfaceFile:
    surface: SurfaceParam
    points: List[ProjPoint] = field(default_factory=list)
    seed: Optional[int] = None
    degree_bound: Optional[int] = None
    source: Optional[str] = None

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any], source: Optional[str] = None) -> "SurfaceFile":
        """Validates a parsed document.

        Args:
            doc: The decoded JSON document
            source: Where the document came from, for messages
        """
        if not isinstance(doc, Mapping):
            raise SurfaceFileError("a surface file must hold a JSON object")
        unknown = set(doc).difference({"surface", "points", "seed", "degree_bound"})
        if unknown:
            raise SurfaceFileError(f"unknown keys: {', '.join(sorted(unknown))}")
        surface = doc.get("surface")
        if not isinstance(surface, Mapping) or set(surface) != set(COMPONENT_NAMES):
            raise SurfaceFileError('"surface" must map exactly a, b, c, d to polynomial strings')
        if not all(isinstance(surface[name], str) for name in COMPONENT_NAMES):
            raise SurfaceFileError("surface components must be strings")
        P = SurfaceParam.from_strings([surface[name] for name in COMPONENT_NAMES], remove_content=True)

        points = []
        for entry in doc.get("points", []):
            if not isinstance(entry, (list, tuple)) or len(entry) != 4:
                raise SurfaceFileError(f"a point needs four coordinates: {entry!r}")
            points.append(ProjPoint(tuple(parse_rational(c) for c in entry)))

        seed = doc.get("seed")
        degree_bound = doc.get("degree_bound")
        for key, value in (("seed", seed), ("degree_bound", degree_bound)):
            if value is not None and (not isinstance(value, int) or isinstance(value, bool) or value < 0):
                raise SurfaceFileError(f'"{key}" must be a nonnegative integer')
        return cls(P, points, seed, degree_bound, source)

    @classmethod
    def from_json(cls, text: str, source: Optional[str] = None) -> "SurfaceFile":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as err:
            raise SurfaceFileError(f"invalid JSON in {source or 'input'}: {err}")
        return cls.from_dict(doc, source)

    @classmethod
    def read(cls, path: str) -> "SurfaceFile":
        if not os.path.exists(path):
            raise SurfaceFileError(f"no such file: {path}")
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
        logger.debug("read surface file %s", path)
        return cls.from_json(text, path)

    def config_overrides(self) -> Dict[str, Any]:
        """Settings carried by the file, in the shape of the configuration dict."""
        overrides: Dict[str, Any] = {}
        if self.seed is not None:
            overrides["seed"] = self.seed
        if self.degree_bound is not None:
            overrides["mu_basis"] = {"degree_bound": self.degree_bound}
        return overrides
