import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Sequence

from ..errors import DegreeBoundExhaustedError, PysingError
from ..helper import default_config, draw_coefficients, make_rng, merge_config, parse_config
from ..poly.polycore import SPACE_VARIABLES, ProjPoint, ring_of, to_ring
from ..surface.movplanes import MovingPlane, mu_basis, special_planes
from ..surface.oracle import classic_order, implicitize
from ..surface.parametrization import SurfaceParam
from ..surface.singular import (check_implicit_degree, combined_planes_order, implicit_degree,
                                mu_basis_order, base_points, sing_order,
                                verify_moving_plane_count, verify_moving_surface_count)

logger = logging.getLogger(__name__)

STATUS_SKIPPED = "SKIPPED"


class SurfaceAnalyzer:
    """Runs every analysis of one surface and assembles the report.

    Shared results (base points, mu-basis, implicit equation) are computed
    once; candidate points are analyzed on a thread pool and reported in
    input order.
    """

    def __init__(self, surface: SurfaceParam, config_str: Optional[str] = None):
        self.surface = surface
        self.config = default_config()
        if config_str:
            self._parse_config(config_str)
        self.seed = int(self.config["seed"])
        self._lock = threading.Lock()
        self._base = None
        self._mu = None
        self._mu_failure: Optional[DegreeBoundExhaustedError] = None
        self._mu_done = False
        self._implicit = None
        self._chart_bases: Dict[str, Any] = {}

    @staticmethod
    def default_config():
        return default_config()

    def _parse_config(self, config_str):
        config = parse_config(config_str)
        config = config.get("SurfaceAnalyzer", config)
        if not isinstance(config, dict):
            raise ValueError("Invalid JSON configuration string.")
        self.config = merge_config(self.config, config)

    def base_points(self):
        with self._lock:
            if self._base is None:
                self._base = base_points(self.surface, self.seed, self.config)
            return self._base

    def implicit_degree(self) -> int:
        return implicit_degree(self.surface, self.seed, self.base_points(), self.config)

    def mu_basis(self):
        """The verified mu-basis, or None when the search ran out of degrees."""
        with self._lock:
            if not self._mu_done:
                try:
                    self._mu = mu_basis(self.surface, config=self.config)
                except DegreeBoundExhaustedError as err:
                    logger.warning("%s", err)
                    self._mu_failure = err
                self._mu_done = True
            return self._mu

    @property
    def mu_failure(self) -> Optional[DegreeBoundExhaustedError]:
        return self._mu_failure

    def implicit(self):
        with self._lock:
            if self._implicit is None:
                self._implicit = implicitize(self.surface)
            return self._implicit

    def _guarded(self, func, *args, **kwargs) -> Dict[str, Any]:
        try:
            return func(*args, **kwargs).to_dict()
        except PysingError as err:
            return {"status": f"ERROR {err.code}", "message": err.message}

    def _oracle_check(self, X0: ProjPoint, r: int) -> Dict[str, Any]:
        try:
            order = classic_order(self.implicit(), X0)
        except PysingError as err:
            return {"status": f"ERROR {err.code}", "message": err.message}
        return {"count": order, "expected": r, "agrees": order == r, "status": "OK"}

    def _random_plane(self, mu) -> MovingPlane:
        alpha, beta, gamma = draw_coefficients(make_rng(self.seed, 1), 3, 10)
        comps = [alpha * f + beta * g + gamma * h for f, g, h in zip(*(L.components for L in mu.planes))]
        return MovingPlane(*comps)

    def _moving_surfaces(self, mu):
        ring = ring_of(*SPACE_VARIABLES, "s", "t", "u")
        x, y, z, w = (ring.gens[i] for i in range(4))
        a, b, c, d = (to_ring(f, ring) for f in self.surface.homogeneous())
        surfaces = {"moving_surface_zd_wc": z * d - w * c}
        if mu is not None:
            X = (x, y, z, w)
            surfaces["moving_surface_product"] = mu.p.dot(X) * mu.q.dot(X)
        return surfaces

    def _verify_point(self, X0: ProjPoint, r: int) -> Dict[str, Any]:
        P, seed, config = self.surface, self.seed, self.config
        checks = {"oracle": self._oracle_check(X0, r)}
        base = self.base_points()
        if base.lam:
            skipped = {"status": STATUS_SKIPPED, "message": f"surface has base points (lambda = {base.lam})"}
            for name in ("moving_plane_L3", "moving_surface_zd_wc"):
                checks[name] = dict(skipped)
            return checks
        common = dict(seed=seed, base=base, expected=r, config=config)
        checks["moving_plane_L3"] = self._guarded(verify_moving_plane_count, P, X0, special_planes(P)[2], **common)
        mu = self.mu_basis()
        if mu is not None:
            checks["moving_plane_mu_combination"] = self._guarded(
                verify_moving_plane_count, P, X0, self._random_plane(mu), **common)
            checks["mu_basis"] = self._guarded(mu_basis_order, P, X0, mu, chart_bases=self._chart_bases, **common)
            checks["combined_planes"] = self._guarded(combined_planes_order, P, X0, mu, **common)
        for name, f in self._moving_surfaces(mu).items():
            checks[name] = self._guarded(verify_moving_surface_count, P, X0, f, **common)
        return checks

    def analyze_point(self, X0, verify: bool = False) -> Dict[str, Any]:
        X0 = X0 if isinstance(X0, ProjPoint) else ProjPoint(tuple(X0))
        report = sing_order(self.surface, X0, self.seed, base=self.base_points(), config=self.config)
        entry = report.to_dict()
        entry["checks"] = self._verify_point(X0, report.r) if verify else {}
        return entry

    def report(self, points: Sequence = (), verify: bool = False) -> Dict[str, Any]:
        base = self.base_points()
        mu = self.mu_basis()
        doc: Dict[str, Any] = {
            "surface": self.surface.to_dict(),
            "n": self.surface.n,
            "seed": self.seed,
            "lambda": base.lam,
            "lambda_note": base.lambda_note,
            "base_points": base.to_dict(),
            "implicit_degree": self.implicit_degree(),
            "mu_basis": mu.to_dict() if mu is not None else None,
        }
        if self._mu_failure is not None:
            doc["mu_basis_failure"] = {"candidates": self._mu_failure.candidates,
                                       "diagnostics": self._mu_failure.diagnostics}
        if verify:
            implicit = self.implicit()
            doc["implicit"] = implicit.to_dict()
            doc["degree_check"] = check_implicit_degree(self.surface, implicit, self.seed, base, self.config)
        workers = max(1, int(self.config["workers"]))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            doc["points"] = list(pool.map(lambda X0: self.analyze_point(X0, verify), points))
        if verify:
            doc["verified"] = self._all_agree(doc)
        logger.info("analyzed %d point(s)", len(doc["points"]))
        return doc

    def __call__(self, points: Sequence = (), verify: bool = False) -> Dict[str, Any]:
        return self.report(points, verify)

    @staticmethod
    def _all_agree(doc: Dict[str, Any]) -> bool:
        """True when every check either agrees or has nothing to say; errors count as failures."""
        verified = bool(doc["degree_check"]["consistent"])
        for entry in doc["points"]:
            for name, check in entry["checks"].items():
                if check.get("status", "").startswith("ERROR"):
                    logger.warning("check %s at (%s) failed: %s", name, ", ".join(entry["point"]), check["status"])
                    verified = False
                elif check.get("agrees") is False:
                    verified = False
        return verified
