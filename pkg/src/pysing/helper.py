import copy
import json
import logging
import re
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence

import numpy as np

from .errors import NonRationalPointError

logger = logging.getLogger(__name__)

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")


def default_config():
    """
    Returns the default configuration dictionary shared by every analysis.
    Individual entries can be overridden through a JSON config string.
    """
    config = {}
    config["seed"] = 0
    config["workers"] = 4

    # Generic linear combinations (reduction ideals)
    config["genericity"] = {}
    config["genericity"]["coefficient_bound"] = 10000
    config["genericity"]["max_retries"] = 5

    # Local colength by truncation I + m^N, N capped at factor * prod(deg) + offset
    config["truncation"] = {}
    config["truncation"]["factor"] = 4
    config["truncation"]["offset"] = 4

    config["hilbert"] = {}
    config["hilbert"]["start_level"] = 1
    config["hilbert"]["max_level"] = 12

    # None means twice the surface degree
    config["mu_basis"] = {}
    config["mu_basis"]["degree_bound"] = None

    # "abcd": generic combinations of all four coordinates
    # "abc": combinations of a, b, c split against <a, b, c, d>
    config["base_points"] = {}
    config["base_points"]["lambda_generators"] = "abcd"
    return config


def merge_config(base: Mapping[str, Any], override: Optional[Mapping[str, Any]]) -> Dict[str, Any]:
    merged = copy.deepcopy(dict(base))
    if not override:
        return merged
    for key, value in override.items():
        if isinstance(value, Mapping) and isinstance(merged.get(key), Mapping):
            merged[key] = merge_config(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def parse_config(config_str: Optional[str]) -> Dict[str, Any]:
    """Decodes a JSON configuration string into an override dict."""
    if not config_str:
        return {}
    try:
        config = json.loads(config_str)
    except json.JSONDecodeError:
        raise ValueError("Invalid JSON configuration string.")
    if not isinstance(config, dict):
        raise ValueError("Invalid JSON configuration string.")
    return config


def resolve_config(config: Optional[Mapping[str, Any]]) -> Dict[str, Any]:
    if config is None:
        return default_config()
    return merge_config(default_config(), config)


def parse_rational(text) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, (int, np.integer)):
        return Fraction(int(text))
    text = str(text).strip()
    if not _RATIONAL.fullmatch(text):
        raise NonRationalPointError(f"not a rational number: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise NonRationalPointError(f"zero denominator: {text!r}")


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    return np.random.default_rng([int(seed), int(stream)])


def draw_coefficients(rng: np.random.Generator, count: int, bound: int = 10000) -> List[int]:
    """Draws ``count`` nonzero integers uniformly from [-bound, bound]."""
    values = rng.integers(-bound, bound, size=count, endpoint=True)
    while np.any(values == 0):
        zeros = values == 0
        values[zeros] = rng.integers(-bound, bound, size=int(zeros.sum()), endpoint=True)
    return [int(v) for v in values]


def draw_rationals(rng: np.random.Generator, count: int, bound: int = 10) -> List[Fraction]:
    numerators = rng.integers(-bound, bound, size=count, endpoint=True)
    denominators = rng.integers(1, bound, size=count, endpoint=True)
    return [Fraction(int(p), int(q)) for p, q in zip(numerators, denominators)]

