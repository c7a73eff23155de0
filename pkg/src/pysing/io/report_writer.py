"""Text and JSON rendering of analysis reports."""
import json
import logging
from typing import Any, Dict, List, Mapping

logger = logging.getLogger(__name__)

# key -> accepted types; a nested dict describes an object, a one-item list an array of it
POINT_SCHEMA = {
    "point": [str],
    "r": (int,),
    "lambda": (int,),
    "total_count": (int,),
    "pivot": (str,),
    "curves": [str],
    "multiplicity": (dict,),
    "checks": (dict,),
}

REPORT_SCHEMA = {
    "surface": {"a": (str,), "b": (str,), "c": (str,), "d": (str,)},
    "n": (int,),
    "seed": (int,),
    "lambda": (int,),
    "lambda_note": (str,),
    "base_points": (dict,),
    "implicit_degree": (int,),
    "mu_basis": (dict, type(None)),
    "points": [POINT_SCHEMA],
}

OPTIONAL_KEYS = {"implicit", "verified", "mu_basis_failure", "degree_check"}


def _check(value: Any, schema, path: str, problems: List[str]):
    if isinstance(schema, dict):
        if not isinstance(value, dict):
            problems.append(f"{path}: expected an object")
            return
        for key, sub in schema.items():
            if key not in value:
                problems.append(f"{path}.{key}: missing")
            else:
                _check(value[key], sub, f"{path}.{key}", problems)
    elif isinstance(schema, list):
        if not isinstance(value, list):
            problems.append(f"{path}: expected an array")
            return
        for i, item in enumerate(value):
            _check(item, schema[0], f"{path}[{i}]", problems)
    elif isinstance(schema, tuple):
        if isinstance(value, bool) and bool not in schema:
            problems.append(f"{path}: unexpected boolean")
        elif not isinstance(value, schema):
            problems.append(f"{path}: expected {' or '.join(t.__name__ for t in schema)}")
    elif not isinstance(value, schema):
        problems.append(f"{path}: expected {schema.__name__}")


def validate_report(doc: Mapping[str, Any]) -> List[str]:
    """Problems found in ``doc`` against ``REPORT_SCHEMA``; empty when valid."""
    problems: List[str] = []
    _check(doc, REPORT_SCHEMA, "$", problems)
    if isinstance(doc, Mapping):
        extra = set(doc).difference(REPORT_SCHEMA).difference(OPTIONAL_KEYS)
        problems.extend(f"$.{key}: unexpected key" for key in sorted(extra))
    return problems


def render_json(doc: Mapping[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _check_line(name: str, check: Mapping[str, Any]) -> str:
    if "count" not in check:
        return f"    {name}: {check.get('status', '?')}"
    agrees = {True: "agrees", False: "DISAGREES", None: ""}[check.get("agrees")]
    return f"    {name}: {check['count']} {agrees} [{check.get('status', '')}]".rstrip()


def render_text(doc: Mapping[str, Any]) -> str:
    """Human-readable summary of a full report."""
    surface = doc["surface"]
    lines = [
        f"surface: ({surface['a']}, {surface['b']}, {surface['c']}, {surface['d']})  degree n = {doc['n']}",
        f"lambda: {doc['lambda']}  ({doc['lambda_note']})",
        f"base points: {doc['base_points'].get('point_count', 0)} distinct",
        f"implicit degree: {doc['implicit_degree']}",
    ]
    mu = doc.get("mu_basis")
    if mu is None:
        lines.append("mu-basis: not found within the degree bound")
    else:
        lines.append(f"mu-basis (kappa = {mu['kappa']}, degrees {mu['degrees']}):")
        lines.extend(f"  {name} = ({', '.join(mu[name])})" for name in ("p", "q", "r"))
    if "implicit" in doc:
        lines.append(f"implicit equation: {doc['implicit']['f']}")
    for entry in doc["points"]:
        lines.append(f"point ({', '.join(entry['point'])}): r = {entry['r']}"
                     f"  (count {entry['total_count']}, pivot {entry['pivot']})")
        for name, check in sorted(entry["checks"].items()):
            lines.append(_check_line(name, check))
    if doc.get("verified") is not None:
        lines.append("verification: " + ("passed" if doc["verified"] else "FAILED"))
    return "\n".join(lines) + "\n"


def write_report(doc: Dict[str, Any], stream, as_json: bool = False):
    problems = validate_report(doc)
    if problems:
        logger.warning("report does not match the schema: %s", "; ".join(problems))
    stream.write(render_json(doc) if as_json else render_text(doc))
