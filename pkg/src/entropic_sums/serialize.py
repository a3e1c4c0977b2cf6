"""JSON instance loading and numeric formatting for the command-line front end."""

from __future__ import annotations

import json

import numpy as np

from .classical import JointDistribution, ProbVector
from .quantum import DensityOperator, PureEnsemble, RankOnePOVM


def _complex_grid(doc: dict, re_key: str, im_key: str) -> np.ndarray:
    re = np.asarray(doc[re_key], dtype=float)
    im = np.asarray(doc[im_key], dtype=float)
    if re.shape != im.shape:
        raise ValueError(f"'{re_key}' and '{im_key}' must have matching shapes")
    return re + 1j * im


def instance_from_dict(doc: dict):
    """Build a typed instance from a parsed JSON document; 'kind' selects the type."""
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ValueError("document must be a JSON object with a 'kind' field")
    kind = doc["kind"]
    try:
        if kind == "prob_vector":
            return ProbVector(doc["values"])
        if kind == "density":
            m = _complex_grid(doc, "re", "im")
            d = int(doc["dim"])
            if m.shape != (d, d):
                raise ValueError(f"density grids must be {d}x{d}, got {m.shape}")
            return DensityOperator(m)
        if kind == "joint":
            vals = np.asarray(doc["values"], dtype=float)
            if vals.shape != (int(doc["rows"]), int(doc["cols"])):
                raise ValueError(f"joint grid shape {vals.shape} does not match rows/cols")
            return JointDistribution(vals)
        if kind == "ensemble":
            states = _complex_grid(doc, "states_re", "states_im")
            return PureEnsemble(doc["weights"], states)
        if kind == "povm":
            return RankOnePOVM(_complex_grid(doc, "vectors_re", "vectors_im"))
    except KeyError as exc:
        raise ValueError(f"{kind!r} document is missing field {exc}") from None
    raise ValueError(f"unknown instance kind {kind!r}")


def load_instance(path: str):
    """Load one typed instance from a JSON file."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from None
    return instance_from_dict(doc)


def fmt_float(x) -> str:
    """17-significant-digit, locale-independent rendering."""
    return format(float(x), ".17g")


def fmt_cell(value) -> str:
    """CSV cell: floats at 17 digits, booleans lowercase, None empty, text as is."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return fmt_float(value)
