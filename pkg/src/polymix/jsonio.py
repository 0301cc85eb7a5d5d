"""Published JSON schemas and canonical serialization.

Schemas:
  polynomial   {"p": int, "d": int, "terms": [{"e": [int,...], "c": int}, ...]}
  polytope     {"vertices": [[int,...],...], "edges": [[i,j],...], "affine_dim": k}
  skeleton     {"dim": d, "vertices": [[...],...], "edges": [[i,j],...]}
               (vertex entries: ints, floats, or exact rationals "a/b")
  cylinder     {"window": [[int,...],...], "values": [int,...]}
  certificate  {"shape": [[...]], "coeffs": [...], "verified_k": [...],
                "frobenius_family": bool}
  fractions    {"num": int, "den": int}

Serialization is canonical: sorted keys, fixed separators, so repeated
runs on the same input are byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import ParseError
from .laurent import LaurentPoly, from_json_dict, to_json_dict
from .measure import CylinderSpec, MeasureResult
from .mixing import MixingBounds, ShapeCertificate
from .polytope import LatticePolytope
from .redraw import RedrawSpace, Skeleton, make_skeleton
from .seqgeom import RedrawMatch, SnappedShape


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": "))


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read JSON from {path}: {exc}") from exc


def load_poly(path: str) -> LaurentPoly:
    data = _load_json(path)
    try:
        return from_json_dict(data)
    except ValueError as exc:
        raise ParseError(f"bad polynomial file {path}: {exc}") from exc


def poly_json(g: LaurentPoly) -> dict:
    return to_json_dict(g)


def _rational_entry(x):
    if isinstance(x, bool):
        raise ParseError(f"vertex entry {x!r} is not a number")
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational entry {x!r}") from exc
    raise ParseError(f"bad vertex entry {x!r}")


def load_skeleton(path: str) -> Skeleton:
    data = _load_json(path)
    if not isinstance(data, dict):
        raise ParseError("skeleton JSON must be an object")
    try:
        dim = data["dim"]
        vertices = data["vertices"]
        edges = data["edges"]
    except KeyError as exc:
        raise ParseError(f"skeleton JSON missing key {exc}") from exc
    try:
        positions = [tuple(_rational_entry(x) for x in v) for v in vertices]
        return make_skeleton(int(dim), positions, [tuple(e) for e in edges])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad skeleton file {path}: {exc}") from exc


def parse_cylinder(data: dict, dim: int) -> CylinderSpec:
    if not isinstance(data, dict) or "window" not in data or "values" not in data:
        raise ParseError("cylinder JSON needs 'window' and 'values'")
    window = data["window"]
    values = data["values"]
    if not isinstance(window, list) or not isinstance(values, list):
        raise ParseError("cylinder 'window' and 'values' must be lists")
    if len(window) != len(values):
        raise ParseError("cylinder window and values differ in length")
    try:
        pairs = []
        for w, v in zip(window, values):
            w = tuple(int(x) for x in w)
            if len(w) != dim:
                raise ParseError(f"window point {w} does not have dimension {dim}")
            pairs.append((w, int(v)))
        return CylinderSpec.from_pairs(pairs)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad cylinder JSON: {exc}") from exc


def load_cylinder(path: str, dim: int) -> CylinderSpec:
    return parse_cylinder(_load_json(path), dim)


def fraction_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def polytope_json(poly: LatticePolytope) -> dict:
    return {
        "vertices": [list(v) for v in poly.vertices],
        "edges": [list(e) for e in poly.edges],
        "affine_dim": poly.affine_dim,
    }


def redraw_json(space: RedrawSpace) -> dict:
    out = {
        "dimension": space.dimension,
        "tight": space.tight,
        "arithmetic": space.arithmetic,
        "constraint_rank": space.constraint_rank,
    }
    if space.tolerance is not None:
        out["tolerance"] = space.tolerance
    return out


def bounds_json(bounds: MixingBounds) -> dict:
    return {
        "vertex_count": bounds.vertex_count,
        "support_size": bounds.support_size,
        "lower": bounds.lower,
        "upper": bounds.upper,
        "polytope_tight": bounds.polytope_tight,
        "redraw_dimension": bounds.redraw_dimension,
        "conclusion": bounds.conclusion,
    }


def certificate_json(cert: ShapeCertificate) -> dict:
    coeffs = []
    for c in cert.coefficients:
        if isinstance(c, int):
            coeffs.append(c)
        else:  # polynomial coefficient from a degree-bounded search
            coeffs.append({"terms": to_json_dict(c)["terms"]})
    return {
        "shape": [list(n) for n in cert.shape],
        "coeffs": coeffs,
        "verified_k": list(cert.verified_k),
        "frobenius_family": cert.frobenius_family,
    }


def measure_json(result: MeasureResult) -> dict:
    return {
        "value": result.value_json(),
        "box_margin_used": result.box_margin_used,
        "stabilized": result.stabilized,
        "method": result.method,
    }


def match_json(match: RedrawMatch | None) -> dict:
    if match is None:
        return {"match": None}
    out = {
        "match": {
            "pairing": [
                {"edge": list(edge), "pair": list(pair)} for edge, pair in match.pairing
            ],
            "perturbations": [list(d) for d in match.perturbations],
            "K": match.K,
            "homothety": None,
        }
    }
    if match.homothety is not None:
        scale, translation = match.homothety
        out["match"]["homothety"] = {
            "scale": fraction_json(scale),
            "translation": [fraction_json(Fraction(t)) for t in translation],
        }
    return out


def snapped_json(snapped: SnappedShape) -> dict:
    return {
        "points": [list(p) for p in snapped.points],
        "scale": fraction_json(snapped.scale),
        "translation": [fraction_json(Fraction(t)) for t in snapped.translation],
    }
