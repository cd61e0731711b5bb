"""Bounded enumeration of cyclically orthogonal square-zero quadruples in b+ = 2."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import jsonschema

from .certify import SCHEMA_VERSION
from .halfgeom import hyperplane_of, intersect_lines, winding_number
from .lattice import HClass, IntersectionLattice, pairing, square
from .request import RequestError, _path

COEFFICIENT_CEILING = 3
CANDIDATE_NOTE = "requires geometric disjointness certificate from user"

_int_list = {"type": "array", "items": {"type": "integer"}}

SEARCH_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["schema", "manifold", "characteristic", "coefficient_bound"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "manifold": {
            "type": "object", "additionalProperties": False, "required": ["m", "n"],
            "properties": {"m": {"const": 2}, "n": {"type": "integer", "minimum": 0}},
        },
        "characteristic": {
            "type": "object", "additionalProperties": False, "required": ["h", "e"],
            "properties": {"h": _int_list, "e": _int_list},
        },
        "coefficient_bound": {"type": "integer", "minimum": 0},
        "count": {"const": 4},
        "limit": {"type": "integer", "minimum": 1},
    },
}


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchSpec:
    lattice: IntersectionLattice
    c: HClass
    coefficient_bound: int
    limit: int | None = None
    ceiling: int = COEFFICIENT_CEILING


def parse_search_spec(text: str) -> SearchSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RequestError([("$", f"malformed JSON: {exc}")])
    errs = list(jsonschema.Draft7Validator(SEARCH_SCHEMA).iter_errors(data))
    if errs:
        raise RequestError([(_path(e.absolute_path), e.message) for e in errs])
    m, n = data["manifold"]["m"], data["manifold"]["n"]
    ch = data["characteristic"]
    if len(ch["h"]) != m or len(ch["e"]) != n:
        raise RequestError([("$.characteristic", "dimension mismatch with manifold")])
    return SearchSpec(IntersectionLattice(m, n), HClass(ch["h"], ch["e"]),
                      data["coefficient_bound"], data.get("limit"))


def _square_zero_classes(L, c, bound):
    rng = range(-bound, bound + 1)
    out = []
    for coords in itertools.product(rng, repeat=L.rank):
        x = HClass(coords[:L.m], coords[L.m:])
        if square(L, x) == 0 and pairing(L, c, x) != 0:
            out.append(x)
    return out


def search_quadruples(spec: SearchSpec) -> list:
    """Quadruples (a1..a4), lexicographic in their coordinates, passing condition (A).

    Only algebraic data is checked; whether disjoint representatives exist is
    left to the user, as the annotation on every candidate says.
    """
    L, c = spec.lattice, spec.c
    if L.bplus != 2:
        raise SearchError("quadruple search needs b+ = 2")
    if not 0 <= spec.coefficient_bound <= spec.ceiling:
        raise SearchError(f"coefficient bound {spec.coefficient_bound} outside [0, {spec.ceiling}]")
    classes = sorted(_square_zero_classes(L, c, spec.coefficient_bound), key=lambda x: x.coords)
    lines = {x: hyperplane_of(L, x, c) for x in classes}
    orth = {x: [y for y in classes if pairing(L, x, y) == 0] for x in classes}
    # vertex of every consecutive pair, computed once; None when the lines do not cross
    vertex = {}
    for x in classes:
        for y in orth[x]:
            v = intersect_lines(lines[x], lines[y])
            vertex[x, y] = v if isinstance(v, tuple) else None
    found = []
    for a1 in classes:
        for a2 in orth[a1]:
            v1 = vertex[a1, a2]
            if v1 is None:
                continue
            for a3 in orth[a2]:
                v2 = vertex[a2, a3]
                if v2 is None:
                    continue
                for a4 in orth[a3]:
                    v3 = vertex[a3, a4]
                    v4 = vertex.get((a4, a1))
                    if v3 is None or v4 is None:
                        continue
                    w = winding_number((v1, v2, v3, v4))
                    if w == 0:
                        continue
                    found.append({
                        "classes": [a.to_json() for a in (a1, a2, a3, a4)],
                        "c_dot_alpha": [pairing(L, c, a) for a in (a1, a2, a3, a4)],
                        "winding": w,
                        "note": CANDIDATE_NOTE,
                    })
                    if spec.limit is not None and len(found) >= spec.limit:
                        return found
    return found
