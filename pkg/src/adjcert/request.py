"""Certificate requests: strict JSON schema, parsing, dispatch to the engines."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import jsonschema

from .certify import (CERTIFIED, HYPOTHESIS_FAILURE, INCONCLUSIVE, SCHEMA_VERSION,
                      Certificate, certify_general, certify_special)
from .config import SurfaceDecl
from .construct import single_surface_pipeline, strle_pipeline
from .lattice import HClass, IntersectionLattice, LatticeError

MODES = ("special", "general", "single-surface", "strle")

EXIT_CODES = {CERTIFIED: 0, INCONCLUSIVE: 2, HYPOTHESIS_FAILURE: 3}
EXIT_USAGE = 1

_int_list = {"type": "array", "items": {"type": "integer"}}

REQUEST_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["schema", "manifold", "characteristic", "surfaces", "mode"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "manifold": {
            "type": "object", "additionalProperties": False, "required": ["m", "n"],
            "properties": {"m": {"type": "integer", "minimum": 0},
                           "n": {"type": "integer", "minimum": 0}},
        },
        "characteristic": {
            "type": "object", "additionalProperties": False, "required": ["h", "e"],
            "properties": {"h": _int_list, "e": _int_list},
        },
        "surfaces": {
            "type": "array",
            "items": {
                "type": "object", "additionalProperties": False,
                "required": ["name", "h", "e", "genus"],
                "properties": {"name": {"type": "string", "minLength": 1},
                               "h": _int_list, "e": _int_list,
                               "genus": {"type": "integer", "minimum": 0}},
            },
        },
        "disjoint_pairs": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "string"},
                      "minItems": 2, "maxItems": 2},
        },
        "mode": {"enum": list(MODES)},
        "options": {
            "type": "object", "additionalProperties": False,
            "properties": {"assume_condition_i": {"type": "boolean"},
                           "emit_svg": {"type": "string"}},
        },
    },
}


class RequestError(ValueError):
    """Schema or semantic errors; ``errors`` holds (json_path, message) pairs."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(f"{p}: {m}" for p, m in self.errors))


def _path(parts) -> str:
    out = "$"
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


@dataclass(frozen=True)
class CertificateRequest:
    lattice: IntersectionLattice
    c: HClass
    surfaces: tuple
    disjoint_pairs: tuple
    mode: str
    options: dict = field(default_factory=dict)

    def index_pairs(self) -> list:
        idx = {s.name: i for i, s in enumerate(self.surfaces, 1)}
        return [(idx[a], idx[b]) for a, b in self.disjoint_pairs]

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "manifold": {"m": self.lattice.m, "n": self.lattice.n},
            "characteristic": self.c.to_json(),
            "surfaces": [{"name": s.name, **s.cls.to_json(), "genus": s.genus}
                         for s in self.surfaces],
            "disjoint_pairs": [list(p) for p in self.disjoint_pairs],
            "mode": self.mode,
            "options": dict(self.options),
        }


def request_from_data(data) -> CertificateRequest:
    validator = jsonschema.Draft7Validator(REQUEST_SCHEMA)
    errs = sorted(validator.iter_errors(data), key=lambda e: (list(e.absolute_path), e.message))
    if errs:
        raise RequestError([(_path(e.absolute_path), e.message) for e in errs])
    problems = []
    m, n = data["manifold"]["m"], data["manifold"]["n"]
    try:
        L = IntersectionLattice(m, n)
    except LatticeError as exc:
        raise RequestError([("$.manifold", str(exc))])

    def dims(path, obj):
        if len(obj["h"]) != m:
            problems.append((path + ".h", f"expected {m} H-coefficients, got {len(obj['h'])}"))
        if len(obj["e"]) != n:
            problems.append((path + ".e", f"expected {n} E-coefficients, got {len(obj['e'])}"))

    dims("$.characteristic", data["characteristic"])
    names = set()
    for i, s in enumerate(data["surfaces"]):
        dims(f"$.surfaces[{i}]", s)
        if s["name"] in names:
            problems.append((f"$.surfaces[{i}].name", f"duplicate surface name {s['name']!r}"))
        names.add(s["name"])
    pairs = []
    for i, (a, b) in enumerate(data.get("disjoint_pairs", [])):
        for j, nm in enumerate((a, b)):
            if nm not in names:
                problems.append((f"$.disjoint_pairs[{i}][{j}]", f"unknown surface {nm!r}"))
        if a == b:
            problems.append((f"$.disjoint_pairs[{i}]", "a surface cannot be disjoint from itself"))
        pairs.append((a, b))
    if problems:
        raise RequestError(problems)
    c = HClass(data["characteristic"]["h"], data["characteristic"]["e"])
    surfaces = tuple(SurfaceDecl(s["name"], HClass(s["h"], s["e"]), s["genus"])
                     for s in data["surfaces"])
    return CertificateRequest(L, c, surfaces, tuple(pairs), data["mode"],
                              dict(data.get("options", {})))


def parse_request(text: str) -> CertificateRequest:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RequestError([("$", f"malformed JSON: {exc}")])
    return request_from_data(data)


def request_from_parts(L, c, surfaces, index_pairs, mode, **options) -> CertificateRequest:
    names = [s.name for s in surfaces]
    pairs = tuple((names[a - 1], names[b - 1]) for a, b in index_pairs)
    return CertificateRequest(L, c, tuple(surfaces), pairs, mode, dict(options))


def run(req: CertificateRequest) -> Certificate:
    L, c, pairs = req.lattice, req.c, req.index_pairs()
    if req.mode == "special":
        return certify_special(L, c, req.surfaces, pairs)
    if req.mode == "general":
        return certify_general(L, c, req.surfaces, pairs,
                               assume_condition_i=req.options.get("assume_condition_i", False))
    if req.mode == "single-surface":
        if not req.surfaces:
            raise RequestError([("$.surfaces", "single-surface mode needs Sigma first")])
        return single_surface_pipeline(L, c, req.surfaces[0], req.surfaces[1:], pairs)
    if req.mode == "strle":
        return strle_pipeline(L, c, req.surfaces, pairs)
    raise RequestError([("$.mode", f"unknown mode {req.mode!r}")])


def exit_code(cert: Certificate) -> int:
    return EXIT_CODES[cert.status]


def recheck(cert_json: dict) -> bool:
    """Re-run a serialized certificate from its own input block and compare."""
    cert = run(request_from_data(cert_json["input"]))
    return cert.to_json() == cert_json
