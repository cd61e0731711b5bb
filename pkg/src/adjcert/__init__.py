"""Certify adjunction-type genus bounds for configurations of disjoint surfaces."""
from .certify import (CERTIFIED, HYPOTHESIS_FAILURE, INCONCLUSIVE, Certificate,
                      certify_general, certify_special, replay_stretch_contradiction)
from .config import SurfaceDecl, build_complex
from .construct import blow_up, single_surface_pipeline, strle_pipeline
from .lattice import HClass, IntersectionLattice, pairing, square
from .request import parse_request, run

__all__ = [
    "CERTIFIED", "HYPOTHESIS_FAILURE", "INCONCLUSIVE", "Certificate", "HClass",
    "IntersectionLattice", "SurfaceDecl", "blow_up", "build_complex", "certify_general",
    "certify_special", "pairing", "parse_request", "replay_stretch_contradiction", "run",
    "single_surface_pipeline", "square", "strle_pipeline",
]
