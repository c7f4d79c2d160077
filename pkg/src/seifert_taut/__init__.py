"""Taut foliations on Seifert fibered rational homology spheres, decided exactly."""

from .construction import Branch, WitnessTrace, construct_witness
from .errors import (
    ConstructionError,
    GeometryNotApplicable,
    InvalidInput,
    InvalidInvariant,
    ParseError,
    SeifertError,
)
from .foliation import PropertyStarWitness, Rule, TautVerdict, Verdict, decide_taut, property_star_holds, search_witness
from .invariants import (
    SeifertInvariant,
    Slope,
    canonical_form,
    detect_exceptional,
    euler_number,
    flip,
    geometry,
    homology_class,
    normalize,
)

__all__ = [
    "Branch",
    "ConstructionError",
    "GeometryNotApplicable",
    "InvalidInput",
    "InvalidInvariant",
    "ParseError",
    "PropertyStarWitness",
    "Rule",
    "SeifertError",
    "SeifertInvariant",
    "Slope",
    "TautVerdict",
    "Verdict",
    "WitnessTrace",
    "canonical_form",
    "construct_witness",
    "decide_taut",
    "detect_exceptional",
    "euler_number",
    "flip",
    "geometry",
    "homology_class",
    "normalize",
    "property_star_holds",
    "search_witness",
]
