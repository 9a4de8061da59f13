"""
Domain values: chains, cones, codes, polynomials, symmetric functions,
graphs and flags.
"""
from preperm.models.chain import Chain, Cone, Ray, ray_of
from preperm.models.code import Code, Component, admissibility_error
from preperm.models.flag import (
    DiagonalOperator,
    FlagSpec,
    HessenbergFunction,
    h_plus,
    hessenberg_function,
    validate_hessenberg,
)
from preperm.models.graph import Edge, Graph
from preperm.models.options import BettiMethod, CharSource, GraphKind, OutputFormat
from preperm.models.symfunc import (
    Partition,
    SymBasis,
    SymSeries,
    format_partition,
    make_partition,
    parse_partition,
)
from preperm.models.tpoly import TPoly, t

__all__ = [
    "Chain",
    "Cone",
    "Ray",
    "ray_of",
    "Code",
    "Component",
    "admissibility_error",
    "DiagonalOperator",
    "FlagSpec",
    "HessenbergFunction",
    "h_plus",
    "hessenberg_function",
    "validate_hessenberg",
    "Edge",
    "Graph",
    "BettiMethod",
    "CharSource",
    "GraphKind",
    "OutputFormat",
    "Partition",
    "SymBasis",
    "SymSeries",
    "format_partition",
    "make_partition",
    "parse_partition",
    "TPoly",
    "t",
]
