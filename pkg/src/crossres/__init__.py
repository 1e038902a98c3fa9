"""Crossed resolutions from free simplicial resolutions of group presentations."""
from .coset_oracle import CosetOverflow, CosetTable, enumerate_cosets
from .document import BUNDLED, ParseError, load_bundled, parse, render
from .skeleton import ConstructionData, Presentation, Skeleton, ValidationError, build_skeleton
from .words import GeneratorSymbol, StructureError, Word

__all__ = [
    "ConstructionData", "CosetOverflow", "CosetTable", "GeneratorSymbol", "ParseError",
    "Presentation", "Skeleton", "StructureError", "ValidationError", "Word",
    "BUNDLED", "build_skeleton", "enumerate_cosets", "load_bundled", "parse", "render",
]
__version__ = "0.1.0"
