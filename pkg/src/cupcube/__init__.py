"""Exact trilinear forms from quandle shadow colorings of link diagrams."""
from .branched import branched_form, knot_diagram, table_check
from .coloring import Representation, colorings, shadow_extend
from .diagram import LinkDiagram, RMoveSite, apply_rmove, parse_pd
from .trilinear import DEFAULT, Convention, TrilinearPsi, cubic_tensor, trilinear_sum

__version__ = "0.1.0"
CONVENTION = DEFAULT.name
SCHEMA_VERSION = 1

__all__ = [
    "CONVENTION", "Convention", "DEFAULT", "LinkDiagram", "RMoveSite", "Representation",
    "SCHEMA_VERSION", "TrilinearPsi", "apply_rmove", "branched_form", "colorings",
    "cubic_tensor", "knot_diagram", "parse_pd", "shadow_extend", "table_check", "trilinear_sum",
]
