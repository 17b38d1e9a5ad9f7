from .moves import MoveResult, RMoveSite, SiteError, apply_rmove, find_sites
from .pd import CrossingRoles, DiagramError, LinkDiagram, isomorphic, parse_pd

__all__ = [
    "CrossingRoles", "DiagramError", "LinkDiagram", "MoveResult", "RMoveSite",
    "SiteError", "apply_rmove", "find_sites", "isomorphic", "parse_pd",
]
