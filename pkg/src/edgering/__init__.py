"""Edge rings of finite simple graphs: linear-resolution classification with exact cross-checks."""
from .classify import Classification, classify
from .graph import SimpleGraph, parse_edge_list

__all__ = ["Classification", "SimpleGraph", "classify", "parse_edge_list"]
__version__ = "0.1.0"
