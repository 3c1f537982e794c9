"""Compute and certify list-distinguishing proper colorings of small graphs."""
from .graph import Graph, build_graph
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["Graph", "build_graph", "BACKEND", "__version__"]
