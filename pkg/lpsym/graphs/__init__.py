from .automorphism import automorphisms
from .builders import formulation_graph, graph_from_matrix
from .colored_graph import AutResult, ColoredGraph, dump_graph

__all__ = [
    # colored_graph
    'ColoredGraph',
    'AutResult',
    'dump_graph',
    # automorphism
    'automorphisms',
    # builders
    'graph_from_matrix',
    'formulation_graph',
]
