from .classify import ClassificationRun, classify, is_lex_min, verify_partition
from .enums import Command, GroupTier, LpStatus, RowKind
from .exceptions import *
from .graphs import ColoredGraph, automorphisms, formulation_graph, graph_from_matrix
from .groups import Perm, PermGroup, StabilizerChain
from .linalg import RatMatrix
from .lp import IntegerProgram, LinearProgram, LpBuilder, format_lp, parse_lp, solve, standardize
from .oa import OASpec, build_ilp_bf, build_ilp_improved, iso_group, od_group, standard_relaxation
from .settings import DEFAULT_SETTINGS, Settings
from .symmetry import SymmetryResult, compute_symmetry, formulation_group, g_lp, g_lp_c, g_null

__all__ = [
    # linalg
    'RatMatrix',
    # lp
    'LinearProgram',
    'IntegerProgram',
    'LpBuilder',
    'parse_lp',
    'format_lp',
    'solve',
    'standardize',
    # groups
    'Perm',
    'PermGroup',
    'StabilizerChain',
    # graphs
    'ColoredGraph',
    'automorphisms',
    'graph_from_matrix',
    'formulation_graph',
    # symmetry
    'SymmetryResult',
    'formulation_group',
    'g_null',
    'g_lp_c',
    'g_lp',
    'compute_symmetry',
    # oa
    'OASpec',
    'build_ilp_bf',
    'build_ilp_improved',
    'standard_relaxation',
    'iso_group',
    'od_group',
    # classify
    'ClassificationRun',
    'classify',
    'is_lex_min',
    'verify_partition',
    # enums
    'Command',
    'GroupTier',
    'LpStatus',
    'RowKind',
    # settings
    'Settings',
    'DEFAULT_SETTINGS',
]


__version__ = '1.0.0'
