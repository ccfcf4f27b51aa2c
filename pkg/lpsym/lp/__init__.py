from .builder import LpBuilder
from .io import format_lp, parse_lp
from .model import IntegerProgram, LinearProgram, LpOutcome
from .sampling import sample_points, vertices
from .simplex import feasible_point, is_feasible, maximize, solve
from .standard_form import (
    StandardFormReport,
    find_implicit_equalities,
    has_full_row_rank,
    is_standard_form,
    remove_redundant_inequalities,
    standardize,
)

__all__ = [
    # model
    'LinearProgram',
    'LpOutcome',
    'IntegerProgram',
    # builder
    'LpBuilder',
    # simplex
    'solve',
    'is_feasible',
    'feasible_point',
    'maximize',
    # standard_form
    'StandardFormReport',
    'find_implicit_equalities',
    'remove_redundant_inequalities',
    'standardize',
    'has_full_row_rank',
    'is_standard_form',
    # sampling
    'sample_points',
    'vertices',
    # io
    'parse_lp',
    'format_lp',
]
