from .methods import SymmetryResult, compute_symmetry, fix_lp, formulation_group, g_lp, g_lp_c, g_null
from .reduced import ReducedObjective, reduce_objective

__all__ = [
    # methods
    'SymmetryResult',
    'formulation_group',
    'fix_lp',
    'g_null',
    'g_lp_c',
    'g_lp',
    'compute_symmetry',
    # reduced
    'ReducedObjective',
    'reduce_objective',
]
