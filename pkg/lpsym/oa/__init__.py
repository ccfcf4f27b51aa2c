from .groups import apply_to_array, column_swap, iso_group, od_group, r_operation, run_permutation, symbol_permutation
from .ilp import (
    InequalityForm,
    build_ilp_bf,
    build_ilp_improved,
    build_ilp_jform,
    build_inequality_form,
    hadamard_row,
    j_matrix,
    standard_relaxation,
)
from .indexing import (
    FrequencyVector,
    SignedArray,
    all_runs,
    format_array,
    freq_index,
    frequency_vector,
    index_levels,
    parse_array,
)
from .jchar import JChar, is_oa, j_characteristics, vanishing_j
from .spec import OASpec

__all__ = [
    # spec
    'OASpec',
    # indexing
    'FrequencyVector',
    'SignedArray',
    'freq_index',
    'index_levels',
    'all_runs',
    'frequency_vector',
    'parse_array',
    'format_array',
    # ilp
    'build_ilp_bf',
    'build_ilp_improved',
    'standard_relaxation',
    'build_ilp_jform',
    'build_inequality_form',
    'InequalityForm',
    'hadamard_row',
    'j_matrix',
    # jchar
    'JChar',
    'j_characteristics',
    'vanishing_j',
    'is_oa',
    # groups
    'iso_group',
    'od_group',
    'r_operation',
    'column_swap',
    'symbol_permutation',
    'run_permutation',
    'apply_to_array',
]
