from .elimination import Rref, bareiss_inverse, independent_rows, rank, row_space_projector, rref
from .matrix import Rat, RatLike, RatMatrix, RatVector, dot, format_rat, to_rat, vector

__all__ = [
    # matrix
    'Rat',
    'RatLike',
    'RatMatrix',
    'RatVector',
    'dot',
    'format_rat',
    'to_rat',
    'vector',
    # elimination
    'Rref',
    'rref',
    'rank',
    'independent_rows',
    'bareiss_inverse',
    'row_space_projector',
]
