from .chain import StabilizerChain
from .group import PermGroup, contains, generated, orbit_projector, orbits, order, permutation_matrix
from .perm import Perm
from .search import double_cosets, intersect, left_coset_key

__all__ = [
    # perm
    'Perm',
    # chain
    'StabilizerChain',
    # group
    'PermGroup',
    'generated',
    'orbits',
    'order',
    'contains',
    'orbit_projector',
    'permutation_matrix',
    # search
    'intersect',
    'double_cosets',
    'left_coset_key',
]
