from .bnb import ClassificationRun, ClassificationStats, Solution, classify, verify_partition
from .lexmin import PartialSolution, canonical_image, check_group_degree, is_lex_min

__all__ = [
    # lexmin
    'PartialSolution',
    'is_lex_min',
    'canonical_image',
    'check_group_degree',
    # bnb
    'Solution',
    'ClassificationStats',
    'ClassificationRun',
    'classify',
    'verify_partition',
]
