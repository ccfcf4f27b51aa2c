from enum import Enum


class LpStatus(str, Enum):
    OPTIMAL = 'optimal'
    INFEASIBLE = 'infeasible'
    UNBOUNDED = 'unbounded'

    def __str__(self) -> str:
        return self.value


class RowKind(str, Enum):
    EQ = 'eq'
    INEQ = 'ineq'

    def __str__(self) -> str:
        return self.value


class GroupTier(str, Enum):
    """
    Which symmetry group a result certifies.

    - FORMULATION : permutations fixing the written system (A, b, B, d, c)
    - NULL        : Stab(Row(A)) ∩ G(B, d, c)
    - LP_C        : the largest c-preserving subgroup of G^LP
    - LP          : the full LP symmetry group G^LP
    - LPLEQ       : formulation group of the inequality-only OA formulation
    """

    FORMULATION = 'formulation'
    NULL = 'null'
    LP_C = 'lp_c'
    LP = 'lp'
    LPLEQ = 'lpleq'

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_name(cls, name: object) -> 'GroupTier':
        if isinstance(name, cls):
            return name
        if isinstance(name, str):
            for member in cls:
                if member.value == name.lower():
                    return member
        raise ValueError(f'Unsupported group tier: {name!r}')


class Command(str, Enum):
    STANDARDIZE = 'standardize'
    SYMGROUP = 'symgroup'
    OA_GROUP = 'oa-group'
    CLASSIFY = 'classify'
    JCHAR = 'jchar'

    def __str__(self) -> str:
        return self.value

    @property
    def uses_oa_spec(self) -> bool:
        return self in (Command.OA_GROUP, Command.CLASSIFY)
