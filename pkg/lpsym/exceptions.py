# Exceptions defined within the library
#
# Every error also subclasses the closest builtin, so callers may catch either
# the library type or the builtin one.


class LpsymError(Exception):
    """Root of all library errors."""


class SingularGram(LpsymError, ArithmeticError):
    """The Gram matrix A·Aᵀ is not invertible (A lacks full row rank)."""


class InfeasibleInput(LpsymError, ValueError):
    """An operation that requires a feasible LP was given an infeasible one."""


class NotSymmetric(LpsymError, ValueError):
    pass


class DegreeMismatch(LpsymError, ValueError):
    """Permutations or groups acting on different point counts were combined."""


class GroupDegreeMismatch(DegreeMismatch):
    """A group's degree does not match the variable count of the program it acts on."""


class NotASubgroup(LpsymError, ValueError):
    pass


class NotStandardForm(LpsymError, ValueError):
    """The LP's equality matrix does not have full row rank."""


class LevelOutOfRange(LpsymError, ValueError):
    pass


class InvalidSpec(LpsymError, ValueError):
    pass


class NotBinary(InvalidSpec):
    """A two-level construction was requested for s != 2."""


class LpParseError(LpsymError, ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f'line {line}: {message}' if line is not None else message)


class ResourceLimitExceeded(LpsymError, RuntimeError):
    """A configured resource cap was hit; the computation was abandoned, not truncated."""


class CosetLimitExceeded(ResourceLimitExceeded):
    pass


class NodeLimitExceeded(ResourceLimitExceeded):
    pass


__all__ = [
    'LpsymError',
    'SingularGram',
    'InfeasibleInput',
    'NotSymmetric',
    'DegreeMismatch',
    'GroupDegreeMismatch',
    'NotASubgroup',
    'NotStandardForm',
    'LevelOutOfRange',
    'InvalidSpec',
    'NotBinary',
    'LpParseError',
    'ResourceLimitExceeded',
    'CosetLimitExceeded',
    'NodeLimitExceeded',
]
