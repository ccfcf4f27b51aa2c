import functools
import warnings
from collections.abc import Callable, Iterable
from typing import Any, TypeVar, cast

F = TypeVar('F', bound=Callable[..., Any])
V = TypeVar('V')


def experimental(func: F) -> F:
    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        warnings.warn(
            f'{func.__name__}() is experimental and may change or be removed in a future release.',
            category=UserWarning,
            stacklevel=2,
        )
        return func(*args, **kwargs)

    return cast(F, wrapper)


def value_classes(values: Iterable[V]) -> tuple[list[int], list[V]]:
    """
    Assign dense class ids to values by rank among the sorted distinct values.

    Returns (ids, palette) with palette[ids[i]] == values[i]. Values must be
    hashable and mutually comparable (rationals, or tuples of str/rationals).
    The numbering depends only on the value set, never on presentation order.
    """
    items = list(values)
    palette = sorted(set(items))  # type: ignore[type-var]
    index = {v: i for i, v in enumerate(palette)}
    return [index[v] for v in items], palette
