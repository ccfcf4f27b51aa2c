from __future__ import annotations

from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from typing_extensions import Doc

from lpsym.exceptions import InvalidSpec


class OASpec(BaseModel):
    """
    Parameters of an orthogonal array OA(N, k, s, t) and the per-run frequency cap.

    Every t-column subarray contains each of the s^t level tuples exactly λ = N/s^t times.
    """

    model_config = ConfigDict(frozen=True)

    N: Annotated[int, Field(ge=1), Doc('Run count.')]
    k: Annotated[int, Field(ge=1), Doc('Factor (column) count.')]
    s: Annotated[int, Field(ge=2), Doc('Symbol count per column.')]
    t: Annotated[int, Field(ge=0), Doc('Strength.')]
    p_max: Annotated[
        int | None,
        Field(default=None, ge=1),
        Doc('Upper bound on how often a single run may repeat; defaults to λ.'),
    ] = None

    @model_validator(mode='after')
    def _check_divisibility(self) -> OASpec:
        if self.t > self.k:
            raise InvalidSpec(f'Strength t={self.t} exceeds the factor count k={self.k}.')
        if self.N % self.s**self.t:
            raise InvalidSpec(f's^t = {self.s**self.t} does not divide N = {self.N}.')
        lam = self.N // self.s**self.t
        if self.p_max is None:
            object.__setattr__(self, 'p_max', lam)
        elif self.p_max > lam:
            raise InvalidSpec(f'p_max = {self.p_max} exceeds λ = {lam}.')
        if self.t < self.k and self.cap * self.s ** (self.k - self.t) == lam:
            raise InvalidSpec(
                f'p_max = λ/s^(k-t) = {self.cap}: every run is forced to appear exactly p_max times and '
                'the frequency bounds are not facets.'
            )
        return self

    @classmethod
    def create(cls, N: int, k: int, s: int, t: int, p_max: int | None = None) -> OASpec:
        """Validated construction that reports every violation as InvalidSpec."""
        try:
            return cls(N=N, k=k, s=s, t=t, p_max=p_max)
        except ValidationError as exc:
            raise InvalidSpec(str(exc)) from exc

    @property
    def lam(self) -> int:
        return self.N // self.s**self.t

    @property
    def cap(self) -> int:
        """p_max with its default resolved."""
        assert self.p_max is not None
        return self.p_max

    @property
    def n_vars(self) -> int:
        return self.s**self.k

    def label(self) -> str:
        return f'OA({self.N},{self.k},{self.s},{self.t})'
