from __future__ import annotations

from pathlib import Path
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from typing_extensions import Doc

from lpsym.enums import Command, GroupTier
from lpsym.oa import OASpec


class JobConfig(BaseModel):
    """One CLI invocation, validated before any work starts."""

    model_config = ConfigDict(frozen=True)

    command: Annotated[Command, Doc('Subcommand to run.')]
    inputs: Annotated[tuple[Path, ...], Doc('Input files (LP text or symbol array).')] = ()
    tier: Annotated[GroupTier, Doc('Which symmetry group to compute or to prune with.')] = GroupTier.LP
    N: Annotated[int | None, Field(ge=1), Doc('Run count; oa-group defaults it to s^t.')] = None
    k: Annotated[int | None, Field(ge=1)] = None
    s: Annotated[int | None, Field(ge=2)] = None
    t: Annotated[int | None, Field(ge=0)] = None
    p_max: Annotated[int | None, Field(ge=1), Doc('Override of the per-run frequency cap.')] = None
    formulation: Annotated[
        Literal['improved', 'bf'],
        Doc('Which OA-defining ILP classify branches on.'),
    ] = 'improved'
    output: Annotated[Path | None, Doc('Report path; stdout when omitted.')] = None
    workers: Annotated[int, Field(ge=1), Doc('Worker processes for classification.')] = 1
    dump_graph: Annotated[Path | None, Doc('Write the formulation graph in the DIMACS-like dump format.')] = None

    @field_validator('tier', mode='before')
    @classmethod
    def _parse_tier(cls, value: object) -> GroupTier:
        return GroupTier.from_name(value)

    @model_validator(mode='after')
    def _check_combination(self) -> JobConfig:
        if self.tier is GroupTier.LPLEQ and not self.command.uses_oa_spec:
            raise ValueError(f'Tier lpleq needs an orthogonal-array job, not {self.command}.')
        if self.command.uses_oa_spec:
            if None in (self.k, self.s, self.t):
                raise ValueError(f'{self.command} needs --k, --s and --t.')
            if self.command is Command.CLASSIFY and self.N is None:
                raise ValueError('classify needs --N.')
        elif not self.inputs:
            raise ValueError(f'{self.command} needs an input file.')
        return self

    def oa_spec(self) -> OASpec:
        assert self.k is not None and self.s is not None and self.t is not None
        n_runs = self.N if self.N is not None else self.s**self.t
        return OASpec.create(N=n_runs, k=self.k, s=self.s, t=self.t, p_max=self.p_max)
