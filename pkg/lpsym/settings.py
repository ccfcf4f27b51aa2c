from __future__ import annotations

import os
from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field
from typing_extensions import Doc

ENV_PREFIX = 'LPSYM_'


def _env_int(name: str, default: int | None) -> int | None:
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None or raw.strip() == '':
        return default
    if raw.strip().lower() in ('none', 'off', 'unlimited'):
        return None
    return int(raw)


class Settings(BaseModel):
    """
    Process-wide resource caps and defaults.

    The library reads these only through explicit `settings=` parameters (falling back
    to `Settings()` defaults); `Settings.from_env()` is what the CLI passes in.
    """

    model_config = ConfigDict(frozen=True)

    max_cosets: Annotated[
        int,
        Field(gt=0),
        Doc('Upper bound on left cosets enumerated while splitting a group into double cosets.'),
    ] = 200_000
    max_double_cosets: Annotated[
        int,
        Field(gt=0),
        Doc('Upper bound on the number q of double-coset representatives walked while extending G^Null or G^LP_c.'),
    ] = 10_000
    node_limit: Annotated[
        int | None,
        Field(gt=0),
        Doc('Branch-and-bound node cap; None means unlimited.'),
    ] = None
    workers: Annotated[
        int,
        Field(ge=1),
        Doc('Default worker-process count for classification.'),
    ] = 1
    log_level: Annotated[str, Doc('Logging level name used by the CLI.')] = 'WARNING'

    @classmethod
    def from_env(cls) -> Settings:
        defaults = cls()
        return cls(
            max_cosets=_env_int('MAX_COSETS', defaults.max_cosets) or defaults.max_cosets,
            max_double_cosets=_env_int('MAX_DOUBLE_COSETS', defaults.max_double_cosets)
            or defaults.max_double_cosets,
            node_limit=_env_int('NODE_LIMIT', defaults.node_limit),
            workers=_env_int('WORKERS', defaults.workers) or defaults.workers,
            log_level=os.getenv(ENV_PREFIX + 'LOG_LEVEL', defaults.log_level).upper(),
        )


DEFAULT_SETTINGS = Settings()
