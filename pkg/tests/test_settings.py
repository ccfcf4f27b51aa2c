from __future__ import annotations

from fractions import Fraction

import pytest
from pydantic import ValidationError

from lpsym.settings import Settings
from lpsym.utils import experimental, value_classes


def test_settings__defaults() -> None:
    settings = Settings()
    assert settings.node_limit is None
    assert settings.workers == 1
    assert settings.log_level == 'WARNING'
    with pytest.raises(ValidationError):
        Settings(workers=0)
    with pytest.raises(ValidationError):
        Settings(max_cosets=0)


def test_settings__from_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """
    < Environment overrides with the LPSYM_ prefix >
    1. Numeric caps and the log level are read from the environment.
    2. `unlimited` clears the node cap and blank values keep the defaults.
    """
    # 1
    monkeypatch.setenv('LPSYM_MAX_COSETS', '500')
    monkeypatch.setenv('LPSYM_NODE_LIMIT', '1000')
    monkeypatch.setenv('LPSYM_WORKERS', '3')
    monkeypatch.setenv('LPSYM_LOG_LEVEL', 'debug')
    settings = Settings.from_env()
    assert settings.max_cosets == 500
    assert settings.node_limit == 1000
    assert settings.workers == 3
    assert settings.log_level == 'DEBUG'

    # 2
    monkeypatch.setenv('LPSYM_NODE_LIMIT', 'unlimited')
    monkeypatch.setenv('LPSYM_WORKERS', ' ')
    settings = Settings.from_env()
    assert settings.node_limit is None
    assert settings.workers == 1


def test_settings__are_frozen() -> None:
    with pytest.raises(ValidationError):
        Settings().workers = 2  # type: ignore[misc]


def test_experimental__warns_and_forwards() -> None:
    @experimental
    def double(x: int) -> int:
        return 2 * x

    with pytest.warns(UserWarning, match='double'):
        assert double(4) == 8
    assert double.__name__ == 'double'


def test_value_classes__rank_by_value() -> None:
    ids, palette = value_classes([Fraction(1, 2), Fraction(-1), Fraction(1, 2), Fraction(0)])
    assert ids == [2, 0, 2, 1]
    assert palette == [Fraction(-1), Fraction(0), Fraction(1, 2)]
    # presentation order does not change the numbering
    assert value_classes([Fraction(0), Fraction(-1)])[0] == [1, 0]
