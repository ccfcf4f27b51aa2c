from .config import JobConfig
from .main import build_parser, main
from .runner import EXIT_INFEASIBLE, EXIT_LIMIT, EXIT_OK, EXIT_PARSE, GroupReport, Report, RunOutcome, run

__all__ = [
    # config
    'JobConfig',
    # runner
    'Report',
    'GroupReport',
    'RunOutcome',
    'run',
    'EXIT_OK',
    'EXIT_PARSE',
    'EXIT_INFEASIBLE',
    'EXIT_LIMIT',
    # main
    'build_parser',
    'main',
]
