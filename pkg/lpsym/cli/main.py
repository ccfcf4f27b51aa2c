from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from lpsym.enums import Command, GroupTier
from lpsym.settings import Settings

from .config import JobConfig
from .runner import EXIT_PARSE, run

logger = logging.getLogger('lpsym')


def _common() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--output', type=Path, default=None, help='write the JSON report here instead of stdout')
    parent.add_argument('--log-level', type=str, default=None, help='DEBUG, INFO, WARNING (default) or ERROR')
    return parent


def _oa_flags(parser: argparse.ArgumentParser, *, need_n: bool) -> None:
    parser.add_argument('--N', type=int, required=need_n, default=None)
    parser.add_argument('--k', type=int, required=True)
    parser.add_argument('--s', type=int, required=True)
    parser.add_argument('--t', type=int, required=True)
    parser.add_argument('--p-max', dest='p_max', type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='lpsym', description='Exact LP symmetry groups and OA classification.')
    sub = parser.add_subparsers(dest='command', required=True)
    common = _common()
    tiers = [str(t) for t in GroupTier]

    p = sub.add_parser(str(Command.STANDARDIZE), parents=[common], help='bring an LP file into standard form')
    p.add_argument('inputs', nargs=1, type=Path)

    p = sub.add_parser(str(Command.SYMGROUP), parents=[common], help='symmetry group of an LP file')
    p.add_argument('inputs', nargs=1, type=Path)
    p.add_argument('--tier', choices=tiers[:-1], default=str(GroupTier.LP))
    p.add_argument('--dump-graph', dest='dump_graph', type=Path, default=None)

    p = sub.add_parser(str(Command.OA_GROUP), parents=[common], help='symmetry group of an OA formulation')
    _oa_flags(p, need_n=False)
    p.add_argument('--tier', choices=tiers, default=str(GroupTier.LP))
    p.add_argument('--dump-graph', dest='dump_graph', type=Path, default=None)

    p = sub.add_parser(str(Command.CLASSIFY), parents=[common], help='one OA per equivalence class')
    _oa_flags(p, need_n=True)
    p.add_argument('--tier', choices=tiers, default=str(GroupTier.LP))
    p.add_argument('--formulation', choices=['improved', 'bf'], default='improved')
    p.add_argument('--workers', type=int, default=None)

    p = sub.add_parser(str(Command.JCHAR), parents=[common], help='J-characteristics of a two-level array')
    p.add_argument('inputs', nargs=1, type=Path)
    p.add_argument('--t', type=int, default=None, help='report up to this order and check strength t')

    return parser


def _job(args: argparse.Namespace, settings: Settings) -> JobConfig:
    fields = {
        key: value
        for key, value in vars(args).items()
        if key not in ('log_level',) and value is not None
    }
    fields.setdefault('workers', settings.workers)
    if 'inputs' in fields:
        fields['inputs'] = tuple(fields['inputs'])
    return JobConfig(**fields)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    settings = Settings.from_env()
    level = (args.log_level or settings.log_level).upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format='%(levelname)s %(name)s: %(message)s')

    try:
        cfg = _job(args, settings)
    except ValidationError as exc:
        logger.error('invalid arguments: %s', exc)
        return EXIT_PARSE
    return run(cfg, settings).exit_code


if __name__ == '__main__':
    sys.exit(main())
