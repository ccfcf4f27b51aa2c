"""
< Job execution behind the command line >
1. Every command produces a `Report`; the JSON goes to `--output` or stdout and a one-line
   summary goes to stderr.
2. Library errors become exit codes: 2 for unreadable input, 3 for an infeasible LP and 4 when
   a resource cap stops the computation.
3. LP commands always standardize first and compute groups on the standardized LP. OA
   commands compute groups on the anchor-free relaxation of the independent balance system.
"""

from __future__ import annotations

import hashlib
import logging
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Literal, NamedTuple

from pydantic import BaseModel, ValidationError

from lpsym import __version__
from lpsym.classify import classify
from lpsym.enums import Command, GroupTier
from lpsym.exceptions import InfeasibleInput, InvalidSpec, LpParseError, ResourceLimitExceeded
from lpsym.graphs import dump_graph, formulation_graph
from lpsym.groups import PermGroup
from lpsym.linalg import format_rat
from lpsym.lp import LinearProgram, format_lp, parse_lp, standardize
from lpsym.oa import (
    InequalityForm,
    OASpec,
    SignedArray,
    build_ilp_bf,
    build_ilp_improved,
    build_inequality_form,
    iso_group,
    j_characteristics,
    parse_array,
    standard_relaxation,
    vanishing_j,
)
from lpsym.settings import Settings
from lpsym.symmetry import SymmetryResult, compute_symmetry, formulation_group

from .config import JobConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_LIMIT = 4


class GroupReport(BaseModel):
    tier: str
    degree: int
    order: int
    generators: list[str]
    certificates: list[list[str]] = []


class Report(BaseModel):
    format: Literal[1] = 1
    version: str = __version__
    command: str
    input_sha256: str
    groups: list[GroupReport] = []
    group_seconds: float = 0.0
    search_seconds: float = 0.0
    solutions: list[list[int]] = []
    stats: dict[str, int] = {}
    details: dict[str, Any] = {}


class RunOutcome(NamedTuple):
    exit_code: int
    report: Report | None


@dataclass
class _Timer:
    group_seconds: float = 0.0
    search_seconds: float = 0.0
    _marks: dict[str, float] = field(default_factory=dict)

    def start(self, name: str) -> None:
        self._marks[name] = time.perf_counter()

    def stop(self, name: str) -> None:
        elapsed = time.perf_counter() - self._marks.pop(name)
        if name == 'group':
            self.group_seconds += elapsed
        else:
            self.search_seconds += elapsed


def _group_report(group: PermGroup, tier: GroupTier, certificates: tuple[Any, ...] = ()) -> GroupReport:
    return GroupReport(
        tier=str(tier),
        degree=group.degree,
        order=group.order(),
        generators=[str(g) for g in group.generators],
        certificates=[[format_rat(v) for v in point] for point in certificates],
    )


def _hash_files(paths: tuple[Path, ...]) -> str:
    digest = hashlib.sha256()
    for path in paths:
        digest.update(path.read_bytes())
    return digest.hexdigest()


def _hash_spec(spec: OASpec) -> str:
    return hashlib.sha256(spec.model_dump_json().encode()).hexdigest()


def _read_lp(path: Path) -> LinearProgram:
    return parse_lp(path.read_text(encoding='utf-8'))


def _maybe_dump(cfg: JobConfig, lp: LinearProgram) -> None:
    if cfg.dump_graph is not None:
        cfg.dump_graph.write_text(dump_graph(formulation_graph(lp)), encoding='utf-8')
        logger.info('formulation graph written to %s', cfg.dump_graph)


def _standardize(cfg: JobConfig) -> Report:
    lp = _read_lp(cfg.inputs[0])
    result = standardize(lp)
    return Report(
        command=str(cfg.command),
        input_sha256=_hash_files(cfg.inputs),
        details={
            'promoted_rows': result.promoted_rows,
            'dropped_inequalities': result.dropped_inequalities,
            'dropped_equalities': result.dropped_equalities,
            'lp': format_lp(result.lp),
        },
    )


def _symgroup(cfg: JobConfig, settings: Settings, timer: _Timer) -> Report:
    lp = standardize(_read_lp(cfg.inputs[0])).lp
    _maybe_dump(cfg, lp)
    timer.start('group')
    result = compute_symmetry(lp, cfg.tier, settings=settings)
    timer.stop('group')
    return Report(
        command=str(cfg.command),
        input_sha256=_hash_files(cfg.inputs),
        groups=[_group_report(result.group, result.tier, result.certificates)],
        group_seconds=timer.group_seconds,
    )


def _oa_symmetry(spec: OASpec, tier: GroupTier, settings: Settings) -> tuple[SymmetryResult, LinearProgram]:
    match tier:
        case GroupTier.FORMULATION:
            lp = build_ilp_bf(spec).lp
            return SymmetryResult(formulation_group(lp), tier), lp
        case GroupTier.LPLEQ:
            lp = build_inequality_form(spec).program.lp
            return SymmetryResult(formulation_group(lp), tier), lp
        case _:
            lp = standard_relaxation(spec)
            return compute_symmetry(lp, tier, settings=settings), lp


def _oa_group(cfg: JobConfig, settings: Settings, timer: _Timer) -> Report:
    spec = cfg.oa_spec()
    timer.start('group')
    result, lp = _oa_symmetry(spec, cfg.tier, settings)
    timer.stop('group')
    _maybe_dump(cfg, lp)
    return Report(
        command=str(cfg.command),
        input_sha256=_hash_spec(spec),
        groups=[_group_report(result.group, result.tier, result.certificates)],
        group_seconds=timer.group_seconds,
        details={'spec': spec.label(), 'p_max': spec.cap},
    )


def _classify(cfg: JobConfig, settings: Settings, timer: _Timer) -> Report:
    spec = cfg.oa_spec()
    timer.start('group')
    if cfg.tier is GroupTier.LPLEQ:
        form: InequalityForm | None = build_inequality_form(spec)
        ilp = form.program
        group = formulation_group(ilp.lp)
    else:
        form = None
        ilp = build_ilp_improved(spec) if cfg.formulation == 'improved' else build_ilp_bf(spec)
        if cfg.tier is GroupTier.FORMULATION:
            group = iso_group(spec.k, spec.s)
        else:
            group = _oa_symmetry(spec, cfg.tier, settings)[0].group
    timer.stop('group')

    timer.start('search')
    run = classify(ilp, group, workers=cfg.workers, settings=settings)
    timer.stop('search')
    if form is not None:
        solutions = sorted(form.lift(sol).counts for sol in run.solutions)
    else:
        solutions = list(run.solutions)
    return Report(
        command=str(cfg.command),
        input_sha256=_hash_spec(spec),
        groups=[_group_report(group, cfg.tier)],
        group_seconds=timer.group_seconds,
        search_seconds=timer.search_seconds,
        solutions=[list(sol) for sol in solutions],
        stats=run.stats.as_dict(),
        details={'spec': spec.label(), 'p_max': spec.cap, 'formulation': cfg.formulation},
    )


def _jchar(cfg: JobConfig) -> Report:
    text = cfg.inputs[0].read_text(encoding='utf-8')
    try:
        y = SignedArray.from_levels(parse_array(text))
    except ValueError as exc:
        raise InvalidSpec(str(exc)) from exc
    up_to = cfg.t if cfg.t is not None else y.k
    details: dict[str, Any] = {
        'runs': y.n_rows,
        'factors': y.k,
        'j': [{'subset': [c + 1 for c in j.subset], 'value': j.value} for j in j_characteristics(y, up_to)],
    }
    if cfg.t is not None:
        details['strength_ok'] = vanishing_j(y, cfg.t)
    return Report(command=str(cfg.command), input_sha256=_hash_files(cfg.inputs), details=details)


def _dispatch(cfg: JobConfig, settings: Settings) -> Report:
    timer = _Timer()
    match cfg.command:
        case Command.STANDARDIZE:
            return _standardize(cfg)
        case Command.SYMGROUP:
            return _symgroup(cfg, settings, timer)
        case Command.OA_GROUP:
            return _oa_group(cfg, settings, timer)
        case Command.CLASSIFY:
            return _classify(cfg, settings, timer)
        case Command.JCHAR:
            return _jchar(cfg)
    raise ValueError(f'Unsupported command: {cfg.command}')


def _summary(report: Report) -> str:
    parts = [f'[lpsym] {report.command}']
    parts.extend(f'|G_{g.tier}| = {g.order}' for g in report.groups)
    if report.command == str(Command.CLASSIFY):
        parts.append(f'{len(report.solutions)} solutions')
    parts.append(f'group {report.group_seconds:.2f}s, search {report.search_seconds:.2f}s')
    return ', '.join(parts)


def run(cfg: JobConfig, settings: Settings | None = None) -> RunOutcome:
    """Execute one job, write its report and return the exit code with the report."""
    settings = settings or Settings.from_env()
    try:
        report = _dispatch(cfg, settings)
    except (LpParseError, InvalidSpec, ValidationError, OSError) as exc:
        logger.error('cannot read input: %s', exc)
        return RunOutcome(EXIT_PARSE, None)
    except InfeasibleInput as exc:
        logger.error('infeasible input: %s', exc)
        return RunOutcome(EXIT_INFEASIBLE, None)
    except ResourceLimitExceeded as exc:
        logger.error('resource cap hit: %s', exc)
        return RunOutcome(EXIT_LIMIT, None)

    text = report.model_dump_json(indent=2) + '\n'
    if cfg.output is not None:
        cfg.output.write_text(text, encoding='utf-8')
    else:
        sys.stdout.write(text)
    sys.stderr.write(_summary(report) + '\n')
    return RunOutcome(EXIT_OK, report)
