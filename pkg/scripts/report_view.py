from __future__ import annotations

import argparse
import json
import re
from dataclasses import dataclass
from pathlib import Path

import matplotlib.pyplot as plt


@dataclass(frozen=True)
class Record:
    name: str
    command: str
    label: str
    tier: str
    order: int | None
    group_seconds: float
    search_seconds: float
    solutions: int
    nodes: int


def _safe(name: str) -> str:
    s = re.sub(r'[^a-zA-Z0-9._-]+', '_', name.strip())
    s = s.lstrip('_.')
    return s or 'report'


def _load_all(reports_dir: Path) -> list[Record]:
    records: list[Record] = []
    for path in sorted(reports_dir.rglob('*.json')):
        obj = json.loads(path.read_text(encoding='utf-8'))
        if obj.get('format') != 1:
            continue
        groups = obj.get('groups') or [{}]
        details = obj.get('details') or {}
        records.append(
            Record(
                name=path.stem,
                command=obj['command'],
                label=details.get('spec', path.stem),
                tier=groups[0].get('tier', '-'),
                order=groups[0].get('order'),
                group_seconds=obj.get('group_seconds', 0.0),
                search_seconds=obj.get('search_seconds', 0.0),
                solutions=len(obj.get('solutions', [])),
                nodes=(obj.get('stats') or {}).get('nodes', 0),
            )
        )
    return records


def _plot_seconds(*, out_dir: Path, title: str, records: list[Record]) -> str:
    # 1) Stacked bars: group time below, search time on top
    xs = list(range(len(records)))
    group = [r.group_seconds for r in records]
    search = [r.search_seconds for r in records]
    plt.figure()
    plt.bar(xs, group, label='group')
    plt.bar(xs, search, bottom=group, label='search')
    plt.xticks(xs, [f'{r.label} [{r.tier}]' for r in records], rotation=30, ha='right')
    plt.title(title)
    plt.ylabel('s')
    plt.legend()

    out_dir.mkdir(parents=True, exist_ok=True)
    png = out_dir / f'{_safe(title)}.png'
    plt.savefig(png, dpi=160, bbox_inches='tight')
    plt.close()
    return png.name


def main() -> None:
    parser = argparse.ArgumentParser(description='Summarize lpsym JSON reports as charts and an HTML table.')
    parser.add_argument('--reports-dir', type=str, default='reports')
    parser.add_argument('--out-dir', type=str, default='reports/view')
    args = parser.parse_args()

    reports_dir = Path(args.reports_dir)
    out_dir = Path(args.out_dir)

    records = _load_all(reports_dir)
    if not records:
        raise SystemExit(f'no reports under: {reports_dir}')

    # 1) One chart per command
    by_command: dict[str, list[Record]] = {}
    for r in records:
        by_command.setdefault(r.command, []).append(r)

    # 2) Generate images + write index.html
    sections = ['<h1>lpsym reports</h1>']
    for command, group in sorted(by_command.items()):
        png = _plot_seconds(out_dir=out_dir, title=command, records=group)
        sections.append(f'<h2>{command}</h2>')
        sections.append(f'<img src="{png}" style="max-width: 900px;">')
        rows = [
            '<tr><th>report</th><th>instance</th><th>tier</th><th>|G|</th>'
            '<th>solutions</th><th>nodes</th><th>group s</th><th>search s</th></tr>'
        ]
        for r in group:
            rows.append(
                f'<tr><td>{r.name}</td><td>{r.label}</td><td>{r.tier}</td><td>{r.order or "-"}</td>'
                f'<td>{r.solutions}</td><td>{r.nodes}</td>'
                f'<td>{r.group_seconds:.3f}</td><td>{r.search_seconds:.3f}</td></tr>'
            )
        sections.append('<table border="1" cellpadding="4">' + ''.join(rows) + '</table>')

    out_dir.mkdir(parents=True, exist_ok=True)
    index = out_dir / 'index.html'
    index.write_text('<html><body>' + '\n'.join(sections) + '</body></html>\n', encoding='utf-8')
    print(f'wrote {index}')


if __name__ == '__main__':
    main()
