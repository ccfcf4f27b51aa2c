"""
< Automorphism group of a vertex- and edge-colored graph >
1. The vertex colors give an ordered partition; equitable refinement splits every cell by
   the multiset of (neighbour cell, edge color) pairs, cells ordered by that signature.
2. The first path individualizes the smallest vertex of the first non-singleton cell until
   the partition is discrete; that leaf is the reference labelling.
3. Walking back up the first path, every other vertex of the target cell not already in the
   orbit of the first-path vertex (under generators found so far) starts a depth-first
   search. Nodes whose refinement trace or cell sizes differ from the first path at the
   same depth are cut. At a leaf the labelling map is checked against all colors and edges
   and the first automorphism found is kept as a generator.

The generators found this way generate the whole automorphism group; the order comes from
the stabilizer chain.
"""

from __future__ import annotations

import logging
from collections import Counter

from lpsym.groups import Perm, PermGroup

from .colored_graph import AutResult, ColoredGraph

logger = logging.getLogger(__name__)

Cells = list[list[int]]
Trace = tuple[tuple[int, tuple[tuple[object, int], ...]], ...]


def _orbit_of(point: int, gens: list[Perm]) -> set[int]:
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g(x)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _target(cells: Cells) -> int:
    return next(i for i, cell in enumerate(cells) if len(cell) > 1)


def _is_discrete(cells: Cells) -> bool:
    return all(len(cell) == 1 for cell in cells)


def _shape(cells: Cells) -> tuple[int, ...]:
    return tuple(len(cell) for cell in cells)


def _individualize(cells: Cells, v: int) -> Cells:
    out: Cells = []
    for cell in cells:
        if v in cell and len(cell) > 1:
            out.append([v])
            out.append([u for u in cell if u != v])
        else:
            out.append(cell)
    return out


class _Search:
    def __init__(self, graph: ColoredGraph) -> None:
        self.graph = graph
        self.n = graph.n_vertices
        adj = graph.adjacency
        self.neighbors = [[(u, c) for u, c in enumerate(row) if c >= 0] for row in adj]
        self.nodes = 0
        self.path_cells: list[Cells] = []
        self.path_traces: list[Trace] = []
        self.first_leaf: list[int] = []

    def initial_partition(self) -> Cells:
        by_color: dict[int, list[int]] = {}
        for v, color in enumerate(self.graph.vertex_colors):
            by_color.setdefault(color, []).append(v)
        return [by_color[color] for color in sorted(by_color)]

    def refine(self, cells: Cells) -> tuple[Cells, Trace]:
        trace: list[tuple[int, tuple[tuple[object, int], ...]]] = []
        while True:
            cell_of = [0] * self.n
            for ci, cell in enumerate(cells):
                for v in cell:
                    cell_of[v] = ci
            new_cells: Cells = []
            changed = False
            for ci, cell in enumerate(cells):
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: dict[tuple[tuple[tuple[int, int], int], ...], list[int]] = {}
                for v in cell:
                    signature = tuple(sorted(Counter((cell_of[u], c) for u, c in self.neighbors[v]).items()))
                    groups.setdefault(signature, []).append(v)
                if len(groups) == 1:
                    new_cells.append(cell)
                    continue
                changed = True
                keys = sorted(groups)
                trace.append((ci, tuple((key, len(groups[key])) for key in keys)))
                new_cells.extend(groups[key] for key in keys)
            cells = new_cells
            if not changed:
                return cells, tuple(trace)

    def run(self) -> list[Perm]:
        cells, trace = self.refine(self.initial_partition())
        path_cells: list[Cells] = [cells]
        path_traces: list[Trace] = [trace]
        chosen: list[int] = []
        while not _is_discrete(cells):
            v = min(cells[_target(cells)])
            cells, trace = self.refine(_individualize(cells, v))
            chosen.append(v)
            path_cells.append(cells)
            path_traces.append(trace)
        self.path_cells = path_cells
        self.path_traces = path_traces
        self.first_leaf = [cell[0] for cell in cells]

        gens: list[Perm] = []
        for level in reversed(range(len(chosen))):
            v0 = chosen[level]
            orbit = _orbit_of(v0, gens)
            for w in sorted(path_cells[level][_target(path_cells[level])]):
                if w in orbit:
                    continue
                found = self._explore(level, path_cells[level], w)
                if found is not None:
                    gens.append(found)
                    orbit = _orbit_of(v0, gens)
                    logger.debug('automorphism at depth %d maps %d -> %d', level, v0, w)
        return gens

    def _explore(self, depth: int, parent: Cells, v: int) -> Perm | None:
        self.nodes += 1
        cells, trace = self.refine(_individualize(parent, v))
        if trace != self.path_traces[depth + 1] or _shape(cells) != _shape(self.path_cells[depth + 1]):
            return None
        if _is_discrete(cells):
            images = [0] * self.n
            for a, cell in zip(self.first_leaf, cells):
                images[a] = cell[0]
            if self.graph.is_automorphism(images):
                return Perm(images, check=False)
            return None
        for u in sorted(cells[_target(cells)]):
            found = self._explore(depth + 1, cells, u)
            if found is not None:
                return found
        return None


def automorphisms(graph: ColoredGraph) -> AutResult:
    """
    Generators and order of the group of vertex permutations preserving vertex colors,
    adjacency and edge colors.
    """
    if graph.n_vertices == 0:
        return AutResult(generators=(), order=1, degree=0)
    search = _Search(graph)
    gens = search.run()
    group = PermGroup(graph.n_vertices, gens)
    logger.debug(
        'graph on %d vertices: %d generators, order %d, %d search nodes',
        graph.n_vertices,
        len(group.generators),
        group.order(),
        search.nodes,
    )
    return AutResult(generators=group.generators, order=group.order(), degree=graph.n_vertices)
