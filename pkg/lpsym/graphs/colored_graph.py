from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property

from lpsym.groups import Perm, PermGroup


@dataclass(frozen=True)
class ColoredGraph:
    """
    Undirected graph with dense vertex-color ids and dense edge-color ids.

    `edges` holds (u, v, color) with u < v; each unordered pair appears at most once.
    `vertex_palette` / `edge_palette` optionally record the value each color id stands
    for (diagnostics only; the search looks at ids).
    """

    n_vertices: int
    vertex_colors: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]
    vertex_palette: tuple[object, ...] = field(default=(), compare=False)
    edge_palette: tuple[object, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if len(self.vertex_colors) != self.n_vertices:
            raise ValueError('One color per vertex is required.')
        if self.vertex_colors and sorted(set(self.vertex_colors)) != list(range(max(self.vertex_colors) + 1)):
            raise ValueError('Vertex color ids must be dense from 0.')
        seen: set[tuple[int, int]] = set()
        edge_colors: set[int] = set()
        for u, v, c in self.edges:
            if u == v:
                raise ValueError(f'Self-loop at vertex {u}.')
            if not 0 <= u < v < self.n_vertices:
                raise ValueError(f'Edge ({u}, {v}) must satisfy 0 <= u < v < n.')
            if (u, v) in seen:
                raise ValueError(f'Duplicate edge ({u}, {v}).')
            seen.add((u, v))
            edge_colors.add(c)
        if edge_colors and sorted(edge_colors) != list(range(max(edge_colors) + 1)):
            raise ValueError('Edge color ids must be dense from 0.')

    @cached_property
    def adjacency(self) -> list[list[int]]:
        """n×n edge-color matrix with -1 for absent edges (and on the diagonal)."""
        adj = [[-1] * self.n_vertices for _ in range(self.n_vertices)]
        for u, v, c in self.edges:
            adj[u][v] = c
            adj[v][u] = c
        return adj

    def is_automorphism(self, p: Perm | Sequence[int]) -> bool:
        images = p.images if isinstance(p, Perm) else tuple(p)
        if len(images) != self.n_vertices:
            return False
        colors = self.vertex_colors
        if any(colors[images[v]] != colors[v] for v in range(self.n_vertices)):
            return False
        adj = self.adjacency
        for u in range(self.n_vertices):
            row_u = adj[u]
            row_img = adj[images[u]]
            for v in range(u + 1, self.n_vertices):
                if row_img[images[v]] != row_u[v]:
                    return False
        return True


@dataclass(frozen=True)
class AutResult:
    generators: tuple[Perm, ...]
    order: int
    degree: int

    def group(self) -> PermGroup:
        return PermGroup(self.degree, self.generators)


def dump_graph(graph: ColoredGraph) -> str:
    """
    DIMACS-like text: `p edge n m`, one `n v color` line per vertex and one `e u v color`
    line per edge, vertices 1-based. Palette values, when present, follow as `c` comments.
    """
    lines = [f'p edge {graph.n_vertices} {len(graph.edges)}']
    for k, value in enumerate(graph.vertex_palette):
        lines.append(f'c vertex-color {k} = {value}')
    for k, value in enumerate(graph.edge_palette):
        lines.append(f'c edge-color {k} = {value}')
    lines.extend(f'n {v + 1} {c}' for v, c in enumerate(graph.vertex_colors))
    lines.extend(f'e {u + 1} {v + 1} {c}' for u, v, c in graph.edges)
    return '\n'.join(lines) + '\n'
