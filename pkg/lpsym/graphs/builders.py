from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction

from lpsym.exceptions import NotSymmetric
from lpsym.linalg import RatMatrix
from lpsym.lp import LinearProgram
from lpsym.utils import value_classes

from .colored_graph import ColoredGraph

logger = logging.getLogger(__name__)

_VAR, _EQ, _INEQ = 0, 1, 2


def graph_from_matrix(p: RatMatrix, vertex_colors: Sequence[object]) -> ColoredGraph:
    """
    Complete colored graph of a symmetric matrix.

    Vertex i is colored by the pair (vertex_colors[i], P_ii); every pair i < j is an edge
    colored by the class of P_ij, zero included.

    Raises
    ------
    NotSymmetric
        If P is not square-symmetric.
    """
    if not p.is_square or not p.is_symmetric():
        raise NotSymmetric(f'Matrix of shape {p.shape} is not symmetric.')
    n = p.rows
    if len(vertex_colors) != n:
        raise ValueError(f'{len(vertex_colors)} vertex colors for a {n}x{n} matrix.')
    v_ids, v_palette = value_classes((vertex_colors[i], p[i, i]) for i in range(n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    e_ids, e_palette = value_classes(p[i, j] for i, j in pairs)
    edges = tuple((i, j, e_ids[k]) for k, (i, j) in enumerate(pairs))
    return ColoredGraph(
        n_vertices=n,
        vertex_colors=tuple(v_ids),
        edges=edges,
        vertex_palette=tuple(v_palette),
        edge_palette=tuple(e_palette),
    )


def formulation_graph(lp: LinearProgram) -> ColoredGraph:
    """
    Bipartite graph of variables and constraint rows.

    Variables are vertices 0..n−1 colored by their objective coefficient; equality rows and
    inequality rows follow, colored by kind and right-hand side. A nonzero coefficient
    joins its row and variable with an edge colored by its value.
    """
    n = lp.n
    labels: list[tuple[int, Fraction]] = [(_VAR, cj) for cj in lp.c]
    labels.extend((_EQ, rhs) for rhs in lp.b)
    labels.extend((_INEQ, rhs) for rhs in lp.d)
    raw: list[tuple[int, int, Fraction]] = []
    for offset, block in ((n, lp.A), (n + lp.m_eq, lp.B)):
        for i in range(block.rows):
            for j, a in enumerate(block.row(i)):
                if a != 0:
                    raw.append((j, offset + i, a))
    v_ids, v_palette = value_classes(labels)
    e_ids, e_palette = value_classes(a for _, _, a in raw)
    edges = tuple((u, v, e_ids[k]) for k, (u, v, _) in enumerate(raw))
    logger.debug('formulation graph: %d variables, %d rows, %d edges', n, lp.m_eq + lp.m_ineq, len(edges))
    return ColoredGraph(
        n_vertices=len(labels),
        vertex_colors=tuple(v_ids),
        edges=edges,
        vertex_palette=tuple(v_palette),
        edge_palette=tuple(e_palette),
    )
