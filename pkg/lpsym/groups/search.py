"""
< Backtrack searches over stabilizer chains >
1. `intersect`: subgroup search through the smaller group's chain, pruning any partial
   base image that no element of the other group can realise. Both chains share the base
   0..n−1, so the test is a level-by-level sift of the images chosen so far.
2. `double_cosets`: H\\G/H by orbit growing on the left cosets gH. Each left coset is keyed
   by its lex-least element, found greedily level by level through H's chain; G's
   generators reach every left coset, H's generators merge them into double cosets.
"""

from __future__ import annotations

import logging

from lpsym.exceptions import CosetLimitExceeded, NotASubgroup
from lpsym.settings import DEFAULT_SETTINGS, Settings

from .chain import StabilizerChain
from .group import PermGroup, _check_same_degree
from .perm import Perm

logger = logging.getLogger(__name__)

ENUMERATION_LIMIT = 10**4


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


def _find_in_coset(
    small: StabilizerChain,
    big: StabilizerChain,
    level: int,
    u: Perm,
) -> Perm | None:
    """Some g ∈ u·small^(level+1) that also lies in big, or None."""
    n = small.degree
    beta = u(level)
    if beta not in big.transversals[level]:
        return None

    def dfs(lvl: int, w_g: Perm, w_h_inv: Perm) -> Perm | None:
        # w_h_inv inverts a product of big's transversal elements agreeing with w_g on 0..lvl-1
        if lvl == n:
            return w_g
        trans = small.transversals[lvl]
        big_trans = big.transversals[lvl]
        for gamma in sorted(trans):
            cand = w_g * trans[gamma] if gamma != lvl else w_g
            pre = w_h_inv(cand(lvl))
            if pre not in big_trans:
                continue
            next_h_inv = big.inverse_at(lvl, pre) * w_h_inv if pre != lvl else w_h_inv
            found = dfs(lvl + 1, cand, next_h_inv)
            if found is not None:
                return found
        return None

    return dfs(level + 1, u, big.inverse_at(level, beta))


def _enumerate_intersection(small: PermGroup, big: PermGroup) -> PermGroup:
    chain = StabilizerChain(small.degree)
    gens: list[Perm] = []
    for elem in small.elements():
        if not elem.is_identity() and big.contains(elem) and not chain.contains(elem):
            chain.extend([elem])
            gens.append(elem)
    return PermGroup(small.degree, gens, chain=chain)


def _subgroup_search(small: PermGroup, big: PermGroup) -> PermGroup:
    n = small.degree
    g_chain, h_chain = small.chain, big.chain
    gens: list[Perm] = []
    for level in reversed(range(n)):
        orbit = sorted(g_chain.transversals[level])
        if len(orbit) == 1:
            continue
        for beta in orbit:
            if beta == level:
                continue
            # every element found so far fixes 0..level-1
            if beta in _orbit_of(level, gens):
                continue
            found = _find_in_coset(g_chain, h_chain, level, g_chain.transversals[level][beta])
            if found is not None:
                gens.append(found)
                logger.debug('intersection: level %d gains a generator mapping %d -> %d', level, level, beta)
    return PermGroup(n, gens)


def intersect(g: PermGroup, h: PermGroup) -> PermGroup:
    """
    Exact intersection G ∩ H.

    Raises
    ------
    DegreeMismatch
        If the groups act on different point counts.
    """
    _check_same_degree(g, h)
    if g.is_subgroup_of(h):
        return g
    if h.is_subgroup_of(g):
        return h
    small, big = (g, h) if g.order() <= h.order() else (h, g)
    if small.order() <= ENUMERATION_LIMIT:
        result = _enumerate_intersection(small, big)
    else:
        result = _subgroup_search(small, big)
    logger.debug('intersection of orders %d and %d has order %d', g.order(), h.order(), result.order())
    return result


def left_coset_key(g: Perm, h_chain: StabilizerChain) -> Perm:
    """The lex-least element of g·H (by image tuple)."""
    w = g
    for level in range(h_chain.degree):
        trans = h_chain.transversals[level]
        if len(trans) == 1:
            continue
        best = min(trans, key=w)
        if best != level:
            w = w * trans[best]
    return w


def double_cosets(
    g: PermGroup,
    h: PermGroup,
    *,
    settings: Settings = DEFAULT_SETTINGS,
) -> list[Perm]:
    """
    Representatives of the double cosets H·x·H partitioning G.

    Each representative is the lex-least element of its double coset; the list is sorted,
    so it starts with the identity.

    Raises
    ------
    NotASubgroup
        If H is not contained in G.
    CosetLimitExceeded
        If |G : H| exceeds `settings.max_cosets`.
    """
    _check_same_degree(g, h)
    if not h.is_subgroup_of(g):
        raise NotASubgroup('H is not a subgroup of G.')
    index = g.order() // h.order()
    if index == 1:
        return [g.identity()]
    if index > settings.max_cosets:
        raise CosetLimitExceeded(f'|G:H| = {index} exceeds the left-coset cap {settings.max_cosets}.')
    h_chain = h.chain

    def key(x: Perm) -> Perm:
        return left_coset_key(x, h_chain)

    start = key(g.identity())
    cosets: dict[Perm, int] = {start: 0}
    order_list = [start]
    k = 0
    while k < len(order_list):
        rep = order_list[k]
        k += 1
        for s in g.generators:
            nxt = key(s * rep)
            if nxt not in cosets:
                cosets[nxt] = len(order_list)
                order_list.append(nxt)
    logger.debug('enumerated %d left cosets of H in G', len(order_list))

    parent = list(range(len(order_list)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx, rep in enumerate(order_list):
        for s in h.generators:
            other = cosets[key(s * rep)]
            ri, rj = find(idx), find(other)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

    best: dict[int, Perm] = {}
    for idx, rep in enumerate(order_list):
        root = find(idx)
        cur = best.get(root)
        if cur is None or rep < cur:
            best[root] = rep
    reps = sorted(best.values())
    logger.debug('%d double cosets', len(reps))
    return reps
