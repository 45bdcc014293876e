"""Apéry pairs between P1 and P2 and the maximum number of disjoint ones."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .core import Semigroup, is_apery
from .ledger import BoundEntry
from .partition import PartitionReport, require_large_a2

Edge = Tuple[int, int]


@dataclass(frozen=True)
class AperyPairGraph:
    left: Tuple[int, ...]
    right: Tuple[int, ...]
    edges: Tuple[Edge, ...]
    sigma: int
    witness: Tuple[Edge, ...]

    @property
    def num_edges(self) -> int:
        return len(self.edges)


def maximum_matching(left: Sequence[int], right: Sequence[int], edges: Iterable[Edge]) -> List[Edge]:
    """Maximum bipartite matching by repeated augmenting paths.

    Vertices are processed in sorted order so the witness does not depend on
    the order in which edges are supplied.
    """
    adj: Dict[int, List[int]] = {u: [] for u in left}
    for u, v in edges:
        adj[u].append(v)
    for u in adj:
        adj[u] = sorted(set(adj[u]))
    match_right: Dict[int, int] = {}

    def augment(u, seen):
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match_right or augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    for u in sorted(adj):
        augment(u, set())
    return sorted((u, v) for v, u in match_right.items())


def pair_graph(left: Sequence[int], right: Sequence[int], edges: Iterable[Edge]) -> AperyPairGraph:
    """Wrap an arbitrary bipartite edge list (used for abstract graphs and tests)."""
    edges = tuple(sorted(set(edges)))
    witness = tuple(maximum_matching(left, right, edges))
    return AperyPairGraph(tuple(sorted(left)), tuple(sorted(right)), edges, len(witness), witness)


def apery_pairs(S: Semigroup, pr: PartitionReport) -> AperyPairGraph:
    require_large_a2(pr)
    edges = [(a, b) for a in pr.p1 for b in pr.p2 if is_apery(S, a + b)]
    return pair_graph(pr.p1, pr.p2, edges)


MAX_BRUTEFORCE_VERTICES = 20


def min_vertex_cover_bruteforce(g: AperyPairGraph) -> int:
    """Smallest vertex set touching every edge, by exhaustive search.

    Every subset X of the smaller side is tried; the cheapest completion is
    then forced to be the neighbourhood of the untouched vertices of that side.
    """
    if len(g.left) + len(g.right) > MAX_BRUTEFORCE_VERTICES:
        raise ValueError(f"brute force limited to {MAX_BRUTEFORCE_VERTICES} vertices")
    if not g.edges:
        return 0
    if len(g.left) <= len(g.right):
        side, other, pairs = g.left, g.right, g.edges
    else:
        side, other, pairs = g.right, g.left, [(v, u) for u, v in g.edges]
    pos = {v: i for i, v in enumerate(other)}
    nbr = {u: 0 for u in side}
    for u, v in pairs:
        nbr[u] |= 1 << pos[v]
    side = list(side)
    n = len(side)
    best = n + len(other)
    for mask in range(1 << n):
        chosen = 0
        forced = 0
        for i in range(n):
            if mask >> i & 1:
                chosen += 1
            else:
                forced |= nbr[side[i]]
        best = min(best, chosen + bin(forced).count("1"))
    return best


def check_sigma_bound(g: AperyPairGraph, pr: PartitionReport) -> BoundEntry:
    m = max(pr.q1, pr.q2)
    if m == 0:
        return BoundEntry.skipped("prop41", "vacuous: q1 = q2 = 0")
    return BoundEntry.compare("prop41", g.sigma * m, g.num_edges, ">=")


def check_cor42(S: Semigroup, pr: PartitionReport, g: AperyPairGraph) -> BoundEntry:
    require_large_a2(pr)
    q1 = pr.q1
    lhs = q1 * (q1 + 1) // 2 + g.sigma * max(q1, pr.q2) + S.embedding_dim
    return BoundEntry.compare("cor42", lhs, S.multiplicity, ">=")
