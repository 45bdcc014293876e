"""Numerical semigroups and their first-order invariants.

A semigroup is stored through its Apéry set with respect to the
multiplicity; every other invariant (Frobenius number, conductor, genus,
the count of small elements) is read off from it exactly.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple


class NotANumericalSemigroup(ValueError):
    """Raised when the generators do not have gcd 1."""


@dataclass(frozen=True)
class Semigroup:
    min_generators: Tuple[int, ...]
    multiplicity: int
    embedding_dim: int
    frobenius: int
    conductor: int
    genus: int
    apery: Tuple[int, ...]
    left_count: int

    def __contains__(self, x: int) -> bool:
        return contains(self, x)

    @property
    def key(self) -> Tuple[int, Tuple[int, ...]]:
        """Sort key used for deterministic ordering of reports."""
        return (self.genus, self.min_generators)

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.min_generators)) + ">"


def _apery_by_shortest_paths(gens: Sequence[int], mult: int) -> list:
    # Dijkstra over residues mod mult; edge t -> t+g of weight g.
    inf = float("inf")
    dist = [inf] * mult
    dist[0] = 0
    steps = sorted({g for g in gens if g % mult})
    heap = [(0, 0)]
    while heap:
        d, t = heapq.heappop(heap)
        if d > dist[t]:
            continue
        for g in steps:
            u = (t + g) % mult
            nd = d + g
            if nd < dist[u]:
                dist[u] = nd
                heapq.heappush(heap, (nd, u))
    return dist


def _minimal_from_apery(candidates: Iterable[int], mult: int, apery: Sequence[int]) -> Tuple[int, ...]:
    # A non-zero Apéry element is a minimal generator iff it is not the sum
    # of two non-zero Apéry elements.
    nonzero = sorted(w for w in apery if w)
    minimal = [mult]
    for g in sorted(set(candidates)):
        if g == mult or apery[g % mult] != g:
            continue
        decomposable = False
        for w in nonzero:
            if 2 * w > g:
                break
            r = g - w
            if apery[r % mult] <= r:
                decomposable = True
                break
        if not decomposable:
            minimal.append(g)
    return tuple(minimal)


def _assemble(gens: Tuple[int, ...], apery: Sequence[int]) -> Semigroup:
    mult = gens[0]
    frob = max(apery) - mult
    conductor = frob + 1
    # |L_t| = number of x = apery[t] + k*mult with x < conductor
    left = sum((conductor - w + mult - 1) // mult for w in apery if w < conductor)
    return Semigroup(
        min_generators=gens,
        multiplicity=mult,
        embedding_dim=len(gens),
        frobenius=frob,
        conductor=conductor,
        genus=conductor - left,
        apery=tuple(apery),
        left_count=left,
    )


def build_semigroup(generators: Iterable[int]) -> Semigroup:
    """Build the numerical semigroup generated by ``generators``.

    The input may contain duplicates and redundant elements; the minimal
    generating system is recomputed.
    """
    gens = sorted(set(int(g) for g in generators))
    if not gens:
        raise ValueError("empty generator list")
    if gens[0] <= 0:
        raise ValueError("generators must be positive integers")
    d = 0
    for g in gens:
        d = gcd(d, g)
    if d != 1:
        raise NotANumericalSemigroup(f"not a numerical semigroup: gcd of {gens} is {d}")
    mult = gens[0]
    apery = _apery_by_shortest_paths(gens, mult)
    minimal = _minimal_from_apery(gens, mult, apery)
    return _assemble(minimal, apery)


def semigroup_from_membership(generators: Sequence[int], conductor: int, members: bytes) -> Semigroup:
    """Build a record from a membership table covering ``[0, conductor + mult)``.

    Used by the enumerator, which already knows the minimal generators.
    """
    mult = generators[0]
    apery = [-1] * mult
    missing = mult
    for x in range(conductor + mult):
        if members[x] and apery[x % mult] < 0:
            apery[x % mult] = x
            missing -= 1
            if not missing:
                break
    left = members.count(1, 0, conductor)
    return Semigroup(
        min_generators=tuple(generators),
        multiplicity=mult,
        embedding_dim=len(generators),
        frobenius=conductor - 1,
        conductor=conductor,
        genus=conductor - left,
        apery=tuple(apery),
        left_count=left,
    )


def contains(S: Semigroup, x: int) -> bool:
    if x < 0:
        return False
    return x >= S.apery[x % S.multiplicity]


def is_apery(S: Semigroup, x: int) -> bool:
    """True iff x is in S and x - multiplicity is not."""
    return x >= 0 and S.apery[x % S.multiplicity] == x


def left_class_count(S: Semigroup, t: int) -> int:
    """|L_x| for x the Apéry element of residue ``t``: elements of S below c in that class."""
    w = S.apery[t % S.multiplicity]
    if w >= S.conductor:
        return 0
    return (S.conductor - w + S.multiplicity - 1) // S.multiplicity


def wilf_check(S: Semigroup) -> Tuple[Optional[Fraction], bool]:
    """Return (nu*|L|/c, nu*|L| >= c); the ratio is None when c = 0."""
    if S.conductor == 0:
        return None, True
    lhs = S.embedding_dim * S.left_count
    return Fraction(lhs, S.conductor), lhs >= S.conductor
