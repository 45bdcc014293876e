"""Independent brute-force oracles used by the test-suite."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Dict, List, Sequence, Tuple


def sieve_bits(gens: Sequence[int], bound: int) -> int:
    """Bitmask of the elements of <gens> below ``bound`` (bit x set iff x in S)."""
    mask = (1 << bound) - 1
    reach = 1
    while True:
        new = reach
        for g in gens:
            new |= (reach << g) & mask
        if new == reach:
            return reach
        reach = new


def sieve_invariants(gens: Sequence[int]) -> Dict[str, object]:
    gens = sorted(set(gens))
    mu, top = gens[0], gens[-1]
    bound = mu * top + top + 2
    bits = sieve_bits(gens, bound)
    member = [bits >> x & 1 for x in range(bound)]
    gaps = [x for x in range(bound) if not member[x]]
    frob = gaps[-1] if gaps else -1
    c = frob + 1
    apery = []
    for t in range(mu):
        x = t
        while not member[x]:
            x += mu
        apery.append(x)
    minimal = [g for g in gens if not any(member[y] and member[g - y] for y in range(1, g // 2 + 1))]
    return {
        "apery": tuple(apery),
        "frobenius": frob,
        "conductor": c,
        "genus": len(gaps),
        "left_count": sum(member[:c]),
        "min_generators": tuple(minimal),
        "member": member,
    }


def semigroups_by_gaps(genus: int) -> List[Tuple[int, ...]]:
    """All gap sets of size ``genus`` that are complements of numerical semigroups.

    Gaps are always <= 2g - 1, so subsets of [1, 2g - 1] are tried directly.
    """
    out = []
    for gaps in combinations(range(1, 2 * genus), genus):
        gs = set(gaps)
        ok = all(not (a + b in gs) for a in range(1, 2 * genus) if a not in gs
                 for b in range(a, 2 * genus - a) if b not in gs)
        if ok:
            out.append(gaps)
    return out


def brute_matching(edges: Sequence[Tuple[int, int]]) -> int:
    """Largest vertex-disjoint subset of edges, by trying all subsets from the top down."""
    edges = list(edges)
    for k in range(len(edges), 0, -1):
        for sub in combinations(edges, k):
            if len({u for u, _ in sub}) == k and len({v for _, v in sub}) == k:
                return k
    return 0


def count_progression(x: Fraction, y: Fraction, b: Fraction, p: Fraction) -> int:
    """|(b + pZ) ∩ [x, y)| by scaling to integers and walking the progression."""
    d = 1
    for q in (x, y, b, p):
        d = d * q.denominator // gcd(d, q.denominator)
    X, Y, B, P = (int(q * d) for q in (x, y, b, p))
    n = (X - B) // P - 1
    count = 0
    while B + P * n < Y:
        if B + P * n >= X:
            count += 1
        n += 1
    return count


def omega_direct(mu: int, nu: int, x, y) -> bool:
    return x >= 0 and y >= 0 and x + y <= nu - 1 and Fraction(x) * (Fraction(x, 2) + Fraction(1, 2) + y) >= mu - nu
