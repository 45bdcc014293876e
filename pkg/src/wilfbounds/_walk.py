"""Pure-Python genus-tree walker (fallback for the compiled kernel).

A node is carried as its decomposition-count table ``dec``: for x in S,
dec[x] counts the unordered pairs {y, x - y} with y, x - y in S (so the
minimal generators are exactly the x > 0 with dec[x] == 1), and dec[x] = 0
for gaps. Removing a generator g > F only decrements dec[t] for t - g in S.
"""

from __future__ import annotations

from typing import Callable, List, Tuple

# (dec, genus, conductor, multiplicity)
State = Tuple[List[int], int, int, int]
Visitor = Callable[[int, int, Tuple[int, ...], bytes], None]

MAX_GENUS = 200


def table_size(max_genus: int) -> int:
    # every minimal generator is < c + mu <= 3g + 1
    return 3 * max_genus + 3


def root_state(size: int) -> State:
    return [x // 2 + 1 for x in range(size)], 0, 0, 1


def _generators(dec, conductor: int, mult: int) -> Tuple[int, ...]:
    return tuple(x for x in range(mult, max(conductor + mult, 2)) if dec[x] == 1)


def _members(dec, conductor: int, mult: int) -> bytes:
    return bytes(1 if d else 0 for d in dec[: conductor + mult])


def children(state: State) -> List[State]:
    dec, genus, conductor, mult = state
    out = []
    for g in _generators(dec, conductor, mult):
        if g < conductor:
            continue
        child = dec[:g] + [d - (s > 0) for d, s in zip(dec[g:], dec)]
        out.append((child, genus + 1, g + 1, g + 1 if g == mult else mult))
    return out


def walk(max_genus: int, visit: Visitor, root: State = None) -> None:
    """Depth-first visit of every node of genus <= max_genus below ``root``."""
    if root is None:
        root = root_state(table_size(max_genus))
    stack = [root]
    while stack:
        state = stack.pop()
        dec, genus, conductor, mult = state
        visit(genus, conductor, _generators(dec, conductor, mult), _members(dec, conductor, mult))
        if genus < max_genus:
            stack.extend(reversed(children(state)))


def frontier(depth: int, max_genus: int, visit: Visitor = None) -> List[State]:
    """States of genus exactly ``depth``; shallower nodes go to ``visit`` if given."""
    out = []
    stack = [root_state(table_size(max_genus))]
    while stack:
        state = stack.pop()
        dec, genus, conductor, mult = state
        if genus == depth:
            out.append(state)
            continue
        if visit is not None:
            visit(genus, conductor, _generators(dec, conductor, mult), _members(dec, conductor, mult))
        stack.extend(reversed(children(state)))
    return out
