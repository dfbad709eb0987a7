"""Exact minimum hitting set over bitmask columns.

A column is an int whose set bits are the vertices allowed to hit that
constraint. The solver is branch-and-bound: branch on the column with the
fewest candidates (ties by candidate coverage, then mask value), prune with a
greedy disjoint-column lower bound, and split into independent components
whenever the uncovered columns fall apart. Sibling branches exclude already
tried vertices, so no partial solution is explored twice.

Also provides bounded-budget feasibility, lexicographically-smallest witness
extraction, and capped enumeration of all minimum solutions.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import EnumerationCapExceededError


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def reduce_columns(columns: Iterable[int]) -> list[int]:
    """Deduplicate and drop every column that is a superset of another."""
    uniq = sorted(set(columns), key=lambda c: (c.bit_count(), c))
    kept: list[int] = []
    for c in uniq:
        if not any(k & c == k for k in kept):
            kept.append(c)
    return kept


def _components(cols: Sequence[int]) -> list[list[int]]:
    """Group columns whose vertex supports overlap (transitively)."""
    comps: list[tuple[int, list[int]]] = []  # (support, members)
    for c in cols:
        merged_support = c
        merged_members = [c]
        rest = []
        for support, members in comps:
            if support & merged_support:
                merged_support |= support
                merged_members += members
            else:
                rest.append((support, members))
        rest.append((merged_support, merged_members))
        comps = rest
    comps.sort(key=lambda item: item[0] & -item[0])  # by lowest support vertex
    return [members for _, members in comps]


def _coverage(cols: Sequence[int]) -> dict[int, int]:
    count: dict[int, int] = {}
    for c in cols:
        for v in bits(c):
            count[v] = count.get(v, 0) + 1
    return count


def greedy_hitting(cols: Sequence[int]) -> list[int]:
    """Repeatedly take the vertex hitting the most remaining columns
    (ties: lowest id). Always returns a valid hitting set."""
    remaining = list(cols)
    chosen: list[int] = []
    while remaining:
        count = _coverage(remaining)
        v = max(count, key=lambda x: (count[x], -x))
        chosen.append(v)
        remaining = [c for c in remaining if not (c >> v) & 1]
    return sorted(chosen)


def disjoint_lower_bound(cols: Sequence[int]) -> int:
    """Size of a greedily built family of pairwise disjoint columns; each
    needs its own vertex, so this lower-bounds the hitting number."""
    used = 0
    lb = 0
    for c in sorted(cols, key=int.bit_count):
        if not c & used:
            lb += 1
            used |= c
    return lb


def _branch_column(cols: Sequence[int], count: dict[int, int]) -> int:
    return min(
        cols,
        key=lambda c: (c.bit_count(), -sum(count[v] for v in bits(c)), c),
    )


class _Counter:
    __slots__ = ("nodes",)

    def __init__(self):
        self.nodes = 0


def _solve(cols: list[int], counter: _Counter, cap: int | None = None) -> int:
    """Exact minimum hitting size of reduced, nonempty columns.

    ``cap`` (when given) is a known achievable size; only strictly smaller
    solutions are searched for and ``cap`` is returned if none exists.
    """
    if not cols:
        return 0
    comps = _components(cols)
    if len(comps) > 1:
        return sum(_solve(comp, counter) for comp in comps)
    best = len(greedy_hitting(cols))
    if cap is not None and cap < best:
        best = cap

    def rec(uncovered: list[int], size: int) -> None:
        nonlocal best
        counter.nodes += 1
        if not uncovered:
            if size < best:
                best = size
            return
        if size + 1 >= best:
            return
        comps = _components(uncovered)
        if len(comps) > 1:
            total = size + sum(_solve(comp, counter) for comp in comps)
            if total < best:
                best = total
            return
        if size + disjoint_lower_bound(uncovered) >= best:
            return
        count = _coverage(uncovered)
        column = _branch_column(uncovered, count)
        banned = 0
        for v in sorted(bits(column), key=lambda x: (-count[x], x)):
            rest: list[int] = []
            dead = False
            for c in uncovered:
                if (c >> v) & 1:
                    continue
                c2 = c & ~banned
                if c2 == 0:
                    dead = True
                    break
                rest.append(c2)
            if not dead:
                rec(rest, size + 1)
            banned |= 1 << v

    rec(cols, 0)
    return best


def minimum_hitting_set(
    columns: Sequence[int], *, upper: int | None = None
) -> tuple[int, int]:
    """Exact minimum hitting-set size and the number of search nodes.

    ``upper``, when given, must be the size of a known valid hitting set.
    """
    if any(c == 0 for c in columns):
        raise ValueError("unhittable empty column")
    counter = _Counter()
    value = _solve(reduce_columns(columns), counter, cap=upper)
    return value, counter.nodes


def exists_hitting_set(columns: Sequence[int], budget: int) -> bool:
    """True iff some hitting set of size <= budget exists."""
    if any(c == 0 for c in columns):
        return False
    cols = reduce_columns(columns)
    if budget < 0:
        return not cols

    def feasible(cols: list[int], budget: int) -> bool:
        if not cols:
            return True
        if budget <= 0:
            return False
        comps = _components(cols)
        if len(comps) > 1:
            counter = _Counter()
            total = 0
            for comp in comps:
                total += _solve(comp, counter)
                if total > budget:
                    return False
            return True
        if len(greedy_hitting(cols)) <= budget:
            return True
        if disjoint_lower_bound(cols) > budget:
            return False
        count = _coverage(cols)
        column = _branch_column(cols, count)
        banned = 0
        for v in sorted(bits(column), key=lambda x: (-count[x], x)):
            rest: list[int] = []
            dead = False
            for c in cols:
                if (c >> v) & 1:
                    continue
                c2 = c & ~banned
                if c2 == 0:
                    dead = True
                    break
                rest.append(c2)
            if not dead and feasible(rest, budget - 1):
                return True
            banned |= 1 << v
        return False

    return feasible(cols, budget)


def lexicographically_smallest(
    columns: Sequence[int], n: int, size: int
) -> tuple[int, ...]:
    """The lexicographically smallest hitting set of exactly the given
    (minimum) size, as a sorted tuple of vertex ids."""
    remaining = reduce_columns(columns)
    chosen: list[int] = []
    budget = size
    for v in range(n):
        if budget == 0:
            break
        unhit = [c for c in remaining if not (c >> v) & 1]
        future = ~((1 << (v + 1)) - 1)
        masked = [c & future for c in unhit]
        if 0 not in masked and exists_hitting_set(masked, budget - 1):
            chosen.append(v)
            remaining = unhit
            budget -= 1
    if remaining or budget:
        raise ValueError("no hitting set of the requested size exists")
    return tuple(chosen)


def enumerate_minimum_sets(
    columns: Sequence[int], n: int, size: int, cap: int
) -> tuple[tuple[int, ...], ...]:
    """All hitting sets of exactly the given (minimum) size, in lexicographic
    order. Raises :class:`EnumerationCapExceededError` past ``cap`` sets."""
    base = reduce_columns(columns)
    out: list[tuple[int, ...]] = []

    def rec(uncovered: list[int], start: int, chosen: list[int]) -> None:
        if not uncovered:
            # a full cover below the minimum size would contradict minimality
            assert len(chosen) == size
            out.append(tuple(chosen))
            if len(out) > cap:
                raise EnumerationCapExceededError(cap)
            return
        room = size - len(chosen)
        if room == 0:
            return
        future = ~((1 << start) - 1)
        masked = [c & future for c in uncovered]
        if 0 in masked:
            return
        if disjoint_lower_bound(masked) > room:
            return
        for v in range(start, n):
            rest = [c for c in uncovered if not (c >> v) & 1]
            if len(rest) == len(uncovered):
                continue  # v contributes nothing; it cannot be in a minimum set
            chosen.append(v)
            rec(rest, v + 1, chosen)
            chosen.pop()

    rec(base, 0, [])
    return tuple(out)
