"""Kostant partition functions and integral-flow enumeration.

The partition function K_G(v) counts the ways to write v as a nonnegative
integer combination of the positive roots attached to the edge multiset of
G; parallel edges contribute independent copies of the same root, so K_G
agrees with the number of integral flows.  Everything here is exact and
serves as the ground truth the rest of the package is checked against.
"""
from __future__ import annotations

from typing import Iterator, Sequence

from .combinat import multichoose, weak_compositions
from .graphs import DirectedMultigraph, alpha_coordinates


class SumNonzero(ValueError):
    pass


def _root_intervals(g: DirectedMultigraph) -> list[tuple[int, int, int]]:
    """Distinct roots as (first_column, last_column, multiplicity), sorted.

    The edge (i, j) is the root covering simple-root columns i..j-1.
    """
    return [(i, j - 1, mult) for (i, j), mult in g.distinct_edges()]


def _alpha_or_none(v: Sequence[int], n: int) -> tuple[int, ...] | None:
    if len(v) != n + 1:
        raise ValueError(f"net flow must have {n + 1} entries, got {len(v)}")
    if sum(v) != 0:
        raise SumNonzero(f"net flow {tuple(v)} does not sum to zero")
    coords = alpha_coordinates(v)
    if any(c < 0 for c in coords):
        return None
    return coords


def kostant(g: DirectedMultigraph, v: Sequence[int]) -> int:
    """K_G(v), the number of vector partitions of v into the roots of G.

    Depth-first over distinct roots in (source, target) order, choosing a
    total count per root; a root of multiplicity mu used c times counts
    multichoose(mu, c) ways.  A column no remaining root can touch must
    already have residual zero, which prunes hard.  Memoized per call on
    (root index, residual suffix).
    """
    coords = _alpha_or_none(v, g.n)
    if coords is None:
        return 0
    roots = _root_intervals(g)
    memo: dict[tuple[int, tuple[int, ...]], int] = {}
    memo_cap = 1 << 20

    def solve(idx: int, residual: tuple[int, ...]) -> int:
        # columns before the current root's start are now untouchable
        lo = roots[idx][0] - 1 if idx < len(roots) else len(residual)
        if any(residual[p] for p in range(lo)):
            return 0
        if idx == len(roots):
            return 1
        key = (idx, residual[lo:])
        hit = memo.get(key)
        if hit is not None:
            return hit
        a, b, mult = roots[idx]
        cap = min(residual[a - 1 : b])
        total = 0
        for c in range(cap + 1):
            nxt = tuple(
                r - c if a - 1 <= p < b else r for p, r in enumerate(residual)
            )
            sub = solve(idx + 1, nxt)
            if sub:
                total += multichoose(mult, c) * sub
        if len(memo) < memo_cap:
            memo[key] = total
        return total

    return solve(0, coords)


def integral_flows(
    g: DirectedMultigraph, a: Sequence[int]
) -> Iterator[tuple[int, ...]]:
    """All integral a-flows, one flow value per edge (parallel copies distinct).

    Flows are reported in the graph's sorted edge order.  Vertices are
    processed left to right; at each one the available inflow plus supply
    is split over its out-edges.
    """
    if sum(a) != 0:
        raise SumNonzero(f"net flow {tuple(a)} does not sum to zero")
    if len(a) != g.n + 1:
        raise ValueError(f"net flow must have {g.n + 1} entries, got {len(a)}")
    edges = g.edges
    out_slots: dict[int, list[int]] = {}
    for pos, (i, _) in enumerate(edges):
        out_slots.setdefault(i, []).append(pos)

    flow = [0] * len(edges)

    def assign(v: int) -> Iterator[tuple[int, ...]]:
        if v > g.n:
            yield tuple(flow)
            return
        supply = a[v - 1] + sum(flow[p] for p, (_, j) in enumerate(edges) if j == v)
        if supply < 0:
            return
        slots = out_slots.get(v, [])
        if not slots:
            if supply == 0:
                yield from assign(v + 1)
            return
        for comp in weak_compositions(supply, len(slots)):
            for p, f in zip(slots, comp):
                flow[p] = f
            yield from assign(v + 1)
        for p in slots:
            flow[p] = 0

    yield from assign(1)


def vector_partitions(
    g: DirectedMultigraph, v: Sequence[int]
) -> Iterator[tuple[tuple[tuple[int, int], int], ...]]:
    """All partitions of v into the distinct roots of G, as ((edge, count), ...).

    Parallel copies of an edge are not distinguished here: each distinct
    root carries one count.  For simple graphs the number of partitions is
    kostant(g, v); these are the canonical gravity-diagram class
    representatives for an arbitrary graph.
    """
    coords = _alpha_or_none(v, g.n)
    if coords is None:
        return
    roots = _root_intervals(g)

    def rec(
        idx: int, residual: tuple[int, ...]
    ) -> Iterator[tuple[tuple[tuple[int, int], int], ...]]:
        lo = roots[idx][0] - 1 if idx < len(roots) else len(residual)
        if any(residual[p] for p in range(lo)):
            return
        if idx == len(roots):
            yield ()
            return
        a, b, _ = roots[idx]
        cap = min(residual[a - 1 : b])
        for c in range(cap + 1):
            nxt = tuple(
                r - c if a - 1 <= p < b else r for p, r in enumerate(residual)
            )
            for rest in rec(idx + 1, nxt):
                yield (((a, b + 1), c),) + rest if c else rest

    yield from rec(0, coords)
