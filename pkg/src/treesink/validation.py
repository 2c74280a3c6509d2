"""Brute-force reference solvers.

Connected blocks of a tree correspond exactly to sets of cut edges, so the
optimal partition for a sink set ``S`` is found by trying every way to cut
``|S| - 1`` edges. Everything here is exponential and meant for small trees.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable

from .tree import EmptySet, Instance, component

DEFAULT_CAP = 16

Cost = float
CostFn = Callable[[set[int], int], Cost]


class TooLarge(ValueError):
    pass


def _guard(inst: Instance, cap: int) -> None:
    if inst.n > cap:
        raise TooLarge(f"n={inst.n} exceeds the brute-force cap {cap}")


def cut_blocks(inst: Instance, cut: Iterable[int]) -> list[set[int]]:
    """Components left after deleting the edges with the given indices."""
    removed = {frozenset((inst.edges[i].u, inst.edges[i].v)) for i in cut}
    seen: set[int] = set()
    out = []
    for x in range(inst.n):
        if x in seen:
            continue
        comp = {x}
        stack = [x]
        while stack:
            a = stack.pop()
            for b in inst.adj[a]:
                if b not in comp and frozenset((a, b)) not in removed:
                    comp.add(b)
                    stack.append(b)
        seen |= comp
        out.append(comp)
    return out


def best_partition(inst: Instance, f: CostFn, S: Iterable[int],
                   cap: int = DEFAULT_CAP) -> tuple[Cost, list[tuple[set[int], int]]]:
    """Cheapest partition serving every vertex from exactly one sink of ``S``."""
    _guard(inst, cap)
    S = sorted(set(S))
    if not S:
        raise EmptySet("sink set is empty")
    best: Cost = float("inf")
    best_blocks: list[tuple[set[int], int]] = []
    memo: dict[tuple[frozenset[int], int], Cost] = {}
    for cut in itertools.combinations(range(inst.n - 1), len(S) - 1):
        blocks = cut_blocks(inst, cut)
        assigned = []
        for b in blocks:
            inside = [s for s in S if s in b]
            if len(inside) != 1:
                break
            assigned.append((b, inside[0]))
        else:
            cost: Cost = 0
            for b, s in assigned:
                key = (frozenset(b), s)
                if key not in memo:
                    memo[key] = f(b, s)
                cost = max(cost, memo[key])
                if cost >= best:
                    break
            if cost < best:
                best, best_blocks = cost, assigned
    return best, best_blocks


def brute_force_F(inst: Instance, f: CostFn, S: Iterable[int], cap: int = DEFAULT_CAP) -> Cost:
    """Minimum over partitions induced by ``S`` of the largest block cost."""
    return best_partition(inst, f, S, cap)[0]


def brute_force_optimal(inst: Instance, f: CostFn, k: int | None = None,
                        cap: int = DEFAULT_CAP) -> tuple[Cost, tuple[int, ...]]:
    """Optimal cost over all sink sets of size at most ``k``.

    Among minimizers the lexicographically smallest sorted sink tuple wins.
    """
    _guard(inst, cap)
    k = inst.k if k is None else k
    best: Cost = float("inf")
    best_S: tuple[int, ...] = ()
    for size in range(1, min(k, inst.n) + 1):
        for S in itertools.combinations(range(inst.n), size):
            c = brute_force_F(inst, f, S, cap)
            if c < best or (c == best and S < best_S):
                best, best_S = c, S
    return best, best_S


def brute_force_feasible(inst: Instance, f: CostFn, k: int, threshold: Cost,
                         cap: int = DEFAULT_CAP) -> bool:
    return brute_force_optimal(inst, f, k, cap)[0] <= threshold


def sides(inst: Instance, v: int) -> list[set[int]]:
    return [component(inst, y, blocked=v) for y in inst.adj[v]]
