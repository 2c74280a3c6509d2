"""Atomic cost oracles f(U, v).

Two implementations share one interface: :class:`EvacuationOracle` computes
the exact confluent-flow evacuation time toward a single sink, and
:class:`EccentricityOracle` the farthest travel distance (the k-center cost).
Both count their evaluations so solvers can be compared by oracle usage.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .tree import Instance, component, is_connected

INF = math.inf


class InternalError(RuntimeError):
    pass


def _rooted_order(inst: Instance, U: set[int], v: int) -> tuple[list[int], dict[int, int]]:
    order = [v]
    parent = {v: -1}
    for x in order:
        for y in inst.adj[x]:
            if y in U and y not in parent:
                parent[y] = x
                order.append(y)
    return order, parent


def _drain(runs: list[tuple[int, int, int]], start: int, end: float, rate: int,
           backlog: int, cap: int) -> int:
    """Advance a queue over steps [start, end) with constant arrivals per step.

    Appends departure runs ``(first_step, last_step_exclusive, people_per_step)``
    and returns the backlog left at ``end``.
    """
    t = start
    if rate >= cap:
        if end == INF:
            raise InternalError("unbounded arrivals")
        runs.append((t, int(end), cap))
        return backlog + (rate - cap) * (int(end) - t)
    d = cap - rate
    if backlog:
        full = min(backlog // d, end - t)
        full = int(full)
        if full:
            runs.append((t, t + full, cap))
            t += full
            backlog -= full * d
        if t < end and backlog:
            runs.append((t, t + 1, backlog + rate))
            t += 1
            backlog = 0
    if t < end and rate and end != INF:
        runs.append((t, int(end), rate))
    return backlog


def _departures(arrivals: list[tuple[int, int, int]], cap: int) -> list[tuple[int, int, int]]:
    """Departure runs of a capacity-``cap`` edge fed by the given arrival runs."""
    if not arrivals:
        return []
    delta: Counter[int] = Counter()
    for a, b, r in arrivals:
        delta[a] += r
        delta[b] -= r
    points = sorted(delta)
    out: list[tuple[int, int, int]] = []
    backlog = 0
    rate = 0
    for i, p in enumerate(points):
        rate += delta[p]
        nxt = points[i + 1] if i + 1 < len(points) else INF
        if rate == 0 and backlog == 0:
            continue
        backlog = _drain(out, p, nxt, rate, backlog, cap)
    return out


def evacuation_time(inst: Instance, U: set[int], v: int) -> float:
    """Time the last person in ``U`` reaches ``v``; +inf if ``v`` is outside ``U``
    or ``U`` is disconnected.

    Each vertex forwards people toward ``v`` over its parent edge, at most
    ``cap`` entering per unit step and arriving ``tau`` steps later. Arrivals
    at step t may leave again at step t. People starting at ``v`` exit at 0.
    """
    if v not in U:
        return INF
    order, parent = _rooted_order(inst, U, v)
    if len(order) != len(U):
        return INF
    incoming: dict[int, list[tuple[int, int, int]]] = {x: [] for x in order}
    last = 0
    for x in reversed(order[1:]):
        arr = incoming.pop(x)
        if inst.weights[x]:
            arr.append((0, 1, inst.weights[x]))
        if not arr:
            continue
        e = inst.adj[x][parent[x]]
        dep = _departures(arr, e.cap)
        shifted = [(a + e.tau, b + e.tau, r) for a, b, r in dep]
        if parent[x] == v:
            last = max(last, max(b for _, b, _ in shifted) - 1)
        else:
            incoming[parent[x]].extend(shifted)
    return last


def evacuation_time_stepwise(inst: Instance, U: set[int], v: int) -> float:
    """Unit-step simulation of :func:`evacuation_time`, used as a cross-check."""
    if v not in U:
        return INF
    order, parent = _rooted_order(inst, U, v)
    if len(order) != len(U):
        return INF
    horizon = sum(inst.weights[x] for x in U) + sum(
        inst.adj[x][parent[x]].tau for x in order[1:]) + 1
    pool = {x: inst.weights[x] for x in order[1:]}
    in_flight: dict[int, Counter[int]] = {x: Counter() for x in order}
    remaining = sum(pool.values())
    last = 0
    t = 0
    while remaining:
        if t > horizon:
            raise InternalError("simulation exceeded its horizon")
        # deepest first so that zero-length edges deliver within the step
        for x in reversed(order[1:]):
            pool[x] += in_flight[x].pop(t, 0)
            if pool[x]:
                e = inst.adj[x][parent[x]]
                m = min(e.cap, pool[x])
                pool[x] -= m
                p = parent[x]
                if p == v:
                    last = max(last, t + e.tau)
                    remaining -= m
                else:
                    in_flight[p][t + e.tau] += m
        t += 1
    return last


def eccentricity(inst: Instance, U: set[int], v: int) -> float:
    """Largest travel distance from a vertex of ``U`` to ``v``."""
    if v not in U:
        return INF
    dist = {v: 0}
    stack = [v]
    while stack:
        x = stack.pop()
        for y, e in inst.adj[x].items():
            if y in U and y not in dist:
                dist[y] = dist[x] + e.tau
                stack.append(y)
    if len(dist) != len(U):
        return INF
    return max(dist.values())


@dataclass
class Oracle:
    """Counting wrapper around a cost function ``f(inst, U, v)``.

    ``calls`` counts evaluations; ``work`` sums ``|U|`` over them so that a
    batch of evaluations on disjoint sets can be charged as one pass over the
    tree. Counters are kept per phase tag as well.
    """

    inst: Instance
    fn: Callable[[Instance, set[int], int], float]
    tag: str
    calls: int = 0
    work: int = 0
    phase: str = "main"
    by_phase: Counter = field(default_factory=Counter)

    def __call__(self, U: Iterable[int], v: int) -> float:
        U = U if isinstance(U, (set, frozenset)) else set(U)
        self.calls += 1
        self.work += len(U)
        self.by_phase[self.phase] += 1
        return self.fn(self.inst, U, v)

    @property
    def amortized(self) -> float:
        """Oracle work in units of whole-tree evaluations."""
        return self.work / self.inst.n

    def fork(self) -> "Oracle":
        """Fresh counters over the same instance and cost function."""
        return Oracle(self.inst, self.fn, self.tag)

    def reset(self) -> None:
        self.calls = 0
        self.work = 0
        self.by_phase.clear()


def evacuation_oracle(inst: Instance) -> Oracle:
    return Oracle(inst, evacuation_time, "evac")


def eccentricity_oracle(inst: Instance) -> Oracle:
    return Oracle(inst, eccentricity, "kcenter")


ORACLES = {"evac": evacuation_oracle, "kcenter": eccentricity_oracle,
           "eccentricity": eccentricity_oracle}


def make_oracle(inst: Instance, tag: str) -> Oracle:
    try:
        return ORACLES[tag](inst)
    except KeyError:
        raise ValueError(f"unknown oracle {tag!r}") from None


# ---------------------------------------------------------------------------
# axiom verification


@dataclass
class AxiomReport:
    checked: Counter = field(default_factory=Counter)
    failures: dict[str, list[tuple]] = field(default_factory=dict)

    def fail(self, axiom: str, witness: tuple) -> None:
        self.failures.setdefault(axiom, []).append(witness)

    @property
    def ok(self) -> bool:
        return not self.failures

    def passed(self, axiom: str) -> bool:
        return axiom not in self.failures


def connected_subsets(inst: Instance, limit: int | None = None) -> Iterable[frozenset[int]]:
    """All vertex sets inducing a subtree (exhaustive; keep n small)."""
    n = inst.n
    for mask in range(1, 1 << n):
        U = frozenset(i for i in range(n) if mask >> i & 1)
        if is_connected(inst, set(U)):
            yield U


def _random_subtree(inst: Instance, rng: random.Random, size: int, start: int) -> set[int]:
    U = {start}
    frontier = [y for y in inst.adj[start]]
    while frontier and len(U) < size:
        y = frontier.pop(rng.randrange(len(frontier)))
        if y in U:
            continue
        U.add(y)
        frontier.extend(z for z in inst.adj[y] if z not in U)
    return U


def _check_all(f: Callable, inst: Instance, U: frozenset[int], v: int, rep: AxiomReport) -> None:
    Us = set(U)
    fv = f(Us, v)
    # (1) base cases
    rep.checked["base"] += 1
    if len(U) == 1 and fv != 0:
        rep.fail("base", (U, v, fv))
    # (2) set monotonicity against every one-vertex shrink that stays connected
    for x in U:
        if x == v:
            continue
        smaller = Us - {x}
        if is_connected(inst, smaller):
            rep.checked["set_monotonicity"] += 1
            if f(smaller, v) > fv:
                rep.fail("set_monotonicity", (U, x, v))
    # (3) path monotonicity: sink moved to an outside neighbor
    for y in inst.adj[v]:
        if y not in U:
            rep.checked["path_monotonicity"] += 1
            if f(Us | {y}, y) < fv:
                rep.fail("path_monotonicity", (U, v, y))
    # (4) max composition over the components of U - v
    parts = [component(inst, y, Us, blocked=v) for y in inst.adj[v] if y in Us]
    best = max((f(p | {v}, v) for p in parts), default=0)
    rep.checked["max_composition"] += 1
    if len(U) > 1 and best != fv:
        rep.fail("max_composition", (U, v, fv, best))


def verify_axioms(f: Callable[[set[int], int], float], inst: Instance,
                  sample_budget: int = 200, exhaustive_limit: int = 10,
                  seed: int = 0) -> AxiomReport:
    """Check the monotone min-max axioms for ``f`` on ``inst``.

    Small trees (``n <= exhaustive_limit``) are checked on every connected
    ``(U, v)``; larger ones on ``sample_budget`` random pairs.
    """
    if sample_budget <= 0:
        raise ValueError("sample_budget must be positive")
    rep = AxiomReport()
    # (1) outside vertex and disconnected set
    if inst.n >= 2:
        rep.checked["base"] += 1
        if f({0}, 1) != INF:
            rep.fail("base", ({0}, 1))
    if inst.n <= exhaustive_limit:
        for U in connected_subsets(inst):
            for v in U:
                _check_all(f, inst, U, v, rep)
    else:
        rng = random.Random(seed)
        for _ in range(sample_budget):
            start = rng.randrange(inst.n)
            U = frozenset(_random_subtree(inst, rng, rng.randint(1, inst.n), start))
            _check_all(f, inst, U, rng.choice(sorted(U)), rep)
    return rep


evac_time = evacuation_time
