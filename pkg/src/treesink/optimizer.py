"""Cost minimization by parametric search over the feasibility test.

The search replays one feasibility run whose comparisons are resolved
against the unknown optimum: a value is compared with the current margin
``(low, high]`` and, when it falls inside, a clean feasibility run at that
value decides the comparison and narrows the margin. The replayed run
behaves exactly like a run just below the optimum, so it ends in `No` and
leaves the optimum as ``high``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .feasibility import SOLVERS, Configuration, WorkingState
from .oracles import INF, InternalError, Oracle
from .tree import Edge, EmptySet, Instance, TreeError, component


class SinkSetEmpty(EmptySet):
    pass


@dataclass
class ThresholdMargin:
    """Comparator for the replayed run; ``probe(t)`` says whether ``t`` is feasible."""

    probe: Callable[[float], bool]
    low: float = -INF
    high: float = INF
    probes: int = 0
    cache: dict[float, bool] = field(default_factory=dict)

    @property
    def current(self) -> float:
        return self.low

    def feasible(self, t: float) -> bool:
        if t not in self.cache:
            self.probes += 1
            self.cache[t] = self.probe(t)
        return self.cache[t]

    def narrow(self, a: float) -> None:
        if self.feasible(a):
            self.high = min(self.high, a)
        else:
            self.low = max(self.low, a)
        if not self.low < self.high:
            raise InternalError(f"margin collapsed to ({self.low}, {self.high}]")

    def le(self, a: float) -> bool:
        if a <= self.low:
            return True
        if a >= self.high:
            return False
        self.narrow(a)
        return a <= self.low

    def prepare(self, values: Iterable[float]) -> None:
        """Pin the margin around a batch of values with a binary search."""
        vals = sorted({a for a in values if self.low < a < self.high})
        lo, hi = 0, len(vals)
        # vals[:lo] infeasible, vals[hi:] feasible
        while lo < hi:
            mid = (lo + hi) // 2
            self.narrow(vals[mid])
            if self.feasible(vals[mid]):
                hi = mid
            else:
                lo = mid + 1


@dataclass
class SearchStats:
    probes: int = 0
    probe_calls: int = 0
    replay_calls: int = 0
    verify_calls: int = 0
    low: float = -INF
    high: float = INF


def _search(inst: Instance, oracle: Oracle, run: Callable[[Oracle, object], Configuration | None],
            stats: SearchStats | None) -> tuple[float, Configuration]:
    """Generic parametric search; ``run(oracle, comparator)`` performs one feasibility run."""
    from .feasibility import Threshold

    probe_oracle = oracle.fork()

    def probe(t: float) -> bool:
        return run(probe_oracle, Threshold(t)) is not None

    margin = ThresholdMargin(probe)
    replay = run(oracle, margin)
    if replay is not None:
        # only a zero optimum lets the run succeed below the optimum
        if margin.low != -INF:
            raise InternalError("replayed run succeeded with a finite lower margin")
        best = 0
    else:
        if margin.high == INF:
            raise InternalError("replayed run ended without a feasible upper margin")
        best = margin.high
    verify = oracle.fork()
    conf = run(verify, Threshold(best))
    if conf is None:
        raise InternalError(f"optimum {best} is not feasible")
    if best > 0 and run(verify, Threshold(best - 1)) is not None:
        raise InternalError(f"{best - 1} is feasible below the reported optimum")
    if stats is not None:
        stats.probes = margin.probes
        stats.probe_calls = probe_oracle.calls
        stats.replay_calls = oracle.calls
        stats.verify_calls = verify.calls
        stats.low, stats.high = margin.low, margin.high
    return best, conf


def _solve(inst: Instance, oracle: Oracle, k: int | None, algo: str,
           stats: SearchStats | None) -> tuple[float, Configuration]:
    k = inst.k if k is None else k
    if k < 1:
        raise TreeError("k must be at least 1")
    state_cls = SOLVERS[algo][0]

    def run(orc: Oracle, cmp) -> Configuration | None:
        return state_cls(inst, orc, cmp, k).run()

    return _search(inst, oracle, run, stats)


def solve_parametric_iterative(inst: Instance, oracle: Oracle, k: int | None = None,
                               stats: SearchStats | None = None) -> tuple[float, Configuration]:
    """Optimal cost and a configuration attaining it, using the climbing solver."""
    return _solve(inst, oracle, k, "iterative", stats)


def solve_parametric_fast(inst: Instance, oracle: Oracle, k: int | None = None,
                          stats: SearchStats | None = None) -> tuple[float, Configuration]:
    """As :func:`solve_parametric_iterative` with the batched solver.

    Each median layer hands its values to the margin in one batch, so the
    layer costs a logarithmic number of clean runs.
    """
    return _solve(inst, oracle, k, "fast", stats)


def with_leaf_sinks(inst: Instance, sinks: Iterable[int]) -> tuple[Instance, dict[int, int]]:
    """Hang a free pendant leaf off every internal sink and move the sink there.

    The pendant edge has zero travel time and room for everyone, so costs are
    unchanged. Returns the new instance and a map from new sink ids back.
    """
    sinks = sorted(set(sinks))
    edges = list(inst.edges)
    weights = list(inst.weights)
    cap = max(1, inst.total_weight)
    back = {}
    n = inst.n
    for s in sinks:
        if len(inst.adj[s]) <= 1:
            back[s] = s
            continue
        edges.append(Edge(s, n, 0, cap))
        weights.append(0)
        back[n] = s
        n += 1
    return Instance(n, edges, weights, len(sinks)), back


def partition_fixed_sinks(inst: Instance, oracle: Oracle, sinks: Iterable[int],
                          stats: SearchStats | None = None
                          ) -> tuple[float, list[tuple[frozenset[int], int]]]:
    """Smallest cost at which the given sinks can serve the whole tree, with its blocks."""
    sinks = set(sinks)
    if not sinks:
        raise SinkSetEmpty("fixed-sinks mode needs at least one sink")
    bad = [s for s in sinks if not 0 <= s < inst.n]
    if bad:
        raise TreeError(f"sinks {bad} are not vertices of the tree")
    if inst.n == 1:
        return 0, [(frozenset({0}), 0)]
    big, back = with_leaf_sinks(inst, sinks)
    big_oracle = Oracle(big, oracle.fn, oracle.tag)

    def run(orc: Oracle, cmp) -> Configuration | None:
        return WorkingState(big, orc, cmp, len(sinks), fixed_sinks=back.keys()).run()

    best, conf = _search(big, big_oracle, run, stats)
    oracle.calls += big_oracle.calls
    oracle.work += big_oracle.work
    blocks = {back[s]: {x for x in b if x < inst.n} for b, s in conf.blocks}
    blocks = _own_blocks(inst, blocks)
    return best, sorted(((frozenset(b), s) for s, b in blocks.items()), key=lambda bs: bs[1])


def _own_blocks(inst: Instance, blocks: dict[int, set[int]]) -> dict[int, set[int]]:
    """Give every sink the part of its host block that lies behind it.

    A relabelled sink may end up inside another sink's block. Splitting there
    only shrinks the host block and routes the detached part to a nearer
    sink, so no block gets more expensive.
    """
    todo = True
    while todo:
        todo = False
        for t, B in list(blocks.items()):
            for s in sorted(B & blocks.keys()):
                if s == t:
                    continue
                host = component(inst, t, B, blocked=s)
                blocks[t] = host
                blocks[s] = (blocks[s] | B) - host
                todo = True
                break
    return blocks
