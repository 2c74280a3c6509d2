"""Bounded-cost k-sink feasibility test.

Given a threshold ``T`` the solver either returns a :class:`Configuration`
(at most ``k`` sinks and a partition of the tree into blocks each served by
its sink within ``T``) or ``None`` when no such configuration exists.

The solver peels the working tree greedily. A *peaking* test on a sink-free
side ``V_{-v}(u)`` either absorbs it into ``v`` as an outstanding branch or
pins a sink at ``u``. Once no peaking test is pending the tree is RC-viable
and *reaching* tests walk the hub tree upward from the sinks: a side that is
recursively self-sufficient but cannot pull its parent in is committed and
removed. All threshold comparisons go through a comparator so the same code
runs under parametric search.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Protocol

from .oracles import INF, InternalError, Oracle
from .tree import Instance, component, is_connected, tree_median, tree_path


MARKED, SINK_PLACED, SUBTREE_REMOVED = "marked", "sink_placed", "subtree_removed"


class NoSinkInBlock(ValueError):
    pass


class TwoSinksInBlock(ValueError):
    pass


class MissingWitness(RuntimeError):
    pass


class BudgetExceeded(Exception):
    """More than ``k`` sinks were needed; the answer is `No`."""


class InvariantViolation(AssertionError):
    pass


class Comparator(Protocol):
    def le(self, a: float) -> bool: ...

    def prepare(self, values: Iterable[float]) -> None: ...


@dataclass
class Threshold:
    """Plain comparison against a fixed threshold."""

    value: float

    def le(self, a: float) -> bool:
        return a <= self.value

    def prepare(self, values: Iterable[float]) -> None:
        pass


@dataclass
class Configuration:
    sinks: list[int]
    blocks: list[tuple[frozenset[int], int]]

    def cost(self, oracle: Oracle) -> float:
        return max((oracle(set(b), s) for b, s in self.blocks), default=0)

    def check(self, inst: Instance, f, threshold: float | None = None,
              k: int | None = None) -> list[str]:
        """Problems with this configuration (empty when it is valid)."""
        errs = []
        seen: set[int] = set()
        for b, s in self.blocks:
            if s not in b:
                errs.append(f"block of sink {s} does not contain it")
            if len(b & set(self.sinks)) != 1:
                errs.append(f"block of sink {s} holds {len(b & set(self.sinks))} sinks")
            if seen & b:
                errs.append(f"block of sink {s} overlaps another block")
            seen |= b
            if not is_connected(inst, set(b)):
                errs.append(f"block of sink {s} is disconnected")
            if threshold is not None and f(inst, set(b), s) > threshold:
                errs.append(f"block of sink {s} costs more than {threshold}")
        if seen != set(range(inst.n)):
            errs.append("blocks do not cover the tree")
        if k is not None and len(self.sinks) > k:
            errs.append(f"{len(self.sinks)} sinks exceed k={k}")
        return errs

    def as_dict(self) -> dict:
        return {"sinks": sorted(self.sinks),
                "blocks": sorted([s, sorted(b)] for b, s in self.blocks)}


class WorkingState:
    """Mutable state of one bounded-cost run.

    ``alive`` is the working tree. Sinks of the working tree are leaves.
    ``pc_marked`` holds vertices known to sit in sink-free outstanding
    branches (or awaiting their peaking test); ``pc_passed[v]`` records the
    neighbours whose side has been absorbed into ``v``. ``rc_passed[v]`` maps
    a hub-tree neighbour to the sink ``v`` can evacuate to through it, and
    ``witness`` is the per-vertex witness sink used to rebuild partitions.
    """

    def __init__(self, inst: Instance, oracle: Oracle, cmp: Comparator, k: int | None = None,
                 fixed_sinks: Iterable[int] | None = None, check: bool = False):
        self.inst = inst
        self.oracle = oracle
        self.cmp = cmp
        self.k = inst.k if k is None else k
        self.check = check
        self.alive: set[int] = set(range(inst.n))
        self.sinks: set[int] = set()
        self.s_out: list[int] = []
        self.blocks: dict[int, set[int]] = {}
        self.pc_marked: set[int] = set()
        self.pc_passed: dict[int, set[int]] = {v: set() for v in range(inst.n)}
        self.rc_marked: set[int] = set()
        self.rc_passed: dict[int, dict[int, int]] = {v: {} for v in range(inst.n)}
        self.witness: dict[int, int] = {}
        self.rejected: set[int] = set()
        self.q_pc: deque[tuple[int, int]] = deque()
        self.q_rc: deque[tuple[int, int]] = deque()
        self.done = False
        self.fixed = fixed_sinks is not None
        self.pc_phases = 0
        self.scan_degenerate = True
        self.viability_log: list[bool] = []
        if fixed_sinks is not None:
            for s in sorted(set(fixed_sinks)):
                self.s_out.append(s)
                self.sinks.add(s)

    # -- small helpers ---------------------------------------------------

    def f(self, U: set[int], v: int) -> float:
        return self.oracle(U, v)

    def le(self, a: float) -> bool:
        return self.cmp.le(a)

    def nbrs(self, v: int) -> list[int]:
        return [y for y in self.inst.adj[v] if y in self.alive]

    def deg(self, v: int) -> int:
        return sum(1 for y in self.inst.adj[v] if y in self.alive)

    def side(self, u: int, v: int) -> set[int]:
        """V_{-v}(u) in the working tree."""
        return component(self.inst, u, self.alive, blocked=v)

    def hub_nbrs(self, v: int) -> list[int]:
        return [y for y in self.inst.adj[v] if y in self.alive and y not in self.pc_marked]

    def bulk_path(self, v: int, s: int) -> set[int]:
        """Path v..s plus the outstanding branches hanging off it."""
        pth = tree_path(self.inst, v, s, self.alive)
        out = set(pth)
        for x in pth:
            for y in self.inst.adj[x]:
                if y in self.alive and y in self.pc_marked and y not in out:
                    out |= component(self.inst, y, self.alive, blocked=x)
        return out

    def _exact(self, U: set[int], v: int) -> float:
        """Uncounted evaluation for invariant checks."""
        return self.oracle.fn(self.inst, U, v)

    def _threshold(self) -> float | None:
        return self.cmp.value if isinstance(self.cmp, Threshold) else None

    # -- commits ---------------------------------------------------------

    def commit(self, block: set[int], sink: int | None = None) -> None:
        """Add ``block`` to the output partition, merging by shared sink."""
        found = [s for s in self.s_out if s in block]
        if not found:
            raise NoSinkInBlock(f"block {sorted(block)} contains no output sink")
        if len(found) > 1:
            raise TwoSinksInBlock(f"block {sorted(block)} contains sinks {found}")
        s = found[0]
        if sink is not None and sink != s:
            raise NoSinkInBlock(f"block is committed to {sink} but contains sink {s}")
        self.blocks.setdefault(s, set()).update(block)
        if self.check:
            T = self._threshold()
            b = self.blocks[s]
            if not is_connected(self.inst, b):
                raise InvariantViolation(f"committed block of {s} is disconnected")
            if T is not None and self._exact(b, s) > T:
                raise InvariantViolation(f"committed block of {s} costs more than {T}")

    def add_sink(self, u: int) -> None:
        if self.fixed:
            raise BudgetExceeded(f"a new sink at {u} is required")
        self.s_out.append(u)
        self.sinks.add(u)
        if len(self.s_out) > self.k:
            raise BudgetExceeded(f"{len(self.s_out)} sinks exceed k={self.k}")

    def remove(self, verts: set[int]) -> None:
        self.alive -= verts
        self.sinks -= verts
        self.pc_marked -= verts
        self.rc_marked -= verts

    # -- peaking side ----------------------------------------------------

    def enqueue_pc(self, u: int, v: int) -> None:
        if self.check:
            T = self._threshold()
            if T is not None and self._exact(self.side(u, v), u) > T:
                raise InvariantViolation(f"queued side too expensive for ({u}, {v})")
        self.q_pc.append((u, v))

    def pc_pass(self, u: int, v: int) -> None:
        """Side ``V_{-v}(u)`` is an outstanding branch that ``v`` can absorb."""
        side = self.side(u, v)
        self.pc_marked |= side
        self.pc_passed[v].add(u)
        self.new_branch(v)

    def fire_pc(self, u: int, v: int) -> None:
        """Peaking criterion at ``(u, v)``: pin a sink at ``u``."""
        side = self.side(u, v)
        self.add_sink(u)
        self.commit(side, u)
        self.remove(side - {u})
        self.pc_marked.discard(u)
        self.pc_passed[u] = set()
        self.rc_passed[u] = {}
        self.rc_marked.add(u)
        self.witness[u] = u
        self.q_rc.append((u, v))

    def new_branch(self, v: int) -> None:
        """``v`` gained an outstanding branch; its reaching tests are stale."""
        if v not in self.sinks and (self.rc_passed[v] or v in self.rc_marked):
            for c in sorted(self.rc_passed[v]):
                self.q_rc.append((c, v))
            self.rc_passed[v] = {}
            self.rc_marked.discard(v)
            self.witness.pop(v, None)
        self.pc_rule(v)

    def pc_rule(self, v: int) -> None:
        if self.done or v not in self.alive:
            return
        d = self.deg(v)
        p = len(self.pc_passed[v])
        if v in self.sinks:
            if p == d:
                self.finish_single(v)
            return
        if p == d:
            self.finish_single(v)
            return
        if v in self.pc_marked or self.rc_passed[v] or p != d - 1:
            return
        (r,) = [y for y in self.nbrs(v) if y not in self.pc_passed[v]]
        self.pc_marked.add(v)
        self.on_ready(v, r)

    def on_ready(self, v: int, r: int) -> None:
        """``v`` and everything behind it is sink-free and servable by ``v``."""
        self.enqueue_pc(v, r)

    def pc_step(self, u: int, v: int) -> str | None:
        """Peaking test for a dequeued pair; ``None`` when the pair went stale."""
        if (u not in self.alive or v not in self.alive or u not in self.pc_marked
                or u in self.pc_passed[v]):
            return None
        a = self.f(self.side(u, v) | {v}, v)
        if self.le(a):
            self.pc_pass(u, v)
            return MARKED
        self.fire_pc(u, v)
        return SINK_PLACED

    pc_check = pc_step

    # -- reaching side ---------------------------------------------------

    def rc_valid(self, c: int, y: int) -> bool:
        return (c in self.alive and y in self.alive and c in self.rc_marked
                and y not in self.pc_marked and c not in self.rc_passed[y])

    def evacuate_test(self, y: int, cands: list[int], reject: bool = True) -> int | None:
        """First sink in ``cands`` that ``y`` can evacuate to, or None."""
        failed = []
        for s in cands:
            a = self.f(self.bulk_path(y, s), s)
            if self.le(a):
                if reject:
                    self.rejected.update(failed)
                return s
            failed.append(s)
        return None

    def candidates(self, c: int, y: int) -> list[int]:
        return sorted(s for s in self.side(c, y) & self.sinks if s not in self.rejected)

    def rc_step(self, c: int, y: int) -> str | None:
        """Reaching test for a dequeued pair; ``None`` when the pair went stale."""
        if not self.rc_valid(c, y):
            return None
        if y in self.sinks:
            self.rc_pass(c, y, y)
            return MARKED
        s = self.evacuate_test(y, self.candidates(c, y))
        if s is None:
            self.fire_rc(c, y)
            return SUBTREE_REMOVED
        self.rc_pass(c, y, s)
        return MARKED

    rc_check = rc_step

    def rc_pass(self, c: int, y: int, s: int) -> None:
        if self.check:
            T = self._threshold()
            if T is not None and self._exact(self.bulk_path(y, s), s) > T:
                raise InvariantViolation(f"witness {s} for {y} exceeds the threshold")
        self.rc_passed[y][c] = s
        self.rc_rule(y)

    def rc_rule(self, y: int) -> None:
        if self.done or y not in self.alive or y in self.pc_marked:
            return
        H = self.hub_nbrs(y)
        P = [c for c in H if c in self.rc_passed[y]]
        if not H:
            return
        if len(P) == len(H):
            if y not in self.sinks:
                self.witness[y] = self.rc_passed[y][min(P)]
            self.finish_rooted(y)
        elif len(P) == len(H) - 1 and P and y not in self.rc_marked:
            self.rc_marked.add(y)
            self.witness[y] = self.rc_passed[y][min(P)]
            (r,) = [x for x in H if x not in self.rc_passed[y]]
            self.q_rc.append((y, r))

    def fire_rc(self, c: int, y: int) -> None:
        """Reaching criterion at ``(c, y)``: finalize and drop ``V_{-y}(c)``."""
        sub = self.side(c, y)
        for block, s in self.partition_from_witnesses(c, sub):
            self.commit(block, s)
        self.remove(sub)
        self.after_removal(y)

    def after_removal(self, y: int) -> None:
        self.pc_rule(y)
        if not self.done and y not in self.pc_marked:
            self.rc_rule(y)

    def partition_from_witnesses(self, root: int, sub: set[int]) -> list[tuple[set[int], int]]:
        """Peel bulk paths toward the stored witnesses until ``sub`` is covered."""
        remaining = set(sub)
        roots = [root]
        out = []
        while roots:
            r = roots.pop()
            if r not in remaining:
                continue
            if r not in self.witness:
                raise MissingWitness(f"no witness stored for {r}")
            s = self.witness[r]
            bp = self.bulk_path(r, s)
            if not bp <= remaining:
                raise InvariantViolation(f"bulk path of {r} leaves the subtree")
            remaining -= bp
            out.append((bp, s))
            roots.extend(sorted({y for x in bp for y in self.inst.adj[x] if y in remaining},
                                reverse=True))
        return out

    # -- termination -----------------------------------------------------

    def finish_single(self, v: int) -> None:
        """The rest of the tree is served by ``v`` alone."""
        if self.check and self.sinks - {v}:
            raise InvariantViolation("single-sink finish with other sinks present")
        if v not in self.sinks and self.scan_degenerate:
            # any vertex below v that can serve the whole tree takes precedence
            for s in sorted(x for x in self.alive if x < v):
                if self.le(self.f(set(self.alive), s)):
                    v = s
                    break
        if v not in self.sinks:
            self.add_sink(v)
        self.commit(set(self.alive), v)
        self.remove(set(self.alive))
        self.done = True

    def finish_rooted(self, y: int) -> None:
        for block, s in self.partition_from_witnesses(y, set(self.alive)):
            self.commit(block, s)
        self.remove(set(self.alive))
        self.done = True

    # -- driver ----------------------------------------------------------

    def seed(self) -> None:
        n = self.inst.n
        if n == 1:
            self.finish_single(0)
            return
        for s in sorted(self.sinks):
            if self.deg(s) != 1:
                raise ValueError(f"fixed sink {s} is not a leaf")
            self.rc_marked.add(s)
            self.witness[s] = s
            self.q_rc.append((s, self.nbrs(s)[0]))
        for u in range(n):
            if self.deg(u) == 1 and u not in self.sinks:
                self.pc_marked.add(u)
                self.on_ready(u, self.nbrs(u)[0])

    def pc_phase(self) -> None:
        while self.q_pc and not self.done:
            self.pc_step(*self.q_pc.popleft())

    def rc_round(self) -> None:
        self.rc_step(*self.q_rc.popleft())

    def pending_pc(self) -> bool:
        return bool(self.q_pc)

    def run(self) -> Configuration | None:
        try:
            self.oracle.phase = "pc"
            self.seed()
            if self.check and not self.done and not self.pending_pc():
                self.verify_rc_viable()
            while not self.done:
                if self.pending_pc():
                    self.oracle.phase = "pc"
                    self.pc_phase()
                    self.pc_phases += 1
                    if self.check and not self.done:
                        self.verify_rc_viable()
                    continue
                if self.q_rc:
                    self.oracle.phase = "rc"
                    self.rc_round()
                    continue
                raise InternalError("both queues drained before the tree was covered")
        except BudgetExceeded:
            return None
        return Configuration(list(self.s_out), [(frozenset(b), s) for s, b in self.blocks.items()])

    def verify_rc_viable(self) -> bool:
        """Every outstanding branch fits within the threshold at its attachment."""
        T = self._threshold()
        ok = True
        if T is not None:
            hub = self.alive - self.pc_marked
            for w in hub:
                for y in self.nbrs(w):
                    if y in self.pc_marked:
                        if self._exact(self.side(y, w) | {w}, w) > T:
                            ok = False
            for s in self.sinks:
                if self.deg(s) > 1:
                    ok = False
        self.viability_log.append(ok)
        if not ok:
            raise InvariantViolation("working tree is not RC-viable after a peaking phase")
        return ok


def bounded_cost_iterative(inst: Instance, oracle: Oracle, threshold: float,
                           k: int | None = None, check: bool = False) -> Configuration | None:
    """Feasibility test by tree climbing; ``None`` means `No`."""
    return WorkingState(inst, oracle, Threshold(threshold), k, check=check).run()


class FastState(WorkingState):
    """Bounded-cost run with batched peaking tests and binary-searched climbs.

    The first peaking phase splits the tree at medians so every epoch
    evaluates disjoint sides. Later phases only climb chains that start at a
    freshly exposed vertex, and reaching tests walk hub-degree-2 chains by
    binary search. Goodness of a directed edge is inherited downward, so each
    chain has a single switch point.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.scan_degenerate = False
        self.batch = False
        self.pending: list[tuple[int, int]] = []
        self.fallback_calls = 0

    def on_ready(self, v: int, r: int) -> None:
        if self.batch:
            self.pending.append((v, r))
        else:
            self.enqueue_pc(v, r)

    def good(self, u: int, v: int) -> bool:
        return self.le(self.f(self.side(u, v) | {v}, v))

    # -- first peaking phase ---------------------------------------------

    def seed(self) -> None:
        if self.inst.n == 1:
            self.finish_single(0)
            return
        self.batch = True
        self.pc_task(set(self.alive), None, False)
        self.batch = False
        for v, r in self.pending:
            if self.ready_open(v, r):
                self.fallback_calls += 1
                self.q_pc.append((v, r))
        self.pending = []

    def ready_open(self, v: int, r: int) -> bool:
        return (not self.done and v in self.alive and r in self.alive and v in self.pc_marked
                and v not in self.pc_passed[r])

    def recursive_pc_pass(self, sub: set[int]) -> None:
        self.batch = True
        self.pc_task(sub, None, False)
        self.batch = False

    def pc_task(self, C: set[int], root: tuple[int, int] | None, root_bad: bool) -> None:
        """Resolve every sink-free direction inside ``C`` pointing toward ``root``.

        With ``root=None`` all directions are in play. ``root_bad`` records that
        the side of ``root`` is already known not to fit into its far end.
        """
        C = C & self.alive
        if self.done or not C:
            return
        m = tree_median(self.inst, C)
        u0, v0 = root if root else (None, None)
        if root and m != u0:
            p = tree_path(self.inst, m, u0, C)[1]
        else:
            p = v0
        kids = [y for y in self.inst.adj[m] if y in C and y != p]
        vals = {y: self.f(self.side(y, m) | {m}, m) for y in kids}
        self.cmp.prepare(vals.values())
        bad = []
        for y in kids:
            if self.le(vals[y]):
                self.pc_pass(y, m)
            else:
                bad.append(y)
            if self.done:
                return
        part = {y: component(self.inst, y, C, blocked=m) for y in bad}
        if root is None:
            if not bad:
                self.finish_single(m)
                return
            if len(bad) == 1:
                (y,) = bad
                if self.good(m, y):
                    self.pc_pass(m, y)
                    self.pc_task(part[y], None, False)
                else:
                    self.fire_pc(m, y)
                    self.pc_task(part[y], (y, m), True)
                return
            for y in bad:
                self.pc_task(part[y], (y, m), True)
            return
        for y in bad:
            self.pc_task(part[y], (y, m), True)
            if self.done:
                return
        rest = component(self.inst, p, C, blocked=m) if m != u0 else set()
        if not bad:
            if m == u0 and root_bad:
                self.fire_pc(m, v0)
                return
            if self.good(m, p):
                self.pc_pass(m, p)
                if m != u0:
                    self.pc_task(rest, root, root_bad)
                return
            self.fire_pc(m, p)
        if m == u0:
            return
        # everything on the way to the root now sees a sink behind it
        spine = tree_path(self.inst, p, u0, rest)
        on_spine = set(spine)
        for x in spine:
            for z in sorted(self.inst.adj[x]):
                if z in rest and z not in on_spine:
                    self.pc_task(component(self.inst, z, rest, blocked=x), (z, x), False)
                    if self.done:
                        return

    # -- later peaking phases --------------------------------------------

    def pc_phase(self) -> None:
        while self.q_pc and not self.done:
            u, v = self.q_pc.popleft()
            if self.ready_open(u, v):
                self.climb(u, v)

    def climb_chain(self, u: int, v: int) -> list[int]:
        """u, v, then every vertex that would become ready in turn."""
        chain = [u, v]
        while True:
            x = chain[-1]
            if x in self.sinks or x in self.pc_marked:
                return chain
            open_ = [y for y in self.nbrs(x) if y not in self.pc_passed[x] and y != chain[-2]]
            if len(open_) != 1:
                return chain
            chain.append(open_[0])

    def climb(self, u: int, v: int) -> None:
        chain = self.climb_chain(u, v)
        tests = len(chain) - 1
        lo, hi = -1, tests - 1
        # highest i with good(chain[i] -> chain[i+1]); goodness is downward closed
        if self.good(chain[hi], chain[hi + 1]):
            lo = hi
        else:
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if self.good(chain[mid], chain[mid + 1]):
                    lo = mid
                else:
                    hi = mid
        self.batch = True
        for i in range(lo + 1):
            self.pc_pass(chain[i], chain[i + 1])
            if self.done:
                break
        self.batch = False
        pend, self.pending = self.pending, []
        if self.done:
            return
        if lo < tests - 1:
            self.fire_pc(chain[lo + 1], chain[lo + 2])
        for a, b in pend:
            if self.ready_open(a, b) and a != chain[lo + 1]:
                self.q_pc.append((a, b))

    # -- reaching side ---------------------------------------------------

    def rc_chain(self, c: int, y: int) -> list[int]:
        chain = [c, y]
        while True:
            x = chain[-1]
            if (x in self.sinks or x in self.rc_marked or self.rc_passed[x]
                    or x in self.pc_marked):
                return chain
            hub = self.hub_nbrs(x)
            if len(hub) != 2:
                return chain
            chain.append(hub[0] if hub[1] == chain[-2] else hub[1])

    def rc_round(self) -> None:
        c, y = self.q_rc.popleft()
        if self.rc_valid(c, y):
            self.rc_binary_search(c, y)

    def rc_binary_search(self, c: int, y: int) -> tuple[int, int] | None:
        """Resolve the reaching tests from ``c`` up the chain through ``y``.

        Returns the edge where the reaching criterion fired, or ``None`` when
        every tested vertex could evacuate to a sink below it.
        """
        chain = self.rc_chain(c, y)
        if len(chain) == 2:
            return (c, y) if self.rc_step(c, y) == SUBTREE_REMOVED else None
        h1 = chain[-1]
        inner = chain[1:-1]
        cands = self.candidates(c, chain[1])
        s = self.evacuate_test(inner[-1], cands)
        if s is not None:
            self.mark_chain(chain, len(inner), s)
            self.q_rc.append((inner[-1], h1))
            return None
        lo, hi, wit = 0, len(inner), None
        while hi - lo > 1:
            mid = (lo + hi) // 2
            got = self.evacuate_test(chain[mid], cands, reject=False)
            if got is None:
                hi = mid
            else:
                lo, wit = mid, got
        if lo:
            self.mark_chain(chain, lo, wit)
        self.fire_rc(chain[lo], chain[lo + 1])
        return chain[lo], chain[lo + 1]

    def mark_chain(self, chain: list[int], upto: int, s: int) -> None:
        for i in range(1, upto + 1):
            x = chain[i]
            self.rc_passed[x][chain[i - 1]] = s
            self.rc_marked.add(x)
            self.witness[x] = s


def bounded_cost_fast(inst: Instance, oracle: Oracle, threshold: float,
                      k: int | None = None, check: bool = False) -> Configuration | None:
    """Feasibility test with batched peaking and binary-searched climbing."""
    return FastState(inst, oracle, Threshold(threshold), k, check=check).run()


def bounded_cost_fixed(inst: Instance, oracle: Oracle, threshold: float, sinks: Iterable[int],
                       check: bool = False) -> Configuration | None:
    """Feasibility with the sink set given in advance; sinks must be leaves."""
    sinks = set(sinks)
    return WorkingState(inst, oracle, Threshold(threshold), len(sinks), fixed_sinks=sinks,
                        check=check).run()


SOLVERS = {"iterative": (WorkingState, bounded_cost_iterative),
           "fast": (FastState, bounded_cost_fast)}
