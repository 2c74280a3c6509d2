"""Tree instances and the structural queries the solvers rely on.

Vertex ids are dense integers ``0..n-1``. Working trees are represented as a
set of alive vertex ids over the immutable input tree, so every query takes an
optional ``alive`` set restricting the tree to the induced subtree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

INT64_MAX = 2**63 - 1


class TreeError(ValueError):
    """Base class for invalid-instance and bad-query errors."""


class NotATree(TreeError):
    pass


class NegativeValue(TreeError):
    pass


class ZeroCapacity(TreeError):
    pass


class NotAdjacent(TreeError):
    pass


class EmptySet(TreeError):
    pass


class SinkNotLeaf(TreeError):
    pass


class NotInHubTree(TreeError):
    pass


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    tau: int
    cap: int


@dataclass
class Instance:
    """A tree with travel times, capacities, vertex weights and a sink budget."""

    n: int
    edges: list[Edge]
    weights: list[int]
    k: int
    adj: list[dict[int, Edge]] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.adj = [dict() for _ in range(self.n)]
        for e in self.edges:
            self.adj[e.u][e.v] = e
            self.adj[e.v][e.u] = e

    def neighbors(self, v: int) -> Iterable[int]:
        return self.adj[v].keys()

    def edge(self, u: int, v: int) -> Edge:
        try:
            return self.adj[u][v]
        except KeyError:
            raise NotAdjacent(f"{u} and {v} are not adjacent") from None

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def with_k(self, k: int) -> "Instance":
        return Instance(self.n, list(self.edges), list(self.weights), k)


def build(
    n: int,
    raw_edges: Iterable[tuple[int, int, int, int]],
    weights: dict[int, int] | list[int] | None = None,
    k: int = 1,
) -> Instance:
    """Validate raw data and return an :class:`Instance`.

    ``raw_edges`` holds ``(u, v, tau, cap)`` tuples; ``weights`` maps vertex ids
    to people counts (missing vertices default to 0).
    """
    if n < 1:
        raise NotATree("a tree needs at least one vertex")
    if k < 1:
        raise TreeError("k must be at least 1")
    edges = []
    for u, v, tau, cap in raw_edges:
        if not (0 <= u < n and 0 <= v < n):
            raise NotATree(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
        if u == v:
            raise NotATree(f"self-loop at {u}")
        if tau < 0:
            raise NegativeValue(f"edge ({u}, {v}) has negative travel time {tau}")
        if cap < 0:
            raise NegativeValue(f"edge ({u}, {v}) has negative capacity {cap}")
        if cap == 0:
            raise ZeroCapacity(f"edge ({u}, {v}) has zero capacity")
        if tau > INT64_MAX or cap > INT64_MAX:
            raise TreeError(f"edge ({u}, {v}) exceeds the 64-bit range")
        edges.append(Edge(u, v, tau, cap))
    if len(edges) != n - 1:
        raise NotATree(f"expected {n - 1} edges, got {len(edges)}")

    w = [0] * n
    items = weights.items() if isinstance(weights, dict) else enumerate(weights or [])
    for v, wv in items:
        if not 0 <= v < n:
            raise TreeError(f"weight for unknown vertex {v}")
        if wv < 0:
            raise NegativeValue(f"vertex {v} has negative weight {wv}")
        if wv > INT64_MAX:
            raise TreeError(f"weight of vertex {v} exceeds the 64-bit range")
        w[v] = wv

    inst = Instance(n, edges, w, k)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in inst.adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != n or any(len(a) != sum(1 for e in edges if x in (e.u, e.v))
                             for x, a in enumerate(inst.adj)):
        raise NotATree("edges contain a cycle or leave the graph disconnected")
    return inst


def path(n: int, tau: int = 1, cap: int = 1, weight: int = 1, k: int = 1) -> Instance:
    """Path on ``0..n-1`` with uniform parameters."""
    return build(n, [(i, i + 1, tau, cap) for i in range(n - 1)], [weight] * n, k)


def star3(k: int = 1) -> Instance:
    """Center 0 with leaves 1, 2, 3; leaves carry two people each."""
    return build(4, [(0, 1, 1, 1), (0, 2, 1, 1), (0, 3, 1, 1)], [0, 2, 2, 2], k)


def component(inst: Instance, start: int, alive: set[int] | None = None,
              blocked: int | None = None) -> set[int]:
    """Vertices reachable from ``start`` inside ``alive`` without entering ``blocked``."""
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in inst.adj[x]:
            if y == blocked or y in seen or (alive is not None and y not in alive):
                continue
            seen.add(y)
            stack.append(y)
    return seen


def detached_subtree(inst: Instance, v: int, u: int, alive: set[int] | None = None) -> set[int]:
    """Vertices of the component containing ``u`` after deleting ``v``."""
    if u not in inst.adj[v] or (alive is not None and (u not in alive or v not in alive)):
        raise NotAdjacent(f"{u} and {v} are not adjacent in the working tree")
    return component(inst, u, alive, blocked=v)


def is_connected(inst: Instance, verts: set[int]) -> bool:
    if not verts:
        return False
    return len(component(inst, next(iter(verts)), verts)) == len(verts)


def tree_path(inst: Instance, a: int, b: int, alive: set[int] | None = None) -> list[int]:
    """Vertices on the a-b path, a first."""
    parent = {a: a}
    q = deque([a])
    while q:
        x = q.popleft()
        if x == b:
            break
        for y in inst.adj[x]:
            if y not in parent and (alive is None or y in alive):
                parent[y] = x
                q.append(y)
    if b not in parent:
        raise TreeError(f"{b} is not reachable from {a}")
    out = [b]
    while out[-1] != a:
        out.append(parent[out[-1]])
    out.reverse()
    return out


def tree_median(inst: Instance, sub: set[int]) -> int:
    """Centroid of the subtree induced by ``sub``; ties go to the smallest id."""
    if not sub:
        raise EmptySet("median of an empty vertex set")
    root = min(sub)
    order = [root]
    parent = {root: -1}
    for x in order:
        for y in inst.adj[x]:
            if y in sub and y not in parent:
                parent[y] = x
                order.append(y)
    size = {x: 1 for x in order}
    for x in reversed(order[1:]):
        size[parent[x]] += size[x]
    total = len(order)
    best, best_val = root, total + 1
    for x in order:
        worst = total - size[x]
        for y in inst.adj[x]:
            if y in sub and parent.get(y) == x:
                worst = max(worst, size[y])
        if worst < best_val or (worst == best_val and x < best):
            best, best_val = x, worst
    return best


@dataclass
class HubStructure:
    hubs: set[int]
    hub_tree_vertices: set[int]
    sink_leaves: set[int]


def steiner_vertices(inst: Instance, terminals: set[int], alive: set[int] | None = None) -> set[int]:
    """Minimal subtree spanning ``terminals`` (by repeatedly pruning non-terminal leaves)."""
    verts = set(alive) if alive is not None else set(range(inst.n))
    if not terminals:
        return set()
    deg = {x: sum(1 for y in inst.adj[x] if y in verts) for x in verts}
    q = deque(x for x in verts if deg[x] <= 1 and x not in terminals)
    while q:
        x = q.popleft()
        if x not in verts:
            continue
        verts.discard(x)
        for y in inst.adj[x]:
            if y in verts:
                deg[y] -= 1
                if deg[y] <= 1 and y not in terminals:
                    q.append(y)
    return verts


def hub_structure(inst: Instance, sinks: set[int], alive: set[int] | None = None) -> HubStructure:
    """Hub tree of ``sinks``: its vertex set and branch vertices."""
    if not sinks:
        raise EmptySet("hub structure needs at least one sink")
    for s in sinks:
        d = sum(1 for y in inst.adj[s] if alive is None or y in alive)
        if d > 1:
            raise SinkNotLeaf(f"sink {s} is not a leaf of the working tree")
    hv = steiner_vertices(inst, set(sinks), alive)
    hubs = {x for x in hv if sum(1 for y in inst.adj[x] if y in hv) >= 3}
    return HubStructure(hubs, hv, set(sinks))


def bulk_path(inst: Instance, u: int, v: int, hub: HubStructure,
              alive: set[int] | None = None) -> set[int]:
    """The u-v path plus every outstanding branch attached to it."""
    hv = hub.hub_tree_vertices
    if u not in hv or v not in hv:
        raise NotInHubTree(f"{u} or {v} is not on the hub tree")
    out = set(tree_path(inst, u, v, hv))
    for x in list(out):
        for y in inst.adj[x]:
            if y not in hv and (alive is None or y in alive):
                out |= component(inst, y, alive, blocked=x)
    return out


@dataclass
class Compartment:
    vertices: set[int]
    boundary: set[int]


def compartments(inst: Instance, sub: set[int], W: set[int]) -> list[Compartment]:
    """Split ``sub`` at the separator set ``W``; boundaries may be shared."""
    W = W & sub
    if not W:
        return [Compartment(set(sub), set())]
    out: list[Compartment] = []
    seen: set[int] = set()
    for x in sorted(sub - W):
        if x in seen:
            continue
        comp = component(inst, x, sub - W)
        seen |= comp
        out.append(comp | {y for c in comp for y in inst.adj[c] if y in W})
    # adjacent separator vertices form two-vertex compartments
    for e in inst.edges:
        if e.u in W and e.v in W:
            out.append({e.u, e.v})
    if not out:
        out.append(set(W))
    return [Compartment(vs, {x for x in vs if any(y in sub and y not in vs for y in inst.adj[x])})
            for vs in out]
