"""Immutable simple graphs on dense integer labels, plus the structural
predicates and metrics the bound hypotheses need (degrees, connectivity,
diameter, domination number, vertex connectivity)."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import CapabilityError, GraphError

DOMINATION_CAP = 20
CONNECTIVITY_CAP = 12


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertices 0..n-1, sorted tuple of sorted pairs.

    Construct through build_graph unless the edges are already normalized.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]


@dataclass(frozen=True)
class StructuralProfile:
    """Summary of the structural quantities used as bound inputs."""

    n: int
    m: int
    degree_sequence: tuple[int, ...]
    max_degree: int
    min_degree: int
    average_degree: float
    connected: bool
    bipartite: bool
    components: tuple[tuple[int, ...], ...]
    kind: str
    regular: bool


def build_graph(n: int, edges) -> Graph:
    """Validating constructor: rejects loops, duplicates, bad endpoints."""
    if n < 1:
        raise GraphError(f"need at least one vertex, got n={n}")
    seen = set()
    normalized = []
    for pair in edges:
        u, v = pair
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"duplicate edge {e}")
        seen.add(e)
        normalized.append(e)
    return Graph(n, tuple(sorted(normalized)))


def graph_to_json(g: Graph) -> dict:
    """JSON-ready dict {n, edges} (the internal interchange form)."""
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges]}


def graph_from_json(data: dict) -> Graph:
    return build_graph(int(data["n"]), [tuple(e) for e in data["edges"]])


def components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Connected components as sorted vertex tuples, ordered by least vertex."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        queue = deque([start])
        seen[start] = True
        comp = [start]
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def is_bipartite(g: Graph) -> bool:
    """BFS 2-coloring; bipartite iff no odd cycle is found."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def structural_profile(g: Graph) -> StructuralProfile:
    degs = sorted(g.degrees, reverse=True)
    comps = components(g)
    connected = len(comps) == 1
    if connected and g.m == g.n - 1:
        kind = "tree"
    elif connected and g.m == g.n:
        kind = "unicyclic"
    else:
        kind = "other"
    return StructuralProfile(
        n=g.n,
        m=g.m,
        degree_sequence=tuple(degs),
        max_degree=degs[0],
        min_degree=degs[-1],
        average_degree=2.0 * g.m / g.n,
        connected=connected,
        bipartite=is_bipartite(g),
        components=comps,
        kind=kind,
        regular=degs[0] == degs[-1],
    )


def _bfs_eccentricity(g: Graph, start: int) -> int:
    """Largest BFS distance from start; -1 marks an unreached vertex."""
    dist = [-1] * g.n
    dist[start] = 0
    queue = deque([start])
    far = 0
    reached = 1
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                far = max(far, dist[w])
                reached += 1
                queue.append(w)
    return far if reached == g.n else -1


def diameter(g: Graph) -> float:
    """Maximum shortest-path distance; inf when disconnected."""
    worst = 0
    for v in range(g.n):
        ecc = _bfs_eccentricity(g, v)
        if ecc < 0:
            return float("inf")
        worst = max(worst, ecc)
    return worst


def complement(g: Graph) -> Graph:
    edges = tuple(
        (u, v)
        for u, v in itertools.combinations(range(g.n), 2)
        if v not in g.adjacency[u]
    )
    return Graph(g.n, edges)


def domination_number(g: Graph) -> int:
    """Exact domination number by depth-limited search over growing set sizes.

    Branches on the dominators of an uncovered vertex with the fewest choices,
    pruned by a coverage lower bound. Exact for n <= DOMINATION_CAP.
    """
    n = g.n
    if n > DOMINATION_CAP:
        raise CapabilityError(f"domination_number capped at n <= {DOMINATION_CAP}, got {n}")
    closed = [(1 << v) | sum(1 << w for w in g.adjacency[v]) for v in range(n)]
    full = (1 << n) - 1
    max_cover = max(c.bit_count() for c in closed)
    # dominators of v are exactly the vertices whose closed neighborhood holds v
    dominators = [
        sorted((w for w in range(n) if closed[w] >> v & 1),
               key=lambda w: -closed[w].bit_count())
        for v in range(n)
    ]

    def covers(uncovered: int, budget: int) -> bool:
        if uncovered == 0:
            return True
        if budget * max_cover < uncovered.bit_count():
            return False
        pick = -1
        best = n + 1
        rest = uncovered
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            k = len(dominators[v])
            if k < best:
                best, pick = k, v
        for w in dominators[pick]:
            if covers(uncovered & ~closed[w], budget - 1):
                return True
        return False

    lower = -(-n // max_cover)
    for k in range(lower, n + 1):
        if covers(full, k):
            return k
    raise AssertionError("unreachable: V always dominates itself")


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity by minimum-cut search (small n only)."""
    n = g.n
    if n > CONNECTIVITY_CAP:
        raise CapabilityError(f"vertex_connectivity capped at n <= {CONNECTIVITY_CAP}, got {n}")
    if n == 1:
        return 0
    if not is_connected(g):
        return 0
    for size in range(1, n - 1):
        for cut in itertools.combinations(range(n), size):
            if not _connected_without(g, set(cut)):
                return size
    return n - 1


def is_k_connected(g: Graph, k: int) -> bool:
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    return g.n > k and vertex_connectivity(g) >= k


def _connected_without(g: Graph, removed: set[int]) -> bool:
    alive = [v for v in range(g.n) if v not in removed]
    if not alive:
        return False
    seen = {alive[0]}
    queue = deque([alive[0]])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(alive)
