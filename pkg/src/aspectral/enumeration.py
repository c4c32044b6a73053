"""Isomorphism-free streams of trees, unicyclic graphs, and small general
graphs.

Trees come from the classic level-sequence successor walk over canonical
rooted trees, reduced to free trees by a centroid-rooted subtree encoding.
Unicyclic graphs are trees plus one non-edge, deduplicated by canonical
form. General and connected graphs are built by vertex augmentation from
the complete list one order lower, again deduplicated by canonical form.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .canon import canonical_form
from .errors import CapabilityError, GraphError
from .graphs import Graph, is_bipartite, is_connected

TREE_CAP = 12
UNICYCLIC_CAP = 10
GENERAL_CAP = 8
LABELED_CAP = 8

CLASSES = ("trees", "unicyclic", "connected", "all", "connected-nonbipartite")


@dataclass(frozen=True)
class EnumerationQuery:
    n: int
    graph_class: str
    cap: int | None = None

    def __post_init__(self):
        if self.graph_class not in CLASSES:
            raise GraphError(f"unknown class {self.graph_class!r} (choices: {CLASSES})")


def _level_sequences(n: int) -> Iterator[list[int]]:
    """All canonical rooted-tree level sequences on n vertices, root level 1."""
    s = list(range(1, n + 1))
    while True:
        yield s[:]
        p = -1
        for i in range(n - 1, -1, -1):
            if s[i] > 2:
                p = i
                break
        if p < 0:
            return
        q = p - 1
        while s[q] != s[p] - 1:
            q -= 1
        s = s[:p] + [0] * (n - p)
        for i in range(p, n):
            s[i] = s[i - (p - q)]


def _tree_from_levels(levels: list[int]) -> Graph:
    n = len(levels)
    edges = []
    last_at_level = {levels[0]: 0}
    for i in range(1, n):
        parent = last_at_level[levels[i] - 1]
        edges.append((parent, i))
        last_at_level[levels[i]] = i
    return Graph(n, tuple(sorted(edges)))


def _centroids(g: Graph) -> list[int]:
    """Tree centroid(s): vertices minimizing the largest remaining component."""
    n = g.n
    if n == 1:
        return [0]
    order = []
    parent = [-1] * n
    seen = [False] * n
    stack = [0]
    seen[0] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                stack.append(w)
    size = [1] * n
    for u in reversed(order):
        if parent[u] >= 0:
            size[parent[u]] += size[u]
    best = n + 1
    out: list[int] = []
    for v in range(n):
        heaviest = n - size[v]
        for w in g.adjacency[v]:
            if parent[w] == v:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best, out = heaviest, [v]
        elif heaviest == best:
            out.append(v)
    return out


def _rooted_encoding(g: Graph, root: int) -> tuple:
    """Canonical nested-tuple encoding of a tree rooted at root."""

    def enc(v: int, parent: int) -> tuple:
        return tuple(sorted(enc(w, v) for w in g.adjacency[v] if w != parent))

    return enc(root, -1)


def free_tree_key(g: Graph) -> tuple:
    """Free-tree invariant: the smallest centroid-rooted encoding."""
    return min(_rooted_encoding(g, c) for c in _centroids(g))


def trees(n: int) -> Iterator[Graph]:
    """All free trees on n vertices, one per isomorphism class."""
    if n > TREE_CAP:
        raise CapabilityError(f"tree enumeration capped at n <= {TREE_CAP}, got {n}")
    if n < 1:
        raise GraphError(f"need n >= 1, got {n}")
    seen = set()
    for levels in _level_sequences(n):
        t = _tree_from_levels(levels)
        key = free_tree_key(t)
        if key not in seen:
            seen.add(key)
            yield t


@lru_cache(maxsize=None)
def _tree_list(n: int) -> tuple[Graph, ...]:
    return tuple(trees(n))


def unicyclic(n: int) -> Iterator[Graph]:
    """All connected graphs with exactly one cycle, one per class."""
    if n > UNICYCLIC_CAP:
        raise CapabilityError(f"unicyclic enumeration capped at n <= {UNICYCLIC_CAP}, got {n}")
    if n < 3:
        return
    seen = set()
    for t in _tree_list(n):
        for u, v in itertools.combinations(range(n), 2):
            if t.has_edge(u, v):
                continue
            g = Graph(n, tuple(sorted(t.edges + ((u, v),))))
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                yield g


@lru_cache(maxsize=None)
def _all_list(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism, by vertex augmentation."""
    if n == 1:
        return (Graph(1, ()),)
    out = []
    seen = set()
    for g in _all_list(n - 1):
        base = g.edges
        for mask in range(1 << (n - 1)):
            extra = tuple((v, n - 1) for v in range(n - 1) if mask >> v & 1)
            h = Graph(n, base + extra)
            key = canonical_form(h)
            if key not in seen:
                seen.add(key)
                out.append(h)
    return tuple(out)


def all_graphs(n: int) -> Iterator[Graph]:
    if n > GENERAL_CAP:
        raise CapabilityError(f"general enumeration capped at n <= {GENERAL_CAP}, got {n}")
    if n < 1:
        raise GraphError(f"need n >= 1, got {n}")
    yield from _all_list(n)


def connected_graphs(n: int) -> Iterator[Graph]:
    for g in all_graphs(n):
        if is_connected(g):
            yield g


def connected_nonbipartite(n: int) -> Iterator[Graph]:
    for g in connected_graphs(n):
        if not is_bipartite(g):
            yield g


_STREAMS = {
    "trees": trees,
    "unicyclic": unicyclic,
    "connected": connected_graphs,
    "all": all_graphs,
    "connected-nonbipartite": connected_nonbipartite,
}


def enumerate_graphs(query: EnumerationQuery) -> Iterator[Graph]:
    """One representative per isomorphism class, deterministic order."""
    stream = _STREAMS[query.graph_class](query.n)
    count = 0
    for g in stream:
        count += 1
        if query.cap is not None and count > query.cap:
            raise CapabilityError(
                f"enumeration of {query.graph_class} at n={query.n} exceeded cap {query.cap}"
            )
        yield g


def enumerate_labeled(n: int, predicate=None) -> Iterator[Graph]:
    """Every labeled graph on n vertices, optionally filtered."""
    if n > LABELED_CAP:
        raise CapabilityError(f"labeled enumeration capped at n <= {LABELED_CAP}, got {n}")
    if n < 1:
        raise GraphError(f"need n >= 1, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        g = Graph(n, edges)
        if predicate is None or predicate(g):
            yield g


def chunked(stream: Iterator[Graph], size: int) -> Iterator[list[Graph]]:
    """Fixed-size batches for fanning verification out to workers."""
    batch: list[Graph] = []
    for g in stream:
        batch.append(g)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch
