"""Constructors for the named graph families and the rewiring surgeries."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import GraphError
from .graphs import Graph, build_graph


def star(n: int) -> Graph:
    """S_n: center 0 joined to every other vertex."""
    if n < 1:
        raise GraphError(f"star needs n >= 1, got {n}")
    return Graph(n, tuple((0, v) for v in range(1, n)))


def path(n: int) -> Graph:
    """P_n: 0-1-...-(n-1)."""
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph(n, tuple((v, v + 1) for v in range(n - 1)))


def cycle(n: int) -> Graph:
    """C_n for n >= 3."""
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    edges = [(v, v + 1) for v in range(n - 1)] + [(0, n - 1)]
    return Graph(n, tuple(sorted(edges)))


def complete(n: int) -> Graph:
    """K_n."""
    if n < 1:
        raise GraphError(f"complete needs n >= 1, got {n}")
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def double_star(n: int, a: int) -> Graph:
    """D_{n,a}: centers 0 and 1 joined, with a and n-a-2 leaves."""
    if n < 4:
        raise GraphError(f"double_star needs n >= 4, got {n}")
    if not 1 <= a <= (n - 2) // 2:
        raise GraphError(f"double_star needs 1 <= a <= (n-2)//2, got a={a}, n={n}")
    edges = [(0, 1)]
    edges += [(0, v) for v in range(2, 2 + a)]
    edges += [(1, v) for v in range(2 + a, n)]
    return Graph(n, tuple(sorted(edges)))


def diameter_tree(n: int, d: int) -> Graph:
    """T_{n,d}: path 0..d with the spare n-1-d vertices pendant at floor(d/2)."""
    if not 3 <= d <= n - 1:
        raise GraphError(f"diameter_tree needs 3 <= d <= n-1, got d={d}, n={n}")
    hub = d // 2
    edges = [(v, v + 1) for v in range(d)]
    edges += [(hub, v) for v in range(d + 1, n)]
    return Graph(n, tuple(sorted(edges)))


def star_plus_edge(n: int) -> Graph:
    """S_n plus one edge between two leaves; the smallest case is K_3."""
    if n < 3:
        raise GraphError(f"star_plus_edge needs n >= 3, got {n}")
    edges = [(0, v) for v in range(1, n)] + [(1, 2)]
    return Graph(n, tuple(sorted(edges)))


def domination_extremal(n: int, gamma: int, variant: str) -> Graph:
    """Graphs with domination number gamma attaining spectral radius n-gamma.

    Variant A is a clique on n-gamma+1 vertices plus gamma-1 isolated
    vertices; variant B is the complement of a perfect matching on
    n-gamma+2 vertices plus gamma-2 isolated vertices.
    """
    if variant == "A":
        if not 1 <= gamma <= n - 1:
            raise GraphError(f"variant A needs 1 <= gamma <= n-1, got gamma={gamma}, n={n}")
        k = n - gamma + 1
        return Graph(n, tuple(itertools.combinations(range(k), 2)))
    if variant == "B":
        if gamma < 2 or (n - gamma) % 2:
            raise GraphError(f"variant B needs gamma >= 2 and n-gamma even, got gamma={gamma}, n={n}")
        k = n - gamma + 2
        edges = [
            (u, v)
            for u, v in itertools.combinations(range(k), 2)
            if not (u ^ 1 == v)  # partners 2i, 2i+1 stay non-adjacent
        ]
        return Graph(n, tuple(sorted(edges)))
    raise GraphError(f"variant must be 'A' or 'B', got {variant!r}")


@dataclass(frozen=True)
class PendantSpec:
    """Pendant-path attachment request: paths of length p and q at one anchor,
    or at two adjacent anchors when v is given."""

    base: Graph
    u: int
    p: int
    q: int
    v: int | None = None

    def __post_init__(self):
        g = self.base
        if not 0 <= self.u < g.n:
            raise GraphError(f"anchor {self.u} not in base graph")
        if self.p < 0 or self.q < 0:
            raise GraphError(f"path lengths must be non-negative, got p={self.p}, q={self.q}")
        if self.v is not None:
            if not 0 <= self.v < g.n:
                raise GraphError(f"anchor {self.v} not in base graph")
            if not g.has_edge(self.u, self.v):
                raise GraphError(f"two-anchor form needs adjacent anchors, {self.u}-{self.v} missing")


def attach_pendant_path(g: Graph, u: int, p: int) -> Graph:
    """G(u;p): hang a path of p new vertices at u; new labels follow path order."""
    if not 0 <= u < g.n:
        raise GraphError(f"anchor {u} not in graph")
    if p < 0:
        raise GraphError(f"path length must be non-negative, got {p}")
    if p == 0:
        return g
    edges = list(g.edges) + [(u, g.n)]
    edges += [(g.n + i, g.n + i + 1) for i in range(p - 1)]
    return Graph(g.n + p, tuple(sorted(edges)))


def pendant_pair(spec: PendantSpec) -> Graph:
    """G_u(p,q) for one anchor, G_{u,v}(p,q) for two adjacent anchors."""
    first = attach_pendant_path(spec.base, spec.u, spec.p)
    second_anchor = spec.u if spec.v is None else spec.v
    return attach_pendant_path(first, second_anchor, spec.q)


def move_neighbors(g: Graph, v: int, u: int, moved) -> Graph:
    """Replace edges v-w by u-w for each w in moved."""
    moved = set(moved)
    if not moved:
        raise GraphError("moved set must be nonempty")
    if u == v:
        raise GraphError("u and v must differ")
    allowed = (g.adjacency[v] - g.adjacency[u]) - {u}
    if not moved <= allowed:
        raise GraphError(f"moved set {sorted(moved)} not within (N(v) \\ N(u)) \\ {{u}}")
    edges = [e for e in g.edges if not (v in e and (e[0] in moved or e[1] in moved))]
    edges += [(min(u, w), max(u, w)) for w in moved]
    return Graph(g.n, tuple(sorted(edges)))


def two_edge_swap(g: Graph, u1: int, u2: int, v1: int, v2: int) -> Graph:
    """Remove u1u2 and v1v2, add u1v2 and v1u2 (both previously absent)."""
    if len({u1, u2, v1, v2}) != 4:
        raise GraphError("the four swap vertices must be distinct")
    if not (g.has_edge(u1, u2) and g.has_edge(v1, v2)):
        raise GraphError("u1u2 and v1v2 must both be edges")
    if g.has_edge(u1, v2) or g.has_edge(v1, u2):
        raise GraphError("u1v2 and v1u2 must both be non-edges")
    drop = {(min(u1, u2), max(u1, u2)), (min(v1, v2), max(v1, v2))}
    edges = [e for e in g.edges if e not in drop]
    edges += [(min(u1, v2), max(u1, v2)), (min(v1, u2), max(v1, u2))]
    return Graph(g.n, tuple(sorted(edges)))


_FIXED_FAMILIES = {
    "Sn": (star, 1),
    "Pn": (path, 1),
    "Cn": (cycle, 1),
    "Kn": (complete, 1),
    "Snpe": (star_plus_edge, 1),
    "Dna": (double_star, 2),
    "Tnd": (diameter_tree, 2),
}


def family_from_spec(text: str) -> Graph:
    """Parse a CLI family spec like 'Cn:10', 'Tnd:10,4' or 'domext:8,3,A'."""
    name, sep, raw = text.partition(":")
    if not sep:
        raise GraphError(f"family spec {text!r} missing ':params'")
    params = raw.split(",") if raw else []
    if name == "domext":
        if len(params) != 3:
            raise GraphError("domext takes n,gamma,variant")
        return domination_extremal(int(params[0]), int(params[1]), params[2])
    if name not in _FIXED_FAMILIES:
        raise GraphError(f"unknown family {name!r} (choices: {sorted(_FIXED_FAMILIES)} or domext)")
    fn, arity = _FIXED_FAMILIES[name]
    if len(params) != arity:
        raise GraphError(f"family {name} takes {arity} integer parameter(s)")
    try:
        args = [int(p) for p in params]
    except ValueError as exc:
        raise GraphError(f"bad family parameters in {text!r}") from exc
    return fn(*args)
