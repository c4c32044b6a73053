"""Independent reference implementations used only by the tests.

Everything here is deliberately written against different algorithms than the
package: characteristic-polynomial roots instead of Jacobi rotations, Prufer
sequences instead of level-sequence growth, divisor-sum counting recurrences,
center-rooted tree certificates instead of centroid-rooted ones, and plain
subset search for domination.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

import numpy as np

from aspectral import Graph


def charpoly_coefficients(a: np.ndarray) -> list[float]:
    """Coefficients of det(tI - A), highest power first (Faddeev-LeVerrier)."""
    n = a.shape[0]
    coeffs = [1.0]
    m = np.eye(n)
    for k in range(1, n + 1):
        m = a @ m
        c = -np.trace(m) / k
        coeffs.append(float(c))
        m = m + c * np.eye(n)
    return coeffs


def charpoly_eigenvalues(a: np.ndarray) -> np.ndarray:
    """Eigenvalues of a symmetric matrix via polynomial roots, sorted descending."""
    roots = np.roots(charpoly_coefficients(a))
    return np.sort(roots.real)[::-1]


def exact_charpoly_coefficients(a: np.ndarray) -> list[Fraction]:
    """Same recurrence as above but in exact rational arithmetic.

    Every float entry converts to a Fraction without rounding, so the returned
    coefficients are the exact characteristic polynomial of the float matrix.
    """
    n = a.shape[0]
    mat = [[Fraction(float(a[i, j])) for j in range(n)] for i in range(n)]
    work = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    coeffs = [Fraction(1)]
    for k in range(1, n + 1):
        work = [
            [sum(mat[i][l] * work[l][j] for l in range(n)) for j in range(n)]
            for i in range(n)
        ]
        c = -sum(work[i][i] for i in range(n)) / k
        coeffs.append(c)
        for i in range(n):
            work[i][i] += c
    return coeffs


def _poly_deriv(c: list[Fraction]) -> list[Fraction]:
    n = len(c) - 1
    return [c[i] * (n - i) for i in range(n)]


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    out = list(num)
    q = []
    for i in range(len(num) - len(den) + 1):
        f = out[i] / den[0]
        q.append(f)
        for j, d in enumerate(den):
            out[i + j] -= f * d
    rem = [c for c in out[len(q):]]
    while rem and rem[0] == 0:
        rem.pop(0)
    return q, rem


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return [c / a[0] for c in a]


def _squarefree_factors(p: list[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Write p as a product of squarefree factors with their multiplicities."""
    g = _poly_gcd(p, _poly_deriv(p))
    if len(g) == 1:
        return [(p, 1)]
    w, _ = _poly_divmod(p, g)
    out = []
    mult = 1
    while len(w) > 1:
        y = _poly_gcd(w, g)
        f, _ = _poly_divmod(w, y)
        if len(f) > 1:
            out.append((f, mult))
        w = y
        g, _ = _poly_divmod(g, y)
        mult += 1
    return out


def precise_eigenvalues(a: np.ndarray) -> np.ndarray:
    """Eigenvalues through exact squarefree factoring plus 60-digit roots.

    np.roots is only good to about sqrt(eps) at a repeated root.  Factoring
    out multiplicities in rational arithmetic leaves simple roots, which the
    high-precision solver nails to far better than the 1e-10 comparisons need.
    """
    import mpmath

    values: list[float] = []
    for factor, mult in _squarefree_factors(exact_charpoly_coefficients(a)):
        if len(factor) == 2:
            roots = [float(-factor[1] / factor[0])]
        else:
            with mpmath.workdps(60):
                poly = [
                    mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator)
                    for c in factor
                ]
                roots = [
                    float(mpmath.re(r))
                    for r in mpmath.polyroots(poly, maxsteps=100, extraprec=120)
                ]
        values.extend(r for r in roots for _ in range(mult))
    return np.array(sorted(values, reverse=True))


def prufer_tree(seq: tuple[int, ...], n: int) -> Graph:
    """Decode a Prufer sequence into the labeled tree it encodes."""
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    seq_list = list(seq)
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    for v in seq_list:
        leaf = leaves.pop(0)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            # insert keeping the candidate list sorted
            lo = 0
            while lo < len(leaves) and leaves[lo] < v:
                lo += 1
            leaves.insert(lo, v)
    u, v = leaves
    edges.append((min(u, v), max(u, v)))
    return Graph(n, tuple(sorted(edges)))


def all_prufer_trees(n: int):
    """Every labeled tree on n vertices, one per Prufer sequence."""
    if n == 1:
        yield Graph(1, ())
        return
    if n == 2:
        yield Graph(2, ((0, 1),))
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_tree(seq, n)


def _tree_centers(g: Graph) -> list[int]:
    """Center vertices by iterative leaf stripping."""
    n = g.n
    if n <= 2:
        return list(range(n))
    degree = list(g.degrees)
    removed = [False] * n
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            remaining -= 1
            for w in g.adjacency[v]:
                if not removed[w]:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(v for v in range(n) if not removed[v])


def _rooted_string(g: Graph, v: int, parent: int) -> str:
    parts = sorted(_rooted_string(g, w, v) for w in g.adjacency[v] if w != parent)
    return "(" + "".join(parts) + ")"


def tree_certificate(g: Graph) -> str:
    """Isomorphism certificate for a tree, rooted at its center."""
    centers = _tree_centers(g)
    return min(_rooted_string(g, c, -1) for c in centers)


def rooted_tree_counts(n_max: int) -> list[int]:
    """Number of rooted trees on 1..n_max vertices (divisor-sum recurrence)."""
    t = [Fraction(0)] * (n_max + 1)
    t[1] = Fraction(1)
    for n in range(1, n_max):
        s = Fraction(0)
        for k in range(1, n + 1):
            dk = sum(d * t[d] for d in range(1, k + 1) if k % d == 0)
            s += dk * t[n + 1 - k]
        t[n + 1] = s / n
    counts = [int(x) for x in t[1:]]
    assert all(Fraction(c) == x for c, x in zip(counts, t[1:]))
    return counts


def free_tree_counts(n_max: int) -> list[int]:
    """Number of unlabeled free trees on 1..n_max vertices."""
    t = [0] + rooted_tree_counts(n_max)
    out = []
    for n in range(1, n_max + 1):
        a = t[n]
        for i in range(1, (n + 1) // 2):
            a -= t[i] * t[n - i]
        if n % 2 == 0:
            half = t[n // 2]
            a -= half * (half - 1) // 2
        out.append(a)
    return out


def euler_transform(b: list[int]) -> list[int]:
    """Euler transform of b[0]=b(1), b[1]=b(2), ...

    If b counts connected structures by size, the transform counts unordered
    multisets of them, so it turns connected-graph counts into all-graph
    counts. Exact rational arithmetic with an integrality assertion.
    """
    n_max = len(b)
    c = [Fraction(0)] * (n_max + 1)
    for k in range(1, n_max + 1):
        c[k] = Fraction(sum(d * b[d - 1] for d in range(1, k + 1) if k % d == 0))
    a = [Fraction(1)] + [Fraction(0)] * n_max
    for n in range(1, n_max + 1):
        a[n] = sum(c[k] * a[n - k] for k in range(1, n + 1)) / n
    out = [int(x) for x in a[1:]]
    assert all(Fraction(v) == x for v, x in zip(out, a[1:]))
    return out


def brute_force_domination(g: Graph) -> int:
    """Smallest dominating set by direct subset search."""
    closed = [g.adjacency[v] | {v} for v in range(g.n)]
    for k in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            covered = set()
            for v in subset:
                covered |= closed[v]
            if len(covered) == g.n:
                return k
    raise AssertionError("unreachable for n >= 1")


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = tuple(
        pair for pair in itertools.combinations(range(n), 2) if rng.random() < p
    )
    return Graph(n, edges)
