"""Exact canonical labeling by partition refinement plus individualization.

The ordered partition starts as one cell and is refined by neighbor-color
counts until stable. Non-discrete partitions branch on every vertex of the
first smallest cell, except that only one representative per twin class is
tried (twins are automorphic, so their subtrees yield identical encodings).
The canonical form is the maximum row-wise adjacency bit encoding over all
leaf orderings, which is invariant under relabeling because every step
depends only on the partition structure, never on vertex names.
"""
from __future__ import annotations

from .errors import CapabilityError
from .graphs import Graph

CANONICAL_CAP = 12


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte encoding; equal iff graphs are isomorphic."""
    if g.n > CANONICAL_CAP:
        raise CapabilityError(f"canonical_form capped at n <= {CANONICAL_CAP}, got {g.n}")
    n = g.n
    adj = [set(a) for a in g.adjacency]
    best: list[int] | None = None

    def refine(cells: list[list[int]]) -> list[list[int]]:
        while True:
            index = {}
            for ci, cell in enumerate(cells):
                for v in cell:
                    index[v] = ci
            out: list[list[int]] = []
            changed = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[tuple, list[int]] = {}
                for v in cell:
                    counts: dict[int, int] = {}
                    for w in adj[v]:
                        ci = index[w]
                        counts[ci] = counts.get(ci, 0) + 1
                    sig = tuple(sorted(counts.items()))
                    groups.setdefault(sig, []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    changed = True
                    for sig in sorted(groups):
                        out.append(groups[sig])
            cells = out
            if not changed:
                return cells

    def twin_representatives(cell: list[int]) -> list[int]:
        reps: list[int] = []
        for v in cell:
            is_twin = False
            for r in reps:
                if adj[v] - {r} == adj[r] - {v}:
                    is_twin = True
                    break
            if not is_twin:
                reps.append(v)
        return reps

    def encode(order: list[int]) -> list[int]:
        pos = {v: i for i, v in enumerate(order)}
        rows = [0] * n
        for u in range(n):
            pu = pos[u]
            for w in adj[u]:
                rows[pu] |= 1 << (n - 1 - pos[w])
        return rows

    def search(cells: list[list[int]]) -> None:
        nonlocal best
        cells = refine(cells)
        target = -1
        size = n + 1
        for ci, cell in enumerate(cells):
            if 1 < len(cell) < size:
                target, size = ci, len(cell)
        if target < 0:
            order = [cell[0] for cell in cells]
            rows = encode(order)
            if best is None or rows > best:
                best = rows
            return
        for v in twin_representatives(cells[target]):
            branched = (
                cells[:target]
                + [[v], [w for w in cells[target] if w != v]]
                + cells[target + 1:]
            )
            search(branched)

    search([list(range(n))])
    assert best is not None
    width = (n + 7) // 8
    packed = bytes([n]) + b"".join(row.to_bytes(width, "big") for row in best)
    return packed


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g) == canonical_form(h)
