"""Exhaustive checks of the radius inequalities, extremal orderings, and
rewiring monotonicity over enumerated graph classes, with machine-readable
reports."""
from __future__ import annotations

import itertools
import multiprocessing
import random
from dataclasses import dataclass, field

from .bounds import (
    bound_comparisons,
    delta_bound,
    gamma_star_bound,
    irregular_diameter_bound,
    kconnected_bound,
    least_eigenvalue_gap,
    match_domination_family,
    rho_star_plus_edge,
    rowsum_bound,
    shi_type_bound,
)
from .canon import canonical_form
from .enumeration import EnumerationQuery, enumerate_graphs, trees
from .errors import GraphError
from .families import (
    PendantSpec,
    complete,
    cycle,
    diameter_tree,
    domination_extremal,
    double_star,
    move_neighbors,
    path,
    pendant_pair,
    star,
    star_plus_edge,
    two_edge_swap,
)
from .graph6 import graph6_encode
from .graphs import (
    Graph,
    components,
    diameter,
    domination_number,
    is_connected,
    structural_profile,
    vertex_connectivity,
)
from .spectral import (
    alpha_spectral_radius,
    eigenvalues,
    laplacian_largest,
    spectrum,
)

MARGIN = 1e-9
DEAD_BAND = 1e-10


def round12(x: float) -> float:
    """Round to 12 significant digits (the report float policy)."""
    return float(f"{float(x):.12g}")


def round_floats(obj):
    """Recursively apply the 12-digit policy to a JSON-shaped payload."""
    if isinstance(obj, float):
        return round12(obj)
    if isinstance(obj, dict):
        return {k: round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v) for v in obj]
    return obj


@dataclass
class TheoremReport:
    theorem_id: str
    parameters: dict = field(default_factory=dict)
    instances_checked: int = 0
    violations: list = field(default_factory=list)
    equality_witnesses: list = field(default_factory=list)
    extremal_witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return "FAIL" if self.violations else "PASS"

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "parameters": round_floats(self.parameters),
            "instances_checked": self.instances_checked,
            "violations": round_floats(self.violations),
            "equality_witnesses": round_floats(self.equality_witnesses),
            "extremal_witnesses": round_floats(self.extremal_witnesses),
            "notes": list(self.notes),
            "status": self.status,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TheoremReport":
        return cls(
            theorem_id=data["theorem_id"],
            parameters=dict(data.get("parameters", {})),
            instances_checked=int(data.get("instances_checked", 0)),
            violations=list(data.get("violations", [])),
            equality_witnesses=list(data.get("equality_witnesses", [])),
            extremal_witnesses=list(data.get("extremal_witnesses", [])),
            notes=list(data.get("notes", [])),
        )


def merge_reports(reports: list[TheoremReport], theorem_id: str | None = None) -> TheoremReport:
    """Ordered reduction of per-block reports into one."""
    if not reports:
        raise GraphError("merge_reports needs at least one report")
    merged = TheoremReport(theorem_id or reports[0].theorem_id)
    merged.parameters = {"blocks": [r.parameters for r in reports]}
    for r in reports:
        merged.instances_checked += r.instances_checked
        merged.violations.extend(r.violations)
        merged.equality_witnesses.extend(r.equality_witnesses)
        merged.extremal_witnesses.extend(r.extremal_witnesses)
        merged.notes.extend(r.notes)
    return merged


def _g6(g: Graph) -> str:
    return graph6_encode(g)


def named_small_bases() -> list[Graph]:
    """The four fixed rewiring bases: an edge, a triangle, a square, a paw."""
    return [complete(2), complete(3), cycle(4), star_plus_edge(4)]


def random_connected_corpus(count: int, max_n: int = 6, seed: int = 0,
                            min_n: int = 3) -> list[Graph]:
    """Seeded random connected graphs with n in [min_n, max_n]."""
    rng = random.Random(seed)
    out: list[Graph] = []
    while len(out) < count:
        n = rng.randint(min_n, max_n)
        edges = [p for p in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        g = Graph(n, tuple(edges))
        if is_connected(g):
            out.append(g)
    return out


def _alpha_list(alpha_grid) -> list[float]:
    return [float(a) for a in alpha_grid]


# ---------------------------------------------------------------------------
# Rewiring monotonicity


def verify_rewiring_lemmas(corpus, alpha_grid, *, checks=None,
                           margin: float = MARGIN,
                           dead_band: float = DEAD_BAND) -> TheoremReport:
    """Neighbor moves, two-edge swaps, and cut-edge contractions must all
    strictly increase the radius when their entry-wise hypotheses hold."""
    checks = set(checks) if checks else {"move", "swap", "contract"}
    unknown = checks - {"move", "swap", "contract"}
    if unknown:
        raise GraphError(f"unknown rewiring checks: {sorted(unknown)}")
    graphs = list(corpus)
    alphas = _alpha_list(alpha_grid)
    report = TheoremReport("rewiring", {
        "corpus_size": len(graphs),
        "alphas": alphas,
        "checks": sorted(checks),
        "margin": margin,
        "dead_band": dead_band,
    })
    skipped = 0
    for g in graphs:
        if not is_connected(g) or g.n < 2:
            skipped += 1
            continue
        for a in alphas:
            if a >= 1.0:
                continue
            summary = spectrum(g, a)
            x = summary.perron
            rho = summary.rho
            if "move" in checks:
                _check_moves(report, g, a, x, rho, margin, dead_band)
            if "swap" in checks:
                _check_swaps(report, g, a, x, rho, margin, dead_band)
            if "contract" in checks:
                _check_contractions(report, g, a, x, rho, margin)
    if skipped:
        report.notes.append(f"skipped {skipped} non-connected corpus entries")
    return report


def _check_moves(report, g, a, x, rho, margin, dead_band):
    for v in range(g.n):
        for u in range(g.n):
            if u == v or x[u] <= x[v] + dead_band:
                continue
            pool = sorted((g.adjacency[v] - g.adjacency[u]) - {u})
            for r in range(1, len(pool) + 1):
                for moved in itertools.combinations(pool, r):
                    g2 = move_neighbors(g, v, u, moved)
                    rho2 = alpha_spectral_radius(g2, a)
                    report.instances_checked += 1
                    if rho2 <= rho + margin:
                        report.violations.append({
                            "check": "move", "graph6": _g6(g), "alpha": a,
                            "u": u, "v": v, "moved": list(moved),
                            "rho_before": rho, "rho_after": rho2,
                        })


def _check_swaps(report, g, a, x, rho, margin, dead_band):
    edges = g.edges
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if set(e) & set(f):
                continue
            for u1, u2 in (e, (e[1], e[0])):
                for v1, v2 in (f, (f[1], f[0])):
                    if g.has_edge(u1, v2) or g.has_edge(v1, u2):
                        continue
                    if x[u1] <= x[v1] + dead_band or x[v2] <= x[u2] + dead_band:
                        continue
                    g2 = two_edge_swap(g, u1, u2, v1, v2)
                    rho2 = alpha_spectral_radius(g2, a)
                    report.instances_checked += 1
                    if rho2 <= rho + margin:
                        report.violations.append({
                            "check": "swap", "graph6": _g6(g), "alpha": a,
                            "swap": [u1, u2, v1, v2],
                            "rho_before": rho, "rho_after": rho2,
                        })


def _check_contractions(report, g, a, x, rho, margin):
    for u, v in g.edges:
        comps = components(Graph(g.n, tuple(e for e in g.edges if e != (u, v))))
        if len(comps) != 2 or min(len(c) for c in comps) < 2:
            continue
        keep, fold = (u, v) if x[u] >= x[v] else (v, u)
        moved = sorted(g.adjacency[fold] - {keep})
        g2 = move_neighbors(g, fold, keep, moved)
        rho2 = alpha_spectral_radius(g2, a)
        report.instances_checked += 1
        if rho2 <= rho + margin:
            report.violations.append({
                "check": "contract", "graph6": _g6(g), "alpha": a,
                "edge": [u, v], "kept": keep,
                "rho_before": rho, "rho_after": rho2,
            })


# ---------------------------------------------------------------------------
# Tree orderings


def verify_tree_extremes(n_range, alpha_grid, *, margin: float = MARGIN) -> TheoremReport:
    """Path minimum, star maximum, unique runner-up, and the per-diameter
    maximizer over all trees of each order."""
    sizes = sorted(set(int(n) for n in n_range))
    alphas = _alpha_list(alpha_grid)
    report = TheoremReport("tree-extremes", {
        "n": sizes, "alphas": alphas, "margin": margin,
    })
    for n in sizes:
        if n < 4:
            raise GraphError(f"tree extremes need n >= 4, got {n}")
        ts = list(trees(n))
        keys = [canonical_form(t) for t in ts]
        dias = [int(diameter(t)) for t in ts]
        star_key = canonical_form(star(n))
        path_key = canonical_form(path(n))
        second_key = canonical_form(double_star(n, 1))
        diam_keys = {d: canonical_form(diameter_tree(n, d)) for d in range(3, n)}
        if n == 4:
            report.notes.append(
                "n=4: only two trees, runner-up uniqueness is vacuous")
        for a in alphas:
            rhos = [alpha_spectral_radius(t, a) for t in ts]
            order = sorted(range(len(ts)), key=lambda i: rhos[i])
            _check_rank(report, n, a, ts, rhos, keys, order[-1],
                        [i for i in order[:-1]], star_key, "max", margin)
            _check_rank(report, n, a, ts, rhos, keys, order[0],
                        [i for i in order[1:]], path_key, "min", margin)
            if len(order) >= 2:
                _check_rank(report, n, a, ts, rhos, keys, order[-2],
                            [i for i in order[:-2]], second_key, "second-max", margin)
            for d in range(3, n):
                group = [i for i in range(len(ts)) if dias[i] == d]
                gorder = sorted(group, key=lambda i: rhos[i])
                _check_rank(report, n, a, ts, rhos, keys, gorder[-1],
                            gorder[:-1], diam_keys[d], f"diameter:{d}", margin)
    return report


def _check_rank(report, n, a, ts, rhos, keys, winner, rest, expect_key, role, margin):
    report.instances_checked += 1
    ok_shape = keys[winner] == expect_key
    ok_gap = all(abs(rhos[winner] - rhos[i]) > margin for i in rest)
    if ok_shape and ok_gap:
        report.extremal_witnesses.append({
            "n": n, "alpha": a, "role": role,
            "graph6": _g6(ts[winner]), "rho": rhos[winner],
        })
    else:
        report.violations.append({
            "check": "tree-rank", "role": role, "n": n, "alpha": a,
            "graph6": _g6(ts[winner]), "rho": rhos[winner],
            "expected_shape": ok_shape, "unique": ok_gap,
        })


# ---------------------------------------------------------------------------
# Pendant path balancing


def verify_pendant_monotonicity(bases, max_total: int, alpha_grid, *,
                                margin: float = MARGIN) -> TheoremReport:
    """Balancing two pendant paths (one anchor, or two adjacent anchors of
    degree >= 2) strictly increases the radius at every step."""
    base_list = list(bases)
    alphas = _alpha_list(alpha_grid)
    report = TheoremReport("pendant-balance", {
        "corpus_size": len(base_list), "max_total": max_total,
        "alphas": alphas, "margin": margin,
    })
    cache: dict = {}

    def rho_of(g: Graph, a: float) -> float:
        key = (g.n, g.edges, a)
        if key not in cache:
            cache[key] = alpha_spectral_radius(g, a)
        return cache[key]

    for base in base_list:
        if not is_connected(base) or base.m < 1:
            raise GraphError("pendant bases must be connected with an edge")
        degs = base.degrees
        anchors_single = list(range(base.n))
        anchors_double = [
            (u, v)
            for u, v in itertools.permutations(range(base.n), 2)
            if base.has_edge(u, v) and degs[u] >= 2 and degs[v] >= 2
        ]
        for a in alphas:
            if a >= 1.0:
                continue
            for u in anchors_single:
                for total in range(2, max_total + 1):
                    for q in range(1, total // 2 + 1):
                        p = total - q
                        left = pendant_pair(PendantSpec(base, u, p, q))
                        right = pendant_pair(PendantSpec(base, u, p + 1, q - 1))
                        _check_step(report, "single", base, a, (u,), p, q,
                                    rho_of(left, a), rho_of(right, a), margin)
            for u, v in anchors_double:
                for total in range(2, max_total + 1):
                    for q in range(1, total // 2 + 1):
                        p = total - q
                        left = pendant_pair(PendantSpec(base, u, p, q, v))
                        right = pendant_pair(PendantSpec(base, u, p + 1, q - 1, v))
                        _check_step(report, "double", base, a, (u, v), p, q,
                                    rho_of(left, a), rho_of(right, a), margin)
    return report


def _check_step(report, mode, base, a, anchors, p, q, rho_left, rho_right, margin):
    report.instances_checked += 1
    if rho_left <= rho_right + margin:
        report.violations.append({
            "check": f"pendant-{mode}", "base_graph6": _g6(base), "alpha": a,
            "anchors": list(anchors), "p": p, "q": q,
            "rho_balanced": rho_left, "rho_shifted": rho_right,
        })


# ---------------------------------------------------------------------------
# Domination bound over all labeled graphs


def _domination_chunk(args):
    n, masks, alphas, margin = args
    pairs = list(itertools.combinations(range(n), 2))
    instances = 0
    violations = []
    tight = []
    for mask in masks:
        edges = tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        g = Graph(n, edges)
        gamma = domination_number(g)
        if not 1 <= gamma <= n - 1:
            continue
        bound = float(n - gamma)
        hit = []
        for a in alphas:
            if a >= 1.0:
                continue
            rho = alpha_spectral_radius(g, a)
            instances += 1
            if rho > bound + margin:
                violations.append({
                    "check": "domination-bound", "graph6": _g6(g),
                    "alpha": a, "gamma": gamma, "rho": rho, "bound": bound,
                })
            elif abs(rho - bound) <= margin:
                hit.append(a)
        if hit:
            family = match_domination_family(g, gamma)
            if family is None:
                for a in hit:
                    violations.append({
                        "check": "domination-equality-unmatched",
                        "graph6": _g6(g), "alpha": a, "gamma": gamma,
                    })
            else:
                tight.append({
                    "graph6": _g6(g), "n": n, "gamma": gamma,
                    "family": family, "alphas": hit,
                })
    return instances, violations, tight


def verify_domination(n_range, alpha_grid, *, margin: float = MARGIN,
                      workers: int = 1) -> TheoremReport:
    """rho <= n - gamma over every labeled graph, with the equality set
    matched against the two extremal families."""
    sizes = sorted(set(int(n) for n in n_range))
    alphas = _alpha_list(alpha_grid)
    report = TheoremReport("domination", {
        "n": sizes, "alphas": alphas, "margin": margin,
    })
    for n in sizes:
        if n < 2:
            raise GraphError(f"domination sweep needs n >= 2, got {n}")
        npairs = n * (n - 1) // 2
        chunk_size = 4096
        chunks = [
            (n, range(lo, min(lo + chunk_size, 1 << npairs)), alphas, margin)
            for lo in range(0, 1 << npairs, chunk_size)
        ]
        if workers > 1 and len(chunks) > 1:
            with multiprocessing.Pool(workers) as pool:
                parts = pool.map(_domination_chunk, chunks)
        else:
            parts = [_domination_chunk(c) for c in chunks]
        for instances, violations, tight in parts:
            report.instances_checked += instances
            report.violations.extend(violations)
            report.equality_witnesses.extend(tight)
        _check_domination_families(report, n, alphas, margin)
    return report


def _check_domination_families(report, n, alphas, margin):
    """Both constructions must actually attain the bound."""
    for gamma in range(1, n):
        candidates = [("clique-plus-isolates", domination_extremal(n, gamma, "A"))]
        if gamma >= 2 and (n - gamma) % 2 == 0:
            candidates.append((
                "matching-complement-plus-isolates",
                domination_extremal(n, gamma, "B"),
            ))
        for family, g in candidates:
            if domination_number(g) != gamma:
                report.violations.append({
                    "check": "family-gamma", "graph6": _g6(g),
                    "family": family, "expected_gamma": gamma,
                    "gamma": domination_number(g),
                })
                continue
            for a in alphas:
                if a >= 1.0:
                    continue
                rho = alpha_spectral_radius(g, a)
                report.instances_checked += 1
                if abs(rho - (n - gamma)) > margin:
                    report.violations.append({
                        "check": "family-not-tight", "graph6": _g6(g),
                        "family": family, "alpha": a, "gamma": gamma,
                        "rho": rho, "bound": float(n - gamma),
                    })


# ---------------------------------------------------------------------------
# Largest irregularity measure


_GAMMA_CLASS_IDS = {
    "all": "gamma-max-all",
    "unicyclic": "gamma-max-unicyclic",
    "connected-nonbipartite": "gamma-max-nonbipartite",
}


def verify_gamma_extremes(n_range, alpha_grid, graph_class: str = "all", *,
                          margin: float = MARGIN) -> TheoremReport:
    """The gap Delta - rho is maximized by the star (over all graphs) or by
    the star plus an edge (unicyclic / connected non-bipartite classes)."""
    if graph_class not in _GAMMA_CLASS_IDS:
        raise GraphError(f"unknown class for gamma extremes: {graph_class!r}")
    sizes = sorted(set(int(n) for n in n_range))
    alphas = [a for a in _alpha_list(alpha_grid) if a < 1.0]
    report = TheoremReport(_GAMMA_CLASS_IDS[graph_class], {
        "n": sizes, "alphas": alphas, "class": graph_class, "margin": margin,
    })
    for n in sizes:
        corpus = list(enumerate_graphs(EnumerationQuery(n, graph_class)))
        keys = [canonical_form(g) for g in corpus]
        if graph_class == "all":
            ref = canonical_form(star(n))
        else:
            ref = canonical_form(star_plus_edge(n))
        for a in alphas:
            gaps = [structural_profile(g).max_degree - alpha_spectral_radius(g, a)
                    for g in corpus]
            order = sorted(range(len(corpus)), key=lambda i: gaps[i])
            best = order[-1]
            if graph_class == "all":
                _check_gamma_all(report, n, a, corpus, gaps, keys, order, ref, margin)
            else:
                _check_gamma_best(report, n, a, corpus, gaps, keys, order, ref, margin)
                expected = (n - 1.0) - rho_star_plus_edge(n, a)
                report.instances_checked += 1
                if abs(gaps[best] - expected) > margin:
                    report.violations.append({
                        "check": "gamma-cubic-consistency", "n": n, "alpha": a,
                        "gap": gaps[best], "expected": expected,
                    })
    return report


def _check_gamma_best(report, n, a, corpus, gaps, keys, order, ref, margin):
    best = order[-1]
    report.instances_checked += 1
    ok_shape = keys[best] == ref
    ok_gap = all(gaps[best] - gaps[i] > margin for i in order[:-1])
    if ok_shape and (ok_gap or len(order) == 1):
        report.extremal_witnesses.append({
            "n": n, "alpha": a, "graph6": _g6(corpus[best]), "gap": gaps[best],
        })
    else:
        report.violations.append({
            "check": "gamma-argmax", "n": n, "alpha": a,
            "graph6": _g6(corpus[best]), "gap": gaps[best],
            "expected_shape": ok_shape, "unique": ok_gap,
        })


def _check_gamma_all(report, n, a, corpus, gaps, keys, order, ref, margin):
    bound = gamma_star_bound(n, a)
    best = order[-1]
    for i, g in enumerate(corpus):
        report.instances_checked += 1
        if gaps[i] > bound + margin:
            report.violations.append({
                "check": "gamma-bound", "n": n, "alpha": a,
                "graph6": _g6(g), "gap": gaps[i], "bound": bound,
            })
    star_idx = [i for i in range(len(corpus)) if keys[i] == ref]
    report.instances_checked += 1
    if len(star_idx) != 1 or abs(gaps[star_idx[0]] - bound) > 1e-10:
        report.violations.append({
            "check": "gamma-star-identity", "n": n, "alpha": a,
            "bound": bound,
            "gap": gaps[star_idx[0]] if star_idx else None,
        })
    if n == 2:
        report.notes.append(
            "n=2: the bound is 0 and both graphs attain it; uniqueness skipped")
        for i in order:
            if abs(gaps[i] - bound) <= margin:
                report.extremal_witnesses.append({
                    "n": n, "alpha": a, "graph6": _g6(corpus[i]), "gap": gaps[i],
                })
        return
    _check_gamma_best(report, n, a, corpus, gaps, keys, order, ref, margin)
    for i in range(len(corpus)):
        if i != best and gaps[i] >= bound - margin:
            report.violations.append({
                "check": "gamma-equality-not-star", "n": n, "alpha": a,
                "graph6": _g6(corpus[i]), "gap": gaps[i], "bound": bound,
            })


# ---------------------------------------------------------------------------
# Radius bounds over a corpus


ALL_BOUND_CHECKS = (
    "rowsum", "tree-unicyclic", "irregular", "gap",
    "shi", "kconnected", "comparisons", "laplacian-half",
)


def _bounds_chunk(args):
    graphs, alphas, checks, margin = args
    sub = TheoremReport("bounds")
    for g in graphs:
        _bounds_one_graph(sub, g, alphas, checks, margin)
    return sub


def _bounds_one_graph(report, g, alphas, checks, margin):
    profile = structural_profile(g)
    kappa = None
    if profile.connected and ("kconnected" in checks or "comparisons" in checks):
        kappa = vertex_connectivity(g)
    if "laplacian-half" in checks and profile.connected and g.n >= 2:
        _check_laplacian_half(report, g, profile, margin)
    for a in alphas:
        if a >= 1.0:
            continue
        w = eigenvalues(g, a)
        rho = float(w[0])
        if "rowsum" in checks and g.n >= 2:
            _check_rowsum(report, g, profile, a, rho, margin)
        if "tree-unicyclic" in checks and profile.kind in ("tree", "unicyclic") \
                and profile.max_degree >= 2:
            _check_tree_unicyclic(report, g, profile, a, rho, margin)
        irregular = profile.connected and not profile.regular
        if not irregular:
            continue
        b_diam = irregular_diameter_bound(g, a, rho=rho)
        b_shi = shi_type_bound(g, a, rho=rho)
        if "irregular" in checks:
            _expect_strict(report, g, a, b_diam, margin)
        if "gap" in checks:
            gap = least_eigenvalue_gap(g, a)
            _expect_strict(report, g, a, gap, margin)
        if "shi" in checks:
            _expect_strict(report, g, a, b_shi, margin)
        if "kconnected" in checks and kappa:
            for k in range(1, kappa + 1):
                _expect_strict(report, g, a, kconnected_bound(g, a, k, rho=rho), margin)
        if "comparisons" in checks and kappa:
            _check_comparisons(report, g, a, kappa, b_diam, b_shi, rho, margin)


def _expect_strict(report, g, a, ev, margin):
    report.instances_checked += 1
    if not ev.applicable or ev.slack <= margin:
        report.violations.append({
            "check": ev.bound_id, "graph6": _g6(g), "alpha": a,
            "value": ev.value, "target": ev.target,
            "reason": ev.reason,
        })


def _check_rowsum(report, g, profile, a, rho, margin):
    for ell in range(1, g.n + 1):
        ev = rowsum_bound(g, a, ell, rho=rho)
        report.instances_checked += 1
        bad = ev.slack < -margin
        if ell == 1 and abs(ev.value - profile.max_degree) > 1e-9:
            bad = True
        if bad:
            report.violations.append({
                "check": "rowsum", "graph6": _g6(g), "alpha": a,
                "ell": ell, "value": ev.value, "rho": rho,
            })
            continue
        if profile.connected:
            tight = ev.slack <= margin
            predicted = ev.equality_class is not None
            report.instances_checked += 1
            if tight != predicted:
                report.violations.append({
                    "check": "rowsum-equality", "graph6": _g6(g), "alpha": a,
                    "ell": ell, "tight": tight,
                    "equality_class": ev.equality_class, "slack": ev.slack,
                })
            elif tight:
                report.equality_witnesses.append({
                    "check": "rowsum", "graph6": _g6(g), "ell": ell,
                    "alpha": a, "equality_class": ev.equality_class,
                })


def _check_tree_unicyclic(report, g, profile, a, rho, margin):
    ev = delta_bound(g, a, rho=rho)
    report.instances_checked += 1
    is_cycle = ev.equality_class == "cycle"
    if is_cycle:
        ok = abs(ev.slack) <= margin
    else:
        ok = ev.slack > margin
    if not ok:
        report.violations.append({
            "check": "tree-unicyclic", "graph6": _g6(g), "alpha": a,
            "value": ev.value, "rho": rho, "cycle": is_cycle,
        })
    elif is_cycle:
        report.equality_witnesses.append({
            "check": "tree-unicyclic", "graph6": _g6(g), "alpha": a,
        })


def _check_comparisons(report, g, a, kappa, b_diam, b_shi, rho, margin):
    cmp = bound_comparisons(g, a, kappa)
    if cmp is None:
        return
    b_k = kconnected_bound(g, a, kappa, rho=rho)
    pairs = [
        (cmp.diameter_le_shi, b_diam.value, b_shi.value),
        (cmp.diameter_le_kconnected, b_diam.value, b_k.value),
        (cmp.shi_le_kconnected, b_shi.value, b_k.value),
    ]
    for name, (pred, left, right) in zip(
            ("diameter<=shi", "diameter<=kconnected", "shi<=kconnected"), pairs):
        if abs(left - right) <= margin:
            continue
        report.instances_checked += 1
        if pred != (left < right):
            report.violations.append({
                "check": "comparison", "pair": name, "graph6": _g6(g),
                "alpha": a, "k": kappa, "predicate": pred,
                "left": left, "right": right,
            })


def _check_laplacian_half(report, g, profile, margin):
    mu = laplacian_largest(g)
    twice = 2.0 * alpha_spectral_radius(g, 0.5)
    report.instances_checked += 1
    if mu > twice + margin:
        report.violations.append({
            "check": "laplacian-half", "graph6": _g6(g),
            "mu": mu, "twice_rho_half": twice,
        })
        return
    if profile.bipartite:
        if abs(mu - twice) > margin:
            report.violations.append({
                "check": "laplacian-half-equality", "graph6": _g6(g),
                "mu": mu, "twice_rho_half": twice, "bipartite": True,
            })
        else:
            report.equality_witnesses.append({
                "check": "laplacian-half", "graph6": _g6(g),
            })
    elif twice - mu <= margin:
        report.violations.append({
            "check": "laplacian-half-equality", "graph6": _g6(g),
            "mu": mu, "twice_rho_half": twice, "bipartite": False,
        })


def verify_delta_and_irregular_bounds(corpus, alpha_grid, *, checks=None,
                                      margin: float = MARGIN,
                                      workers: int = 1) -> TheoremReport:
    """Row-sum, tree/unicyclic, irregular-gap families of bounds, the bound
    comparisons, and the Laplacian half-radius identity over a corpus."""
    checks = set(checks) if checks else set(ALL_BOUND_CHECKS)
    unknown = checks - set(ALL_BOUND_CHECKS)
    if unknown:
        raise GraphError(f"unknown bound checks: {sorted(unknown)}")
    graphs = list(corpus)
    alphas = _alpha_list(alpha_grid)
    report = TheoremReport("radius-bounds", {
        "corpus_size": len(graphs), "alphas": alphas,
        "checks": sorted(checks), "margin": margin,
    })
    chunk_size = 64
    chunks = [
        (graphs[lo:lo + chunk_size], alphas, checks, margin)
        for lo in range(0, len(graphs), chunk_size)
    ]
    if workers > 1 and len(chunks) > 1:
        with multiprocessing.Pool(workers) as pool:
            parts = pool.map(_bounds_chunk, chunks)
    else:
        parts = [_bounds_chunk(c) for c in chunks]
    for part in parts:
        report.instances_checked += part.instances_checked
        report.violations.extend(part.violations)
        report.equality_witnesses.extend(part.equality_witnesses)
        report.extremal_witnesses.extend(part.extremal_witnesses)
        report.notes.extend(part.notes)
    return report
