"""Closed-form bounds on the alpha spectral radius, the domination-number
bound with its equality families, the star closed forms, the cubic for the
star-plus-edge radius, and the energy / Estrada bounds."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .canon import canonical_form
from .errors import GraphError
from .families import domination_extremal
from .graphs import (
    Graph,
    diameter,
    domination_number,
    is_k_connected,
    structural_profile,
    vertex_connectivity,
)
from .spectral import (
    alpha_spectral_radius,
    check_alpha,
    eigenvalues,
    indices,
    zagreb_index,
)

EQUALITY_WINDOW = 1e-9


@dataclass(frozen=True)
class BoundEvaluation:
    bound_id: str
    direction: str
    applicable: bool
    reason: str | None
    value: float | None
    target: float | None
    slack: float | None
    strict: bool
    equality_class: str | None = None

    def to_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "direction": self.direction,
            "applicable": self.applicable,
            "reason": self.reason,
            "value": self.value,
            "target": self.target,
            "slack": self.slack,
            "strict": self.strict,
            "equality_class": self.equality_class,
        }


def _skip(bound_id: str, direction: str, reason: str, strict: bool) -> BoundEvaluation:
    return BoundEvaluation(bound_id, direction, False, reason, None, None, None, strict)


def _upper(bound_id: str, value: float, rho: float, strict: bool,
           equality_class: str | None = None) -> BoundEvaluation:
    return BoundEvaluation(bound_id, "upper", True, None, value, rho,
                           value - rho, strict, equality_class)


def rowsum_bound(g: Graph, alpha: float, ell: int, *, rho: float | None = None) -> BoundEvaluation:
    """Upper bound from the largest ell degrees of the sorted degree sequence."""
    a = check_alpha(alpha)
    if not 1 <= ell <= g.n:
        raise GraphError(f"ell must lie in 1..n, got ell={ell}, n={g.n}")
    bound_id = f"rowsum:{ell}"
    if g.n < 2:
        return _skip(bound_id, "upper", "needs n >= 2", False)
    if a == 1.0:
        return _skip(bound_id, "upper", "needs alpha < 1", False)
    degs = sorted(g.degrees, reverse=True)
    d1, dl = degs[0], degs[ell - 1]
    head = sum(degs[i] - dl for i in range(ell - 1))
    disc = (dl - a * d1 + 1.0 - a) ** 2 + 4.0 * (1.0 - a) * head
    value = (dl + a * d1 - (1.0 - a) + math.sqrt(disc)) / 2.0
    if rho is None:
        rho = alpha_spectral_radius(g, a)
    return _upper(bound_id, value, rho, False, _rowsum_equality_class(g, degs, ell))


def _rowsum_equality_class(g: Graph, degs: list[int], ell: int) -> str | None:
    """Structures for which the row-sum bound is tight on connected graphs."""
    if degs[0] == degs[-1]:
        return "regular"
    full = g.n - 1
    for t in range(2, ell + 1):
        head_full = all(degs[i] == full for i in range(t - 1))
        tail_equal = len(set(degs[t - 1:])) == 1
        if head_full and tail_equal and degs[t - 2] > degs[t - 1]:
            return "full-degree-head"
    return None


def best_rowsum_bound(g: Graph, alpha: float, *, rho: float | None = None) -> BoundEvaluation:
    """Minimum of the row-sum bound over all ell."""
    a = check_alpha(alpha)
    if g.n < 2:
        return _skip("rowsum:best", "upper", "needs n >= 2", False)
    if a == 1.0:
        return _skip("rowsum:best", "upper", "needs alpha < 1", False)
    if rho is None:
        rho = alpha_spectral_radius(g, a)
    best = None
    for ell in range(1, g.n + 1):
        cand = rowsum_bound(g, a, ell, rho=rho)
        if best is None or cand.value < best.value:
            best = cand
    return BoundEvaluation("rowsum:best", "upper", True, None, best.value,
                           rho, best.value - rho, False, best.equality_class)


def delta_bound(g: Graph, alpha: float, *, rho: float | None = None) -> BoundEvaluation:
    """Max-degree bound for trees and unicyclic graphs; tight exactly on cycles."""
    a = check_alpha(alpha)
    profile = structural_profile(g)
    if profile.kind not in ("tree", "unicyclic"):
        return _skip("delta", "upper", "needs a tree or unicyclic graph", False)
    delta = profile.max_degree
    if delta < 2:
        return _skip("delta", "upper", "needs max degree >= 2", False)
    value = a * delta + 2.0 * (1.0 - a) * math.sqrt(delta - 1.0)
    if rho is None:
        rho = alpha_spectral_radius(g, a)
    is_cycle = profile.kind == "unicyclic" and profile.regular
    return _upper("delta", value, rho, False, "cycle" if is_cycle else None)


def irregular_diameter_bound(g: Graph, alpha: float, *, rho: float | None = None) -> BoundEvaluation:
    """Strict refinement of rho < Delta for connected irregular graphs."""
    a = check_alpha(alpha)
    profile = structural_profile(g)
    bad = _irregular_reason(profile, a)
    if bad:
        return _skip("irregular-diameter", "upper", bad, True)
    dia = diameter(g)
    value = profile.max_degree - 2.0 * (1.0 - a) / ((2.0 * dia - a) * g.n)
    if rho is None:
        rho = alpha_spectral_radius(g, a)
    return _upper("irregular-diameter", value, rho, True)


def _irregular_reason(profile, a: float) -> str | None:
    if not profile.connected:
        return "needs a connected graph"
    if profile.regular:
        return "needs an irregular graph"
    if a == 1.0:
        return "needs alpha < 1"
    return None


def least_eigenvalue_gap(g: Graph, alpha: float) -> BoundEvaluation:
    """Strict lower bound on Delta + least eigenvalue for irregular graphs."""
    a = check_alpha(alpha)
    profile = structural_profile(g)
    bad = _irregular_reason(profile, a)
    if bad:
        return _skip("least-eigenvalue-gap", "lower", bad, True)
    dia = diameter(g)
    value = 2.0 * (1.0 - a) / ((2.0 * dia - a) * g.n)
    w = eigenvalues(g, a)
    target = profile.max_degree + float(w[-1])
    return BoundEvaluation("least-eigenvalue-gap", "lower", True, None, value,
                           target, target - value, True)


def shi_type_bound(g: Graph, alpha: float, *, rho: float | None = None) -> BoundEvaluation:
    """Strict upper bound via diameter, minimum degree, and average degree."""
    a = check_alpha(alpha)
    profile = structural_profile(g)
    bad = _irregular_reason(profile, a)
    if bad:
        return _skip("shi-type", "upper", bad, True)
    dia = diameter(g)
    denom = (
        dia * (g.n - profile.min_degree) / (1.0 - a)
        - dia * (dia - 1.0) / 2.0 / (1.0 - a)
        + 1.0 / (profile.max_degree - profile.average_degree)
    )
    value = profile.max_degree - 1.0 / denom
    if rho is None:
        rho = alpha_spectral_radius(g, a)
    return _upper("shi-type", value, rho, True)


def kconnected_bound(g: Graph, alpha: float, k: int, *, rho: float | None = None) -> BoundEvaluation:
    """Strict upper bound for irregular k-connected graphs."""
    a = check_alpha(alpha)
    profile = structural_profile(g)
    bad = _irregular_reason(profile, a)
    if bad:
        return _skip(f"kconnected:{k}", "upper", bad, True)
    if not is_k_connected(g, k):
        return _skip(f"kconnected:{k}", "upper", f"graph is not {k}-connected", True)
    n, m, delta = g.n, g.m, profile.max_degree
    excess = n * delta - 2 * m
    denom = excess * (n * n - (delta - k + 2) * (n - k)) + (1.0 - a) * n * k * k
    value = delta - (1.0 - a) * excess * k * k / denom
    if rho is None:
        rho = alpha_spectral_radius(g, a)
    return _upper(f"kconnected:{k}", value, rho, True)


class BoundComparisons(NamedTuple):
    """The three closed-form orderings between the strict upper bounds."""

    diameter_le_shi: bool
    diameter_le_kconnected: bool
    shi_le_kconnected: bool


def bound_comparisons(g: Graph, alpha: float, k: int | None = None) -> BoundComparisons | None:
    """Predicate forms of the pairwise bound orderings; None when any
    hypothesis fails. k defaults to the exact vertex connectivity."""
    a = check_alpha(alpha)
    profile = structural_profile(g)
    if _irregular_reason(profile, a):
        return None
    if k is None:
        k = vertex_connectivity(g)
    if k < 1 or not is_k_connected(g, k):
        return None
    n, m = g.n, g.m
    delta, small, avg = profile.max_degree, profile.min_degree, profile.average_degree
    dia = diameter(g)
    excess = n * delta - 2 * m
    c1 = (delta - avg) * (2.0 * dia * small + dia * (dia - 1.0) - a * n) <= 2.0 * (1.0 - a)
    c2 = (
        2.0 * n * n + 2.0 * (1.0 - a) * n * k * k / excess
        >= n * (2.0 * dia - a) * k * k + 2.0 * (delta - k + 2.0) * (n - k)
    )
    c3 = k * k * dia * (2.0 * n - 2.0 * small - dia + 1.0) <= 2.0 * n * n - 2.0 * (delta - k + 2.0) * (n - k)
    return BoundComparisons(bool(c1), bool(c2), bool(c3))


def domination_bound(g: Graph, alpha: float, *, rho: float | None = None,
                     gamma: int | None = None) -> BoundEvaluation:
    """rho <= n - domination number, with the two tight families classified."""
    a = check_alpha(alpha)
    if gamma is None:
        gamma = domination_number(g)
    if not 1 <= gamma <= g.n - 1:
        return _skip("domination", "upper", f"needs 1 <= gamma <= n-1, got gamma={gamma}", False)
    if a == 1.0:
        return _skip("domination", "upper", "needs alpha < 1", False)
    value = float(g.n - gamma)
    if rho is None:
        rho = alpha_spectral_radius(g, a)
    equality_class = None
    if abs(value - rho) <= EQUALITY_WINDOW:
        equality_class = match_domination_family(g, gamma) or "unmatched"
    return _upper("domination", value, rho, False, equality_class)


def match_domination_family(g: Graph, gamma: int | None = None) -> str | None:
    """Which tight family (if any) the graph belongs to, by canonical form."""
    if gamma is None:
        gamma = domination_number(g)
    key = canonical_form(g)
    if 1 <= gamma <= g.n - 1:
        if key == canonical_form(domination_extremal(g.n, gamma, "A")):
            return "clique-plus-isolates"
        if gamma >= 2 and (g.n - gamma) % 2 == 0:
            if key == canonical_form(domination_extremal(g.n, gamma, "B")):
                return "matching-complement-plus-isolates"
    return None


def star_radius(delta_plus_1: int, alpha: float) -> float:
    """Closed-form spectral radius of the star on delta_plus_1 vertices."""
    a = check_alpha(alpha)
    delta = delta_plus_1 - 1
    if delta < 1:
        raise GraphError(f"star_radius needs at least 2 vertices, got {delta_plus_1}")
    disc = a * a * (delta + 1.0) ** 2 + 4.0 * (1.0 - 2.0 * a) * delta
    return (a * (delta + 1.0) + math.sqrt(disc)) / 2.0


def gamma_star_bound(n: int, alpha: float) -> float:
    """Largest possible irregularity measure on n vertices (attained by the star)."""
    a = check_alpha(alpha)
    if n < 2:
        raise GraphError(f"gamma_star_bound needs n >= 2, got {n}")
    if a == 1.0:
        raise GraphError("gamma_star_bound needs alpha < 1")
    return n - 1.0 - star_radius(n, a)


@dataclass(frozen=True)
class CubicH:
    """The cubic whose largest root is the star-plus-edge spectral radius."""

    n: int
    alpha: float
    c3: float
    c2: float
    c1: float
    c0: float

    def evaluate(self, t: float) -> float:
        return ((self.c3 * t + self.c2) * t + self.c1) * t + self.c0

    def derivative_larger_root(self) -> float:
        a, n = self.alpha, self.n
        disc = a * a * n * n - (a * a + 7.0 * a - 3.0) * n + a * a + 8.0 * a - 2.0
        return (a * (n + 1.0) + 1.0 + math.sqrt(disc)) / 3.0

    def ceiling(self) -> float:
        """The proof's strict upper bound t_0 on the largest root."""
        a, n = self.alpha, self.n
        disc = a * a * (n - 1.0) ** 2 + 4.0 * (1.0 - 2.0 * a) * (n - 2.0)
        return 1.0 + a * (n - 1.0) / 2.0 + math.sqrt(disc) / 2.0


def cubic_h(n: int, alpha: float) -> CubicH:
    a = check_alpha(alpha)
    if n < 4:
        raise GraphError(f"cubic_h needs n >= 4, got {n}")
    if a == 1.0:
        raise GraphError("cubic_h needs alpha < 1")
    return CubicH(
        n=n,
        alpha=a,
        c3=1.0,
        c2=-(a * (n + 1.0) + 1.0),
        c1=(a * a + 3.0 * a - 1.0) * (n - 1.0) + a * (a + 1.0),
        c0=(1.0 - 2.0 * a) * (a + 1.0) * (n - 1.0) - 2.0 * (1.0 - a) ** 2,
    )


def rho_star_plus_edge(n: int, alpha: float) -> float:
    """Spectral radius of the star plus one edge, via bisection on the cubic."""
    a = check_alpha(alpha)
    if n < 3:
        raise GraphError(f"rho_star_plus_edge needs n >= 3, got {n}")
    if a == 1.0:
        raise GraphError("rho_star_plus_edge needs alpha < 1")
    if n == 3:
        return 2.0  # the triangle, regular of degree 2
    h = cubic_h(n, a)
    lo = h.derivative_larger_root()
    hi = float(n)
    if h.evaluate(lo) > 0.0 or h.evaluate(hi) <= 0.0:
        raise ArithmeticError(f"bisection bracket failed for n={n}, alpha={a}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if h.evaluate(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-13 * max(1.0, hi):
            break
    return 0.5 * (lo + hi)


def energy_bounds(g: Graph, alpha: float) -> tuple[float, float, float]:
    """(upper, lower_spread, lower_moment) bounds on the alpha energy."""
    a = check_alpha(alpha)
    n, m = g.n, g.m
    z = zagreb_index(g)
    upper = math.sqrt(2.0 * (1.0 - a) ** 2 * m * n + a * a * (n * z - 4.0 * m * m))
    lam1 = float(eigenvalues(g, a)[0])
    lower1 = 2.0 * (lam1 - 2.0 * a * m / n)
    lower2 = math.sqrt(2.0 * (2.0 * (1.0 - a) ** 2 * m + a * a * (z - 4.0 * m * m / n)))
    return upper, lower1, lower2


def estrada_upper(g: Graph, alpha: float) -> float:
    """Upper bound on the alpha Estrada index (needs at least one edge)."""
    a = check_alpha(alpha)
    if g.m < 1:
        raise GraphError("estrada_upper needs at least one edge")
    radical = math.sqrt(2.0 * (1.0 - a) ** 2 * g.m + a * a * zagreb_index(g))
    return g.n - 1.0 + 2.0 * a * g.m - radical + math.exp(radical)


def evaluate_all(g: Graph, alpha: float) -> list[BoundEvaluation]:
    """Every bound as a BoundEvaluation row (the CLI `bounds` payload)."""
    a = check_alpha(alpha)
    rho = alpha_spectral_radius(g, a)
    rows = [
        best_rowsum_bound(g, a, rho=rho),
        delta_bound(g, a, rho=rho),
        irregular_diameter_bound(g, a, rho=rho),
        least_eigenvalue_gap(g, a),
        shi_type_bound(g, a, rho=rho),
    ]
    profile = structural_profile(g)
    if profile.connected and not profile.regular and a < 1.0 and g.n >= 2:
        k = vertex_connectivity(g)
        if k >= 1:
            rows.append(kconnected_bound(g, a, k, rho=rho))
    else:
        rows.append(_skip("kconnected:auto", "upper", "needs connected irregular, alpha < 1", True))
    rows.append(domination_bound(g, a, rho=rho))
    vals = indices(g, a)
    upper, lower1, lower2 = energy_bounds(g, a)
    rows.append(BoundEvaluation("energy-upper", "upper", True, None, upper,
                                vals.energy, upper - vals.energy, False))
    rows.append(BoundEvaluation("energy-lower-spread", "lower", True, None, lower1,
                                vals.energy, vals.energy - lower1, False))
    rows.append(BoundEvaluation("energy-lower-moment", "lower", True, None, lower2,
                                vals.energy, vals.energy - lower2, False))
    if g.m >= 1:
        est = estrada_upper(g, a)
        rows.append(BoundEvaluation("estrada-upper", "upper", True, None, est,
                                    vals.estrada, est - vals.estrada, False))
    else:
        rows.append(_skip("estrada-upper", "upper", "needs at least one edge", False))
    return rows
