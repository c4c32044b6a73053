"""The matrix family alpha*D + (1-alpha)*A: spectra, Perron vectors, and the
energy / Estrada / Zagreb indices."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._eig import jacobi_eigh
from .errors import ConvergenceError, GraphError
from .graphs import Graph, is_connected


def default_alpha_grid() -> tuple[float, ...]:
    """The standard verification grid: tenths plus a 0.99 boundary probe."""
    return tuple(round(0.1 * i, 1) for i in range(10)) + (0.99,)


def check_alpha(alpha: float) -> float:
    a = float(alpha)
    if not 0.0 <= a <= 1.0:
        raise GraphError(f"alpha must lie in [0,1], got {alpha}")
    return a


@dataclass(frozen=True)
class SpectralSummary:
    alpha: float
    eigenvalues: tuple[float, ...]
    rho: float
    least: float
    perron: tuple[float, ...] | None


@dataclass(frozen=True)
class IndexValues:
    energy: float
    estrada: float
    zagreb: int


def a_alpha_matrix(g: Graph, alpha: float) -> np.ndarray:
    a = check_alpha(alpha)
    mat = np.zeros((g.n, g.n))
    off = 1.0 - a
    for u, v in g.edges:
        mat[u, v] = off
        mat[v, u] = off
    for v, d in enumerate(g.degrees):
        mat[v, v] = a * d
    return mat


def _eigensystem(g: Graph, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    if alpha == 1.0:
        values = np.array(g.degrees, dtype=np.float64)
        order = np.argsort(-values, kind="stable")
        vectors = np.eye(g.n)[:, order]
        return values[order], vectors
    return jacobi_eigh(a_alpha_matrix(g, alpha))


def eigenvalues(g: Graph, alpha: float) -> np.ndarray:
    """Non-increasing spectrum of the alpha matrix."""
    check_alpha(alpha)
    return _eigensystem(g, alpha)[0]


def alpha_spectral_radius(g: Graph, alpha: float) -> float:
    return float(eigenvalues(g, alpha)[0])


def _refine_perron(mat: np.ndarray, lam: float, vec: np.ndarray) -> np.ndarray:
    """One round of shifted inverse iteration, then positive normalization."""
    n = mat.shape[0]
    shift = lam + 1e-8 * max(1.0, abs(lam))
    try:
        refined = np.linalg.solve(mat - shift * np.eye(n), vec)
        refined /= np.linalg.norm(refined)
    except np.linalg.LinAlgError:
        refined = vec
    if refined[int(np.argmax(np.abs(refined)))] < 0:
        refined = -refined
    return refined


def spectrum(g: Graph, alpha: float) -> SpectralSummary:
    a = check_alpha(alpha)
    values, vectors = _eigensystem(g, a)
    perron = None
    if a < 1.0 and is_connected(g):
        x = _refine_perron(a_alpha_matrix(g, a), float(values[0]), vectors[:, 0].copy())
        if np.min(x) <= 0.0:
            raise ConvergenceError("Perron vector has non-positive entries", 0, float(np.min(x)))
        perron = tuple(float(t) for t in x)
    return SpectralSummary(
        alpha=a,
        eigenvalues=tuple(float(t) for t in values),
        rho=float(values[0]),
        least=float(values[-1]),
        perron=perron,
    )


def perron_vector(g: Graph, alpha: float) -> tuple[float, ...]:
    summary = spectrum(g, alpha)
    if summary.perron is None:
        raise GraphError("Perron vector needs a connected graph and alpha < 1")
    return summary.perron


def zagreb_index(g: Graph) -> int:
    """First Zagreb index: sum of squared degrees."""
    return sum(d * d for d in g.degrees)


def indices(g: Graph, alpha: float) -> IndexValues:
    a = check_alpha(alpha)
    values = eigenvalues(g, a)
    mean = 2.0 * a * g.m / g.n
    energy = float(np.sum(np.abs(values - mean)))
    estrada = float(np.sum(np.exp(values)))
    return IndexValues(energy=energy, estrada=estrada, zagreb=zagreb_index(g))


def alpha_energy(g: Graph, alpha: float) -> float:
    return indices(g, alpha).energy


def alpha_estrada(g: Graph, alpha: float) -> float:
    return indices(g, alpha).estrada


def laplacian_largest(g: Graph) -> float:
    """Largest eigenvalue of the Laplacian D - A (used as a cross-check)."""
    mat = np.zeros((g.n, g.n))
    for u, v in g.edges:
        mat[u, v] = -1.0
        mat[v, u] = -1.0
    for v, d in enumerate(g.degrees):
        mat[v, v] = float(d)
    values, _ = jacobi_eigh(mat)
    return float(values[0])


def gamma_alpha(g: Graph, alpha: float) -> float:
    """The irregularity measure: max degree minus the spectral radius."""
    return max(g.degrees) - alpha_spectral_radius(g, alpha)


def trace_identities(g: Graph, alpha: float) -> tuple[float, float]:
    """Expected trace and trace-of-square: (2*alpha*m, 2(1-a)^2 m + a^2 Z)."""
    a = check_alpha(alpha)
    return 2.0 * a * g.m, 2.0 * (1.0 - a) ** 2 * g.m + a * a * zagreb_index(g)
