"""Adjacency spectral radius and the power-graph matrix inequalities.

Entrywise matrix checks run in exact int64 arithmetic; only the spectral
radius itself is floating point, computed by shifted power iteration on
A + I (primitive for connected graphs, which breaks the +/- lambda tie on
bipartite inputs).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph
from .metrics import girth, is_connected, power_graph, two_degree_profile

MATRIX_CAP = 2048


class SpectralConvergenceError(RuntimeError):
    """Power iteration hit its iteration cap before meeting tolerance."""


def comparison_tol(n: int) -> float:
    """Default slack for spectral equality checks: max(1e-8, 1e-12 * n)."""
    return max(1e-8, 1e-12 * n)


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Symmetric 0/1 int64 matrix with zero diagonal."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = 1
        a[v, u] = 1
    return a


def degree_matrix(g: Graph) -> np.ndarray:
    return np.diag(np.array(g.degrees(), dtype=np.int64))


def laplacian(g: Graph) -> np.ndarray:
    """Degree matrix minus adjacency matrix; rows sum to zero."""
    return degree_matrix(g) - adjacency_matrix(g)


@dataclass(frozen=True)
class SpectralResult:
    lambda1: float
    iterations: int
    residual: float
    perron_vector: tuple[float, ...]

    def to_json_dict(self) -> dict:
        return {
            "lambda1": float(f"{self.lambda1:.12g}"),
            "iterations": self.iterations,
            "residual": float(f"{self.residual:.6g}"),
            "perron_vector": [float(f"{x:.12g}") for x in self.perron_vector],
        }


def spectral_radius(
    g: Graph, tolerance: float = 1e-10, max_iterations: int = 10**6
) -> SpectralResult:
    """Largest adjacency eigenvalue of a connected graph.

    Rayleigh-quotient readout; converged when the infinity-norm residual
    ||A x - lambda1 x|| drops below ``tolerance`` for the unit-infinity-norm
    iterate x.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if not is_connected(g):
        raise ValueError("spectral radius requires a connected graph")
    n = g.n
    if n == 1:
        return SpectralResult(0.0, 0, 0.0, (1.0,))
    b = adjacency_matrix(g).astype(np.float64) + np.eye(n)
    x = np.ones(n)
    for it in range(1, max_iterations + 1):
        y = b @ x
        theta = float(x @ y) / float(x @ x)
        residual = float(np.max(np.abs(y - theta * x))) / float(np.max(np.abs(x)))
        if residual <= tolerance:
            x = x / np.max(np.abs(x))
            return SpectralResult(theta - 1.0, it, residual, tuple(x))
        x = y / np.max(np.abs(y))
    raise SpectralConvergenceError(
        f"no convergence to {tolerance} within {max_iterations} iterations"
    )


# ---------------------------------------------------------------------------
# exact entrywise inequalities for power-graph adjacency matrices


@dataclass(frozen=True)
class MatrixInequalityReport:
    """Exact-arithmetic comparison of A(G^gamma) against its walk bounds."""

    gamma: int
    girth: int | float
    girth_threshold: int          # 5 for gamma=2, else 2*gamma+1
    girth_predicate: bool
    series_dominates: bool        # A(G^gamma) <= A + A^2 + ... + A^gamma
    bound_holds: bool             # refined bound(s) hold entrywise
    equality: bool                # refined bound(s) met with equality
    equality_left: bool
    equality_right: bool
    equality_matches_girth: bool

    def to_json_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "girth": None if self.girth == float("inf") else self.girth,
            "girth_threshold": self.girth_threshold,
            "girth_predicate": self.girth_predicate,
            "series_dominates": self.series_dominates,
            "bound_holds": self.bound_holds,
            "equality": self.equality,
            "equality_matches_girth": self.equality_matches_girth,
        }


def power_matrix_inequalities(g: Graph, gamma: int) -> MatrixInequalityReport:
    """Check, in integer arithmetic: the walk-series bound on A(G^gamma),
    and the refined degree-corrected bound, whose equality is compared with
    the girth predicate (girth >= 5 for gamma 2, girth >= 2*gamma+1 above)."""
    if gamma < 2:
        raise ValueError("gamma must be >= 2")
    if g.n < 3:
        raise ValueError("needs at least 3 vertices")
    if g.n > MATRIX_CAP:
        raise ValueError(f"dense matrix checks capped at n={MATRIX_CAP}")
    if not is_connected(g):
        raise ValueError("requires a connected graph")
    a = adjacency_matrix(g)
    d = degree_matrix(g)
    eye = np.eye(g.n, dtype=np.int64)
    lap = d - a
    a_pow = {1: a}
    walk = a.copy()
    series = a.copy()
    for k in range(2, gamma + 1):
        a_pow[k] = adjacency_matrix(power_graph(g, k).graph)
        walk = walk @ a
        series = series + walk
    series_ok = bool((a_pow[gamma] <= series).all())
    gir = girth(g)
    if gamma == 2:
        threshold = 5
        rhs = a @ a - lap
        holds = bool((a_pow[2] <= rhs).all())
        eq_left = eq_right = bool((a_pow[2] == rhs).all())
    else:
        threshold = 2 * gamma + 1
        left = a_pow[gamma - 1] @ a - a @ (d - eye) - lap
        right = a @ a_pow[gamma - 1] - (d - eye) @ a - lap
        holds = bool((a_pow[gamma] <= left).all() and (a_pow[gamma] <= right).all())
        eq_left = bool((a_pow[gamma] == left).all())
        eq_right = bool((a_pow[gamma] == right).all())
    predicate = gir >= threshold
    equality = eq_left and eq_right
    return MatrixInequalityReport(
        gamma=gamma,
        girth=gir,
        girth_threshold=threshold,
        girth_predicate=predicate,
        series_dominates=series_ok,
        bound_holds=holds,
        equality=equality,
        equality_left=eq_left,
        equality_right=eq_right,
        equality_matches_girth=equality == predicate,
    )


@dataclass(frozen=True)
class SpectralBoundReport:
    """lambda1 of G, G^(gamma-1) and G^gamma against the product bounds."""

    gamma: int
    tolerance: float
    lambda1_base: float
    lambda1_prev: float
    lambda1_power: float
    power_bound: float            # lambda1(G)^gamma
    gap: float                    # power_bound - lambda1_power
    square_leq_holds: bool        # lambda1(G^2) <= lambda1(G)^2 + tol
    equality_within_tol: bool
    predicate: bool               # 2-degree regular and girth >= 5
    predicate_matches: bool
    strict_gap_ok: bool           # gamma >= 3: gap > tol
    flagged_small_gap: bool

    def to_json_dict(self) -> dict:
        fmt = lambda x: float(f"{x:.12g}")
        return {
            "gamma": self.gamma,
            "tolerance": self.tolerance,
            "lambda1_base": fmt(self.lambda1_base),
            "lambda1_prev": fmt(self.lambda1_prev),
            "lambda1_power": fmt(self.lambda1_power),
            "power_bound": fmt(self.power_bound),
            "gap": fmt(self.gap),
            "square_leq_holds": self.square_leq_holds,
            "equality_within_tol": self.equality_within_tol,
            "predicate": self.predicate,
            "predicate_matches": self.predicate_matches,
            "strict_gap_ok": self.strict_gap_ok,
            "flagged_small_gap": self.flagged_small_gap,
        }


def spectral_power_bounds(
    g: Graph, gamma: int, tolerance: float | None = None
) -> SpectralBoundReport:
    """Compare lambda1 of powers against products of lambda1 of the base.

    For gamma 2 the bound lambda1(G^2) <= lambda1(G)^2 is met with equality
    exactly on 2-degree-regular graphs of girth >= 5; for gamma >= 3 the
    bound is strict, so the gap is reported and flagged (never failed) when
    it falls inside tolerance.
    """
    if gamma < 2:
        raise ValueError("gamma must be >= 2")
    if g.n < 3:
        raise ValueError("needs at least 3 vertices")
    if not is_connected(g):
        raise ValueError("requires a connected graph")
    tol = comparison_tol(g.n) if tolerance is None else tolerance
    lam_base = spectral_radius(g).lambda1
    prev = g if gamma == 2 else power_graph(g, gamma - 1).graph
    lam_prev = lam_base if gamma == 2 else spectral_radius(prev).lambda1
    lam_power = spectral_radius(power_graph(g, gamma).graph).lambda1
    bound = lam_base**gamma
    gap = bound - lam_power
    if gamma == 2:
        square_gap = gap
    else:
        square_gap = lam_base**2 - spectral_radius(power_graph(g, 2).graph).lambda1
    profile = two_degree_profile(g)
    predicate = len(set(profile)) <= 1 and girth(g) >= 5
    equality = abs(square_gap) <= tol
    return SpectralBoundReport(
        gamma=gamma,
        tolerance=tol,
        lambda1_base=lam_base,
        lambda1_prev=lam_prev,
        lambda1_power=lam_power,
        power_bound=bound,
        gap=gap,
        square_leq_holds=square_gap >= -tol,
        equality_within_tol=equality,
        predicate=predicate,
        predicate_matches=equality == predicate,
        strict_gap_ok=gamma < 3 or gap > tol,
        flagged_small_gap=gamma >= 3 and gap <= tol,
    )


def geometric_series_bound(lambda1: float, gamma: int) -> float:
    """(lambda1^(gamma+1) - 1) / (lambda1 - 1): walk-series chromatic bound."""
    if lambda1 <= 1:
        raise ValueError("series bound needs lambda1 > 1")
    return (lambda1 ** (gamma + 1) - 1.0) / (lambda1 - 1.0)
