"""Spectral radius, normalized Perron-Frobenius vector, cylinder-set
measure, and the values of the distinguished state on vertex
projections.

The measure of a cylinder set is M([lambda]) = rho^{-d} x_{s(lambda)}.
Whenever the spectral radius is a (small-denominator) rational, the
whole measure layer is verified and served in exact rational
arithmetic; otherwise values are floats and downstream exactness claims
are disabled rather than silently rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import (
    DirectedGraph, Path, SOURCE_APPEND, RANGE_PREPEND,
    adjacency_matrix, is_strongly_connected, refine,
)
from .ratmat import rat_matrix, rat_nullspace

_EXACT_DENOMINATOR_CAP = 10**6


class PerronError(ValueError):
    pass


@dataclass(frozen=True)
class PerronData:
    vertices: tuple[str, ...]
    rho: float
    x: tuple[float, ...]
    exact_rho: Fraction | None
    exact_x: tuple[Fraction, ...] | None
    tol: float

    @property
    def exact(self) -> bool:
        return self.exact_rho is not None

    def x_of(self, v: str):
        i = self.vertices.index(v)
        return self.exact_x[i] if self.exact else self.x[i]

    def rho_value(self):
        return self.exact_rho if self.exact else self.rho


def _try_exact(a, rho_float: float, vertices) -> tuple[Fraction, tuple[Fraction, ...]] | None:
    rho = Fraction(rho_float).limit_denominator(_EXACT_DENOMINATOR_CAP)
    n = len(vertices)
    m = rat_matrix(a)
    for i in range(n):
        m[i][i] -= rho
    basis = rat_nullspace(m)
    if len(basis) != 1:
        return None
    vec = basis[0]
    if all(c <= 0 for c in vec):
        vec = [-c for c in vec]
    if any(c <= 0 for c in vec):
        return None
    total = sum(vec)
    vec = [c / total for c in vec]
    # re-check the eigen equation exactly
    arat = rat_matrix(a)
    for i in range(n):
        lhs = sum(arat[i][j] * vec[j] for j in range(n))
        if lhs != rho * vec[i]:
            return None
    return rho, tuple(vec)


def perron(g: DirectedGraph, tol: float = 1e-12, max_iter: int = 10**6) -> PerronData:
    """Spectral radius and total-mass-one Perron vector of the vertex matrix.

    Power iteration with 1-norm renormalization runs on A + I so that
    periodic strongly connected graphs (cycles) still converge; the
    shift changes the eigenvalue by exactly one and nothing else.
    """
    ok, witness = is_strongly_connected(g)
    if not ok:
        raise PerronError(f"graph {g.name} is not strongly connected: {witness}")
    a = adjacency_matrix(g)
    n = len(g.vertices)
    x = [1.0 / n] * n
    rho_shifted = None
    for _ in range(max_iter):
        y = [sum(a[i][j] * x[j] for j in range(n)) + x[i] for i in range(n)]
        norm = sum(y)
        y = [v / norm for v in y]
        if max(abs(u - v) for u, v in zip(x, y)) < tol:
            x = y
            rho_shifted = norm
            break
        x = y
    if rho_shifted is None:
        raise PerronError(f"power iteration did not converge within {max_iter} iterations")
    rho = rho_shifted - 1.0
    exact = _try_exact(a, rho, g.vertices)
    if exact is not None:
        exact_rho, exact_x = exact
        return PerronData(g.vertices, float(exact_rho), tuple(float(c) for c in exact_x),
                          exact_rho, exact_x, tol)
    return PerronData(g.vertices, rho, tuple(x), None, None, tol)


def cylinder_measure(pf: PerronData, lam: Path):
    """M([lambda]) = rho^{-d(lambda)} x_{s(lambda)}; Fraction when exact."""
    if pf.exact:
        return pf.exact_rho ** (-lam.degree) * pf.x_of(lam.source)
    return pf.rho ** (-lam.degree) * pf.x_of(lam.source)


def kms_vertex_value(pf: PerronData, v: str):
    """Value of the distinguished state on the vertex projection p_v."""
    return pf.x_of(v)


def additivity_residual(pf: PerronData, g: DirectedGraph, lam: Path, n: int, side: str):
    """|M([lam]) - sum of M over the degree-(d+n) refinements on *side*|.

    Exactly zero (in rationals) for the measure-consistent side.
    """
    if n < 1:
        raise ValueError("refinement depth must be at least 1")
    total = cylinder_measure(pf, lam) - sum(
        cylinder_measure(pf, mu) for mu in refine(g, lam, n, side))
    return abs(total)


def total_level_mass(pf: PerronData, g: DirectedGraph, k: int):
    """Sum of M over all degree-k cylinders; equals 1 for every k."""
    from .graphs import enumerate_paths
    return sum(cylinder_measure(pf, lam) for lam in enumerate_paths(g, k))


def cylinder_intersection_measure(pf: PerronData, lam: Path, eta: Path):
    """M([lam] ∩ [eta]) from the cylinder semantics (initial segments).

    This is the definitional inner product <chi_lam, chi_eta>; it does
    not depend on any refinement convention.
    """
    lo, hi = (lam, eta) if lam.degree <= eta.degree else (eta, lam)
    if lo.degree == 0:
        contained = hi.range == lo.range
    else:
        contained = hi.edges[:lo.degree] == lo.edges
    if contained:
        return cylinder_measure(pf, hi)
    return Fraction(0) if pf.exact else 0.0


def convention_residuals(pf: PerronData, g: DirectedGraph,
                         max_degree: int = 2, max_depth: int = 2) -> dict[str, object]:
    """Worst additivity residual per side over small cylinders."""
    out = {}
    from .graphs import enumerate_paths
    for side in (SOURCE_APPEND, RANGE_PREPEND):
        worst = Fraction(0) if pf.exact else 0.0
        for d in range(max_degree + 1):
            for lam in enumerate_paths(g, d):
                for n in range(1, max_depth + 1):
                    r = additivity_residual(pf, g, lam, n, side)
                    if r > worst:
                        worst = r
        out[side] = worst
    return out


def select_convention(pf: PerronData, g: DirectedGraph,
                      max_degree: int = 2, max_depth: int = 2) -> tuple[str, dict[str, object]]:
    """Adopt the refinement side with zero additivity residual.

    source-append is the tiebreak when both sides are consistent (it is
    the one matching the initial-segment cylinder semantics).  With
    exact Perron data "zero" means exact equality; in float mode a
    tolerance stands in, which is reported rather than hidden.
    """
    residuals = convention_residuals(pf, g, max_degree, max_depth)
    cutoff = 0 if pf.exact else 1e-9
    if residuals[SOURCE_APPEND] <= cutoff:
        return SOURCE_APPEND, residuals
    if residuals[RANGE_PREPEND] <= cutoff:
        return RANGE_PREPEND, residuals
    raise PerronError(f"no measure-consistent refinement convention on {g.name}")
