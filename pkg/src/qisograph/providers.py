"""Numeric representation providers: concrete matrix assignments for the
abstract generators, validated against their relation set at
registration, used as nonzero-ness oracles and as cross-checks for the
symbolic prover.

The classical provider for a graph diagonalizes over its automorphism
group: q[i,j] maps to diag_sigma(delta_{i, sigma(j)}).  Point providers
evaluate free-unitary generators at the entries of a concrete unitary
matrix, which is a genuine one-dimensional *-representation of the
universal relations, so a nonzero value there is a sound disproof.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .graphs import DirectedGraph, graph_automorphisms
from .ncpoly import Generator, NCPoly, QKIND, UKIND, USTAR, WKIND, WSTAR
from .relations import RelationSet
from .verdict import UNKNOWN, WITNESSED_NONZERO, Verdict


class ProviderValidationError(ValueError):
    pass


@dataclass
class RepresentationProvider:
    name: str
    dim: int
    assignment: dict[Generator, np.ndarray]
    tol: float = 1e-10

    def matrix(self, gen: Generator) -> np.ndarray:
        if gen.kind == WKIND or gen.kind == WSTAR:
            return np.eye(self.dim, dtype=complex)
        try:
            return self.assignment[gen]
        except KeyError:
            raise KeyError(f"provider {self.name} has no matrix for {gen}") from None

    def value(self, p: NCPoly) -> np.ndarray:
        total = np.zeros((self.dim, self.dim), dtype=complex)
        for word, coeff in p.items():
            m = np.eye(self.dim, dtype=complex)
            for gen in word:
                m = m @ self.matrix(gen)
            total += float(coeff) * m
        return total

    def norm(self, p: NCPoly) -> float:
        return float(np.linalg.norm(self.value(p), 2))


def _check_close(name: str, label: str, actual: np.ndarray, expected: np.ndarray, tol: float):
    err = float(np.linalg.norm(actual - expected, 2))
    if err > tol:
        raise ProviderValidationError(
            f"provider {name} violates {label} (residual {err:.3g})")


def register(provider: RepresentationProvider, rels: RelationSet) -> RepresentationProvider:
    """Validate every relation of *rels* under the provider's matrices."""
    n = provider.dim
    eye = np.eye(n, dtype=complex)
    zero = np.zeros((n, n), dtype=complex)
    for (g1, g2), rhs in rels.pair_rules.items():
        lhs = provider.matrix(g1) @ provider.matrix(g2)
        if rhs is None:
            _check_close(provider.name, f"rule {g1}{g2}->0", lhs, zero, provider.tol)
        else:
            m = eye.copy()
            for g in rhs:
                m = m @ provider.matrix(g)
            _check_close(provider.name, f"rule {g1}{g2}", lhs, m, provider.tol)
    for schema in rels.sum_schemas:
        for fixed in rels.universe:
            total = zero.copy()
            for var in rels.universe:
                gen = (Generator(rels.gen_kind, var, fixed) if schema.varying_axis == "row"
                       else Generator(rels.gen_kind, fixed, var))
                w = rels.weight_of(schema, var)
                total = total + float(w) * provider.matrix(gen)
            target = float(rels.weight_of(schema, fixed)) * eye if schema.weighted else eye
            _check_close(provider.name, f"schema {schema.tag}@{fixed}", total, target,
                         provider.tol)
    for schema in rels.unitary_schemas:
        kind1, kind2 = schema.kinds
        ax1, ax2 = schema.shared_axes
        for i in rels.universe:
            for j in rels.universe:
                total = zero.copy()
                for k in rels.universe:
                    g1 = Generator(kind1, k, i) if ax1 == "row" else Generator(kind1, i, k)
                    g2 = Generator(kind2, k, j) if ax2 == "row" else Generator(kind2, j, k)
                    total = total + provider.matrix(g1) @ provider.matrix(g2)
                target = eye if i == j else zero
                _check_close(provider.name, f"schema {schema.tag}@({i},{j})", total, target,
                             provider.tol)
    for idx, p in enumerate(rels.linear_relations):
        _check_close(provider.name, f"linear relation #{idx}", provider.value(p), zero,
                     provider.tol)
    for gen in sorted(rels.vanishing):
        _check_close(provider.name, f"vanishing generator {gen}", provider.matrix(gen),
                     zero, provider.tol)
    return provider


def permutation_diag_rep(name: str, ids, permutations, kind: str = QKIND,
                         tol: float = 1e-10) -> RepresentationProvider:
    """Diagonal representation over a list of permutations (dicts):
    g[i,j] -> diag_sigma(delta_{i, sigma(j)})."""
    ids = tuple(ids)
    dim = len(permutations)
    assignment: dict[Generator, np.ndarray] = {}
    for i in ids:
        for j in ids:
            diag = np.array([1.0 + 0j if sigma[j] == i else 0j for sigma in permutations])
            assignment[Generator(kind, i, j)] = np.diag(diag)
    return RepresentationProvider(name, dim, assignment, tol)


def classical_rep(g: DirectedGraph, rels: RelationSet | None = None) -> RepresentationProvider:
    """Abelianization through the classical automorphism group of *g*.

    Dimension |Aut(g)|; a trivial automorphism group still yields a
    valid one-dimensional provider.
    """
    autos = graph_automorphisms(g)
    provider = permutation_diag_rep(f"classical({g.name})", g.vertices, autos)
    if rels is not None:
        register(provider, rels)
    return provider


def loop_permutation_rep(ids, rels: RelationSet | None = None) -> RepresentationProvider:
    """Point evaluations at every permutation of *ids* (for edge-indexed
    magic unitaries on the one-vertex loop graphs)."""
    import itertools
    ids = tuple(ids)
    perms = [dict(zip(ids, p)) for p in itertools.permutations(ids)]
    provider = permutation_diag_rep(f"perms({len(ids)})", ids, perms)
    if rels is not None:
        register(provider, rels)
    return provider


def matrix_point_provider(name: str, ids, mat, kind: str = UKIND,
                          tol: float = 1e-10) -> RepresentationProvider:
    """Evaluate generators at the entries of a concrete matrix: scalars,
    i.e. a one-dimensional representation.  For the free-unitary kind the
    adjoint entries are the conjugates."""
    ids = tuple(ids)
    mat = np.asarray(mat, dtype=complex)
    assignment: dict[Generator, np.ndarray] = {}
    for a, i in zip(ids, range(len(ids))):
        for b, j in zip(ids, range(len(ids))):
            assignment[Generator(kind, a, b)] = np.array([[mat[i, j]]])
            if kind == UKIND:
                assignment[Generator(USTAR, a, b)] = np.array([[np.conj(mat[i, j])]])
    return RepresentationProvider(name, 1, assignment, tol)


def identity_unitary(n: int) -> np.ndarray:
    return np.eye(n, dtype=complex)


def rotation_unitary(n: int, theta: float = math.pi / 4) -> np.ndarray:
    """Plane rotation in the first two coordinates, identity elsewhere."""
    if n < 2:
        raise ValueError("rotation needs n >= 2")
    m = np.eye(n, dtype=complex)
    c, s = math.cos(theta), math.sin(theta)
    m[0, 0], m[0, 1], m[1, 0], m[1, 1] = c, -s, s, c
    return m


def fourier_unitary(n: int) -> np.ndarray:
    """Discrete-Fourier-type unitary F[j,k] = omega^{jk} / sqrt(n)."""
    omega = cmath.exp(2j * cmath.pi / n)
    return np.array([[omega ** (j * k) / math.sqrt(n) for k in range(n)]
                     for j in range(n)])


def unitary_provider_portfolio(ids, rels: RelationSet) -> list[RepresentationProvider]:
    """Identity, generic rotation, and Fourier-type point evaluations,
    each registered against the free-unitary relations."""
    n = len(ids)
    providers = [
        matrix_point_provider("identity", ids, identity_unitary(n)),
        matrix_point_provider("rotation", ids, rotation_unitary(n)),
        matrix_point_provider("fourier", ids, fourier_unitary(n)),
    ]
    return [register(p, rels) for p in providers]


def witness_nonzero(p: NCPoly, providers) -> Verdict:
    """WitnessedNonzero when some provider maps p to a matrix of norm
    above ten times its tolerance; otherwise Unknown."""
    for provider in providers:
        norm = provider.norm(p)
        if norm > 10 * provider.tol:
            return Verdict(WITNESSED_NONZERO, provider=provider.name, residual=norm)
    return Verdict(UNKNOWN)


def max_residual(polys, provider: RepresentationProvider) -> float:
    """Largest provider norm over a family of polynomials."""
    worst = 0.0
    for p in polys:
        worst = max(worst, provider.norm(p))
    return worst
