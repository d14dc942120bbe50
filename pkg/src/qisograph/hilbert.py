"""Finite-rank truncations of the path-space L^2, the representation of
the graph algebra on them, embeddings, the Dirac operator, and the
heat-trace numerics.

The degree-k cylinder indicators form a basis of the level-k space; the
inner product is the diagonal Gram form with entries M([eta]).  Maps
between levels carry an explicit half-integer power of the spectral
radius so that compositions such as S_e* S_e stay exactly rational.
Operator identities are asserted only on interior levels: a finite
window cannot represent S_e on its top level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import DirectedGraph, Path, SOURCE_APPEND, adjacency_matrix, enumerate_paths, refine, vertex_path
from .perron import PerronData, cylinder_measure
from .ratmat import (
    Mat, rat_identity, rat_matmul, rat_max_abs, rat_rank, rat_sub, rat_transpose, rat_zeros,
)


class TruncationOverflowError(ValueError):
    pass


@dataclass(frozen=True)
class LevelSpace:
    k: int
    basis: tuple[Path, ...]
    gram: tuple[Fraction, ...]   # diagonal entries M([eta]) in basis order

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, path: Path) -> int:
        return self.basis.index(path)


def level_space(g: DirectedGraph, pf: PerronData, k: int) -> LevelSpace:
    basis = tuple(enumerate_paths(g, k))
    gram = tuple(cylinder_measure(pf, eta) for eta in basis)
    if not pf.exact:
        raise ValueError("level spaces require exact Perron data")
    return LevelSpace(k, basis, gram)


@dataclass
class LevelMap:
    """Matrix from the level-l basis to the level-k basis times
    rho^{half_power/2}; with rational rho the even part of the power is
    absorbed into the matrix, keeping half_power in {0, 1}."""

    source_level: int
    target_level: int
    half_power: int
    mat: Mat

    def normalized(self, pf: PerronData) -> "LevelMap":
        half = self.half_power
        if half in (0, 1):
            return self
        even, rem = divmod(half, 2)
        scale = pf.exact_rho ** even
        return LevelMap(self.source_level, self.target_level, rem,
                        [[scale * x for x in row] for row in self.mat])

    def compose(self, other: "LevelMap", pf: PerronData) -> "LevelMap":
        """self after other."""
        if other.target_level != self.source_level:
            raise ValueError("level mismatch in composition")
        return LevelMap(other.source_level, self.target_level,
                        self.half_power + other.half_power,
                        rat_matmul(self.mat, other.mat)).normalized(pf)

    def equals(self, other: "LevelMap") -> bool:
        if (self.source_level, self.target_level) != (other.source_level, other.target_level):
            return False
        if self.half_power != other.half_power:
            # one of the two may be a zero matrix with unnormalized power
            return rat_max_abs(self.mat) == 0 and rat_max_abs(other.mat) == 0
        return self.mat == other.mat

    def residual(self, other: "LevelMap") -> Fraction:
        if self.half_power != other.half_power:
            return rat_max_abs(self.mat) + rat_max_abs(other.mat)
        return rat_max_abs(rat_sub(self.mat, other.mat))

    def to_float(self, pf: PerronData) -> np.ndarray:
        scale = float(pf.rho) ** (self.half_power / 2.0)
        return scale * np.array([[float(x) for x in row] for row in self.mat])


def embed(g: DirectedGraph, pf: PerronData, l: int, k: int,
          convention: str = SOURCE_APPEND) -> LevelMap:
    """Inclusion R_l -> R_k: columns are 0/1 refinement indicators."""
    if l > k:
        raise ValueError("embedding goes upward in level")
    src = enumerate_paths(g, l)
    tgt = enumerate_paths(g, k)
    tgt_index = {p: i for i, p in enumerate(tgt)}
    mat = rat_zeros(len(tgt), len(src))
    for j, lam in enumerate(src):
        for ext in refine(g, lam, k - l, convention):
            mat[tgt_index[ext]][j] += 1
    return LevelMap(l, k, 0, mat)


def embedding_gram_residual(g: DirectedGraph, pf: PerronData, l: int, k: int,
                            convention: str = SOURCE_APPEND) -> Fraction:
    """Max entry of E^T G_k E - G_l; exactly 0 for the measure-consistent
    convention (the embedding is then a Gram isometry)."""
    e = embed(g, pf, l, k, convention)
    gk = level_space(g, pf, k).gram
    gl = level_space(g, pf, l).gram
    weighted = [[gk[i] * e.mat[i][j] for j in range(len(e.mat[0]))] for i in range(len(e.mat))]
    prod = rat_matmul(rat_transpose(e.mat), weighted)
    target = [[gl[i] if i == j else Fraction(0) for j in range(len(gl))] for i in range(len(gl))]
    return rat_max_abs(rat_sub(prod, target))


# ---------------------------------------------------------------------------
# the representation

def _extends(longer: Path, shorter: Path) -> bool:
    """Whether *longer* has *shorter* as its initial (range-side) segment."""
    if shorter.degree == 0:
        return longer.range == shorter.range
    return longer.edges[:shorter.degree] == shorter.edges


def _map_s(g, pf, lam: Path, k: int, n_cap: int) -> LevelMap:
    d = lam.degree
    if k + d > n_cap:
        raise TruncationOverflowError(f"S_{lam.label} on level {k} exceeds truncation {n_cap}")
    src = enumerate_paths(g, k)
    tgt = enumerate_paths(g, k + d)
    tgt_index = {p: i for i, p in enumerate(tgt)}
    mat = rat_zeros(len(tgt), len(src))
    for j, eta in enumerate(src):
        if eta.range == lam.source:
            from .graphs import compose
            mat[tgt_index[compose(lam, eta)]][j] = Fraction(1)
    return LevelMap(k, k + d, d, mat)


def _map_s_star(g, pf, lam: Path, k: int) -> LevelMap:
    d = lam.degree
    src = enumerate_paths(g, k)
    if d <= k:
        tgt = enumerate_paths(g, k - d)
        tgt_index = {p: i for i, p in enumerate(tgt)}
        mat = rat_zeros(len(tgt), len(src))
        for j, eta in enumerate(src):
            if _extends(eta, lam):
                beta = (vertex_path(eta.source) if eta.degree == d
                        else Path(eta.edges[d:], g.range_of(eta.edges[d]), eta.source))
                mat[tgt_index[beta]][j] = Fraction(1)
        return LevelMap(k, k - d, -d, mat)
    tgt = enumerate_paths(g, 0)
    tgt_index = {p: i for i, p in enumerate(tgt)}
    mat = rat_zeros(len(tgt), len(src))
    for j, eta in enumerate(src):
        if _extends(lam, eta):
            mat[tgt_index[vertex_path(lam.source)]][j] = Fraction(1)
    return LevelMap(k, 0, -d, mat)


def _map_p(g, pf, v: str, k: int) -> LevelMap:
    basis = enumerate_paths(g, k)
    mat = rat_zeros(len(basis), len(basis))
    for j, eta in enumerate(basis):
        if eta.range == v:
            mat[j][j] = Fraction(1)
    return LevelMap(k, k, 0, mat)


def represent(g: DirectedGraph, pf: PerronData, ops, k: int, n_cap: int) -> LevelMap:
    """Matrix of a word in S_lambda, S_lambda*, p_v on the level-k basis.

    *ops* is a sequence of ("s", path), ("s*", path), ("p", vertex)
    applied right to left; intermediate levels must stay within the
    truncation window [0, n_cap].
    """
    basis = enumerate_paths(g, k)
    cur = LevelMap(k, k, 0, rat_identity(len(basis)))
    for op in reversed(list(ops)):
        kind, arg = op
        lvl = cur.target_level
        if kind == "s":
            step = _map_s(g, pf, arg, lvl, n_cap)
        elif kind == "s*":
            step = _map_s_star(g, pf, arg, lvl)
        elif kind == "p":
            step = _map_p(g, pf, arg, lvl)
        else:
            raise ValueError(f"unknown symbol {kind!r}")
        cur = step.compose(cur, pf)
    return cur


def gram_adjoint(g: DirectedGraph, pf: PerronData, m: LevelMap) -> LevelMap:
    """Adjoint with respect to the diagonal Gram forms (not Euclidean)."""
    gs = level_space(g, pf, m.source_level).gram
    gt = level_space(g, pf, m.target_level).gram
    rows = len(m.mat)
    cols = len(m.mat[0]) if rows else 0
    out = rat_zeros(cols, rows)
    for i in range(rows):
        for j in range(cols):
            if m.mat[i][j]:
                out[j][i] = m.mat[i][j] * gt[i] / gs[j]
    return LevelMap(m.target_level, m.source_level, m.half_power, out).normalized(pf)


@dataclass(frozen=True)
class CuntzKriegerReport:
    n_cap: int
    residual_annihilation: Fraction    # max over S_e* S_e = p_{s(e)}
    residual_completeness: Fraction    # max over p_v = sum S_e S_e*
    levels_checked: tuple[int, ...]

    @property
    def exact(self) -> bool:
        return self.residual_annihilation == 0 and self.residual_completeness == 0


def cuntz_krieger_check(g: DirectedGraph, pf: PerronData, n_cap: int) -> CuntzKriegerReport:
    """Verify both defining relations exactly on interior levels.

    S_e* S_e = p_{s(e)} is checked on levels 0..N-1 (the image passes
    through level k+1) and p_v = sum_{r(e)=v} S_e S_e* on levels 1..N-1
    (through level k-1); at level 0 the latter is the refinement
    identity, which lives with the embeddings.
    """
    if n_cap < 2:
        raise ValueError("need truncation level at least 2")
    from .graphs import edge_path
    res1 = Fraction(0)
    res2 = Fraction(0)
    levels = tuple(range(n_cap))
    for k in range(n_cap):
        for e in g.sorted_edges:
            lam = edge_path(g, e.id)
            lhs = represent(g, pf, [("s*", lam), ("s", lam)], k, n_cap)
            rhs = represent(g, pf, [("p", e.source)], k, n_cap)
            res1 = max(res1, lhs.residual(rhs))
    for k in range(1, n_cap):
        for v in g.vertices:
            total = None
            for e in g.edges_into[v]:
                lam = edge_path(g, e.id)
                term = represent(g, pf, [("s", lam), ("s*", lam)], k, n_cap)
                total = term if total is None else LevelMap(
                    k, k, term.half_power,
                    [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(total.mat, term.mat)])
            rhs = represent(g, pf, [("p", v)], k, n_cap)
            res2 = max(res2, total.residual(rhs))
    return CuntzKriegerReport(n_cap, res1, res2, levels)


# ---------------------------------------------------------------------------
# Dirac operator and heat-trace numerics

def path_counts(g: DirectedGraph, up_to: int) -> list[int]:
    """#degree-k paths for k = 0..up_to, via powers of the vertex matrix."""
    a = adjacency_matrix(g)
    n = len(a)
    counts = [n]
    power = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(up_to):
        power = [[sum(power[i][t] * a[t][j] for t in range(n)) for j in range(n)]
                 for i in range(n)]
        counts.append(sum(sum(row) for row in power))
    return counts


def multiplicities(g: DirectedGraph, up_to: int) -> list[int]:
    """n_q = dim R_q - dim R_{q-1}, with R_{-1} the constants, so
    n_0 = |V| - 1."""
    counts = path_counts(g, up_to)
    out = [counts[0] - 1]
    out += [counts[q] - counts[q - 1] for q in range(1, up_to + 1)]
    return out


def alpha_sequence(n_cap: int, kind: str = "power", eps: float = 0.25) -> tuple[float, ...]:
    """Dirac eigenvalue scale: q^{1/2+eps} (default) or linear q."""
    if kind == "power":
        if not 0 < eps < 0.5:
            raise ValueError("eps must lie in (0, 1/2)")
        seq = tuple(float(q) ** (0.5 + eps) for q in range(n_cap + 1))
    elif kind == "linear":
        seq = tuple(float(q) for q in range(n_cap + 1))
    else:
        raise ValueError(f"unknown alpha kind {kind!r}")
    gaps = [b - a for a, b in zip(seq, seq[1:])]
    if any(gap <= 0 for gap in gaps) or any(gap > 1 + 1e-12 for gap in gaps):
        raise ValueError("alpha must increase with gaps bounded by 1")
    return seq


@dataclass
class TruncatedTriple:
    n_cap: int
    alpha: tuple[float, ...]
    space: LevelSpace                      # the level-N coordinate space
    xi: list[Mat]                          # Xi_q, q = 0..N, exact projections
    xi_hat: list[Mat]                      # Xi-hat_{q,q-1}, q = 0..N
    constants_projection: Mat
    mults: list[int]

    def dirac_matrix(self) -> np.ndarray:
        n = self.space.dim
        d = np.zeros((n, n))
        for q, m in enumerate(self.xi_hat):
            d += self.alpha[q] * np.array([[float(x) for x in row] for row in m])
        return d


def dirac(g: DirectedGraph, pf: PerronData, n_cap: int,
          alpha: tuple[float, ...] | None = None,
          convention: str = SOURCE_APPEND) -> TruncatedTriple:
    """Exact Gram-orthogonal projections onto the level filtration and
    the eigenvalue data of the truncated Dirac operator."""
    if alpha is None:
        alpha = alpha_sequence(n_cap)
    if len(alpha) < n_cap + 1:
        raise ValueError("alpha sequence shorter than truncation")
    space = level_space(g, pf, n_cap)
    gram = space.gram
    dim = space.dim

    xi = []
    for q in range(n_cap + 1):
        e = embed(g, pf, q, n_cap, convention).mat
        gq = level_space(g, pf, q).gram
        # P = E G_q^{-1} E^T G_N with diagonal Gram blocks
        cols = len(e[0])
        left = [[e[i][j] / gq[j] for j in range(cols)] for i in range(dim)]
        right = [[e[j][i] * gram[j] for j in range(dim)] for i in range(cols)]
        xi.append(rat_matmul(left, right))

    ones = [[Fraction(1)] for _ in range(dim)]
    row = [[gram[j] for j in range(dim)]]
    constants = rat_matmul(ones, row)      # u (Gu)^T, with u^T G u = 1

    xi_hat = [rat_sub(xi[0], constants)]
    for q in range(1, n_cap + 1):
        xi_hat.append(rat_sub(xi[q], xi[q - 1]))

    return TruncatedTriple(n_cap, tuple(alpha[:n_cap + 1]), space, xi, xi_hat,
                           constants, multiplicities(g, n_cap))


def projection_invariant_residual(triple: TruncatedTriple) -> Fraction:
    """Worst violation of: Xi idempotent, Gram-self-adjoint, nested;
    Xi-hat pairwise orthogonal and summing to the identity with the
    constants block.  All exact."""
    gram = triple.space.gram
    dim = triple.space.dim
    worst = Fraction(0)
    for p in triple.xi + [triple.constants_projection]:
        worst = max(worst, rat_max_abs(rat_sub(rat_matmul(p, p), p)))
        gp = [[gram[i] * p[i][j] for j in range(dim)] for i in range(dim)]
        ptg = [[p[j][i] * gram[j] for j in range(dim)] for i in range(dim)]
        worst = max(worst, rat_max_abs(rat_sub(gp, ptg)))
    for q in range(1, len(triple.xi)):
        worst = max(worst, rat_max_abs(
            rat_sub(rat_matmul(triple.xi[q - 1], triple.xi[q]), triple.xi[q - 1])))
    for a in range(len(triple.xi_hat)):
        for b in range(a + 1, len(triple.xi_hat)):
            prod = rat_matmul(triple.xi_hat[a], triple.xi_hat[b])
            worst = max(worst, rat_max_abs(prod))
    total = triple.constants_projection
    for m in triple.xi_hat:
        total = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(total, m)]
    worst = max(worst, rat_max_abs(rat_sub(total, rat_identity(dim))))
    return worst


def xi_hat_ranks(triple: TruncatedTriple) -> list[int]:
    return [rat_rank(m) for m in triple.xi_hat]


def theta_partial_trace(mults, t: float, eps: float, q_max: int) -> float:
    """Partial heat trace sum_{q<=Q} exp(-t q^{1+2 eps}) n_q.

    Accepts a multiplicity list or a TruncatedTriple.
    """
    if isinstance(mults, TruncatedTriple):
        mults = mults.mults
    if t <= 0:
        raise ValueError("t must be positive")
    if not 0 < eps < 0.5:
        raise ValueError("eps must lie in (0, 1/2)")
    if q_max >= len(mults):
        raise ValueError("partial trace exceeds available multiplicities")
    return sum(math.exp(-t * q ** (1 + 2 * eps)) * mults[q] for q in range(q_max + 1))


def theta_dominating_terms(m_edges: int, t: float, eps: float, q_max: int) -> list[float]:
    """Terms exp(-t q^{1+2 eps}) m^q of the dominating series, q >= 1.

    n_q <= m^q holds for q >= 1 (the degree-q indicators are a basis of
    R_q); the q = 0 term n_0 = |V| - 1 is excluded from the pointwise
    bound.
    """
    return [math.exp(-t * q ** (1 + 2 * eps)) * m_edges ** q for q in range(1, q_max + 1)]
