import math
from fractions import Fraction

import numpy as np
import pytest

from qisograph.graphs import (
    RANGE_PREPEND, edge_path, enumerate_paths, path_from_edges, vertex_path,
)
from qisograph.hilbert import (
    TruncationOverflowError, alpha_sequence, cuntz_krieger_check,
    dirac, embed, embedding_gram_residual, gram_adjoint, level_space, multiplicities,
    path_counts, projection_invariant_residual, represent, theta_dominating_terms,
    theta_partial_trace, xi_hat_ranks,
)
from qisograph.ratmat import rat_rank


def test_level_space_dims(graphs, perron_data):
    assert level_space(graphs["three-cycle"], perron_data["three-cycle"], 4).dim == 3
    sp = level_space(graphs["k3"], perron_data["k3"], 2)
    assert sp.dim == 12
    sp0 = level_space(graphs["k3"], perron_data["k3"], 0)
    assert sp0.dim == 3 and set(sp0.gram) == {Fraction(1, 3)}


def test_level_space_dimension_bound(graphs, perron_data):
    for name in ("three-cycle", "k3", "asym4", "cuntz2", "cuntz3"):
        g, pf = graphs[name], perron_data[name]
        m = len(g.edges)
        for k in range(1, 7):
            count = path_counts(g, k)[k]
            assert count == len(enumerate_paths(g, k)) <= m ** k


def test_degree_k_indicators_are_independent(graphs, perron_data):
    """Brute-force dimension oracle: the coordinates of every indicator
    of degree <= k in the level-k basis span a space of dimension
    exactly the number of degree-k paths."""
    for name, kmax in (("k3", 3), ("asym4", 3), ("cuntz2", 4), ("three-cycle", 4)):
        g, pf = graphs[name], perron_data[name]
        cols = []
        for l in range(kmax + 1):
            e = embed(g, pf, l, kmax)
            for j in range(len(e.mat[0])):
                cols.append([e.mat[i][j] for i in range(len(e.mat))])
        rank = rat_rank([list(row) for row in zip(*cols)])
        assert rank == len(enumerate_paths(g, kmax))


def test_embed_identity_and_columns(graphs, perron_data):
    g, pf = graphs["k3"], perron_data["k3"]
    e_same = embed(g, pf, 2, 2)
    assert all(e_same.mat[i][j] == (1 if i == j else 0)
               for i in range(12) for j in range(12))
    e12 = embed(g, pf, 1, 2)
    for j in range(6):
        assert sum(e12.mat[i][j] for i in range(12)) == 2
    g3, pf3 = graphs["three-cycle"], perron_data["three-cycle"]
    e_cyc = embed(g3, pf3, 0, 3)
    for j in range(3):
        assert sum(e_cyc.mat[i][j] for i in range(3)) == 1


def test_embed_gram_isometry_exact(graphs, perron_data):
    for name in ("three-cycle", "k3", "asym4", "cuntz2"):
        g, pf = graphs[name], perron_data[name]
        for l in range(4):
            for k in range(l, 5):
                assert embedding_gram_residual(g, pf, l, k) == 0


def test_embed_composition(graphs, perron_data):
    g, pf = graphs["k3"], perron_data["k3"]
    two_step = embed(g, pf, 1, 3).mat
    via = embed(g, pf, 2, 3).compose(embed(g, pf, 1, 2), pf).mat
    assert two_step == via


def test_embed_prepend_not_isometric_on_asym4(graphs, perron_data):
    g, pf = graphs["asym4"], perron_data["asym4"]
    assert embedding_gram_residual(g, pf, 1, 2, RANGE_PREPEND) > 0


def test_represent_creation(graphs, perron_data):
    g, pf = graphs["k3"], perron_data["k3"]
    e = edge_path(g, "e12")
    m = represent(g, pf, [("s", e)], 1, 3)
    assert m.half_power == 1
    src = enumerate_paths(g, 1)
    tgt = enumerate_paths(g, 2)
    for j, eta in enumerate(src):
        col = [m.mat[i][j] for i in range(len(tgt))]
        if eta.range == e.source:
            composed = path_from_edges(g, e.edges + eta.edges)
            assert col[tgt.index(composed)] == 1 and sum(col) == 1
        else:
            assert all(c == 0 for c in col)


def test_represent_star_cases(graphs, perron_data):
    g, pf = graphs["k3"], perron_data["k3"]
    lam = path_from_edges(g, ("e12", "e21"))
    # lam = eta beta with d(lam) >= d(eta): image is the source vertex
    m = represent(g, pf, [("s*", lam)], 1, 3)
    src = enumerate_paths(g, 1)
    verts = enumerate_paths(g, 0)
    eta = src[src.index(edge_path(g, "e12"))]
    col = [m.mat[i][src.index(eta)] for i in range(3)]
    # rho^{-2/2} = 1/2 is absorbed into the matrix on normalization
    assert m.half_power == 0
    assert col[verts.index(vertex_path(lam.source))] == Fraction(1, 2)
    # same degree, different path: zero
    other = path_from_edges(g, ("e13", "e31"))
    m2 = represent(g, pf, [("s*", lam)], 2, 3)
    col2 = [m2.mat[i][enumerate_paths(g, 2).index(other)] for i in range(3)]
    assert all(c == 0 for c in col2)
    # d(lam) < d(eta), eta = lam beta: image is beta
    eta3 = path_from_edges(g, ("e12", "e21", "e12"))
    m3 = represent(g, pf, [("s*", edge_path(g, "e12"))], 3, 3)
    col3 = [m3.mat[i][enumerate_paths(g, 3).index(eta3)]
            for i in range(12)]
    beta = path_from_edges(g, ("e21", "e12"))
    # value rho^{-1/2} stored as (1/2) * rho^{1/2}
    assert m3.half_power == 1
    assert col3[enumerate_paths(g, 2).index(beta)] == Fraction(1, 2)
    assert sum(col3) == Fraction(1, 2)


def test_represent_composition_property(graphs, perron_data):
    g, pf = graphs["k3"], perron_data["k3"]
    lam, mu = edge_path(g, "e21"), edge_path(g, "e32")   # composable
    left = represent(g, pf, [("s", lam), ("s", mu)], 0, 3)
    joint = represent(g, pf, [("s", path_from_edges(g, ("e21", "e32")))], 0, 3)
    assert left.equals(joint)
    # s(e12) = 1 != 3 = r(e13): the factors never compose, product is zero
    bad = represent(g, pf, [("s", edge_path(g, "e12")), ("s", edge_path(g, "e13"))], 0, 3)
    assert all(x == 0 for row in bad.mat for x in row)


def test_represent_adjoint_matches_star(graphs, perron_data):
    g, pf = graphs["k3"], perron_data["k3"]
    for eid in ("e12", "e23"):
        lam = edge_path(g, eid)
        fwd = represent(g, pf, [("s", lam)], 1, 3)
        assert gram_adjoint(g, pf, fwd).equals(represent(g, pf, [("s*", lam)], 2, 3))


def test_represent_overflow(graphs, perron_data):
    g, pf = graphs["k3"], perron_data["k3"]
    with pytest.raises(TruncationOverflowError):
        represent(g, pf, [("s", edge_path(g, "e12"))], 3, 3)


def test_cuntz_krieger_exact(graphs, perron_data):
    for name in ("three-cycle", "k3", "cuntz2"):
        rep = cuntz_krieger_check(graphs[name], perron_data[name], 3)
        assert rep.exact
    rep4 = cuntz_krieger_check(graphs["three-cycle"], perron_data["three-cycle"], 4)
    assert rep4.exact


def test_dirac_multiplicities(graphs, perron_data):
    tri = dirac(graphs["three-cycle"], perron_data["three-cycle"], 3)
    assert tri.mults == [2, 0, 0, 0]
    trik = dirac(graphs["k3"], perron_data["k3"], 3)
    assert trik.mults == [2, 3, 6, 12]
    assert xi_hat_ranks(trik) == trik.mults
    for name in ("three-cycle", "k3", "asym4", "cuntz2"):
        g, pf = graphs[name], perron_data[name]
        assert multiplicities(g, 0)[0] == len(g.vertices) - 1
        tri = dirac(g, pf, 3)
        assert xi_hat_ranks(tri) == tri.mults
        counts = path_counts(g, 3)
        assert tri.mults[1:] == [counts[q] - counts[q - 1] for q in (1, 2, 3)]


def test_dirac_projection_invariants(graphs, perron_data):
    for name in ("three-cycle", "k3", "cuntz2"):
        tri = dirac(graphs[name], perron_data[name], 3)
        assert projection_invariant_residual(tri) == 0


def test_dirac_matrix_selfadjoint_wrt_gram(graphs, perron_data):
    tri = dirac(graphs["k3"], perron_data["k3"], 3)
    d = tri.dirac_matrix()
    gram = np.diag([float(x) for x in tri.space.gram])
    assert np.linalg.norm(gram @ d - d.T @ gram) < 1e-12


def test_alpha_sequences():
    seq = alpha_sequence(5)
    assert seq[0] == 0 and abs(seq[2] - 2 ** 0.75) < 1e-12
    lin = alpha_sequence(5, "linear")
    assert lin == (0.0, 1.0, 2.0, 3.0, 4.0, 5.0)
    with pytest.raises(ValueError):
        alpha_sequence(5, "power", eps=0.7)


def test_theta_partial_trace_oracle(graphs):
    """Direct-summation oracle against independently recomputed terms."""
    mults = multiplicities(graphs["k3"], 12)
    t, eps = 1.0, 0.25
    got = theta_partial_trace(mults, t, eps, 12)
    oracle = 0.0
    for q in range(13):
        n_q = (2 if q == 0 else 3 * 2 ** (q - 1))
        oracle += math.exp(-t * q ** 1.5) * n_q
    assert abs(got - oracle) < 1e-12
    # successive increments are already below 1e-9 by Q = 12
    assert got - theta_partial_trace(mults, t, eps, 11) < 1e-9


def test_theta_constant_tail_on_cycle(graphs):
    mults = multiplicities(graphs["three-cycle"], 10)
    vals = [theta_partial_trace(mults, 0.7, 0.25, q) for q in range(11)]
    assert all(v == vals[2] for v in vals[2:])


def test_theta_convergence_and_domination(graphs):
    mults = multiplicities(graphs["k3"], 20)
    for t in (0.5, 1.0, 2.0):
        vals = [theta_partial_trace(mults, t, 0.25, q) for q in range(21)]
        assert all(b >= a for a, b in zip(vals, vals[1:]))
        assert vals[-1] - vals[-2] < 1e-9
        dom = theta_dominating_terms(6, t, 0.25, 20)
        for q in range(1, 21):
            assert math.exp(-t * q ** 1.5) * mults[q] <= dom[q - 1] + 1e-15


def test_theta_ratio_test(graphs):
    terms = theta_dominating_terms(6, 1.0, 0.25, 20)
    ratios = [b / a for a, b in zip(terms, terms[1:])]
    assert all(r < 1 for r in ratios[2:])
    roots = [term ** (1.0 / q) for q, term in enumerate(terms, start=1)]
    assert roots[-1] < 1 and roots[-1] < roots[5]


def test_theta_validates_arguments(graphs):
    mults = multiplicities(graphs["k3"], 5)
    with pytest.raises(ValueError):
        theta_partial_trace(mults, -1.0, 0.25, 5)
    with pytest.raises(ValueError):
        theta_partial_trace(mults, 1.0, 0.6, 5)
    with pytest.raises(ValueError):
        theta_partial_trace(mults, 1.0, 0.25, 9)
