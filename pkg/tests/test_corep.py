import numpy as np
import pytest

from qisograph.corep import (
    build_action, build_corep,
    check_comultiplicative, check_density, check_dirac_commutation,
    check_implementation, check_isometry, check_isometry_mixed, check_kms_invariance,
    check_welldefined, evaluate_corep_matrix, isometry_obligation,
    run_identity_suite,
)
from qisograph.graphs import RANGE_PREPEND, edge_path, enumerate_paths, vertex_path
from qisograph.ncpoly import NCPoly, q
from qisograph.providers import fourier_unitary
from qisograph.rewrite import is_zero
from qisograph.verdict import PROVED_ZERO, UNKNOWN


def test_corep_level0_is_magic_unitary(graphs):
    g = graphs["three-cycle"]
    corep = build_corep(g, 0)
    assert len(corep.basis) == 3
    for (i, j), word in corep.entries.items():
        assert word == (q(g.vertices[i], g.vertices[j]),)


def test_corep_level1_entries(graphs):
    g = graphs["k3"]
    corep = build_corep(g, 1)
    assert len(corep.basis) == 6
    eta, lam = corep.basis[0], corep.basis[3]
    word = corep.entries[(0, 3)]
    assert word == (q(eta.range, lam.range), q(eta.source, lam.source))


def test_corep_level2_word_lengths(graphs):
    corep = build_corep(graphs["k3"], 2)
    assert len(corep.basis) == 12
    assert all(len(w) == 4 for w in corep.entries.values())
    # entries are words of self-adjoint generators: star reverses them
    for word in corep.entries.values():
        assert NCPoly.word(word).star() == NCPoly.word(tuple(reversed(word)))


def test_corep_rows_and_columns_collapse(contexts):
    ctx = contexts["k3"]
    basis = ctx.g.vertices
    for i in basis:
        row = NCPoly.zero()
        col = NCPoly.zero()
        for j in basis:
            row = row + NCPoly.gen(q(i, j))
            col = col + NCPoly.gen(q(j, i))
        assert is_zero(row - NCPoly.one(), ctx.rels).kind == PROVED_ZERO
        assert is_zero(col - NCPoly.one(), ctx.rels).kind == PROVED_ZERO


def test_action_image_counts(graphs):
    g = graphs["k3"]
    action = build_action(g)
    for eid, row in action.edge_rows.items():
        assert len(row) == 6
        lam = edge_path(g, eid)
        for fid, word in row:
            f = edge_path(g, fid)
            assert word == (q(f.range, lam.range), q(f.source, lam.source))
    for v, row in action.vertex_rows.items():
        assert len(row) == 3
        assert all(word == (q(w, v),) for w, word in row)


def test_action_consistent_with_classical(contexts):
    # evaluated under the automorphism representation, the action
    # coefficient of edge f in alpha(S_e) is the indicator sigma(e) = f
    ctx = contexts["three-cycle"]
    provider = ctx.providers[0]
    action = build_action(ctx.g)
    from qisograph.graphs import graph_automorphisms
    autos = graph_automorphisms(ctx.g)
    for eid, row in action.edge_rows.items():
        e = ctx.g.edge_by_id[eid]
        for fid, word in row:
            f = ctx.g.edge_by_id[fid]
            values = np.diag(provider.value(NCPoly.word(word)))
            for sigma, val in zip(autos, values):
                expected = 1.0 if (sigma[e.range], sigma[e.source]) == (f.range, f.source) else 0.0
                assert abs(val - expected) < 1e-12


def test_welldefined_explicit_levels(contexts):
    for name in ("three-cycle", "k3"):
        ctx = contexts[name]
        for l, k in ((0, 1), (0, 2), (1, 2)):
            res = check_welldefined(ctx, l, k)
            assert res.passed and res.verdict == PROVED_ZERO
            assert res.residuals["embedding_gram"] == 0
            assert res.residuals["numeric"] < 1e-10


def test_welldefined_negative_control(contexts):
    res = check_welldefined(contexts["asym4"], 0, 1, convention=RANGE_PREPEND)
    assert not res.passed
    assert res.verdict == UNKNOWN
    assert res.residuals["numeric"] > 0.1
    assert res.residuals["embedding_gram"] > 0


def test_isometry_same_degree(contexts):
    for name in ("three-cycle", "k3"):
        ctx = contexts[name]
        for k in (0, 1, 2):
            res = check_isometry(ctx, k)
            assert res.passed, (name, k)


def test_isometry_obligation_shape(contexts):
    ctx = contexts["k3"]
    lam, eta = enumerate_paths(ctx.g, 1)[:2]
    ob = isometry_obligation(ctx, lam, eta)
    assert is_zero(ob, ctx.rels).kind == PROVED_ZERO


def test_isometry_mixed_degrees(contexts):
    ctx = contexts["k3"]
    lam = enumerate_paths(ctx.g, 1)[0]
    for eta in enumerate_paths(ctx.g, 2)[:3]:
        res = check_isometry_mixed(ctx, lam, eta)
        assert res.passed
    v = vertex_path("1")
    assert check_isometry_mixed(ctx, v, lam).passed


def test_comultiplicative(contexts):
    for name in ("three-cycle", "k3"):
        ctx = contexts[name]
        for k in (0, 1, 2):
            assert check_comultiplicative(ctx, k).passed
    with pytest.raises(ValueError):
        check_comultiplicative(contexts["k3"], 3)


def test_density(contexts):
    for name in ("three-cycle", "k3"):
        ctx = contexts[name]
        for lam in enumerate_paths(ctx.g, 1):
            assert check_density(ctx, lam).passed
        for lam in enumerate_paths(ctx.g, 2)[:4]:
            assert check_density(ctx, lam).passed
    with pytest.raises(ValueError):
        check_density(contexts["k3"], vertex_path("1"))


def test_implementation_paper_case(contexts):
    # d(lam) = d(eta) = 1, lam = eta: both sides carry coefficient
    # q[i, s(lam)] on the vertex indicators
    ctx = contexts["k3"]
    lam = edge_path(ctx.g, "e12")
    res = check_implementation(ctx, lam, lam)
    assert res.passed and res.inputs["case"] == "extends"


def test_implementation_all_cases(contexts):
    ctx = contexts["k3"]
    seen = set()
    for lam in enumerate_paths(ctx.g, 1):
        for eta in list(enumerate_paths(ctx.g, 1)) + list(enumerate_paths(ctx.g, 2)):
            res = check_implementation(ctx, lam, eta)
            assert res.passed, (lam.label, eta.label)
            seen.add(res.inputs["case"])
    lam2 = enumerate_paths(ctx.g, 2)[0]
    for eta in enumerate_paths(ctx.g, 1):
        res = check_implementation(ctx, lam2, eta)
        assert res.passed
        seen.add(res.inputs["case"])
    assert seen == {"extends", "incompatible-long", "prefix", "incompatible-short"}


def test_kms_invariance(contexts):
    ctx = contexts["k3"]
    for v in ctx.g.vertices:
        assert check_kms_invariance(ctx, vertex_path(v), vertex_path(v)).passed
    e, f = enumerate_paths(ctx.g, 1)[:2]
    assert check_kms_invariance(ctx, e, e).passed
    assert check_kms_invariance(ctx, e, f).passed
    assert check_kms_invariance(ctx, e, enumerate_paths(ctx.g, 2)[0]).passed


def test_kms_vertex_is_weighted_schema(contexts):
    # (phi (x) id) alpha(p_v) - phi(p_v) 1 is literally the weighted sum
    ctx = contexts["k3"]
    v = "2"
    ob = NCPoly.zero()
    for k in ctx.g.vertices:
        ob = ob + NCPoly.gen(q(k, v)).scale(ctx.pf.x_of(k))
    ob = ob - NCPoly.one().scale(ctx.pf.x_of(v))
    assert is_zero(ob, ctx.rels).kind == PROVED_ZERO


def test_dirac_commutation(contexts):
    for name in ("three-cycle", "k3"):
        res = check_dirac_commutation(contexts[name], 3)
        assert res.passed
        assert res.residuals["commutator"] < 1e-10
        assert res.residuals["gram_unitarity"] < 1e-10


def test_dirac_commutation_negative_control(contexts):
    ctx = contexts["k3"]
    res = check_dirac_commutation(ctx, 2, scalar_override=fourier_unitary(3))
    assert not res.passed
    assert res.residuals["commutator"] > 1e-3


def test_evaluated_corep_gram_unitary(contexts):
    from qisograph.hilbert import level_space
    for name in ("three-cycle", "k3", "asym4"):
        ctx = contexts[name]
        provider = ctx.providers[0]
        for k in (1, 2):
            mat = evaluate_corep_matrix(ctx, k, provider)
            diag = [float(x) for x in level_space(ctx.g, ctx.pf, k).gram]
            gram = np.diag(np.kron(diag, np.ones(provider.dim)))
            assert np.linalg.norm(mat.conj().T @ gram @ mat - gram, 2) < 1e-10


def test_suite_all_pass(contexts):
    # every aut-plus test graph; k3 runs in the acceptance gate
    for name in ("three-cycle", "two-cycle", "asym4"):
        results = run_identity_suite(contexts[name], k_max=2, n_cap=3)
        assert all(r.passed for r in results)
        names = {r.name for r in results}
        assert names == {"welldefined", "isometry", "isometry-mixed", "comultiplicative",
                         "density", "implementation", "kms-invariance", "dirac-commutation"}
