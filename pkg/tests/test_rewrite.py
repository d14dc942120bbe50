
from fractions import Fraction

from qisograph.ncpoly import NCPoly, q, u, ustar
from qisograph.providers import classical_rep
from qisograph.relations import free_unitary_relations, magic_relations
from qisograph.rewrite import ReductionTrace, is_zero, normal_form, reduce_word
from qisograph.verdict import PROVED_ZERO, UNKNOWN

IDS = ("1", "2", "3")


def test_magic_monomial_rules():
    rels = magic_relations(IDS)
    gen = q("1", "2")
    assert reduce_word((gen, gen), rels) == (gen,)
    assert reduce_word((q("1", "1"), q("1", "2")), rels) is None     # row orthogonality
    assert reduce_word((q("1", "1"), q("2", "1")), rels) is None     # column orthogonality
    assert reduce_word((q("1", "2"), q("2", "3")), rels) == (q("1", "2"), q("2", "3"))


def test_row_sum_collapse(qaut_rels):
    rels = qaut_rels["k3"]
    p = NCPoly.zero()
    for k in IDS:
        p = p + NCPoly.gen(q("1", k)) * NCPoly.gen(q("2", "3"))
    p = p - NCPoly.gen(q("2", "3"))
    assert is_zero(p, rels).kind == PROVED_ZERO


def test_orthogonality_plus_idempotency(qaut_rels):
    rels = qaut_rels["k3"]
    p = (NCPoly.gen(q("1", "2")) * NCPoly.gen(q("1", "3"))
         + NCPoly.gen(q("1", "2")) * NCPoly.gen(q("1", "2"))
         - NCPoly.gen(q("1", "2")))
    assert is_zero(p, rels).kind == PROVED_ZERO


def test_inner_product_sum_reduces(graphs, perron_data, qaut_rels):
    # sum_f x_{s(f)} Q[f,e]* Q[f,e] = x_{s(e)} on the complete graph
    g, pf, rels = graphs["k3"], perron_data["k3"], qaut_rels["k3"]
    from qisograph.graphs import enumerate_paths
    e = enumerate_paths(g, 1)[0]
    ob = NCPoly.zero()
    for f in enumerate_paths(g, 1):
        w = NCPoly.word((q(f.range, e.range), q(f.source, e.source)))
        ob = ob + (w.star() * w).scale(pf.x_of(f.source))
    ob = ob - NCPoly.one().scale(pf.x_of(e.source))
    tr = ReductionTrace()
    assert is_zero(ob, rels, tr).kind == PROVED_ZERO
    assert tr.count > 0 and len(tr.digest()) == 16
    # numeric oracle: the same element vanishes under the automorphism rep
    assert classical_rep(g, rels).norm(ob) < 1e-12


def test_generator_is_unknown(qaut_rels):
    assert is_zero(NCPoly.gen(q("1", "1")), qaut_rels["k3"]).kind == UNKNOWN


def test_weighted_schema():
    # synthetic non-uniform weights exercise the weighted collapse
    from qisograph.relations import RelationSet, SumSchema
    weights = (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4))
    base = magic_relations(IDS)
    rels = RelationSet(
        "weighted", base.gen_kind, base.universe, base.pair_rules, base.rule_tags,
        base.sum_schemas + (SumSchema("weighted-col-sum", "row", weights, weighted=True),),
        ())
    p = NCPoly.zero()
    for idx, k in enumerate(IDS):
        p = p + NCPoly.gen(q(k, "2")).scale(weights[idx])
    p = p - NCPoly.one().scale(weights[1])
    assert is_zero(p, rels).kind == PROVED_ZERO


def test_free_unitary_schemas():
    rels = free_unitary_relations(("1", "2"))
    diag = NCPoly.zero()
    for k in ("1", "2"):
        diag = diag + NCPoly.gen(ustar(k, "1")) * NCPoly.gen(u(k, "1"))
    assert is_zero(diag - NCPoly.one(), rels).kind == PROVED_ZERO
    off = NCPoly.zero()
    for k in ("1", "2"):
        off = off + NCPoly.gen(ustar(k, "1")) * NCPoly.gen(u(k, "2"))
    assert is_zero(off, rels).kind == PROVED_ZERO
    # conjugate-unitary counterpart
    conj = NCPoly.zero()
    for k in ("1", "2"):
        conj = conj + NCPoly.gen(u(k, "1")) * NCPoly.gen(ustar(k, "2"))
    assert is_zero(conj, rels).kind == PROVED_ZERO
    # no idempotency for free unitaries
    w = NCPoly.gen(u("1", "1")) * NCPoly.gen(u("1", "1"))
    assert normal_form(w, rels) == w


def test_vanishing_generators_drive_reductions(graphs, qaut_rels):
    rels = qaut_rels["asym4"]
    assert len(rels.vanishing) == 12       # the graph is quantum-rigid
    assert is_zero(NCPoly.gen(q("3", "1")), rels).kind == PROVED_ZERO
    assert is_zero(NCPoly.gen(q("1", "1")), rels).kind == UNKNOWN
    # diagonal entries collapse to the unit: q[1,1] - 1 = -(sum of vanished row)
    p = NCPoly.gen(q("1", "1")) - NCPoly.one()
    assert is_zero(p, rels).kind == PROVED_ZERO


def test_engine_soundness_random(graphs, perron_data):
    """200 random polynomials per relation set: ProvedZero implies
    numerically zero under every provider; normal form idempotent;
    star-closure."""
    from soundness import run_soundness_battery
    run_soundness_battery(graphs, perron_data)


def test_edge_rule_orientations_sound_under_classical(graphs, qaut_rels):
    """Every installed edge-compatibility rule evaluates to zero under
    the automorphism representation."""
    for name in ("three-cycle", "k3", "asym4"):
        rels = qaut_rels[name]
        provider = classical_rep(graphs[name])
        for (g1, g2), rhs in rels.pair_rules.items():
            if rels.rule_tags[(g1, g2)] != "edge-zero":
                continue
            assert rhs is None
            assert provider.norm(NCPoly.word((g1, g2))) < 1e-12


def test_trace_reports_applied_rules(qaut_rels):
    rels = qaut_rels["k3"]
    tr = ReductionTrace()
    p = NCPoly.word((q("1", "2"), q("1", "2")))
    normal_form(p, rels, tr)
    assert tr.counts().get("mono:idem") == 1


def test_comultiply_of_zero_word_reduces_legwise(qaut_rels):
    # Delta(q11 q12) expands to sum_{k,l} q1k q1l (x) qk1 ql2; row
    # orthogonality on the legs kills every pair
    from qisograph.ncpoly import comultiply
    from qisograph.rewrite import tensor_reduce
    rels = qaut_rels["k3"]
    t = comultiply(NCPoly.word((q("1", "1"), q("1", "2"))), rels.universe)
    assert t.support_size == 9
    assert tensor_reduce(t, rels).is_zero()
