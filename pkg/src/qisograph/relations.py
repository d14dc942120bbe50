"""Relation sets for the generator families: magic-unitary rules,
graph-derived edge-compatibility rules, free-unitary relations, and the
weighted Perron sum schema.

Monomial rules all have two-letter left-hand sides and rewrite to a
word (possibly empty, meaning the unit) or to zero; they are closed
under the formal adjoint.  Full-index sums cannot be oriented as
terminating word rules, so they live as sum schemas consumed by a
polynomial-level collapse pass in the rewriter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import DirectedGraph, graph_automorphisms
from .ncpoly import (
    FORMAL_UNITARY, FORMAL_UNITARY_STAR, Generator, NCPoly, QKIND, UKIND, USTAR, q,
)

#: sentinel RHS meaning the monomial rewrites to zero
ZERO = None

PairRule = tuple[Generator, Generator]


@dataclass(frozen=True)
class SumSchema:
    """Single-generator full-index sum: over the varying axis of a
    q-generator, sum_k (weight_k * g) collapses to value * unit."""

    tag: str
    varying_axis: str                      # "row" or "col"
    weights: tuple[Fraction, ...] | None   # indexed like the universe; None = all ones
    # value for weighted schemas is the weight at the fixed index; for
    # plain row/column sums it is 1.
    weighted: bool = False
    provenance: str = "axiom"


@dataclass(frozen=True)
class UnitarySchema:
    """Adjacent-pair full-index sum encoding unitarity of u and u-bar:
    sum_k g1 g2 (sharing index k on the stated axes) = delta_{ij}."""

    tag: str
    kinds: tuple[str, str]
    shared_axes: tuple[str, str]           # axis of the shared index in each factor


UNITARY_SCHEMAS = (
    UnitarySchema("u-star-u-rows", (USTAR, UKIND), ("row", "row")),
    UnitarySchema("u-u-star-cols", (UKIND, USTAR), ("col", "col")),
    UnitarySchema("u-u-star-rows", (UKIND, USTAR), ("row", "row")),
    UnitarySchema("u-star-u-cols", (USTAR, UKIND), ("col", "col")),
)


@dataclass(frozen=True)
class RelationSet:
    name: str
    gen_kind: str                          # "q" or "u"
    universe: tuple[str, ...]
    pair_rules: dict[PairRule, tuple[Generator, ...] | None]
    rule_tags: dict[PairRule, str]
    sum_schemas: tuple[SumSchema, ...]
    unitary_schemas: tuple[UnitarySchema, ...]
    linear_relations: tuple[NCPoly, ...] = ()
    events: tuple[dict, ...] = ()
    has_formal_unitary: bool = False
    #: generators proved zero by unit-insertion closure (see below)
    vanishing: frozenset[Generator] = frozenset()

    def weight_of(self, schema: SumSchema, idx: str) -> Fraction:
        if schema.weights is None:
            return Fraction(1)
        return schema.weights[self.universe.index(idx)]


def _star_pair(rule: PairRule) -> PairRule:
    from .ncpoly import adjoint_generator
    g1, g2 = rule
    return (adjoint_generator(g2), adjoint_generator(g1))


def _magic_pair_rules(ids: tuple[str, ...]):
    """Idempotency, row orthogonality, column orthogonality."""
    rules: dict[PairRule, tuple[Generator, ...] | None] = {}
    tags: dict[PairRule, str] = {}
    for a in ids:
        for b in ids:
            gen = q(a, b)
            rules[(gen, gen)] = (gen,)
            tags[(gen, gen)] = "idem"
            for c in ids:
                if c != b:
                    rules[(q(a, b), q(a, c))] = ZERO
                    tags[(q(a, b), q(a, c))] = "row-orth"
                if c != a:
                    rules[(q(a, b), q(c, b))] = ZERO
                    tags[(q(a, b), q(c, b))] = "col-orth"
    return rules, tags


def magic_relations(ids, name: str = "magic") -> RelationSet:
    """Relations of a magic unitary of order len(ids): entries are
    self-adjoint idempotents, rows and columns sum to the unit."""
    ids = tuple(ids)
    rules, tags = _magic_pair_rules(ids)
    schemas = (
        SumSchema("row-sum", "col", None),
        SumSchema("col-sum", "row", None),
    )
    return RelationSet(name, QKIND, ids, rules, tags, schemas, ())


def _edge_rule_candidates(g: DirectedGraph, reading: str):
    """Zero rules q[a,b] q[c,d] -> 0 from the edge-compatibility
    relations, generated under one reading of the non-edge pair.

    The row pair and the column pair of the two-letter word are both
    read in the same role order; "rs" reads a pair (x, y) as an edge
    with r(e)=x, s(e)=y, and "sr" reads it with s(e)=x, r(e)=y.
    """
    rs = g.range_source_pairs
    ids = g.vertices

    def is_edge(x, y):
        return ((x, y) in rs) if reading == "rs" else ((y, x) in rs)

    out = []
    for a in ids:
        for c in ids:
            for b in ids:
                for d in ids:
                    if a == c or b == d:
                        continue  # covered by orthogonality rules
                    if is_edge(a, c) != is_edge(b, d):
                        out.append((q(a, b), q(c, d)))
    return out


def _family_sound_classically(g: DirectedGraph, rules) -> tuple[bool, str | None]:
    """Evaluate every candidate word under the automorphism
    representation q[i,j] -> diag_sigma(delta_{i, sigma(j)}); a nonzero
    value disproves the family."""
    autos = graph_automorphisms(g)
    for g1, g2 in rules:
        for sigma in autos:
            if sigma[g1.col] == g1.row and sigma[g2.col] == g2.row:
                witness = ",".join(f"{v}->{sigma[v]}" for v in g.vertices)
                return False, f"{g1}{g2} nonzero under automorphism ({witness})"
    return True, None


def _vanishing_closure(ids, rules, vanishing: set[Generator]) -> int:
    """Derive single generators that the relations force to zero.

    If for some fixed index r every completed two-letter word
    g*q[r,w] (w over the whole index set) is already zero, then
    g = g * sum_w q[r,w] = 0; same with the column axis and with
    left-side insertion.  Iterated to a fixed point: each new vanishing
    generator zeroes more completed words.  Standard consequence: for
    rigid enough graphs many q[i,j] vanish outright, and the identity
    suite needs exactly these vanishings to telescope.
    """

    def pair_zero(g1: Generator, g2: Generator) -> bool:
        if g1 in vanishing or g2 in vanishing:
            return True
        return rules.get((g1, g2), "miss") is None

    def annihilated(gen: Generator) -> bool:
        for r in ids:
            if all(pair_zero(gen, q(r, w)) for w in ids):
                return True
            if all(pair_zero(gen, q(w, r)) for w in ids):
                return True
            if all(pair_zero(q(r, w), gen) for w in ids):
                return True
            if all(pair_zero(q(w, r), gen) for w in ids):
                return True
        return False

    added = 0
    changed = True
    while changed:
        changed = False
        for i in ids:
            for j in ids:
                gen = q(i, j)
                if gen in vanishing:
                    continue
                if annihilated(gen):
                    vanishing.add(gen)
                    added += 1
                    changed = True
    return added


def qaut_relations(g: DirectedGraph, pf=None, name: str | None = None) -> RelationSet:
    """Relation set of the quantum automorphism algebra of *g*.

    Magic-unitary rules over the vertex set, the edge-compatibility zero
    rules (both readings of the non-edge index pair are installed and a
    reading is dropped for this graph if it fails the classical check),
    the adjacency commutation linear relations, and, when exact Perron
    data is supplied, the weighted sum schema
    sum_k x_k q[k,j] = x_j * 1 (an invariance theorem, not an axiom).
    """
    from .graphs import AUT_PLUS, validate
    report = validate(g, AUT_PLUS)
    if not report.passed:
        failed = [c.name for c in report.checks if not c.passed and c.name in AUT_PLUS.required()]
        raise ValueError(f"graph {g.name} fails aut-plus validation: {', '.join(failed)}")

    ids = g.vertices
    rules, tags = _magic_pair_rules(ids)
    events = []
    for reading in ("sr", "rs"):
        family = _edge_rule_candidates(g, reading)
        ok, witness = _family_sound_classically(g, family)
        if ok:
            added = 0
            for rule in family:
                if rule not in rules:
                    rules[rule] = ZERO
                    tags[rule] = "edge-zero"
                    added += 1
            events.append({"family": f"edge-zero[{reading}]", "action": "installed",
                           "rules": added})
        else:
            events.append({"family": f"edge-zero[{reading}]", "action": "dropped",
                           "reason": witness})

    # adjacency commutation UA = AU, stored for provider validation
    from .graphs import adjacency_matrix
    a = adjacency_matrix(g)
    linear = []
    for i, vi in enumerate(ids):
        for j, vj in enumerate(ids):
            p = NCPoly.zero()
            for k, vk in enumerate(ids):
                if a[i][k]:
                    p = p + NCPoly.gen(q(vk, vj)).scale(a[i][k])
                if a[k][j]:
                    p = p - NCPoly.gen(q(vi, vk)).scale(a[k][j])
            if not p.is_zero():
                linear.append(p)

    schemas = [
        SumSchema("row-sum", "col", None),
        SumSchema("col-sum", "row", None),
    ]
    if pf is not None and pf.exact:
        weights = tuple(pf.exact_x[pf.vertices.index(v)] for v in ids)
        schemas.append(SumSchema("weighted-col-sum", "row", weights, weighted=True,
                                 provenance="derived-from-paper-theorem"))
    elif pf is not None:
        events.append({"family": "weighted-col-sum", "action": "disabled",
                       "reason": "Perron data not exact; numeric checks only"})

    vanishing: set[Generator] = set()
    derived = _vanishing_closure(ids, rules, vanishing)
    if derived:
        autos = graph_automorphisms(g)
        for gen in vanishing:
            for sigma in autos:
                if sigma[gen.col] == gen.row:
                    raise ValueError(
                        f"derived vanishing {gen} contradicts automorphism on {g.name}")
        events.append({"family": "vanishing-generators", "action": "derived",
                       "generators": sorted(str(v) for v in vanishing)})

    return RelationSet(name or f"qaut({g.name})", QKIND, ids, rules, tags,
                       tuple(schemas), (), tuple(linear), tuple(events),
                       vanishing=frozenset(vanishing))


def free_unitary_relations(ids, name: str = "free-unitary") -> RelationSet:
    """Universal relations making (u[i,j]) and its entrywise adjoint
    unitary; there are no monomial rules, only the four sum schemas."""
    ids = tuple(ids)
    return RelationSet(name, UKIND, ids, {}, {}, (), UNITARY_SCHEMAS)


def with_formal_unitary(rels: RelationSet) -> RelationSet:
    """Adjoin one formal unitary w with w w* = w* w = 1."""
    rules = dict(rels.pair_rules)
    tags = dict(rels.rule_tags)
    rules[(FORMAL_UNITARY, FORMAL_UNITARY_STAR)] = ()
    rules[(FORMAL_UNITARY_STAR, FORMAL_UNITARY)] = ()
    tags[(FORMAL_UNITARY, FORMAL_UNITARY_STAR)] = "w-unitary"
    tags[(FORMAL_UNITARY_STAR, FORMAL_UNITARY)] = "w-unitary"
    return RelationSet(rels.name + "+w", rels.gen_kind, rels.universe, rules, tags,
                       rels.sum_schemas, rels.unitary_schemas, rels.linear_relations,
                       rels.events, has_formal_unitary=True)
