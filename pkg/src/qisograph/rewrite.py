"""Normal forms for noncommutative polynomials modulo a relation set.

Reduction alternates two passes:

* a monomial pass applying the two-letter rewrite rules leftmost-first
  inside every word (these rules shorten words, so it terminates);

* a collapse pass detecting full-index sums.  A group of words sharing
  a prefix and a suffix and differing in one generator slot collapses to
  prefix*suffix once the slot runs over the whole index set; indices
  missing from the group are admitted when the completed word already
  rewrites to zero by monomial rules alone, which is how sums over
  edges become sums over all vertex pairs.

Several sound collapses can compete and only some telescope an identity
to zero, so zero-proving is a bounded depth-first search over collapse
choices (largest groups and innermost slots first); every explored path
applies only sound rewrites, hence an empty form reached on any path
certifies zero.  The reported normal form is the monomial fixed point,
replaced by zero when the search certifies it; collapse results are
never reported otherwise, because distinct sound collapse paths can
rewrite a word to different representatives of the same element.  A
nonzero normal form certifies nothing: the system is not proved
confluent.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction

from .ncpoly import Generator, NCPoly, TensorPoly, Word, word_key
from .relations import RelationSet, SumSchema, UnitarySchema
from .verdict import PROVED_ZERO, UNKNOWN, Verdict

#: node budget for the zero-certificate search
SEARCH_LIMIT = 3000


@dataclass
class ReductionTrace:
    """Ordered log of applied rules; digests identify a reduction path."""

    events: list[str] = field(default_factory=list)

    def add(self, tag: str):
        self.events.append(tag)

    @property
    def count(self) -> int:
        return len(self.events)

    def digest(self) -> str:
        h = hashlib.sha256("\n".join(self.events).encode()).hexdigest()
        return h[:16]

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for e in self.events:
            out[e] = out.get(e, 0) + 1
        return out


def reduce_word(word: Word, rels: RelationSet, trace: ReductionTrace | None = None):
    """Monomial fixed point of *word*; None means it rewrote to zero."""
    if rels.vanishing and any(g in rels.vanishing for g in word):
        if trace is not None:
            trace.add("mono:vanishing-generator")
        return None
    rules = rels.pair_rules
    w = word
    i = 0
    while i + 1 < len(w):
        hit = rules.get((w[i], w[i + 1]), "miss")
        if hit == "miss":
            i += 1
            continue
        if trace is not None:
            trace.add("mono:" + rels.rule_tags[(w[i], w[i + 1])])
        if hit is None:
            return None
        w = w[:i] + hit + w[i + 2:]
        i = max(i - 1, 0)
    return w


def _monomial_pass(p: NCPoly, rels: RelationSet, trace: ReductionTrace | None) -> NCPoly:
    out: dict[Word, Fraction] = {}
    for w, c in p.terms().items():
        r = reduce_word(w, rels, trace)
        if r is not None:
            out[r] = out.get(r, Fraction(0)) + c
    return NCPoly(out)


def _gen_axis(gen: Generator, axis: str) -> str:
    return gen.row if axis == "row" else gen.col


def _make_gen(template: Generator, axis: str, idx: str) -> Generator:
    if axis == "row":
        return Generator(template.kind, idx, template.col)
    return Generator(template.kind, template.row, idx)


@dataclass(frozen=True)
class _Collapse:
    tag: str
    removed: tuple[tuple[Word, Fraction], ...]
    added_word: Word
    added_coeff: Fraction

    def apply(self, p: NCPoly) -> NCPoly:
        terms = p.terms()
        for w, c in self.removed:
            terms[w] = terms.get(w, Fraction(0)) - c
        terms[self.added_word] = terms.get(self.added_word, Fraction(0)) + self.added_coeff
        return NCPoly(terms)


def _sum_schema_candidates(p: NCPoly, rels: RelationSet, schema: SumSchema, out: list):
    universe = rels.universe
    terms = p.terms()
    groups: dict[tuple, dict[str, tuple[Fraction, Generator]]] = {}
    for w in terms:
        for t, gen in enumerate(w):
            if gen.kind != rels.gen_kind:
                continue
            var = _gen_axis(gen, schema.varying_axis)
            fixed_axis = "col" if schema.varying_axis == "row" else "row"
            key = (w[:t], w[t + 1:], _gen_axis(gen, fixed_axis))
            groups.setdefault(key, {})[var] = (terms[w], gen)
    for (prefix, suffix, fixed), members in groups.items():
        first_idx = next(iter(members))
        c0, gen0 = members[first_idx]
        if schema.weighted:
            base = c0 / rels.weight_of(schema, first_idx)
            if any(c != base * rels.weight_of(schema, idx)
                   for idx, (c, _) in members.items()):
                continue
        else:
            base = c0
            if any(c != base for _, (c, _) in members.items()):
                continue
        if base == 0:
            continue
        missing = [idx for idx in universe if idx not in members]
        if any(reduce_word(prefix + (_make_gen(gen0, schema.varying_axis, m),) + suffix,
                           rels) is not None
               for m in missing):
            continue
        value = base * rels.weight_of(schema, fixed) if schema.weighted else base
        removed = tuple(sorted(((prefix + (gen,) + suffix), c)
                               for _, (c, gen) in members.items()))
        sort_key = (-len(members), -len(prefix), word_key(prefix), word_key(suffix),
                    schema.tag, fixed)
        out.append((sort_key, _Collapse("collapse:" + schema.tag, removed,
                                        prefix + suffix, value)))


def _unitary_schema_candidates(p: NCPoly, rels: RelationSet, schema: UnitarySchema,
                               out: list):
    terms = p.terms()
    universe = rels.universe
    kind1, kind2 = schema.kinds
    ax1, ax2 = schema.shared_axes
    groups: dict[tuple, dict[str, Fraction]] = {}
    for w in terms:
        for t in range(len(w) - 1):
            g1, g2 = w[t], w[t + 1]
            if g1.kind != kind1 or g2.kind != kind2:
                continue
            if _gen_axis(g1, ax1) != _gen_axis(g2, ax2):
                continue
            other1 = "col" if ax1 == "row" else "row"
            other2 = "col" if ax2 == "row" else "row"
            key = (w[:t], w[t + 2:], _gen_axis(g1, other1), _gen_axis(g2, other2))
            groups.setdefault(key, {})[_gen_axis(g1, ax1)] = terms[w]
    for (prefix, suffix, i, j), members in groups.items():
        if set(members) != set(universe):
            continue  # u-words have no zero rules, so only full sums collapse
        coeffs = set(members.values())
        if len(coeffs) != 1:
            continue
        base = coeffs.pop()
        if base == 0:
            continue
        removed = []
        for k in members:
            g1 = Generator(kind1, k, i) if ax1 == "row" else Generator(kind1, i, k)
            g2 = Generator(kind2, k, j) if ax2 == "row" else Generator(kind2, j, k)
            removed.append((prefix + (g1, g2) + suffix, base))
        coeff = base if i == j else Fraction(0)
        sort_key = (-len(members), -len(prefix), word_key(prefix), word_key(suffix),
                    schema.tag, i, j)
        out.append((sort_key, _Collapse("collapse:" + schema.tag, tuple(sorted(removed)),
                                        prefix + suffix, coeff)))


def _collapse_candidates(p: NCPoly, rels: RelationSet) -> list[_Collapse]:
    """All applicable collapses, largest groups and innermost slots first."""
    out: list = []
    for schema in rels.sum_schemas:
        _sum_schema_candidates(p, rels, schema, out)
    for schema in rels.unitary_schemas:
        _unitary_schema_candidates(p, rels, schema, out)
    out.sort(key=lambda t: t[0])
    return [c for _, c in out]


def _search_zero(p: NCPoly, rels: RelationSet, limit: int):
    """Depth-first search over collapse choices for an empty form;
    returns the applied collapse tags on success, None on failure."""
    start = _monomial_pass(p, rels, None)
    if start.is_zero():
        return ()
    seen = {start}
    stack = [(start, ())]
    budget = limit
    while stack and budget > 0:
        cur, tags = stack.pop()
        budget -= 1
        for collapse in reversed(_collapse_candidates(cur, rels)):
            child = _monomial_pass(collapse.apply(cur), rels, None)
            if child.is_zero():
                return tags + (collapse.tag,)
            if child not in seen:
                seen.add(child)
                stack.append((child, tags + (collapse.tag,)))
    return None


def normal_form(p: NCPoly, rels: RelationSet, trace: ReductionTrace | None = None,
                search_limit: int = SEARCH_LIMIT) -> NCPoly:
    """Deterministic reduced form, idempotent and compatible with the
    formal adjoint.

    The visible form is the monomial fixed point (that layer is
    confluent for these rule sets); collapses are applied inside the
    zero-certificate search, whose sound paths may rewrite a word to
    either of two distinct representatives of the same element, so
    their result is only reported when it is the zero certificate.
    """
    cur = _monomial_pass(p, rels, trace)
    if cur.is_zero():
        return cur
    winning = _search_zero(p, rels, search_limit)
    if winning is not None:
        if trace is not None:
            for tag in winning:
                trace.add(tag)
            trace.add("search:zero-certificate")
        return NCPoly.zero()
    return cur


def is_zero(p: NCPoly, rels: RelationSet, trace: ReductionTrace | None = None,
            search_limit: int = SEARCH_LIMIT) -> Verdict:
    nf = normal_form(p, rels, trace, search_limit)
    if nf.is_zero():
        return Verdict(PROVED_ZERO)
    return Verdict(UNKNOWN, detail=f"normal form has {nf.support_size} terms")


def tensor_reduce(t: TensorPoly, rels: RelationSet) -> TensorPoly:
    """Leg-wise monomial reduction of a tensor-square element."""
    out: dict[tuple[Word, Word], Fraction] = {}
    for (w1, w2), c in t.items():
        r1 = reduce_word(w1, rels)
        if r1 is None:
            continue
        r2 = reduce_word(w2, rels)
        if r2 is None:
            continue
        key = (r1, r2)
        out[key] = out.get(key, Fraction(0)) + c
    return TensorPoly(out)
