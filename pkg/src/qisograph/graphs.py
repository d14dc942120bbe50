"""Finite directed graphs with range/source maps, path words, and
hypothesis validation.

Vertices and edges carry string ids.  An edge is stored as an
(id, range, source) triple and points from its source vertex to its
range vertex.  A degree-k path is a word of k composable edges; the
degree-0 paths are the vertices themselves, so every basis object
downstream (cylinder sets, level spaces, corepresentation matrices) is
indexed uniformly by path words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache


class GraphFormatError(ValueError):
    """Raised on malformed graph files; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NonComposableError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    id: str
    range: str
    source: str


@dataclass(frozen=True)
class DirectedGraph:
    name: str
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        seen_v = set()
        for v in self.vertices:
            if v in seen_v:
                raise ValueError(f"duplicate vertex id {v!r}")
            seen_v.add(v)
        seen_e = set()
        for e in self.edges:
            if e.id in seen_e:
                raise ValueError(f"duplicate edge id {e.id!r}")
            seen_e.add(e.id)
            for v in (e.range, e.source):
                if v not in seen_v:
                    raise ValueError(f"edge {e.id!r} references undeclared vertex {v!r}")

    @cached_property
    def edge_by_id(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges, key=lambda e: e.id))

    @cached_property
    def edges_into(self) -> dict[str, tuple[Edge, ...]]:
        """Edges e with r(e) = v, in edge-id order."""
        out = {v: [] for v in self.vertices}
        for e in self.sorted_edges:
            out[e.range].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def edges_out_of(self) -> dict[str, tuple[Edge, ...]]:
        """Edges e with s(e) = v, in edge-id order."""
        out = {v: [] for v in self.vertices}
        for e in self.sorted_edges:
            out[e.source].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def range_source_pairs(self) -> frozenset[tuple[str, str]]:
        """The set of (r(e), s(e)) pairs."""
        return frozenset((e.range, e.source) for e in self.edges)

    def range_of(self, edge_id: str) -> str:
        return self.edge_by_id[edge_id].range

    def source_of(self, edge_id: str) -> str:
        return self.edge_by_id[edge_id].source


def parse_graph(text: str) -> DirectedGraph:
    """Parse the graph file format.

    Lines: ``graph <name>``, ``v <id>``, ``e <id> <range> <source>``;
    ``#`` starts a comment.  The edge points from its source to its
    range.
    """
    name = None
    vertices: list[str] = []
    edges: list[Edge] = []
    vset: set[str] = set()
    eset: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "graph":
            if len(parts) != 2:
                raise GraphFormatError("expected 'graph <name>'", lineno)
            if name is not None:
                raise GraphFormatError("duplicate 'graph' line", lineno)
            name = parts[1]
        elif kind == "v":
            if len(parts) != 2:
                raise GraphFormatError("expected 'v <id>'", lineno)
            if parts[1] in vset:
                raise GraphFormatError(f"duplicate vertex id {parts[1]!r}", lineno)
            vset.add(parts[1])
            vertices.append(parts[1])
        elif kind == "e":
            if len(parts) != 4:
                raise GraphFormatError("expected 'e <id> <range> <source>'", lineno)
            eid, rng, src = parts[1], parts[2], parts[3]
            if eid in eset:
                raise GraphFormatError(f"duplicate edge id {eid!r}", lineno)
            if rng not in vset:
                raise GraphFormatError(f"edge {eid!r} references undeclared vertex {rng!r}", lineno)
            if src not in vset:
                raise GraphFormatError(f"edge {eid!r} references undeclared vertex {src!r}", lineno)
            eset.add(eid)
            edges.append(Edge(eid, rng, src))
        else:
            raise GraphFormatError(f"unknown directive {kind!r}", lineno)
    if name is None:
        raise GraphFormatError("missing 'graph <name>' line", 1)
    return DirectedGraph(name, tuple(vertices), tuple(edges))


# ---------------------------------------------------------------------------
# validation

@dataclass(frozen=True)
class ValidationProfile:
    name: str
    strongly_connected: bool = False
    no_loops: bool = False
    no_multiple_edges: bool = False
    no_sources: bool = False

    def required(self) -> tuple[str, ...]:
        return tuple(
            h for h in ("strongly-connected", "no-loops", "no-multiple-edges", "no-sources")
            if getattr(self, h.replace("-", "_"))
        )


#: All four hypotheses; needed for the quantum automorphism relations.
AUT_PLUS = ValidationProfile(
    "aut-plus",
    strongly_connected=True, no_loops=True, no_multiple_edges=True, no_sources=True,
)

#: Only strong connectivity and sourcelessness; enough for the path-space triple.
SPECTRAL_TRIPLE = ValidationProfile(
    "spectral-triple", strongly_connected=True, no_sources=True,
)


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class ValidationReport:
    graph: str
    profile: str
    checks: tuple[HypothesisCheck, ...]
    passed: bool

    def check(self, name: str) -> HypothesisCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _reachable_from(g: DirectedGraph, start: str) -> set[str]:
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for e in g.edges_out_of[v]:
            if e.range not in seen:
                seen.add(e.range)
                frontier.append(e.range)
    return seen


def is_strongly_connected(g: DirectedGraph) -> tuple[bool, str | None]:
    for v in g.vertices:
        reach = _reachable_from(g, v)
        for w in g.vertices:
            if w not in reach:
                return False, f"no path from {v} to {w}"
    return True, None


def validate(g: DirectedGraph, profile: ValidationProfile) -> ValidationReport:
    """Check each hypothesis of *profile*, reporting a witness on failure."""
    checks = []

    ok, witness = is_strongly_connected(g)
    checks.append(HypothesisCheck("strongly-connected", ok, witness))

    loop = next((e for e in g.sorted_edges if e.range == e.source), None)
    checks.append(HypothesisCheck("no-loops", loop is None, loop.id if loop else None))

    pair_seen: dict[tuple[str, str], str] = {}
    dup = None
    for e in g.sorted_edges:
        key = (e.range, e.source)
        if key in pair_seen:
            dup = f"edges {pair_seen[key]} and {e.id} both join {e.source} to {e.range}"
            break
        pair_seen[key] = e.id
    checks.append(HypothesisCheck("no-multiple-edges", dup is None, dup))

    # a source is a vertex receiving no edge; it breaks the Cuntz-Krieger sum
    src = next((v for v in g.vertices if not g.edges_into[v]), None)
    checks.append(HypothesisCheck("no-sources", src is None, src))

    required = set(profile.required())
    passed = all(c.passed for c in checks if c.name in required)
    return ValidationReport(g.name, profile.name, tuple(checks), passed)


def adjacency_matrix(g: DirectedGraph) -> list[list[int]]:
    """A[v][w] counts edges with r(e) = v and s(e) = w (vertex order).

    With this convention right-multiplication by the Perron vector
    matches source-side path extension counts exactly.
    """
    idx = {v: i for i, v in enumerate(g.vertices)}
    n = len(g.vertices)
    a = [[0] * n for _ in range(n)]
    for e in g.edges:
        a[idx[e.range]][idx[e.source]] += 1
    return a


# ---------------------------------------------------------------------------
# paths

@dataclass(frozen=True, order=True)
class Path:
    """Composable edge word; degree-0 paths are vertices."""

    edges: tuple[str, ...]
    range: str
    source: str

    @property
    def degree(self) -> int:
        return len(self.edges)

    @property
    def label(self) -> str:
        return ".".join(self.edges) if self.edges else self.range


def vertex_path(v: str) -> Path:
    return Path((), v, v)


def edge_path(g: DirectedGraph, edge_id: str) -> Path:
    e = g.edge_by_id[edge_id]
    return Path((e.id,), e.range, e.source)


def path_from_edges(g: DirectedGraph, edge_ids: tuple[str, ...]) -> Path:
    if not edge_ids:
        raise ValueError("use vertex_path for degree-0 paths")
    es = [g.edge_by_id[i] for i in edge_ids]
    for a, b in zip(es, es[1:]):
        if b.range != a.source:
            raise NonComposableError(f"edges {a.id} and {b.id} are not composable")
    return Path(tuple(edge_ids), es[0].range, es[-1].source)


def compose(lam: Path, mu: Path) -> Path:
    """Composition λμ, defined when s(λ) = r(μ); degree adds."""
    if lam.source != mu.range:
        raise NonComposableError(
            f"s({lam.label}) = {lam.source} != r({mu.label}) = {mu.range}")
    if lam.degree == 0:
        return mu
    if mu.degree == 0:
        return lam
    return Path(lam.edges + mu.edges, lam.range, mu.source)


@lru_cache(maxsize=None)
def _paths_with_range(g: DirectedGraph, k: int, v: str) -> tuple[Path, ...]:
    """Degree-k paths with range v, lexicographic in the edge-id word."""
    if k == 0:
        return (vertex_path(v),)
    out = []
    for e in g.edges_into[v]:
        for tail in _paths_with_range(g, k - 1, e.source):
            out.append(Path((e.id,) + tail.edges, v, tail.source))
    return tuple(out)


def enumerate_paths(g: DirectedGraph, k: int) -> list[Path]:
    """All degree-k paths; vertices for k=0, else lexicographic by edge word."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if k == 0:
        return [vertex_path(v) for v in g.vertices]
    out = []
    for e in g.sorted_edges:
        for tail in _paths_with_range(g, k - 1, e.source):
            out.append(Path((e.id,) + tail.edges, e.range, tail.source))
    return out


#: Refinement conventions; the measure-additivity test selects the
#: consistent one (source-append for the cylinder semantics used here).
SOURCE_APPEND = "source-append"
RANGE_PREPEND = "range-prepend"
CONVENTIONS = (SOURCE_APPEND, RANGE_PREPEND)


def refine(g: DirectedGraph, lam: Path, n: int, side: str) -> list[Path]:
    """Degree-(d+n) paths extending λ on the chosen side.

    source-append yields {λμ : d(μ)=n, r(μ)=s(λ)}; range-prepend yields
    {μλ : d(μ)=n, s(μ)=r(λ)}.
    """
    if n < 0:
        raise ValueError("refinement depth must be nonnegative")
    if n == 0:
        return [lam]
    if side == SOURCE_APPEND:
        return [compose(lam, mu) for mu in _paths_with_range(g, n, lam.source)]
    if side == RANGE_PREPEND:
        return [compose(mu, lam) for mu in enumerate_paths(g, n) if mu.source == lam.range]
    raise ValueError(f"unknown refinement side {side!r}")


def graph_automorphisms(g: DirectedGraph) -> list[dict[str, str]]:
    """Brute-force vertex permutations preserving the edge relation.

    Edge multiplicities are respected: the multiset of (range, source)
    pairs must be carried onto itself.
    """
    pair_counts: dict[tuple[str, str], int] = {}
    for e in g.edges:
        key = (e.range, e.source)
        pair_counts[key] = pair_counts.get(key, 0) + 1
    autos = []
    for perm in itertools.permutations(g.vertices):
        sigma = dict(zip(g.vertices, perm))
        if all(pair_counts.get((sigma[r], sigma[s]), 0) == c
               for (r, s), c in pair_counts.items()):
            autos.append(sigma)
    return autos
