"""The one-vertex loop graphs: the linear action of the free unitary
family on the generating isometries, the mechanical derivation showing
that no Dirac-commuting unitary corepresentation can implement it, and
the magic-unitary counterpart where the same identity suite passes.

The derivation replays the proof steps over the relation set extended
by one formal unitary w: a corepresentation commuting with the Dirac
operator fixes the one-dimensional constants eigenspace, forcing
U(1) = 1 (x) w; the implementation identity then pins U on the loop
indicators, and comparing coefficients in the refinement of 1 leaves
the obligations sum_i q[k,i] w - w, hence (times w*) sum_i q[k,i] - 1.
For the magic family these collapse to zero; for the free-unitary
family they are witnessed nonzero by concrete unitary matrices, which
are genuine representations, so the witness is a sound disproof.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corep import EDGE_INDEX, VerificationContext, run_identity_suite
from .graphs import DirectedGraph, SOURCE_APPEND, SPECTRAL_TRIPLE, validate
from .ncpoly import FORMAL_UNITARY, FORMAL_UNITARY_STAR, Generator, NCPoly
from .perron import PerronData, perron
from .providers import (
    RepresentationProvider, loop_permutation_rep, matrix_point_provider,
    identity_unitary, rotation_unitary, fourier_unitary, register, witness_nonzero,
)
from .relations import RelationSet, free_unitary_relations, magic_relations, with_formal_unitary
from .report import CheckResult
from .rewrite import is_zero, normal_form
from .standard import cuntz_loops
from .verdict import Verdict

FREE_UNITARY = "free-unitary"
MAGIC = "magic"


@dataclass
class CuntzSetup:
    n: int
    flavor: str
    graph: DirectedGraph
    pf: PerronData
    rels: RelationSet
    loop_ids: tuple[str, ...]

    @property
    def kind(self) -> str:
        return self.rels.gen_kind


def cuntz_setup(n: int, flavor: str) -> CuntzSetup:
    """One vertex with n loops; spectral radius n, unit Perron vector,
    M([lambda]) = n^{-d(lambda)}."""
    if n < 2:
        raise ValueError("need at least two loops")
    if flavor not in (FREE_UNITARY, MAGIC):
        raise ValueError(f"unknown flavor {flavor!r}")
    g = cuntz_loops(n)
    report = validate(g, SPECTRAL_TRIPLE)
    if not report.passed:
        raise ValueError("loop graph fails the spectral-triple profile")
    pf = perron(g)
    loop_ids = tuple(e.id for e in g.sorted_edges)
    if flavor == FREE_UNITARY:
        rels = free_unitary_relations(loop_ids, name=f"free-unitary({n})")
    else:
        rels = magic_relations(loop_ids, name=f"magic({n})")
    return CuntzSetup(n, flavor, g, pf, rels, loop_ids)


@dataclass
class DerivationStep:
    label: str
    polys: dict[str, str]

    def to_dict(self) -> dict:
        return {"label": self.label, "polys": self.polys}


@dataclass
class DerivationReport:
    n: int
    flavor: str
    steps: list[DerivationStep]
    obligations: dict[str, NCPoly]
    verdicts: dict[str, Verdict]

    @property
    def contradiction_pending(self) -> bool:
        """True when some obligation is not provably zero, so the
        existence assumption stands refutable by a numeric witness."""
        return any(not v.proved_zero for v in self.verdicts.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "flavor": self.flavor,
            "steps": [s.to_dict() for s in self.steps],
            "obligations": {k: repr(p) for k, p in self.obligations.items()},
            "verdicts": {k: str(v) for k, v in self.verdicts.items()},
        }


def derive_contradiction(setup: CuntzSetup) -> DerivationReport:
    """Replay the proof steps as polynomial identities.

    The obligations sum_i q[k,i] - 1 reduce to zero under the magic
    relations (rows sum to one) and remain open under the free-unitary
    relations, where a witness settles them nonzero.
    """
    rels_w = with_formal_unitary(setup.rels)
    kind = setup.kind
    w = NCPoly.gen(FORMAL_UNITARY)
    wstar = NCPoly.gen(FORMAL_UNITARY_STAR)
    steps = []
    steps.append(DerivationStep(
        "corepresentation commuting with the Dirac operator fixes the "
        "one-dimensional constants eigenspace",
        {"U(1)": "1 (x) w, w unitary"}))
    row_images = {}
    for i in setup.loop_ids:
        img = {j: NCPoly.gen(Generator(kind, j, i)) * w for j in setup.loop_ids}
        row_images[i] = img
    steps.append(DerivationStep(
        "implementation identity on the loop indicators",
        {f"U(chi_[{i}])": " + ".join(f"chi_[{j}] (x) {img!r}" for j, img in sorted(row.items()))
         for i, row in row_images.items()}))
    obligations = {}
    raw = {}
    for k in setup.loop_ids:
        total = NCPoly.zero()
        for i in setup.loop_ids:
            total = total + row_images[i][k]
        raw[k] = total - w
    steps.append(DerivationStep(
        "compare coefficients of each loop indicator in the refinement of 1",
        {f"coeff chi_[{k}]": repr(p) for k, p in sorted(raw.items())}))
    for k, p in raw.items():
        obligations[k] = normal_form(p * wstar, rels_w)
    steps.append(DerivationStep(
        "right-multiply by w* and reduce",
        {f"obligation[{k}]": repr(p) for k, p in sorted(obligations.items())}))
    verdicts = {k: is_zero(p, rels_w) for k, p in obligations.items()}
    return DerivationReport(setup.n, setup.flavor, steps, obligations, verdicts)


def cuntz_provider_portfolio(setup: CuntzSetup) -> list[RepresentationProvider]:
    """Identity first (a permutation, hence never a witness), then the
    generic rotation and the Fourier-type matrix."""
    if setup.flavor == MAGIC:
        return [loop_permutation_rep(setup.loop_ids, setup.rels)]
    providers = [
        matrix_point_provider("identity", setup.loop_ids, identity_unitary(setup.n)),
        matrix_point_provider("rotation", setup.loop_ids, rotation_unitary(setup.n)),
        matrix_point_provider("fourier", setup.loop_ids, fourier_unitary(setup.n)),
    ]
    return [register(p, setup.rels) for p in providers]


@dataclass
class NonIsometryVerdict:
    verdict: str                     # "NotIsometric" or "Inconclusive"
    witnesses: dict[str, Verdict]
    derivation: DerivationReport

    @property
    def not_isometric(self) -> bool:
        return self.verdict == "NotIsometric"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "witnesses": {k: str(v) for k, v in self.witnesses.items()},
            "derivation": self.derivation.to_dict(),
        }


def non_isometry_verdict(setup: CuntzSetup,
                         providers: list[RepresentationProvider] | None = None,
                         derivation: DerivationReport | None = None) -> NonIsometryVerdict:
    """NotIsometric when some obligation is witnessed nonzero under a
    concrete representation of the relations."""
    if setup.flavor != FREE_UNITARY:
        raise ValueError("the contradiction argument targets the free-unitary flavor")
    derivation = derivation or derive_contradiction(setup)
    providers = providers if providers is not None else cuntz_provider_portfolio(setup)
    witnesses = {}
    found = False
    for k, ob in sorted(derivation.obligations.items()):
        v = witness_nonzero(ob, providers)
        witnesses[k] = v
        found = found or v.witnessed
    return NonIsometryVerdict("NotIsometric" if found else "Inconclusive",
                              witnesses, derivation)


def sn_plus_context(n: int, n_cap: int = 3) -> VerificationContext:
    setup = cuntz_setup(n, MAGIC)
    providers = [loop_permutation_rep(setup.loop_ids, setup.rels)]
    return VerificationContext(setup.graph, setup.pf, setup.rels, EDGE_INDEX,
                               SOURCE_APPEND, providers, n_cap)


def sn_plus_isometry_suite(n: int, k_max: int = 2, n_cap: int = 3) -> list[CheckResult]:
    """The identity suite for the magic-unitary action on the n-loop
    graph; the Perron vector is the unit, so the weighted sum schema
    degenerates to plain row sums."""
    ctx = sn_plus_context(n, n_cap)
    return run_identity_suite(ctx, k_max=k_max, n_cap=n_cap, include_density=False)
