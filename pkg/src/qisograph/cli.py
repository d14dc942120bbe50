"""Command-line front end: validation, spectral data, the identity
suite, the loop-graph contrast, and ad-hoc expression reduction.

Every command writes one JSON report (schema 1) and prints a short
human summary; exit code 0 means every mandatory check passed, 1 means
some check failed, 2 means the invocation or an input file was bad.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path as FsPath

from . import __version__
from .corep import VERTEX_PAIR, VerificationContext, run_identity_suite, check_welldefined
from .cuntz import (
    FREE_UNITARY, MAGIC, cuntz_setup, derive_contradiction, non_isometry_verdict,
    sn_plus_isometry_suite,
)
from .exprlang import ExpressionError, parse_expression
from .graphs import (
    AUT_PLUS, CONVENTIONS, SOURCE_APPEND, SPECTRAL_TRIPLE, DirectedGraph,
    GraphFormatError, enumerate_paths, parse_graph, validate,
)
from .hilbert import (
    alpha_sequence, cuntz_krieger_check, multiplicities, theta_partial_trace,
)
from .perron import PerronError, convention_residuals, cylinder_measure, perron, select_convention
from .providers import classical_rep
from .relations import free_unitary_relations, magic_relations, qaut_relations
from .report import CheckResult, SuiteReport, text_digest
from .rewrite import is_zero
from .verdict import PROVED_ZERO

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    graph_path: str
    n_cap: int = 3
    k_max: int = 2
    l_max: int | None = None
    epsilon: float = 0.25
    t_values: tuple[float, ...] = (0.5, 1.0, 2.0)
    convention: str = "auto"
    flavor: str = "both"
    providers: tuple[str, ...] = ()
    out_path: str | None = None
    theta_csv: str | None = None
    measure_depth: int = 3
    profile: str = "aut-plus"
    alpha_kind: str = "power"
    q_max: int = 20

    def validate(self):
        if self.n_cap < 2:
            raise UsageError("truncation level must be at least 2")
        if not 0 < self.epsilon < 0.5:
            raise UsageError("epsilon must lie in (0, 1/2)")
        if any(t <= 0 for t in self.t_values):
            raise UsageError("t values must be positive")
        if self.convention not in ("auto",) + CONVENTIONS:
            raise UsageError(f"unknown convention {self.convention!r}")


def _load_graph(config: RunConfig) -> tuple[DirectedGraph, str, str]:
    path = FsPath(config.graph_path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read graph file {path}: {exc}") from None
    try:
        g = parse_graph(text)
    except (GraphFormatError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None
    return g, text, text_digest(text)


def _pick_convention(config: RunConfig, pf, g) -> tuple[str, dict]:
    residuals = convention_residuals(pf, g)
    if config.convention == "auto":
        side, _ = select_convention(pf, g)
        return side, residuals
    return config.convention, residuals


def cmd_validate(config: RunConfig) -> SuiteReport:
    g, _, digest = _load_graph(config)
    profile = {"aut-plus": AUT_PLUS, "spectral-triple": SPECTRAL_TRIPLE}.get(config.profile)
    if profile is None:
        raise UsageError(f"unknown profile {config.profile!r}")
    started = time.monotonic()
    rep = validate(g, profile)
    checks = []
    required = set(profile.required())
    for c in rep.checks:
        checks.append(CheckResult(
            f"hypothesis:{c.name}",
            {"profile": profile.name, "required": c.name in required},
            c.passed or c.name not in required,
            "pass" if c.passed else "fail",
            {}, 0, "", (time.monotonic() - started) * 1000.0,
            detail={"witness": c.witness, "holds": c.passed}))
    return SuiteReport("validate", __version__, g.name, digest, None,
                       {"profile": profile.name}, checks)


def cmd_spectral(config: RunConfig) -> SuiteReport:
    g, _, digest = _load_graph(config)
    started = time.monotonic()
    try:
        pf = perron(g)
    except PerronError as exc:
        raise UsageError(str(exc)) from None
    convention, conv_residuals = _pick_convention(config, pf, g)
    checks = []
    checks.append(CheckResult(
        "perron", {}, True, "pass",
        {"eigen_residual": 0.0 if pf.exact else pf.tol},
        0, "", (time.monotonic() - started) * 1000.0,
        detail={"rho": str(pf.rho_value()), "x": {v: str(pf.x_of(v)) for v in g.vertices},
                "exact": pf.exact}))

    t0 = time.monotonic()
    measures = {}
    mass_ok = True
    for d in range(config.measure_depth + 1):
        total = Fraction(0) if pf.exact else 0.0
        for lam in enumerate_paths(g, d):
            m = cylinder_measure(pf, lam)
            measures[lam.label] = str(m)
            total += m
        mass_ok = mass_ok and (total == 1 if pf.exact else abs(total - 1) < 1e-9)
    checks.append(CheckResult(
        "cylinder-measures", {"depth": config.measure_depth}, mass_ok,
        "pass" if mass_ok else "fail", {"convention": conv_residuals},
        0, "", (time.monotonic() - t0) * 1000.0,
        detail={"measures": measures, "exact": pf.exact}))

    if pf.exact:
        t0 = time.monotonic()
        ck = cuntz_krieger_check(g, pf, config.n_cap)
        checks.append(CheckResult(
            "cuntz-krieger", {"n_cap": config.n_cap}, ck.exact,
            "pass" if ck.exact else "fail",
            {"annihilation": ck.residual_annihilation,
             "completeness": ck.residual_completeness},
            0, "", (time.monotonic() - t0) * 1000.0))

    t0 = time.monotonic()
    alpha = alpha_sequence(config.q_max, config.alpha_kind, config.epsilon)
    mults = multiplicities(g, config.q_max)
    spectrum = [{"q": q, "alpha_q": alpha[q], "multiplicity": mults[q]}
                for q in range(config.q_max + 1)]
    theta_rows = []
    theta_ok = True
    for t in config.t_values:
        values = [theta_partial_trace(mults, t, config.epsilon, q)
                  for q in range(config.q_max + 1)]
        monotone = all(b >= a for a, b in zip(values, values[1:]))
        tail = values[-1] - values[-2]
        theta_ok = theta_ok and monotone and tail < 1e-9
        for q, v in enumerate(values):
            theta_rows.append({"t": t, "Q": q, "value": v})
    checks.append(CheckResult(
        "theta-summability",
        {"epsilon": config.epsilon, "t": list(config.t_values), "Q": config.q_max},
        theta_ok, "pass" if theta_ok else "fail", {},
        0, "", (time.monotonic() - t0) * 1000.0,
        detail={"spectrum": spectrum}))

    notes = []
    if not pf.exact:
        notes.append({"inexact_perron": "irrational spectral radius; measures are "
                                        "floating point and the exact matrix checks "
                                        "are unavailable"})
    report = SuiteReport("spectral", __version__, g.name, digest, convention,
                         {"n_cap": config.n_cap, "epsilon": config.epsilon,
                          "t": list(config.t_values), "q_max": config.q_max},
                         checks, notes)
    if config.theta_csv:
        lines = ["t,Q,value"] + [f"{r['t']},{r['Q']},{r['value']!r}" for r in theta_rows]
        FsPath(config.theta_csv).write_text("\n".join(lines) + "\n")
    return report


def _verification_context(config: RunConfig, g, pf, convention) -> VerificationContext:
    rels = qaut_relations(g, pf)
    providers = [classical_rep(g, rels)]
    if config.providers:
        providers = [p for p in providers if p.name in config.providers] or providers
    return VerificationContext(g, pf, rels, VERTEX_PAIR, convention, providers, config.n_cap)


def cmd_verify(config: RunConfig) -> SuiteReport:
    g, _, digest = _load_graph(config)
    try:
        pf = perron(g)
    except PerronError as exc:
        raise UsageError(str(exc)) from None
    convention, conv_residuals = _pick_convention(config, pf, g)
    report_checks = []
    adopted = convention if convention in CONVENTIONS else SOURCE_APPEND
    try:
        ctx = _verification_context(config, g, pf, adopted)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if convention != SOURCE_APPEND:
        # forced rejected convention: run the negative control only
        ctx.convention = SOURCE_APPEND
        for k in range(1, config.k_max + 1):
            for l in range(k if config.l_max is None else min(k, config.l_max + 1)):
                report_checks.append(check_welldefined(ctx, l, k, convention=convention))
    else:
        report_checks.extend(run_identity_suite(ctx, k_max=config.k_max,
                                                n_cap=config.n_cap, l_max=config.l_max))
    notes = [{"relation_events": list(ctx.rels.events)},
             {"convention_residuals": {k: str(v) for k, v in conv_residuals.items()}}]
    return SuiteReport("verify", __version__, g.name, digest, convention,
                       {"k_max": config.k_max, "n_cap": config.n_cap},
                       report_checks, notes)


def cmd_cuntz(config: RunConfig) -> SuiteReport:
    g, _, digest = _load_graph(config)
    loops = [e for e in g.edges if e.range == e.source]
    if len(g.vertices) != 1 or len(loops) != len(g.edges) or len(loops) < 2:
        raise UsageError("the cuntz command needs a one-vertex graph with n >= 2 loops")
    n = len(loops)
    checks = []
    notes = []
    flavors = [config.flavor] if config.flavor in (FREE_UNITARY, MAGIC) else [FREE_UNITARY, MAGIC]
    for flavor in flavors:
        started = time.monotonic()
        setup = cuntz_setup(n, flavor)
        derivation = derive_contradiction(setup)
        if flavor == FREE_UNITARY:
            verdict = non_isometry_verdict(setup, derivation=derivation)
            ok = verdict.not_isometric and derivation.contradiction_pending
            checks.append(CheckResult(
                "non-isometry", {"n": n, "flavor": flavor}, ok,
                verdict.verdict, {}, 0, "",
                (time.monotonic() - started) * 1000.0,
                detail=verdict.to_dict()))
        else:
            ok = not derivation.contradiction_pending
            checks.append(CheckResult(
                "derivation-collapses", {"n": n, "flavor": flavor}, ok,
                PROVED_ZERO if ok else "Unknown", {}, 0, "",
                (time.monotonic() - started) * 1000.0,
                detail=derivation.to_dict()))
            suite = sn_plus_isometry_suite(n, k_max=config.k_max, n_cap=config.n_cap)
            checks.extend(suite)
        notes.append({"flavor": flavor, "steps": [s.label for s in derivation.steps]})
    return SuiteReport("cuntz", __version__, g.name, digest, SOURCE_APPEND,
                       {"n": n, "flavor": config.flavor,
                        "k_max": config.k_max, "n_cap": config.n_cap},
                       checks, notes)


def cmd_reduce(config: RunConfig, expression: str) -> SuiteReport:
    g, _, digest = _load_graph(config)
    loops = [e for e in g.edges if e.range == e.source]
    started = time.monotonic()
    if config.flavor == FREE_UNITARY:
        rels = free_unitary_relations(tuple(e.id for e in g.sorted_edges))
    elif len(g.vertices) == 1 and loops:
        rels = magic_relations(tuple(e.id for e in g.sorted_edges))
    else:
        try:
            pf = perron(g)
            rels = qaut_relations(g, pf)
        except (PerronError, ValueError) as exc:
            raise UsageError(str(exc)) from None
    try:
        poly = parse_expression(expression, rels)
    except ExpressionError as exc:
        raise UsageError(f"bad expression: {exc}") from None
    from .rewrite import ReductionTrace, normal_form
    trace = ReductionTrace()
    nf = normal_form(poly, rels, trace)
    verdict = is_zero(nf, rels)
    checks = [CheckResult(
        "reduce", {"expression": expression}, True, verdict.kind,
        {}, trace.count, trace.digest(),
        (time.monotonic() - started) * 1000.0,
        detail={"input": repr(poly), "normal_form": repr(nf),
                "relations": rels.name})]
    return SuiteReport("reduce", __version__, g.name, digest, None,
                       {"expression": expression}, checks)


def _print_summary(report: SuiteReport):
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        inputs = " ".join(f"{k}={v}" for k, v in c.inputs.items())
        print(f"[{status}] {c.name} {inputs} ({c.verdict})")
    print(f"overall: {'pass' if report.passed else 'fail'}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qisograph",
        description="finite-truncation verification of quantum isometric actions "
                    "on graph algebra spectral triples")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--graph", required=True, help="graph file path")
        p.add_argument("--level", type=int, default=3, dest="n_cap",
                       help="truncation level N (default 3)")
        p.add_argument("--k", type=int, default=2, dest="k_max",
                       help="max corepresentation level (default 2)")
        p.add_argument("--l", type=int, default=None, dest="l_max",
                       help="max lower level for embedding checks")
        p.add_argument("--epsilon", type=float, default=0.25)
        p.add_argument("--t", type=float, action="append", dest="t_values",
                       help="heat-trace t value (repeatable)")
        p.add_argument("--convention", default="auto",
                       choices=("auto",) + CONVENTIONS)
        p.add_argument("--flavor", default="both",
                       choices=("both", FREE_UNITARY, MAGIC))
        p.add_argument("--provider", action="append", dest="providers", default=[])
        p.add_argument("--out", dest="out_path", help="report JSON path")
        p.add_argument("--theta-csv", dest="theta_csv")
        p.add_argument("--measure-depth", type=int, default=3)
        p.add_argument("--alpha", dest="alpha_kind", default="power",
                       choices=("power", "linear"))
        p.add_argument("--q-max", type=int, default=20)

    p_validate = sub.add_parser("validate", help="check graph hypotheses")
    common(p_validate)
    p_validate.add_argument("--profile", default="aut-plus",
                            choices=("aut-plus", "spectral-triple"))

    common(sub.add_parser("spectral", help="Perron data, measures, Dirac spectrum, heat traces"))
    common(sub.add_parser("verify", help="the full identity suite"))
    common(sub.add_parser("cuntz", help="loop-graph derivation and contrast"))
    p_reduce = sub.add_parser("reduce", help="reduce an expression to normal form")
    common(p_reduce)
    p_reduce.add_argument("expression", help="expression in the mini-language")
    return parser


def _config_from_args(args) -> RunConfig:
    return RunConfig(
        graph_path=args.graph,
        n_cap=args.n_cap,
        k_max=args.k_max,
        l_max=args.l_max,
        epsilon=args.epsilon,
        t_values=tuple(args.t_values) if args.t_values else (0.5, 1.0, 2.0),
        convention=args.convention,
        flavor=args.flavor,
        providers=tuple(args.providers),
        out_path=args.out_path,
        theta_csv=args.theta_csv,
        measure_depth=args.measure_depth,
        profile=getattr(args, "profile", "aut-plus"),
        alpha_kind=args.alpha_kind,
        q_max=args.q_max,
    )


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_PASS
    config = _config_from_args(args)
    try:
        config.validate()
        if args.command == "validate":
            report = cmd_validate(config)
        elif args.command == "spectral":
            report = cmd_spectral(config)
        elif args.command == "verify":
            report = cmd_verify(config)
        elif args.command == "cuntz":
            report = cmd_cuntz(config)
        elif args.command == "reduce":
            report = cmd_reduce(config, args.expression)
        else:  # pragma: no cover
            raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if config.out_path:
        FsPath(config.out_path).write_text(report.to_json())
    _print_summary(report)
    return EXIT_PASS if report.passed else EXIT_FAIL


def entry():  # pragma: no cover
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    entry()
