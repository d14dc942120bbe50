#!/usr/bin/env python3
"""Run every verification pipeline over the bundled graphs and collect
the JSON reports under out/ (or a directory given as argv[1])."""

import pathlib
import sys

from qisograph.cli import main

ROOT = pathlib.Path(__file__).resolve().parent.parent
GRAPHS = ROOT / "graphs"

PIPELINES = [
    ("validate", ["validate", "--graph"], ["three_cycle.g", "k3.g", "asym4.g"]),
    ("validate-st", ["validate", "--profile", "spectral-triple", "--graph"],
     ["cuntz2.g", "cuntz3.g"]),
    ("spectral", ["spectral", "--level", "4", "--graph"],
     ["three_cycle.g", "k3.g", "asym4.g", "cuntz2.g", "cuntz3.g"]),
    ("verify", ["verify", "--graph"], ["three_cycle.g", "k3.g", "asym4.g"]),
    ("cuntz", ["cuntz", "--graph"], ["cuntz2.g", "cuntz3.g"]),
]


def run(out_dir: pathlib.Path) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    worst = 0
    for label, argv, graph_files in PIPELINES:
        for graph_file in graph_files:
            stem = graph_file.removesuffix(".g")
            out = out_dir / f"{label}_{stem}.json"
            print(f"=== {label} {graph_file} -> {out}")
            code = main(argv + [str(GRAPHS / graph_file), "--out", str(out)])
            worst = max(worst, code)
    return worst


if __name__ == "__main__":
    target = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT / "out"
    sys.exit(run(target))
