"""Bundled test graphs, defined as graph-file text so both the parser
and the file format are exercised everywhere they are used."""

from __future__ import annotations

from .graphs import DirectedGraph, parse_graph

THREE_CYCLE_TEXT = """\
graph three-cycle
v 1
v 2
v 3
# edge lines are: e <id> <range> <source>
e a 2 1
e b 3 2
e c 1 3
"""

TWO_CYCLE_TEXT = """\
graph two-cycle
v 1
v 2
e f 2 1
e g 1 2
"""

K3_TEXT = """\
graph k3
v 1
v 2
v 3
e e12 2 1
e e13 3 1
e e21 1 2
e e23 3 2
e e31 1 3
e e32 2 3
"""

# Strongly connected, loop-free, multiplicity-free, sourceless, with a
# trivial automorphism group.  Every vertex receives exactly two edges,
# so rho = 2 with the uniform Perron vector, while the out-degrees
# (3, 2, 2, 1) make the range-prepend refinement measure-inconsistent.
ASYM4_TEXT = """\
graph asym4
v 1
v 2
v 3
v 4
e g12 2 1
e g13 3 1
e g14 4 1
e g21 1 2
e g23 3 2
e g32 2 3
e g34 4 3
e g41 1 4
"""


def three_cycle() -> DirectedGraph:
    return parse_graph(THREE_CYCLE_TEXT)


def two_cycle() -> DirectedGraph:
    return parse_graph(TWO_CYCLE_TEXT)


def complete_k3() -> DirectedGraph:
    return parse_graph(K3_TEXT)


def asym_quad() -> DirectedGraph:
    return parse_graph(ASYM4_TEXT)


def cuntz_text(n: int) -> str:
    if n < 1:
        raise ValueError("need at least one loop")
    lines = [f"graph cuntz{n}", "v w"]
    lines += [f"e l{i} w w" for i in range(1, n + 1)]
    return "\n".join(lines) + "\n"


def cuntz_loops(n: int) -> DirectedGraph:
    """One vertex with n loops; the graph of the Cuntz algebra O_n."""
    return parse_graph(cuntz_text(n))


#: name -> graph-file text, for the bundled files and the test suites.
STANDARD_TEXTS = {
    "three-cycle": THREE_CYCLE_TEXT,
    "two-cycle": TWO_CYCLE_TEXT,
    "k3": K3_TEXT,
    "asym4": ASYM4_TEXT,
    "cuntz2": cuntz_text(2),
    "cuntz3": cuntz_text(3),
}


def standard_graphs() -> dict[str, DirectedGraph]:
    return {name: parse_graph(text) for name, text in STANDARD_TEXTS.items()}
