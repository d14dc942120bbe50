import pytest

from qisograph.corep import VERTEX_PAIR, VerificationContext
from qisograph.perron import perron, select_convention
from qisograph.providers import classical_rep
from qisograph.relations import qaut_relations
from qisograph.standard import standard_graphs


@pytest.fixture(scope="session")
def graphs():
    return standard_graphs()


@pytest.fixture(scope="session")
def perron_data(graphs):
    return {name: perron(g) for name, g in graphs.items()}


@pytest.fixture(scope="session")
def qaut_rels(graphs, perron_data):
    out = {}
    for name in ("three-cycle", "two-cycle", "k3", "asym4"):
        out[name] = qaut_relations(graphs[name], perron_data[name])
    return out


@pytest.fixture(scope="session")
def contexts(graphs, perron_data, qaut_rels):
    out = {}
    for name, rels in qaut_rels.items():
        g = graphs[name]
        pf = perron_data[name]
        conv, _ = select_convention(pf, g)
        out[name] = VerificationContext(
            g, pf, rels, VERTEX_PAIR, conv, [classical_rep(g, rels)], 3)
    return out
