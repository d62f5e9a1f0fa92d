import networkx as nx
from hypothesis import strategies as st

from lollipop_blowup.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, picks) if keep])


@st.composite
def permuted(draw, g):
    return g.relabel(draw(st.permutations(list(range(g.n)))))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_contains(host: Graph, pattern: Graph) -> bool:
    """Non-induced containment via networkx monomorphism search."""
    gm = nx.algorithms.isomorphism.GraphMatcher(to_nx(host), to_nx(pattern))
    return gm.subgraph_is_monomorphic()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
