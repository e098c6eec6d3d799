import random

import pytest

from frontcalc.claims import (
    CONNECTSUM,
    DECOMPOSABLE,
    INVERSION,
    NON_REGULAR,
    NOT_SHR,
    REGULAR,
    SATELLITE,
    SHR,
    UNKNOWN,
    ClaimError,
    ClaimGraph,
    Edge,
    InferenceError,
    Node,
    claim_edge,
    infer,
    node_from_front,
    parse_graph,
)
from frontcalc.corpus import get_front, get_trace
from frontcalc.ops import stabilize

from support import random_claim_graph


def _base():
    g = ClaimGraph()
    g = g.with_node(Node("a", 1, 0, "h0"))
    g = g.with_node(Node("b", 1, 0, "h1"))
    return g


def _cyl_graph():
    u = get_front("unknot")
    g = ClaimGraph().with_node(node_from_front(u, "a")).with_node(node_from_front(u, "b"))
    return claim_edge(g, "a", "b", DECOMPOSABLE, trace=get_trace("unknot-cylinder"))


def test_tb_rot_mismatch():
    g = _base().with_node(Node("c", -1, 0))
    with pytest.raises(ClaimError, match="tb/rot"):
        claim_edge(g, "a", "c", SATELLITE)


def test_decomposable_needs_trace():
    with pytest.raises(ClaimError, match="needs a concordance trace"):
        claim_edge(_base(), "a", "b", DECOMPOSABLE)


def test_decomposable_rejects_non_concordance():
    g = ClaimGraph().with_node(Node("a", -1, 0)).with_node(Node("b", 1, 0))
    g2 = ClaimGraph().with_node(Node("a", 1, 0)).with_node(Node("b", 1, 0))
    with pytest.raises(ClaimError, match="not a concordance"):
        claim_edge(g2, "a", "b", DECOMPOSABLE, trace=get_trace("trefoil-filling"))
    with pytest.raises(ClaimError, match="tb/rot"):
        claim_edge(g, "a", "b", DECOMPOSABLE, trace=get_trace("unknot-to-trefoil"))


def test_decomposable_checks_ends():
    u, t = get_front("unknot"), get_front("trefoil")
    # same classical invariants, wrong front
    s = stabilize(stabilize(t, "+"), "-")
    g = ClaimGraph().with_node(node_from_front(u, "a")).with_node(node_from_front(s, "b"))
    with pytest.raises(ClaimError, match="does not end"):
        claim_edge(g, "a", "b", DECOMPOSABLE, trace=get_trace("unknot-cylinder"))


def test_unknown_node_and_provenance():
    with pytest.raises(ClaimError, match="unknown node"):
        claim_edge(_base(), "a", "zz", SATELLITE)
    with pytest.raises(ClaimError, match="unknown provenance"):
        claim_edge(_base(), "a", "b", "hearsay")
    with pytest.raises(ClaimError, match="already present"):
        _base().with_node(Node("a", 0, 0))


def test_inversion_needs_decomposable_edge_reversed():
    g = _cyl_graph()
    g = g.with_node(Node("Sa", 1, 0, None, ("stab", "a", "S1")))
    g = g.with_node(Node("Sb", 1, 0, None, ("stab", "b", "S1")))
    with pytest.raises(ClaimError, match="decomposable-trace edge"):
        claim_edge(g, "Sa", "Sb", INVERSION)
    g = claim_edge(g, "Sb", "Sa", INVERSION)
    assert g.edges[-1].over == 0


def test_inversion_needs_matching_stabilisation():
    g = _cyl_graph()
    g = g.with_node(Node("Sa", 1, 0, None, ("stab", "a", "S1")))
    g = g.with_node(Node("Sb", 1, 0, None, ("stab", "b", "S2")))
    with pytest.raises(ClaimError, match="same stab"):
        claim_edge(g, "Sb", "Sa", INVERSION)


def test_satellite_and_connectsum_need_underlying_edge():
    g = _base()
    g = g.with_node(Node("Wa", 1, 0, None, ("satellite", "a", "W0")))
    g = g.with_node(Node("Wb", 1, 0, None, ("satellite", "b", "W0")))
    g = g.with_node(Node("Ca", 1, 0, None, ("connectsum", "a", "K")))
    g = g.with_node(Node("Cb", 1, 0, None, ("connectsum", "b", "K")))
    with pytest.raises(ClaimError, match="needs an edge a -> b"):
        claim_edge(g, "Wa", "Wb", SATELLITE)
    with pytest.raises(ClaimError, match="needs an edge a -> b"):
        claim_edge(g, "Ca", "Cb", CONNECTSUM)
    with pytest.raises(ClaimError, match="same"):
        claim_edge(g, "Wa", "Cb", SATELLITE)


def _chain():
    # a -> b decomposable, W(a) -> W(b) satellite, W(b) -> W(a) claimed
    g = _cyl_graph()
    g = g.with_node(Node("Wa", 1, 0, "h0", ("satellite", "a", "W0")))
    g = g.with_node(Node("Wb", 1, 0, "h1", ("satellite", "b", "W0")))
    g = claim_edge(g, "Wa", "Wb", SATELLITE)
    return g


def test_r1_r2_and_unknown_over_inversion():
    g = _chain()
    g = g.with_node(Node("Sa", 1, 0, None, ("stab", "a", "S1")))
    g = g.with_node(Node("Sb", 1, 0, None, ("stab", "b", "S1")))
    g = claim_edge(g, "Sb", "Sa", INVERSION)
    g = g.with_node(Node("WSa", 1, 0, "h2", ("satellite", "Sa", "W0")))
    g = g.with_node(Node("WSb", 1, 0, "h3", ("satellite", "Sb", "W0")))
    g = claim_edge(g, "WSb", "WSa", SATELLITE)
    out = infer(g)
    labels = {(e.src, e.dst): (e.regularity, e.ribbon) for e in out.edges}
    assert labels[("a", "b")] == (REGULAR, SHR)
    assert labels[("Wa", "Wb")] == (REGULAR, SHR)
    assert labels[("Sb", "Sa")] == (UNKNOWN, UNKNOWN)
    assert labels[("WSb", "WSa")] == (UNKNOWN, UNKNOWN)


def test_r3_contradiction_raises():
    g = _chain()
    g = claim_edge(g, "b", "a", DECOMPOSABLE, trace=get_trace("unknot-cylinder"))
    g = claim_edge(g, "Wb", "Wa", SATELLITE)
    # both directions regular: R3 makes them clash
    with pytest.raises(InferenceError):
        infer(g)


def test_r3_needs_distinct_jones():
    g = _cyl_graph()
    g = g.with_node(Node("Sa", 1, 0, None, ("stab", "a", "S1")))
    g = g.with_node(Node("Sb", 1, 0, None, ("stab", "b", "S1")))
    g = claim_edge(g, "Sa", "Sb", SATELLITE)
    g = claim_edge(g, "Sb", "Sa", INVERSION)
    out = infer(g)
    fwd = out.edges[out.find("Sa", "Sb")]
    back = out.edges[out.find("Sb", "Sa")]
    assert fwd.regularity == REGULAR
    # no Jones fingerprints on the stabilised nodes: not certified
    assert back.regularity == UNKNOWN

    g2 = ClaimGraph(tuple(n if n.name not in ("Sa", "Sb") else Node(n.name, 1, 0, "x" + n.name, n.origin) for n in g.nodes), g.edges)
    out2 = infer(g2)
    back2 = out2.edges[out2.find("Sb", "Sa")]
    assert (back2.regularity, back2.ribbon) == (NON_REGULAR, NOT_SHR)


def test_r4_connectsum():
    g = _cyl_graph()
    g = g.with_node(Node("Ca", 1, 0, None, ("connectsum", "a", "K")))
    g = g.with_node(Node("Cb", 1, 0, None, ("connectsum", "b", "K")))
    out = infer(claim_edge(g, "Ca", "Cb", CONNECTSUM))
    assert out.edges[-1].regularity == REGULAR


def test_inference_is_monotone_and_idempotent():
    rng = random.Random(3)
    for _ in range(10):
        g = random_claim_graph(rng)
        once = infer(g)
        assert infer(once) == once
        for before, after in zip(g.edges, once.edges):
            if before.regularity != UNKNOWN:
                assert after.regularity == before.regularity


def test_set_rejects_contradiction():
    # labels given up front, as after a previous inference run
    e = Edge("a", "b", INVERSION, regularity=REGULAR, ribbon=SHR)
    g = ClaimGraph((Node("a", 1, 0, "h0"), Node("b", 1, 0, "h1")), (e, Edge("b", "a", INVERSION, regularity=REGULAR, ribbon=SHR)))
    with pytest.raises(InferenceError):
        infer(g)


GRAPH = """\
node a tb -1 rot 0 jones 6b86b273ff34fce1
node b tb -1 rot 0 jones 6b86b273ff34fce1
node Sa tb -3 rot 0 origin stab a S1
node Sb tb -3 rot 0 origin stab b S1
edge a b prov decomposable-trace ref unknot-cylinder
edge Sb Sa prov inversion-Thm2.1   # existence only
"""


def test_parse_graph_round_trip():
    g = parse_graph(GRAPH, {"unknot-cylinder": get_trace("unknot-cylinder")})
    assert [n.name for n in g.nodes] == ["a", "b", "Sa", "Sb"]
    assert g.nodes[2].origin == ("stab", "a", "S1")
    again = parse_graph(g.text(), {"unknot-cylinder": get_trace("unknot-cylinder")})
    assert again == g
    out = infer(g)
    assert out.edges[0].regularity == REGULAR
    assert "reg REGULAR shr STRONGLY-HOMOTOPY-RIBBON" in out.text()


@pytest.mark.parametrize(
    "text, match",
    [
        ("node a tb 1\n", "malformed"),
        ("node a tb 1 rot 0 colour red\n", "unknown field"),
        ("vertex a\n", "unknown record"),
        ("node a tb 1 rot 0 origin stab a\n", "needs 3"),
        ("node a tb 1 rot 0\nnode b tb 1 rot 0\nedge a b prov decomposable-trace ref nope\n", "unknown trace"),
        ("node a tb 1 rot 0\nnode b tb 0 rot 0\nedge a b prov satellite-CNS\n", "line 3: tb/rot"),
    ],
)
def test_parse_graph_errors(text, match):
    with pytest.raises(ClaimError, match=match):
        parse_graph(text)
