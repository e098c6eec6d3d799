import pytest
from hypothesis import given, strategies as st

from frontcalc.corpus import get_front
from frontcalc.front import (
    FrontDiagram,
    FrontSyntaxError,
    StrandCountError,
    classical_invariants,
    maslov_labeling,
    orient,
    parse_front,
    strand_counts,
)
from frontcalc.ops import n_copy, stabilize, torus_front


def test_parse_wrapped_and_bare():
    f = parse_front("front u\nL 1\nR 1\nend\n")
    assert f.name == "u"
    assert f == parse_front("L 1 / R 1")
    assert parse_front(f.text()) == f


def test_syntax_errors_carry_position():
    with pytest.raises(FrontSyntaxError) as err:
        parse_front("L 1\nQ 1\nR 1")
    assert err.value.line == 2
    with pytest.raises(FrontSyntaxError):
        parse_front("L 0\nR 0")
    with pytest.raises(FrontSyntaxError):
        parse_front("front u\nL 1\nR 1")


def test_strand_count_errors():
    with pytest.raises(StrandCountError):
        FrontDiagram([("L", 1)])
    with pytest.raises(StrandCountError):
        FrontDiagram([("L", 1), ("X", 2), ("R", 1)])
    with pytest.raises(StrandCountError):
        FrontDiagram([("L", 1), ("R", 2)])


def test_counts():
    assert strand_counts(get_front("trefoil").events) == [0, 2, 4, 4, 4, 4, 2, 0]
    assert get_front("m946").front.counts[3] == 6


def test_invariants_of_unknot_and_trefoil():
    u = classical_invariants(get_front("unknot"))
    assert (u.tb, u.rot, u.components, u.crossings) == (-1, 0, 1, 0)
    t = classical_invariants(get_front("trefoil"))
    assert (t.tb, t.rot, t.writhe, t.left_cusps) == (1, 0, 3, 2)


def test_reversal_negates_rot():
    f = stabilize(get_front("trefoil"), "+")
    assert f.rot == 1
    assert f.reversed().rot == -1
    assert f.reversed().tb == f.tb


def test_two_component_link():
    two = orient(n_copy(get_front("unknot").front, 2))
    assert two.front.n_components == 2
    # tb adds over components plus twice the linking, which is tb(U) = -1
    assert two.tb == -4
    assert two.component_rots() == [0, 0]


def test_maslov_labeling_cusp_rule():
    f = get_front("m946")
    m = maslov_labeling(f)
    assert m.modulus == 0
    for g, (k, i) in enumerate(f.events):
        if k == "L":
            assert m[(g + 1, i)] == m[(g + 1, i + 1)] + 1
        if k == "R":
            assert m[(g, i)] == m[(g, i + 1)] + 1


def test_maslov_modulus_of_stabilised():
    f = stabilize(get_front("unknot"), "+")
    assert maslov_labeling(f).modulus == 2


@given(st.integers(1, 4))
def test_torus_tb(k):
    n = 2 * k + 1
    f = torus_front(n)
    assert (f.tb, f.rot) == (n - 2, 0)


@given(st.lists(st.sampled_from("+-"), max_size=5))
def test_stabilisation_invariants(signs):
    f = get_front("trefoil")
    g = f
    for s in signs:
        g = stabilize(g, s)
    assert g.tb == f.tb - len(signs)
    assert g.rot == f.rot + signs.count("+") - signs.count("-")
