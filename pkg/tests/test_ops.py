import pytest

from frontcalc.corpus import get_front, get_pattern
from frontcalc.front import FrontError, classical_invariants
from frontcalc.ops import (
    Pattern,
    cusp_connect_sum,
    double_stabilize,
    full_twist,
    n_copy,
    parse_pattern,
    satellite,
    stabilize,
    torus_front,
    trivial_pattern,
    whitehead_pattern,
)
from frontcalc.smooth import jones, resolve, smooth_satellite

KNOTS = ["unknot", "trefoil", "m946", "T2_5"]


def test_stabilize_signs():
    t = get_front("trefoil")
    assert (stabilize(t, "+").tb, stabilize(t, "+").rot) == (0, 1)
    assert (stabilize(t, "-").tb, stabilize(t, "-").rot) == (0, -1)
    with pytest.raises(ValueError):
        stabilize(t, "x")


def test_double_stabilize():
    s = double_stabilize(get_front("m946"), 2)
    assert (s.tb, s.rot) == (-5, 0)
    assert s.name == "S2(m946)"


def test_whitehead_pattern_shape():
    w = whitehead_pattern()
    assert w.arity == 2 and w.crossings == 2 and w.closure_cycles() == 1
    assert w.events == get_pattern("W0").events


def test_trivial_satellite_is_identity():
    for name in KNOTS:
        k = get_front(name)
        assert satellite(k, trivial_pattern(1)).front.front == k.front


@pytest.mark.parametrize("name", ["unknot", "trefoil", "T2_5"])
def test_satellite_matches_smooth_contact_framing(name):
    # the resolved front's blackboard framing is the contact framing
    k = get_front(name)
    d = resolve(k)
    assert d.writhe == k.tb
    w = whitehead_pattern()
    assert jones(resolve(satellite(k, w).front), None) == jones(smooth_satellite(d, w), None)


def test_n_copy_components():
    t = get_front("trefoil").front
    assert n_copy(t, 2).n_components == 2
    assert n_copy(t, 3).n_components == 3


def test_full_twist():
    w = whitehead_pattern()
    assert full_twist(w, 0) is w
    tw = full_twist(w, 1)
    assert tw.crossings == 4 and tw.legendrian
    assert not full_twist(w, -1).legendrian
    with pytest.raises(FrontError):
        satellite(get_front("unknot"), full_twist(w, -1))


def test_connect_sum_invariants():
    t = get_front("trefoil")
    s = cusp_connect_sum(t, t)
    # tb(K1 # K2) = tb(K1) + tb(K2) + 1
    assert (s.tb, s.rot) == (2 * t.tb + 1, 0)
    m = cusp_connect_sum(get_front("m946"), t)
    assert m.tb == get_front("m946").tb + t.tb + 1


def test_torus_front_rejects_even():
    with pytest.raises(ValueError):
        torus_front(4)
    assert classical_invariants(torus_front(3)).crossings == 3


def test_pattern_parsing():
    p = parse_pattern("pattern P arity 1\nL 2\nX 1\nX 1\nR 2\nend\n")
    assert p.name == "P" and p.arity == 1
    assert parse_pattern(p.text()) == p
    with pytest.raises(FrontError):
        parse_pattern("L 2\nR 2")
    with pytest.raises(FrontError):
        Pattern(2, (("R", 1),))


def test_boundary_permutation():
    assert trivial_pattern(3).boundary_permutation() == (1, 2, 3)
    assert Pattern(2, (("X", 1),)).boundary_permutation() == (2, 1)
