import pytest
from hypothesis import given, strategies as st

from bbquiver.diagram import (
    Crossing,
    Diagram,
    DiagramError,
    SmoothingState,
    all_states,
    component_cycles,
    components,
    disjoint_union,
    format_diagram,
    from_braid,
    parse_diagram,
    relabel,
    state_circles,
    unknot,
    writhe,
)
from bbquiver.fixtures import load_diagram


@st.composite
def braids(draw, max_strands=3, max_len=6):
    n = draw(st.integers(2, max_strands))
    gens = [g for i in range(1, n) for g in (i, -i)]
    word = draw(st.lists(st.sampled_from(gens), min_size=1, max_size=max_len))
    return n, word


def test_parse_and_format():
    d = parse_diagram("X + 0 2 1 3 / X + 3 1 2 0  # hopf\n")
    assert d.num_semiarcs == 4 and len(d) == 2 and d.free_loops == 0
    assert parse_diagram(format_diagram(d)) == d
    assert parse_diagram("O O O").free_loops == 3
    assert parse_diagram("") == Diagram(0, (), 0)


@pytest.mark.parametrize(
    "text,line",
    [
        ("X + 0 1 1", 1),
        ("X + 0 1 1 0\nX * 2 3 3 2", 2),
        ("X + 0 1 1 q", 1),
        ("Y", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(DiagramError) as info:
        parse_diagram(text, source="d.dia")
    assert info.value.line == line


@pytest.mark.parametrize("text", ["X + 0 1 0 1", "X + 0 1 2 3 / X + 2 3 1 0", "X + 0 1 1 5"])
def test_inconsistent_semiarcs_rejected(text):
    with pytest.raises(DiagramError):
        parse_diagram(text)


def test_fixture_properties():
    assert writhe(load_diagram("hopf_pos.dia")) == 2
    assert writhe(load_diagram("hopf_neg.dia")) == -2
    assert components(load_diagram("hopf_pos.dia")) == 2
    assert components(load_diagram("trefoil.dia")) == 1
    assert components(load_diagram("figure8.dia")) == 1
    assert components(load_diagram("unlink2.dia")) == 2
    assert writhe(load_diagram("figure8.dia")) == 0


@given(braids())
def test_braid_closures_are_valid_and_round_trip(bw):
    n, word = bw
    d = from_braid(n, word)
    assert len(d) == len(word)
    assert writhe(d) == sum(1 if g > 0 else -1 for g in word)
    assert parse_diagram(format_diagram(d)) == d
    assert sum(len(c) for c in component_cycles(d)) == d.num_semiarcs


@given(braids(), st.randoms())
def test_relabel_preserves_structure(bw, rnd):
    d = from_braid(*bw)
    perm = list(range(d.num_semiarcs))
    rnd.shuffle(perm)
    e = relabel(d, perm)
    assert components(e) == components(d)
    for s in all_states(d):
        assert state_circles(e, s) == state_circles(d, s)


def test_state_indexing():
    s = SmoothingState.from_index(0b101, 3)
    assert s.choices == ("B", "A", "B")
    assert s.flip(1).choices == ("B", "B", "B")
    assert len(list(all_states(load_diagram("trefoil.dia")))) == 8


def test_circle_counts_on_small_diagrams():
    kink = load_diagram("kink_pos.dia")
    # oriented smoothing of a kink splits it, disoriented keeps one circle
    assert state_circles(kink, ("A",)) == 2
    assert state_circles(kink, ("B",)) == 1
    assert state_circles(unknot(), ()) == 1
    assert state_circles(parse_diagram("O O"), ()) == 2


@given(braids(), braids())
def test_disjoint_union_adds(b1, b2):
    d1, d2 = from_braid(*b1), from_braid(*b2)
    u = disjoint_union(d1, d2)
    assert components(u) == components(d1) + components(d2)
    assert writhe(u) == writhe(d1) + writhe(d2)


def test_crossing_left_side():
    c = Crossing(1, 0, 1, 2, 3)
    assert (c.under_left, c.over_left, c.under_right, c.over_right) == (0, 3, 1, 2)
    c = Crossing(-1, 0, 1, 2, 3)
    assert (c.under_left, c.over_left, c.under_right, c.over_right) == (1, 2, 0, 3)
