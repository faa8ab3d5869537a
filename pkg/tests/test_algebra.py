import itertools
import json
import random

import pytest
from hypothesis import given, strategies as st

from bbquiver.algebra import (
    AxiomError,
    Biquandle,
    FormatError,
    biquandle_to_json,
    enumerate_endomorphisms,
    format_biquandle,
    homomorphism_witness,
    identity_map,
    parse_biquandle,
    verify_axioms,
)
from conftest import LINEAR
from oracles import naive_axiom_failures, naive_endomorphisms


def random_candidate(rng: random.Random):
    n = rng.randint(1, 4)
    kind = rng.random()
    if kind < 0.3:
        perm = list(range(n))
        rng.shuffle(perm)
        return [[perm[x]] * n for x in range(n)], [[perm[x]] * n for x in range(n)]
    if kind < 0.6 and LINEAR:
        b = rng.choice(LINEAR)
        U = [list(r) for r in b.under]
        O = [list(r) for r in b.over]
        if rng.random() < 0.7:
            t = rng.choice((U, O))
            t[rng.randrange(b.size)][rng.randrange(b.size)] = rng.randrange(b.size)
        return U, O
    return (
        [[rng.randrange(n) for _ in range(n)] for _ in range(n)],
        [[rng.randrange(n) for _ in range(n)] for _ in range(n)],
    )


def test_known_biquandles_pass(z2, alex3):
    assert verify_axioms(z2.under, z2.over).ok
    assert verify_axioms(alex3.under, alex3.over).ok
    for n in range(1, 5):
        t = Biquandle.trivial(n)
        assert verify_axioms(t.under, t.over).ok


def test_constant_column_fails_axiom_ii_at_that_column():
    U = [[0, 1], [0, 0]]
    O = [[0, 0], [1, 1]]
    report = verify_axioms(U, O)
    assert not report.ok
    assert any(v.axiom == "ii" and v.witness == (0,) for v in report.violations)


def test_violation_witnesses_have_axiom_arity():
    rng = random.Random(7)
    for _ in range(200):
        U, O = random_candidate(rng)
        for v in verify_axioms(U, O).violations:
            assert len(v.witness) in {"i": (1,), "ii": (1, 2), "iii": (3,)}[v.axiom]


def test_classification_matches_naive_oracle_on_random_tables():
    rng = random.Random(2024)
    seen_pass = seen_fail = 0
    for _ in range(300):
        U, O = random_candidate(rng)
        report = verify_axioms(U, O)
        assert report.axioms() == naive_axiom_failures(U, O)
        seen_pass += report.ok
        seen_fail += not report.ok
    assert seen_pass > 20 and seen_fail > 20


@pytest.mark.parametrize("U,O", [([[0, 1]], [[0, 1]]), ([[0, 2], [1, 0]], [[0, 1], [1, 0]]), ([[0]], [[0], [0]])])
def test_malformed_tables_raise_format_error(U, O):
    with pytest.raises(FormatError):
        verify_axioms(U, O)


def test_constructor_rejects_non_biquandles():
    with pytest.raises(AxiomError) as info:
        Biquandle([[1, 1], [1, 1]], [[1, 1], [1, 1]])
    assert not info.value.report.ok


@pytest.mark.parametrize("b", LINEAR, ids=lambda b: str(b.size))
def test_columns_are_permutations_and_s_inverts(b):
    for y in range(b.size):
        assert sorted(b.under[x][y] for x in range(b.size)) == list(range(b.size))
        assert sorted(b.over[x][y] for x in range(b.size)) == list(range(b.size))
    for x, y in itertools.product(range(b.size), repeat=2):
        s = b.s_map(x, y)
        assert b.s_inv[s] == (x, y)
        assert b.alpha_inv[y][b.over[x][y]] == x
        assert b.beta_inv[y][b.under[x][y]] == x


def test_z2_endomorphisms(z2):
    assert [f.table for f in enumerate_endomorphisms(z2)] == [(0, 1), (1, 0)]


@pytest.mark.parametrize("b", LINEAR + [Biquandle.trivial(3)], ids=lambda b: str(b.size))
def test_endomorphisms_match_brute_force(b):
    got = [f.table for f in enumerate_endomorphisms(b)]
    assert got == naive_endomorphisms(b.under, b.over)
    assert identity_map(b).table in got


@pytest.mark.parametrize("b", LINEAR, ids=lambda b: str(b.size))
def test_endomorphisms_closed_under_composition(b):
    ends = enumerate_endomorphisms(b)
    tables = {f.table for f in ends}
    for f, g in itertools.product(ends, repeat=2):
        assert f.compose(g).table in tables


def test_homomorphism_witness(z2):
    assert homomorphism_witness((0, 0), z2, z2) is not None
    assert homomorphism_witness((1, 0), z2, z2) is None


@given(st.sampled_from(LINEAR))
def test_text_and_json_round_trip(b):
    assert parse_biquandle(format_biquandle(b)) == b
    assert parse_biquandle(json.dumps(biquandle_to_json(b))) == b


@pytest.mark.parametrize(
    "text,line",
    [("", None), ("2\n0 1\n1 0\n\n0 1\n", 5), ("2\n0 1\n1 x\n\n0 1\n1 0\n", 3), ("2\n0 1\n1 2\n\n0 1\n1 0\n", 3)],
)
def test_parse_errors_report_lines(text, line):
    with pytest.raises(FormatError) as info:
        parse_biquandle(text, source="t.biq")
    assert info.value.line == line
    assert info.value.source == "t.biq"


def test_immutable(z2):
    with pytest.raises(AttributeError):
        z2.size = 3
