from itertools import combinations

import pytest

from adnilideals.ideals import (
    Ideal,
    bracket,
    enumerate_ideals,
    generators,
    ideal_from_generators,
    ideal_json,
    normalizer_simple_roots,
    power,
    power_sequence,
)
from adnilideals.rootsys import build_root_system, vadd, vsub

CENSUS_CODES = ["A1", "A2", "A3", "A4", "B2", "B3", "G2"]


def brute_force_ideals(rs):
    """Independent oracle: filter every subset of the positive roots by the
    upward-closure condition."""
    pos = rs.positive_roots
    out = set()
    for size in range(len(pos) + 1):
        for combo in combinations(pos, size):
            s = frozenset(combo)
            ok = True
            for a in s:
                for b in pos:
                    t = vadd(a, b)
                    if t in rs.roots and t not in s:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.add(s)
    return out


@pytest.mark.parametrize("code", CENSUS_CODES)
def test_enumeration_matches_brute_force(code):
    rs = build_root_system(code)
    got = {I.roots for I in enumerate_ideals(rs)}
    assert got == brute_force_ideals(rs)


def test_ideal_counts():
    expected = {"A1": 2, "A2": 5, "A3": 14, "A4": 42, "B2": 6, "B3": 20, "G2": 8}
    for code, count in expected.items():
        assert len(enumerate_ideals(build_root_system(code))) == count


def test_enumeration_order_is_size_then_lex():
    rs = build_root_system("B3")
    keys = [
        (len(I), tuple(sorted(rs.index(r) for r in I.roots)))
        for I in enumerate_ideals(rs)
    ]
    assert keys == sorted(keys)


def test_ideal_constructor_rejects_non_closed():
    rs = build_root_system("A2")
    with pytest.raises(ValueError, match="not upward closed"):
        Ideal(rs, frozenset({(1, 0)}))
    with pytest.raises(ValueError, match="not a positive root"):
        Ideal(rs, frozenset({(2, 2)}))


def test_generators_zero_ideal():
    rs = build_root_system("A2")
    assert generators(Ideal(rs, frozenset())) == ()


def test_generators_g2_examples():
    rs = build_root_system("G2")
    I = Ideal(rs, frozenset({(3, 1), (3, 2)}))
    assert generators(I) == ((3, 1),)
    J = Ideal(rs, frozenset({(1, 0), (1, 1), (2, 1), (3, 1), (3, 2)}))
    assert generators(J) == ((1, 0),)


@pytest.mark.parametrize("code", ["A1", "A2", "A3", "A4", "B2", "B3", "G2"])
def test_generator_round_trips(code):
    rs = build_root_system(code)
    for I in enumerate_ideals(rs):
        gens = generators(I)
        # the generator set is an antichain
        for a in gens:
            for b in gens:
                if a != b:
                    diff = vsub(a, b)
                    assert not (min(diff) >= 0 and any(diff))
        assert ideal_from_generators(rs, gens) == I


def test_ideal_from_generators_b3_examples():
    rs = build_root_system("B3")
    I = ideal_from_generators(rs, [(0, 1, 1), (1, 1, 0)])
    assert I.roots == {
        (1, 1, 0),
        (0, 1, 1),
        (0, 1, 2),
        (1, 1, 1),
        (1, 1, 2),
        (1, 2, 2),
    }
    J = ideal_from_generators(rs, [(0, 1, 2), (1, 1, 0)])
    assert I.roots == J.roots | {(0, 1, 1)}


def test_ideal_from_generators_empty_and_errors():
    rs = build_root_system("B3")
    assert len(ideal_from_generators(rs, [])) == 0
    with pytest.raises(ValueError, match="not a positive root"):
        ideal_from_generators(rs, [(5, 0, 0)])


def test_bracket_examples():
    a2 = build_root_system("A2")
    maximal = ideal_from_generators(a2, a2.simple_roots)
    zero = Ideal(a2, frozenset())
    assert bracket(maximal, zero).roots == frozenset()
    assert bracket(maximal, maximal).roots == {(1, 1)}
    g2 = build_root_system("G2")
    gmax = ideal_from_generators(g2, g2.simple_roots)
    assert bracket(gmax, gmax).roots == {(1, 1), (2, 1), (3, 1), (3, 2)}


def test_bracket_context_mismatch():
    a2 = build_root_system("A2")
    a3 = build_root_system("A3")
    with pytest.raises(ValueError, match="different root systems"):
        bracket(Ideal(a2, frozenset()), Ideal(a3, frozenset()))


def test_bracket_monotone_a3():
    rs = build_root_system("A3")
    ideals = enumerate_ideals(rs)
    probe = ideals[len(ideals) // 2]
    for I in ideals:
        for J in ideals:
            if I.roots <= J.roots:
                assert bracket(I, probe).roots <= bracket(J, probe).roots


def test_power_sizes():
    g2 = build_root_system("G2")
    gmax = ideal_from_generators(g2, g2.simple_roots)
    assert [len(power(gmax, k)) for k in range(1, 7)] == [6, 4, 3, 2, 1, 0]
    a2 = build_root_system("A2")
    amax = ideal_from_generators(a2, a2.simple_roots)
    assert [len(power(amax, k)) for k in range(1, 4)] == [3, 1, 0]
    assert power(amax, 1) == amax
    with pytest.raises(ValueError):
        power(amax, 0)


@pytest.mark.parametrize("code", ["A3", "B3", "G2"])
def test_power_sequence_descends(code):
    rs = build_root_system(code)
    for I in enumerate_ideals(rs):
        seq = power_sequence(I)
        for a, b in zip(seq, seq[1:]):
            assert b.roots < a.roots


def test_normalizer_examples():
    a2 = build_root_system("A2")
    assert normalizer_simple_roots(Ideal(a2, frozenset())) == set(a2.simple_roots)
    b3 = build_root_system("B3")
    I = ideal_from_generators(b3, [(0, 1, 1), (1, 1, 0)])
    assert normalizer_simple_roots(I) == frozenset()
    g2 = build_root_system("G2")
    assert normalizer_simple_roots(Ideal(g2, frozenset({(3, 1), (3, 2)}))) == {(0, 1)}


def test_ideal_json_shape():
    rs = build_root_system("G2")
    I = Ideal(rs, frozenset({(3, 1), (3, 2)}))
    assert ideal_json(I) == {"system": "G2", "roots": [[3, 1], [3, 2]]}
