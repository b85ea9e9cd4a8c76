from fractions import Fraction

import pytest

from adnilideals.rootsys import (
    build_root_system,
    inner_product,
    reflect,
    vadd,
    vneg,
)

ALL_CODES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "G2"]


def e_coordinate_positive_roots(code):
    """Independent construction of the positive roots in e-coordinates,
    converted back to simple-root coefficients."""
    family, rank = code[0], int(code[1:])
    out = set()
    if family == "A":
        # e_i - e_j = alpha_i + ... + alpha_{j-1}
        for i in range(1, rank + 2):
            for j in range(i + 1, rank + 2):
                out.add(tuple(1 if i <= k < j else 0 for k in range(1, rank + 1)))
    elif family == "B":
        # alpha_k = e_k - e_{k+1} (k < n), alpha_n = e_n; invert the basis
        def from_e(v):
            coeffs = []
            total = 0
            for k in range(rank):
                total += v[k]
                coeffs.append(total)
            return tuple(coeffs)

        for i in range(rank):
            e_i = [0] * rank
            e_i[i] = 1
            out.add(from_e(e_i))
            for j in range(i + 1, rank):
                for sj in (1, -1):
                    v = [0] * rank
                    v[i], v[j] = 1, sj
                    out.add(from_e(v))
    return out


@pytest.mark.parametrize("code", ["A1", "A2", "A3", "A4", "B2", "B3", "B4"])
def test_positive_roots_match_e_coordinate_model(code):
    rs = build_root_system(code)
    assert set(rs.positive_roots) == e_coordinate_positive_roots(code)


def test_positive_root_counts():
    assert len(build_root_system("A2").positive_roots) == 3
    assert len(build_root_system("B3").positive_roots) == 9
    assert len(build_root_system("G2").positive_roots) == 6


def test_a2_positive_roots():
    rs = build_root_system("A2")
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1)}


def test_g2_positive_roots_by_name():
    rs = build_root_system("G2")
    # a1=(1,0) short simple, a6=(0,1) long simple, a2..a5 stacked on top
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    assert rs.highest_root == (3, 2)


@pytest.mark.parametrize("code", ALL_CODES)
def test_highest_root_normalization(code):
    rs = build_root_system(code)
    assert inner_product(rs, rs.highest_root, rs.highest_root) == 2


def test_short_root_length_g2():
    rs = build_root_system("G2")
    assert inner_product(rs, (1, 0), (1, 0)) == Fraction(2, 3)


def test_a2_simple_pairing():
    rs = build_root_system("A2")
    assert inner_product(rs, (1, 0), (0, 1)) == -1


def test_reflect_self_is_negation():
    for code in ALL_CODES:
        rs = build_root_system(code)
        for a in rs.simple_roots:
            assert reflect(rs, a, a) == vneg(a)


def test_reflect_g2_examples():
    rs = build_root_system("G2")
    assert reflect(rs, (1, 0), (0, 1)) == (3, 1)  # short mirror sends a6 to a4
    assert reflect(rs, (0, 1), (3, 1)) == (3, 2)  # long mirror sends a4 to a5


def test_reflect_rejects_non_roots():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        reflect(rs, (2, 0), (1, 0))
    with pytest.raises(ValueError):
        reflect(rs, (1, 0), (2, 2))


@pytest.mark.parametrize("code", ALL_CODES)
def test_simple_reflection_closure(code):
    rs = build_root_system(code)
    for mirror in rs.simple_roots:
        for beta in rs.roots:
            assert reflect(rs, mirror, beta) in rs.roots


@pytest.mark.parametrize("code", ALL_CODES)
def test_positivity_partition(code):
    rs = build_root_system(code)
    pos = set(rs.positive_roots)
    neg = {vneg(r) for r in pos}
    assert pos | neg == rs.roots
    assert not pos & neg


@pytest.mark.parametrize("code", ALL_CODES)
def test_cartan_round_trip(code):
    rs = build_root_system(code)
    n = rs.rank
    for i in range(n):
        for j in range(n):
            value = (
                2
                * inner_product(rs, rs.simple_roots[i], rs.simple_roots[j])
                / inner_product(rs, rs.simple_roots[j], rs.simple_roots[j])
            )
            assert value == rs.cartan[i][j]


@pytest.mark.parametrize("code", ALL_CODES)
def test_highest_root_dominates(code):
    rs = build_root_system(code)
    theta = rs.highest_root
    for beta in rs.positive_roots:
        assert all(c >= 0 for c in vadd(theta, vneg(beta)))


@pytest.mark.parametrize("bad", ["A0", "A8", "B1", "B5", "C3", "G3", "D4", "XY"])
def test_unsupported_systems(bad):
    with pytest.raises(ValueError, match="unsupported root system"):
        build_root_system(bad)


def test_deterministic_order_is_height_then_lex():
    rs = build_root_system("B3")
    keys = [(sum(r), r) for r in rs.positive_roots]
    assert keys == sorted(keys)


def test_build_is_cached():
    assert build_root_system("A3") is build_root_system(("a", 3))
