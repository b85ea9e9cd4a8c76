import random
from fractions import Fraction

import pytest

from adnilideals import affine
from adnilideals.affine import (
    act,
    affine_simple_roots,
    braid_order,
    compose,
    dominant_elements_up_to_length,
    elements_up_to_length,
    first_layer_ideal,
    from_word,
    generators_via_affine,
    identity,
    interior_point_image,
    inverse,
    inversion_set,
    is_dominant,
    is_minimal,
    is_positive_affine,
    left_descents,
    length,
    minimal_element,
    normalizer_via_affine,
    simple_reflection,
    star_left,
    word_of,
)
from adnilideals.ideals import (
    Ideal,
    enumerate_ideals,
    generators,
    ideal_from_generators,
    normalizer_simple_roots,
    power_sequence,
)
from adnilideals.rootsys import build_root_system, vneg


def reflection_oracle(rs, mirror, x):
    """Reflection on affine roots straight from the bilinear form."""
    gamma, m = mirror
    beta, k = x
    c = 2 * rs.inner(beta, gamma) / rs.inner(gamma, gamma)
    assert c.denominator == 1
    c = int(c)
    return (
        tuple(b - c * g for b, g in zip(beta, gamma)),
        k - c * m,
    )


def test_act_matches_reflection_oracle_a2():
    rs = build_root_system("A2")
    for idx, mirror in enumerate(affine_simple_roots(rs)):
        s = simple_reflection(rs, idx)
        for beta in rs.roots:
            for k in range(-2, 3):
                assert act(s, (beta, k)) == reflection_oracle(rs, mirror, (beta, k))


def test_identity_acts_trivially():
    rs = build_root_system("B2")
    e = identity(rs)
    for beta in rs.roots:
        for k in range(-2, 3):
            assert act(e, (beta, k)) == (beta, k)


def test_s0_negates_its_own_root():
    rs = build_root_system("A2")
    a0 = affine_simple_roots(rs)[0]
    s0 = simple_reflection(rs, 0)
    assert act(s0, a0) == (vneg(a0[0]), -a0[1])


def test_from_word_identities():
    rs = build_root_system("A2")
    assert from_word(rs, []) == identity(rs)
    for i in range(rs.rank + 1):
        assert from_word(rs, [i, i]) == identity(rs)


def test_affine_a1_has_no_braid_relation():
    rs = build_root_system("A1")
    assert from_word(rs, [0, 1, 0]) != from_word(rs, [1, 0, 1])
    assert braid_order(rs, 0, 1) == 0  # infinite


def test_compose_matches_word_concatenation():
    rs = build_root_system("A2")
    rng = random.Random(4821)
    for _ in range(40):
        w1 = [rng.randrange(3) for _ in range(rng.randrange(6))]
        w2 = [rng.randrange(3) for _ in range(rng.randrange(6))]
        assert from_word(rs, w1 + w2) == compose(from_word(rs, w1), from_word(rs, w2))


def test_inversion_set_examples():
    rs = build_root_system("A2")
    assert inversion_set(identity(rs)) == frozenset()
    for i, a in enumerate(affine_simple_roots(rs)):
        assert inversion_set(simple_reflection(rs, i)) == {a}
    theta = rs.highest_root
    assert inversion_set(simple_reflection(rs, 0)) == {(vneg(theta), 1)}


def test_length_equals_bfs_depth():
    rs = build_root_system("A2")
    for depth, level in enumerate(elements_up_to_length(rs, 8)):
        for w in level:
            assert length(w) == depth
            assert len(inversion_set(w)) == depth


def test_inverse_and_length_symmetry():
    rs = build_root_system("A2")
    rng = random.Random(99)
    for _ in range(25):
        w = from_word(rs, [rng.randrange(3) for _ in range(rng.randrange(8))])
        assert compose(w, inverse(w)) == identity(rs)
        assert length(inverse(w)) == length(w)


def test_dominance_examples():
    rs = build_root_system("A2")
    assert is_dominant(identity(rs))
    assert is_dominant(simple_reflection(rs, 0))
    assert not is_dominant(simple_reflection(rs, 1))


def test_dominance_conditions_agree():
    # image test on the finite simple roots versus the shape of N(w)
    rs = build_root_system("A2")
    dominant_shape = lambda w: all(
        k >= 1 and max(beta) < 0 for beta, k in inversion_set(w)
    )
    for level in elements_up_to_length(rs, 8):
        for w in level:
            assert is_dominant(w) == dominant_shape(w)


def test_minimality_examples():
    rs = build_root_system("A1")
    assert is_minimal(identity(rs))
    assert is_minimal(simple_reflection(rs, 0))
    witness = from_word(rs, [1, 0])
    assert is_dominant(witness) and not is_minimal(witness)
    # it is the shortest dominant non-minimal element
    shorter = [
        w
        for level in elements_up_to_length(rs, 6)
        for w in level
        if is_dominant(w) and not is_minimal(w)
    ]
    assert min(length(w) for w in shorter) == 2


def test_minimal_element_examples():
    a2 = build_root_system("A2")
    assert minimal_element(Ideal(a2, frozenset())) == identity(a2)
    theta_ideal = ideal_from_generators(a2, [a2.highest_root])
    assert minimal_element(theta_ideal) == simple_reflection(a2, 0)
    g2 = build_root_system("G2")
    gmax = ideal_from_generators(g2, g2.simple_roots)
    assert length(minimal_element(gmax)) == 16


@pytest.mark.parametrize("code", ["A1", "A2", "A3", "A4", "B2", "B3", "G2"])
def test_minimal_bijection_round_trip(code):
    rs = build_root_system(code)
    for I in enumerate_ideals(rs):
        w = minimal_element(I)
        assert is_minimal(w)
        assert first_layer_ideal(w) == I
        assert inversion_set(w) == {
            (vneg(g), k)
            for k, P in enumerate(power_sequence(I), start=1)
            for g in P.roots
        }


def test_minimal_elements_biject_with_ideals_a2():
    rs = build_root_system("A2")
    minimal = [
        w
        for level in elements_up_to_length(rs, 8)
        for w in level
        if is_minimal(w)
    ]
    ideals = {I for I in enumerate_ideals(rs)}
    short_ideals = {I for I in ideals if minimal_element(I) in minimal}
    # within the scanned length range, first layer + minimal element invert
    assert {first_layer_ideal(w) for w in minimal} <= ideals
    for w in minimal:
        assert minimal_element(first_layer_ideal(w)) == w
    assert short_ideals == {first_layer_ideal(w) for w in minimal}


def test_first_layer_examples():
    rs = build_root_system("A2")
    assert first_layer_ideal(identity(rs)) == Ideal(rs, frozenset())
    assert first_layer_ideal(simple_reflection(rs, 0)).roots == {rs.highest_root}
    with pytest.raises(ValueError, match="dominant"):
        first_layer_ideal(simple_reflection(rs, 1))


def test_generator_criterion_examples():
    g2 = build_root_system("G2")
    assert generators_via_affine(Ideal(g2, frozenset())) == ()
    assert generators_via_affine(Ideal(g2, frozenset({(3, 1), (3, 2)}))) == ((3, 1),)


@pytest.mark.parametrize("code", ["A3", "G2"])
def test_generator_criteria_agree(code):
    rs = build_root_system(code)
    for I in enumerate_ideals(rs):
        assert generators_via_affine(I) == generators(I)


def test_normalizer_criterion_examples():
    g2 = build_root_system("G2")
    assert normalizer_via_affine(Ideal(g2, frozenset())) == set(g2.simple_roots)
    b3 = build_root_system("B3")
    I = ideal_from_generators(b3, [(0, 1, 1), (1, 1, 0)])
    assert normalizer_via_affine(I) == frozenset()


@pytest.mark.parametrize("code", ["A3", "G2"])
def test_normalizer_criteria_agree(code):
    rs = build_root_system(code)
    for I in enumerate_ideals(rs):
        assert normalizer_via_affine(I) == normalizer_simple_roots(I)


def test_left_descents_examples():
    rs = build_root_system("A2")
    assert left_descents(identity(rs)) == frozenset()
    for i in range(3):
        assert left_descents(simple_reflection(rs, i)) == {i}
    assert left_descents(from_word(rs, [1, 0])) == {1}


def test_left_descents_match_length_drops():
    rs = build_root_system("A2")
    rng = random.Random(7)
    for _ in range(30):
        w = from_word(rs, [rng.randrange(3) for _ in range(rng.randrange(7))])
        lw = length(w)
        for s in range(3):
            shorter = length(compose(simple_reflection(rs, s), w)) == lw - 1
            assert (s in left_descents(w)) == shorter


def test_star_left_examples():
    rs = build_root_system("A2")
    s, t = 1, 2
    w = simple_reflection(rs, s)
    assert star_left(w, s, t) == from_word(rs, [t, s])
    assert star_left(identity(rs), s, t) is None
    a1 = build_root_system("A1")
    with pytest.raises(ValueError, match="star undefined"):
        star_left(simple_reflection(a1, 0), 0, 1)


def test_star_left_is_involution():
    rs = build_root_system("A2")
    rng = random.Random(123)
    pairs = [(0, 1), (0, 2), (1, 2)]
    checked = 0
    while checked < 50:
        w = from_word(rs, [rng.randrange(3) for _ in range(rng.randrange(9))])
        for s, t in pairs:
            v = star_left(w, s, t)
            if v is None:
                continue
            assert star_left(v, s, t) == w
            checked += 1


def test_interior_point_identity_bounds():
    for code in ["A2", "B3", "G2"]:
        rs = build_root_system(code)
        x0 = interior_point_image(identity(rs))
        for alpha in rs.positive_roots:
            v = rs.inner(x0, alpha)
            assert 0 < v < 1


def test_interior_point_s0_image():
    rs = build_root_system("A2")
    y = interior_point_image(simple_reflection(rs, 0))
    assert y == (Fraction(5, 6), Fraction(5, 6))
    assert rs.inner(y, rs.highest_root) > 1
    assert 0 < rs.inner(y, (1, 0)) < 1
    assert 0 < rs.inner(y, (0, 1)) < 1


def test_interior_point_detects_dominance():
    rs = build_root_system("A2")
    for level in elements_up_to_length(rs, 8):
        for w in level:
            y = interior_point_image(w)
            chamber = all(rs.inner(y, a) > 0 for a in rs.simple_roots)
            assert chamber == is_dominant(w)


@pytest.mark.parametrize("code", ["A1", "A2", "A3"])
def test_descent_images_stay_in_first_layer(code):
    # a dominant element drops an affine simple root to -k*delta + beta with
    # beta in the first layer ideal; at k = 1 beta is one of its generators
    rs = build_root_system(code)
    for w in dominant_elements_up_to_length(rs, 8):
        I = first_layer_ideal(w)
        winv = inverse(w)
        for a in affine_simple_roots(rs):
            img = act(winv, a)
            if is_positive_affine(img):
                continue
            beta, negk = img[0], img[1]
            assert negk <= -1
            assert beta in I.roots
            if negk == -1:
                assert beta in generators(I)


@pytest.mark.parametrize("code", ["A2", "A3"])
def test_star_preserves_dominance(code):
    rs = build_root_system(code)
    pairs = [
        (s, t)
        for s in range(rs.rank + 1)
        for t in range(s + 1, rs.rank + 1)
        if braid_order(rs, s, t) == 3
    ]
    for w in dominant_elements_up_to_length(rs, 8):
        for s, t in pairs:
            v = star_left(w, s, t)
            if v is not None:
                assert is_dominant(v)


@pytest.mark.parametrize("code", ["A2", "A3"])
def test_simple_images_normalize_first_layer(code):
    rs = build_root_system(code)
    simple_set = set(affine_simple_roots(rs))
    for w in dominant_elements_up_to_length(rs, 8):
        I = first_layer_ideal(w)
        for alpha in rs.simple_roots:
            if act(w, (alpha, 0)) in simple_set:
                assert alpha in normalizer_simple_roots(I)


def test_word_of_round_trip():
    rs = build_root_system("A3")
    rng = random.Random(31)
    for _ in range(25):
        w = from_word(rs, [rng.randrange(4) for _ in range(rng.randrange(9))])
        word = word_of(w)
        assert from_word(rs, word) == w
        assert len(word) == length(w)
