"""Exhaustive desk-scale verification suites.

Each suite returns its deterministic summary lines and raises
equiv.VerificationError with a counterexample dump on the first failure.
"""

from __future__ import annotations

from . import affine, signtypes
from .equiv import (
    VerificationError,
    single_moves,
    star_class_compatibility,
    star_witness_for_move,
)
from .ideals import enumerate_ideals
from .orbits import generic_jordan_type, ideal_from_partition
from .rootsys import build_root_system
from .typea import format_partition, from_element, green_partition, partitions_of

STAR_WITNESS_SYSTEMS = ("A2", "A3", "A4")
STAR_CLASS_SYSTEMS = ("A2", "A3")
SIGNTYPE_ELEMENT_SYSTEMS = ("A1", "A2", "A3")
BIJECTION_SYSTEMS = ("A1", "A2", "A3", "A4", "B2", "B3", "G2")
GREEN_JORDAN_SYSTEMS = ("A2", "A3")
MAX_SCAN_LENGTH = 8


def star_witness_suite(codes=STAR_WITNESS_SYSTEMS) -> list[str]:
    """One star-operation witness per single move, all assertions checked."""
    lines = []
    for code in codes:
        rs = build_root_system(code)
        ideals = enumerate_ideals(rs)
        moves = [m for I in ideals for m in single_moves(I)]
        for move in moves:
            star_witness_for_move(move)
        lines.append(
            f"{code}: {len(ideals)} ideals, {len(moves)} moves, all witnesses pass"
        )
    return lines


def star_class_suite(codes=STAR_CLASS_SYSTEMS, max_length: int = MAX_SCAN_LENGTH) -> list[str]:
    """Every star step on a dominant element lands on a dominant element whose
    first layer ideal is equal or one move away."""
    lines = []
    for code in codes:
        rs = build_root_system(code)
        pairs = [
            (s, t)
            for s in range(rs.rank + 1)
            for t in range(s + 1, rs.rank + 1)
            if affine.braid_order(rs, s, t) == 3
        ]
        dominants = affine.dominant_elements_up_to_length(rs, max_length)
        checked = equal = moved = 0
        for w in dominants:
            for s, t in pairs:
                if len(affine.left_descents(w) & {s, t}) != 1:
                    continue
                report = star_class_compatibility(w, s, t)
                checked += 1
                if report.relation == "equal":
                    equal += 1
                else:
                    moved += 1
        lines.append(
            f"{code}: {len(dominants)} dominant elements up to length {max_length}, "
            f"{checked} star steps ({equal} equal ideals, {moved} one move), all pass"
        )
    return lines


def signtype_suite(
    element_codes=SIGNTYPE_ELEMENT_SYSTEMS,
    ideal_codes=BIJECTION_SYSTEMS,
    max_length: int = MAX_SCAN_LENGTH,
) -> list[str]:
    """Sign type of a dominant element equals the sign type of its first
    layer ideal, over exhaustive alcove scans and all minimal elements."""
    lines = []
    for code in element_codes:
        rs = build_root_system(code)
        dominants = affine.dominant_elements_up_to_length(rs, max_length)
        for w in dominants:
            st = signtypes.sign_type_of_element(w)
            if not signtypes.is_dominant_sign_type(st):
                raise VerificationError(
                    "dominant element produced a negative sign",
                    {"system": code, "word": affine.word_of(w)},
                )
            expected = signtypes.sign_type_of_ideal(affine.first_layer_ideal(w))
            if st != expected:
                raise VerificationError(
                    "sign type mismatch on a dominant element",
                    {
                        "system": code,
                        "word": affine.word_of(w),
                        "element_signs": st.signs,
                        "ideal_signs": expected.signs,
                    },
                )
        lines.append(
            f"{code}: {len(dominants)} dominant elements up to length {max_length} agree"
        )
    for code in ideal_codes:
        rs = build_root_system(code)
        ideals = enumerate_ideals(rs)
        for I in ideals:
            w = affine.minimal_element(I)
            if signtypes.sign_type_of_element(w) != signtypes.sign_type_of_ideal(I):
                raise VerificationError(
                    "sign type mismatch on a minimal element",
                    {"system": code, "ideal": I.sorted_roots},
                )
        lines.append(f"{code}: {len(ideals)} minimal elements agree")
    return lines


def green_jordan_suite(
    codes=GREEN_JORDAN_SYSTEMS,
    max_length: int = MAX_SCAN_LENGTH,
    seed: int = 0,
    trials: int = 5,
) -> list[str]:
    """Green's partition of a dominant affine permutation equals the generic
    Jordan type of its first layer ideal."""
    lines = []
    for code in codes:
        rs = build_root_system(code)
        jordan_cache: dict = {}

        def jordan(I):
            if I not in jordan_cache:
                jordan_cache[I] = generic_jordan_type(I, seed=seed, trials=trials)
            return jordan_cache[I]

        witnesses = []
        for I in enumerate_ideals(rs):
            witnesses.append(affine.minimal_element(I))
        n_minimal = len(witnesses)
        witnesses.extend(affine.dominant_elements_up_to_length(rs, max_length))
        for w in witnesses:
            mu = green_partition(from_element(w))
            p = jordan(affine.first_layer_ideal(w))
            if mu != p:
                raise VerificationError(
                    "partition mismatch between chain order and orbit label",
                    {
                        "system": code,
                        "word": affine.word_of(w),
                        "green": mu,
                        "jordan": p,
                    },
                )
        lines.append(
            f"{code}: {n_minimal} minimal + {len(witnesses) - n_minimal} dominant "
            f"elements up to length {max_length} agree"
        )
    return lines


def surjectivity_suite(ns=(2, 3, 4, 5, 6), seed: int = 0, trials: int = 5) -> list[str]:
    """Every partition is the generic Jordan type of its weight-gap ideal."""
    lines = []
    for n in ns:
        parts_list = partitions_of(n)
        for parts in parts_list:
            I = ideal_from_partition(n, parts)
            jt = generic_jordan_type(I, seed=seed, trials=trials)
            if jt != parts:
                raise VerificationError(
                    "weight-gap ideal has the wrong generic Jordan type",
                    {"n": n, "partition": parts, "jordan": jt},
                )
        lines.append(
            f"n={n}: {len(parts_list)} partitions realized "
            f"({', '.join(format_partition(p) for p in parts_list)})"
        )
    return lines


def bijection_suite(codes=BIJECTION_SYSTEMS) -> list[str]:
    """Minimal element and first layer ideal are mutually inverse, minimality
    holds, the inversion-set size is the total size of the ideal powers, and
    both generator/normalizer criteria agree."""
    from .ideals import generators as direct_generators
    from .ideals import normalizer_simple_roots as direct_normalizer
    from .ideals import power_sequence

    lines = []
    for code in codes:
        rs = build_root_system(code)
        ideals = enumerate_ideals(rs)
        for I in ideals:
            w = affine.minimal_element(I)
            if not affine.is_minimal(w):
                raise VerificationError(
                    "constructed element is not minimal",
                    {"system": code, "ideal": I.sorted_roots},
                )
            if affine.first_layer_ideal(w) != I:
                raise VerificationError(
                    "first layer of the minimal element is not the ideal",
                    {"system": code, "ideal": I.sorted_roots},
                )
            if affine.length(w) != sum(len(P) for P in power_sequence(I)):
                raise VerificationError(
                    "length differs from the total size of the ideal powers",
                    {"system": code, "ideal": I.sorted_roots},
                )
            if affine.generators_via_affine(I) != direct_generators(I):
                raise VerificationError(
                    "generator criteria disagree",
                    {"system": code, "ideal": I.sorted_roots},
                )
            if affine.normalizer_via_affine(I) != direct_normalizer(I):
                raise VerificationError(
                    "normalizer criteria disagree",
                    {"system": code, "ideal": I.sorted_roots},
                )
        lines.append(f"{code}: {len(ideals)} ideals round-trip with matching criteria")
    return lines
