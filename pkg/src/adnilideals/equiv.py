"""Single moves between ideals, left-equivalence classes, the star-operation
witnesses tying moves to the affine group, and orbit-fiber reports.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import affine
from .ideals import (
    Ideal,
    enumerate_ideals,
    generators,
    normalizer_simple_roots,
)
from .orbits import generic_jordan_type
from .rootsys import Root, RootSystem, reflect, vneg, vsub
from .typea import Partition, format_partition


class VerificationError(Exception):
    """A mechanically checked claim failed; carries the counterexample."""

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}

    def __str__(self) -> str:
        base = super().__str__()
        if not self.details:
            return base
        lines = [base]
        for key in sorted(self.details):
            lines.append(f"  {key} = {self.details[key]}")
        return "\n".join(lines)


@dataclass(frozen=True)
class Move:
    """Removal of a generator from an ideal normalized by a simple-root Levi
    that raises the generator."""

    from_ideal: Ideal
    to_ideal: Ideal
    simple: Root
    generator: Root


@dataclass(frozen=True)
class EquivalenceClasses:
    blocks: tuple[tuple[Ideal, ...], ...]


def single_moves(I: Ideal) -> tuple[Move, ...]:
    """All (normalizing simple root, removable generator) pairs of the ideal."""
    rs = I.rs
    moves = []
    norm = sorted(normalizer_simple_roots(I), key=rs.order_key)
    for beta in generators(I):
        for alpha in norm:
            image = reflect(rs, alpha, beta)
            diff = vsub(image, beta)
            if any(diff) and min(diff) >= 0:
                to_ideal = Ideal(rs, I.roots - {beta})
                moves.append(Move(I, to_ideal, alpha, beta))
    moves.sort(key=lambda m: (rs.order_key(m.generator), rs.order_key(m.simple)))
    return tuple(moves)


def left_equivalence_classes(rs: RootSystem) -> EquivalenceClasses:
    """Connected components of the undirected single-move graph."""
    ideals = enumerate_ideals(rs)
    pos = {I: i for i, I in enumerate(ideals)}
    parent = list(range(len(ideals)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for I in ideals:
        for move in single_moves(I):
            a, b = find(pos[move.from_ideal]), find(pos[move.to_ideal])
            if a != b:
                parent[max(a, b)] = min(a, b)

    blocks: dict[int, list[Ideal]] = {}
    for I in ideals:
        blocks.setdefault(find(pos[I]), []).append(I)
    ordered = sorted(blocks.values(), key=lambda b: pos[b[0]])
    return EquivalenceClasses(tuple(tuple(b) for b in ordered))


# ---------------------------------------------------------------------------
# star-operation witnesses


@dataclass(frozen=True)
class StarMoveWitness:
    """A move realized inside the affine group: the minimal element of the
    larger ideal sits in a descent set where one star step lands on a
    dominant element of the smaller ideal."""

    move: Move
    w1: affine.AffineWeylElement
    w2: affine.AffineWeylElement
    ascent_index: int
    descent_index: int


def _require(cond: bool, message: str, details: dict) -> None:
    if not cond:
        raise VerificationError(message, details)


def star_witness_for_move(move: Move) -> StarMoveWitness:
    """Check that one single move corresponds to one left star step.

    Verifies, for w1 the minimal element of the larger ideal: the
    normalizing simple root and the lowered generator map to affine simple
    roots whose pairing is negative, w1 lies in the associated descent set,
    the star image is the length-lowering product, stays dominant, has the
    smaller ideal as first layer, and the inversion sets differ by exactly
    the level-one lift of the removed generator.
    """
    rs = move.from_ideal.rs
    if rs.family != "A":
        raise ValueError("star witnesses require a type A root system")
    w1 = affine.minimal_element(move.from_ideal)
    ctx_simples = affine.affine_simple_roots(rs)
    simple_index = {r: i for i, r in enumerate(ctx_simples)}

    details = {
        "system": rs.code,
        "from": move.from_ideal.sorted_roots,
        "to": move.to_ideal.sorted_roots,
        "simple": move.simple,
        "generator": move.generator,
        "w1_word": affine.word_of(w1),
        "N_w1": sorted(affine.inversion_set(w1)),
    }

    a_i = affine.act(w1, (move.simple, 0))
    _require(a_i in simple_index, "normalizing simple root image not affine simple", details)
    i = simple_index[a_i]
    a_j = affine.act(w1, (move.generator, -1))
    _require(a_j in simple_index, "lowered generator image not affine simple", details)
    j = simple_index[a_j]
    details["ascent_index"] = i
    details["descent_index"] = j

    _require(rs.inner(a_i[0], a_j[0]) < 0, "image roots do not pair negatively", details)
    _require(affine.braid_order(rs, i, j) == 3, "image pair does not braid with order 3", details)

    descents = affine.left_descents(w1)
    _require(
        descents & {i, j} == {j},
        "w1 not in the expected one-sided descent set",
        details,
    )
    w2 = affine.star_left(w1, i, j)
    sj_w1 = affine.compose(affine.simple_reflection(rs, j), w1)
    _require(w2 == sj_w1, "star image is not the length-lowering product", details)
    _require(affine.is_dominant(w2), "star image is not dominant", details)
    details["w2_word"] = affine.word_of(w2)
    details["N_w2"] = sorted(affine.inversion_set(w2))

    _require(
        affine.first_layer_ideal(w2) == move.to_ideal,
        "star image has the wrong first layer ideal",
        details,
    )
    removed = (vneg(move.generator), 1)
    _require(
        affine.inversion_set(w1)
        == affine.inversion_set(w2) | {removed},
        "inversion sets do not differ by the removed generator",
        details,
    )
    return StarMoveWitness(move, w1, w2, i, j)


@dataclass(frozen=True)
class StarClassReport:
    w: affine.AffineWeylElement
    pair: tuple[int, int]
    star_image: affine.AffineWeylElement
    relation: str  # "equal" or "move"
    move: Move | None


def star_class_compatibility(w: affine.AffineWeylElement, s: int, t: int) -> StarClassReport:
    """Check that one star step on a dominant element keeps the first layer
    ideal in the same left-equivalence class (equal, or one move away)."""
    rs = w.rs
    if rs.family != "A":
        raise ValueError("star compatibility checks require type A")
    details = {
        "system": rs.code,
        "w_word": affine.word_of(w),
        "pair": (s, t),
        "N_w": sorted(affine.inversion_set(w)),
    }
    _require(affine.is_dominant(w), "element is not dominant", details)
    w2 = affine.star_left(w, s, t)
    _require(w2 is not None, "element is not in the descent set of the pair", details)
    _require(affine.is_dominant(w2), "star image is not dominant", details)
    details["star_word"] = affine.word_of(w2)
    I1 = affine.first_layer_ideal(w)
    I2 = affine.first_layer_ideal(w2)
    if I1 == I2:
        return StarClassReport(w, (s, t), w2, "equal", None)
    for big, small in ((I1, I2), (I2, I1)):
        for move in single_moves(big):
            if move.to_ideal == small:
                return StarClassReport(w, (s, t), w2, "move", move)
    details["I1"] = I1.sorted_roots
    details["I2"] = I2.sorted_roots
    raise VerificationError("first layer ideals are neither equal nor one move apart", details)


def pl_closure(w: affine.AffineWeylElement, length_budget: int = 12) -> frozenset:
    """Closure of {w} under left star steps, kept within the length budget."""
    rs = w.rs
    pairs = [
        (s, t)
        for s in range(rs.rank + 1)
        for t in range(s + 1, rs.rank + 1)
        if affine.braid_order(rs, s, t) == 3
    ]
    seen = {w}
    queue = [w]
    while queue:
        x = queue.pop()
        for s, t in pairs:
            y = affine.star_left(x, s, t)
            if y is not None and y not in seen and affine.length(y) <= length_budget:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


# ---------------------------------------------------------------------------
# orbit fibers


@dataclass(frozen=True)
class OrbitFiberReport:
    """Left-equivalence classes against the fibers of the orbit labeling."""

    system: str
    classes: EquivalenceClasses
    class_types: tuple[Partition, ...]
    moves_checked: int
    fibers: tuple[tuple[Partition, tuple[Ideal, ...]], ...]
    split_fibers: tuple[tuple[Partition, tuple[int, ...]], ...]

    def lines(self) -> list[str]:
        out = [
            f"{self.system}: {sum(len(b) for b in self.classes.blocks)} ideals, "
            f"{len(self.classes.blocks)} classes, {len(self.fibers)} orbit fibers, "
            f"{self.moves_checked} moves preserve the orbit"
        ]
        for part, block_ids in self.split_fibers:
            out.append(
                f"  fiber {format_partition(part)} splits across classes "
                f"{list(block_ids)}"
            )
        if not self.split_fibers:
            out.append("  every fiber is a single class")
        return out


def classes_refine_orbit_fibers(
    rs: RootSystem, seed: int = 0, trials: int = 5
) -> OrbitFiberReport:
    """Check every move preserves the generic Jordan type and report which
    orbit fibers split into several left-equivalence classes."""
    if rs.family == "G":
        raise ValueError("orbit labels need a matrix realization; G2 has none")
    classes = left_equivalence_classes(rs)
    ideals = enumerate_ideals(rs)
    jt = {I: generic_jordan_type(I, seed=seed, trials=trials) for I in ideals}

    moves_checked = 0
    for I in ideals:
        for move in single_moves(I):
            moves_checked += 1
            if jt[move.from_ideal] != jt[move.to_ideal]:
                raise VerificationError(
                    "single move changed the generic Jordan type",
                    {
                        "system": rs.code,
                        "from": move.from_ideal.sorted_roots,
                        "to": move.to_ideal.sorted_roots,
                        "from_type": jt[move.from_ideal],
                        "to_type": jt[move.to_ideal],
                    },
                )

    class_types = []
    for block in classes.blocks:
        types = {jt[I] for I in block}
        if len(types) != 1:
            raise VerificationError(
                "left-equivalence class not constant under the orbit label",
                {"system": rs.code, "block": [I.sorted_roots for I in block]},
            )
        class_types.append(types.pop())

    fiber_map: dict[Partition, list[Ideal]] = {}
    for I in ideals:
        fiber_map.setdefault(jt[I], []).append(I)
    fibers = tuple(
        (part, tuple(fiber_map[part]))
        for part in sorted(fiber_map, reverse=True)
    )
    split = []
    for part, members in fibers:
        block_ids = sorted(
            {next(i for i, b in enumerate(classes.blocks) if I in b) for I in members}
        )
        if len(block_ids) > 1:
            split.append((part, tuple(block_ids)))
    return OrbitFiberReport(
        rs.code,
        classes,
        tuple(class_types),
        moves_checked,
        fibers,
        tuple(split),
    )
