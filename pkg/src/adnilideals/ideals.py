"""Upward-closed sets of positive roots: enumeration, generators, brackets,
powers and normalizing simple roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsys import Root, RootSystem, vadd, vsub


@dataclass(frozen=True)
class Ideal:
    """An upward-closed subset of the positive roots of one root system.

    Upward closure (adding any positive root that lands back in the root
    system keeps you inside the set) is validated on construction, so an
    Ideal instance is an ideal by construction.
    """

    rs: RootSystem
    roots: frozenset[Root]

    def __post_init__(self):
        if not isinstance(self.roots, frozenset):
            object.__setattr__(self, "roots", frozenset(self.roots))
        rs = self.rs
        for a in self.roots:
            if not rs.is_positive_root(a):
                raise ValueError(f"not a positive root: {a}")
        for a in self.roots:
            for b in rs.positive_roots:
                s = vadd(a, b)
                if s in rs.roots and s not in self.roots:
                    raise ValueError(f"not upward closed: {a} + {b} missing")

    def __contains__(self, r: Root) -> bool:
        return r in self.roots

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def sorted_roots(self) -> tuple[Root, ...]:
        return tuple(sorted(self.roots, key=self.rs.order_key))

    def __repr__(self) -> str:
        body = ",".join(str(list(r)) for r in self.sorted_roots)
        return f"Ideal({self.rs.code}: [{body}])"


def _ideal_sort_key(I: Ideal):
    return (len(I.roots), tuple(sorted(I.rs.index(r) for r in I.roots)))


@lru_cache(maxsize=None)
def enumerate_ideals(rs: RootSystem) -> tuple[Ideal, ...]:
    """All ideals of the positive roots, ordered by size then lexicographically.

    Walks the roots from tallest to shortest; a root may enter only when
    every upper cover (root plus a simple root) is already in, which yields
    each upward-closed set exactly once.
    """
    order = sorted(rs.positive_roots, key=rs.order_key, reverse=True)
    covers = {
        r: [vadd(r, s) for s in rs.simple_roots if vadd(r, s) in rs.roots]
        for r in order
    }
    found: list[frozenset[Root]] = []

    def rec(pos: int, current: frozenset[Root]) -> None:
        if pos == len(order):
            found.append(current)
            return
        r = order[pos]
        if all(c in current for c in covers[r]):
            rec(pos + 1, current | {r})
        rec(pos + 1, current)

    rec(0, frozenset())
    ideals = [Ideal(rs, s) for s in found]
    ideals.sort(key=_ideal_sort_key)
    return tuple(ideals)


def generators(I: Ideal) -> tuple[Root, ...]:
    """The antichain of minimal roots of the ideal.

    A member is a generator when subtracting any positive root leaves the
    ideal.
    """
    rs = I.rs
    out = [
        a
        for a in I.sorted_roots
        if all(vsub(a, b) not in I.roots for b in rs.positive_roots)
    ]
    return tuple(out)


def ideal_from_generators(rs: RootSystem, roots) -> Ideal:
    """Smallest ideal containing the given positive roots."""
    members: set[Root] = set()
    queue: list[Root] = []
    for r in roots:
        r = tuple(r)
        if not rs.is_positive_root(r):
            raise ValueError(f"not a positive root: {r}")
        if r not in members:
            members.add(r)
            queue.append(r)
    while queue:
        a = queue.pop()
        for b in rs.positive_roots:
            s = vadd(a, b)
            if s in rs.roots and s not in members:
                members.add(s)
                queue.append(s)
    return Ideal(rs, frozenset(members))


def bracket(I1: Ideal, I2: Ideal) -> Ideal:
    """All pairwise root sums landing in the root system; again an ideal."""
    if I1.rs is not I2.rs:
        raise ValueError("bracket of ideals over different root systems")
    rs = I1.rs
    sums = {
        vadd(a, b) for a in I1.roots for b in I2.roots if vadd(a, b) in rs.roots
    }
    return Ideal(rs, frozenset(sums))


def power(I: Ideal, k: int) -> Ideal:
    """k-th bracket power; descending in k and eventually empty."""
    if k < 1:
        raise ValueError("power requires k >= 1")
    out = I
    for _ in range(k - 1):
        out = bracket(out, I)
    return out


def power_sequence(I: Ideal) -> list[Ideal]:
    """The nonempty bracket powers [I, I^2, ...], stopping before the empty one."""
    out: list[Ideal] = []
    cur = I
    while len(cur):
        out.append(cur)
        cur = bracket(cur, I)
    return out


def normalizer_simple_roots(I: Ideal) -> frozenset[Root]:
    """Simple roots whose rank-one Levi subalgebra normalizes the ideal.

    A simple root qualifies when it is not a member and subtracting it from
    any member either leaves the root system or stays inside the ideal.
    """
    rs = I.rs
    out = set()
    for alpha in rs.simple_roots:
        if alpha in I.roots:
            continue
        ok = True
        for beta in I.roots:
            gamma = vsub(beta, alpha)
            if gamma in rs.roots and min(gamma) >= 0 and gamma not in I.roots:
                ok = False
                break
        if ok:
            out.add(alpha)
    return frozenset(out)


def ideal_json(I: Ideal) -> dict:
    return {
        "system": I.rs.code,
        "roots": [list(r) for r in I.sorted_roots],
    }


def generators_json(I: Ideal) -> dict:
    return {
        "system": I.rs.code,
        "generators": [list(r) for r in generators(I)],
    }
