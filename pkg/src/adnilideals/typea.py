"""Affine permutations in window notation, the chain order on [n], and the
partition extracted from maximal k-family sizes (Green's theorem).

Partitions of n are plain weakly decreasing tuples of positive integers;
the small partition toolkit here (conjugate, dominance, formatting) is
shared with the orbit-labeling code.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import affine
from .rootsys import build_root_system

Partition = tuple[int, ...]


# ---------------------------------------------------------------------------
# partitions


def is_partition_of(parts, n: int) -> bool:
    parts = tuple(parts)
    if any(not isinstance(p, int) or p <= 0 for p in parts):
        return False
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        return False
    return sum(parts) == n


def conjugate(parts: Partition) -> Partition:
    if not parts:
        return ()
    return tuple(
        sum(1 for p in parts if p >= h) for h in range(1, parts[0] + 1)
    )


def dominance_le(p: Partition, q: Partition) -> bool:
    """p <= q in dominance order (prefix sums of q are at least those of p)."""
    if sum(p) != sum(q):
        raise ValueError("dominance compares partitions of the same number")
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp > sq:
            return False
    return True


def format_partition(parts: Partition) -> str:
    return "+".join(str(p) for p in parts)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, largest part first, in reverse lex order."""
    out: list[Partition] = []

    def rec(remaining: int, cap: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for p in range(min(cap, remaining), 0, -1):
            acc.append(p)
            rec(remaining - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return out


# ---------------------------------------------------------------------------
# affine permutations


@dataclass(frozen=True)
class AffinePermutation:
    """Window notation (sigma(1), ..., sigma(n)) of a bijection of the
    integers with sigma(i + n) = sigma(i) + n and zero displacement sum."""

    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if n < 1 or len(self.window) != n:
            raise ValueError("window length must equal n")
        if len({v % n for v in self.window}) != n:
            raise ValueError("window entries must be distinct mod n")
        if sum(self.window) != n * (n + 1) // 2:
            raise ValueError("window displacements must sum to zero")

    def __call__(self, j: int) -> int:
        q, r = divmod(j - 1, self.n)
        return self.window[r] + q * self.n

    def __repr__(self) -> str:
        return f"AffinePermutation(n={self.n}, window={self.window})"


def identity_perm(n: int) -> AffinePermutation:
    return AffinePermutation(n, tuple(range(1, n + 1)))


def generator_perm(n: int, i: int) -> AffinePermutation:
    """The i-th simple reflection: swaps the residue classes of i and i+1."""
    if not 0 <= i < n:
        raise ValueError(f"generator index {i} out of range")
    window = []
    for t in range(1, n + 1):
        if t % n == i % n:
            window.append(t + 1)
        elif t % n == (i + 1) % n:
            window.append(t - 1)
        else:
            window.append(t)
    return AffinePermutation(n, tuple(window))


def compose_perm(a: AffinePermutation, b: AffinePermutation) -> AffinePermutation:
    if a.n != b.n:
        raise ValueError("window sizes differ")
    return AffinePermutation(a.n, tuple(a(b(t)) for t in range(1, a.n + 1)))


def perm_from_word(n: int, word) -> AffinePermutation:
    p = identity_perm(n)
    for i in word:
        p = compose_perm(p, generator_perm(n, i))
    return p


def perm_length(p: AffinePermutation) -> int:
    n = p.n
    total = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total += abs((p(j) - p(i)) // n)
    return total


def right_descents(p: AffinePermutation) -> frozenset[int]:
    return frozenset(i for i in range(p.n) if p(i) > p(i + 1))


def word_of_perm(p: AffinePermutation) -> tuple[int, ...]:
    """A reduced word, peeled from the right (smallest descent first)."""
    collected = []
    x = p
    ident = identity_perm(p.n)
    while x != ident:
        i = min(right_descents(x))
        collected.append(i)
        x = compose_perm(x, generator_perm(p.n, i))
    return tuple(reversed(collected))


def to_element(p: AffinePermutation) -> affine.AffineWeylElement:
    """Abstract element of the rank n-1 affine group with the same word."""
    if p.n < 2:
        raise ValueError("conversion needs n >= 2")
    rs = build_root_system(("A", p.n - 1))
    return affine.from_word(rs, word_of_perm(p))


def from_element(w: affine.AffineWeylElement) -> AffinePermutation:
    if w.rs.family != "A":
        raise ValueError("window notation exists for type A only")
    return perm_from_word(w.rs.rank + 1, affine.word_of(w))


def chain_order(p: AffinePermutation, i: int, j: int) -> bool:
    """The relation i > j in the chain order attached to the permutation."""
    if not (1 <= i <= p.n and 1 <= j <= p.n) or i == j:
        raise ValueError("chain order compares distinct members of [n]")
    if i < j:
        return p(i) > p(j)
    return p(i) > p(j) + p.n


def green_partition(p: AffinePermutation) -> Partition:
    """Partition of n from maximal k-family sizes, conjugated.

    d_k is the largest subset of [n] with no chain of k+1 elements; the
    search is exhaustive over subsets with a longest-chain table, so n is
    capped at 8.  The increments of d form a weakly decreasing sequence
    whose conjugate is returned.
    """
    n = p.n
    if n > 8:
        raise ValueError("k-family search is exhaustive over subsets; n <= 8 only")
    rel = [[False] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and chain_order(p, i, j):
                rel[i - 1][j - 1] = True
    # transitive closure (the relation is already transitive; keep it safe)
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                for j in range(n):
                    if rel[k][j]:
                        rel[i][j] = True
    for i in range(n):
        assert not rel[i][i], "chain order has a cycle"

    # topological order valid for every subset
    order: list[int] = []
    remaining = set(range(n))
    while remaining:
        free = min(
            i for i in remaining if not any(rel[j][i] for j in remaining if j != i)
        )
        order.append(free)
        remaining.remove(free)

    longest = [0] * (1 << n)
    for mask in range(1, 1 << n):
        best = 0
        depth = [0] * n
        for i in order:
            if not mask & (1 << i):
                continue
            d = 1
            for j in order:
                if j != i and mask & (1 << j) and rel[j][i] and depth[j] + 1 > d:
                    d = depth[j] + 1
            depth[i] = d
            if d > best:
                best = d
        longest[mask] = best

    d_sizes = []
    for k in range(1, n + 1):
        d_sizes.append(
            max(mask.bit_count() for mask in range(1 << n) if longest[mask] <= k)
        )
    lam = [d_sizes[0]] + [d_sizes[k] - d_sizes[k - 1] for k in range(1, n)]
    assert all(lam[i] >= lam[i + 1] for i in range(n - 1)), "family sizes not concave"
    assert sum(lam) == n
    return conjugate(tuple(x for x in lam if x))


def window_json(p: AffinePermutation) -> dict:
    return {"n": p.n, "window": list(p.window)}
