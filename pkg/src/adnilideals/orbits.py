"""Matrix realizations of ideals in sl(n) / so(2n+1) and the generic Jordan
type of an ideal via randomized rank computations over a prime field.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .ideals import Ideal
from .rootsys import Root, RootSystem, build_root_system
from .typea import Partition, is_partition_of

DEFAULT_PRIME = 32003


class OracleError(RuntimeError):
    """Sampled ranks are inconsistent with a generic nilpotent Jordan type."""


@dataclass(frozen=True)
class MatrixPattern:
    """Strictly upper-triangular positions carrying an ideal's root vectors.

    Entries are (row, col, sign, root); in type B each root occupies two
    antidiagonally mirrored positions with opposite signs.
    """

    dimension: int
    entries: tuple[tuple[int, int, int, Root], ...]


def _e_vector(rs: RootSystem, root: Root) -> tuple[int, ...]:
    # coordinates over the weights e_1..e_n of the defining representation
    n = rs.rank
    out = []
    prev = 0
    for i in range(n):
        out.append(root[i] - prev)
        prev = root[i]
    if rs.family == "A":
        out.append(-prev)
    return tuple(out)


def _entries_type_a(rs: RootSystem, root: Root):
    v = _e_vector(rs, root)
    i = v.index(1)
    j = v.index(-1)
    assert i < j
    return [(i, j, 1, root)]


def _entries_type_b(rs: RootSystem, root: Root):
    n = rs.rank
    d = 2 * n + 1
    v = _e_vector(rs, root)
    support = [i for i, c in enumerate(v) if c]
    if len(support) == 1:
        (i,) = support
        assert v[i] == 1
        return [(i, n, 1, root), (n, d - 1 - i, -1, root)]
    i, j = support
    if v[j] == -1:
        return [(i, j, 1, root), (d - 1 - j, d - 1 - i, -1, root)]
    return [(i, d - 1 - j, 1, root), (j, d - 1 - i, -1, root)]


def matrix_realization(rs: RootSystem, I: Ideal) -> MatrixPattern:
    """Entry positions of the ideal's root vectors in the defining matrix
    realization (sl for type A, odd orthogonal for type B)."""
    if rs.family == "G":
        raise ValueError("no matrix realization provided for G2")
    if I.rs is not rs:
        raise ValueError("ideal belongs to a different root system")
    d = rs.rank + 1 if rs.family == "A" else 2 * rs.rank + 1
    make = _entries_type_a if rs.family == "A" else _entries_type_b
    entries: list[tuple[int, int, int, Root]] = []
    seen_positions: set[tuple[int, int]] = set()
    for root in I.sorted_roots:
        for row, col, sign, r in make(rs, root):
            assert row < col, "entry not strictly upper triangular"
            assert (row, col) not in seen_positions, "entry positions collide"
            seen_positions.add((row, col))
            entries.append((row, col, sign, r))
    return MatrixPattern(d, tuple(entries))


def _mat_mult_mod(A, B, p):
    d = len(A)
    out = [[0] * d for _ in range(d)]
    for i in range(d):
        Ai = A[i]
        row = out[i]
        for k in range(d):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(d):
                    if Bk[j]:
                        row[j] = (row[j] + a * Bk[j]) % p
    return out


def _rank_mod(M, p):
    d = len(M)
    A = [row[:] for row in M]
    rank = 0
    col = 0
    for col in range(d):
        piv = None
        for r in range(rank, d):
            if A[r][col]:
                piv = r
                break
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][col], p - 2, p)
        A[rank] = [(x * inv) % p for x in A[rank]]
        for r in range(d):
            if r != rank and A[r][col]:
                f = A[r][col]
                A[r] = [(a - f * b) % p for a, b in zip(A[r], A[rank])]
        rank += 1
    return rank


def _partition_from_ranks(ranks: list[int]) -> Partition:
    # number of parts of size >= k is ranks[k-1] - ranks[k]
    counts = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    for k in range(len(counts) - 1):
        if counts[k] < counts[k + 1]:
            raise OracleError("rank sequence is not convex")
    parts: list[int] = []
    counts.append(0)
    for k in range(len(counts) - 1, 0, -1):
        parts.extend([k] * (counts[k - 1] - counts[k]))
    return tuple(parts)


def _dominates(p: Partition, q: Partition) -> bool:
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp < sq:
            return False
    return True


def generic_jordan_type(
    I: Ideal, seed: int = 0, trials: int = 5, prime: int = DEFAULT_PRIME
) -> Partition:
    """Jordan type of a generic element of the ideal.

    Each trial fills the pattern's root slots with uniform prime-field
    coefficients, takes ranks of the matrix powers and reads off the
    partition; the dominance maximum over trials is returned (ranks of a
    non-generic sample only drop, which pushes the partition down in
    dominance order).  Deterministic in (seed, trials).
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rs = I.rs
    pattern = matrix_realization(rs, I)
    d = pattern.dimension
    best: Partition | None = None
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        coeff = {root: rng.randrange(prime) for root in I.sorted_roots}
        M = [[0] * d for _ in range(d)]
        for row, col, sign, root in pattern.entries:
            M[row][col] = (M[row][col] + sign * coeff[root]) % prime
        ranks = [d]
        P = M
        steps = 0
        while True:
            r = _rank_mod(P, prime)
            ranks.append(r)
            if r == 0:
                break
            steps += 1
            if steps > d:
                raise OracleError("sample is not nilpotent")
            P = _mat_mult_mod(P, M, prime)
        part = _partition_from_ranks(ranks)
        assert sum(part) == d
        if best is None or _dominates(part, best):
            best = part
        elif not _dominates(best, part):
            raise OracleError("trial partitions are dominance incomparable")
    if rs.family == "B":
        for size in set(best):
            if size % 2 == 0 and best.count(size) % 2 == 1:
                raise OracleError(
                    f"even part {size} with odd multiplicity in an orthogonal type"
                )
    return best


def ideal_from_partition(n: int, parts) -> Ideal:
    """Type A ideal whose generic Jordan type is the given partition.

    Takes the weight vector of the corresponding diagonal semisimple
    element (each part m contributes m-1, m-3, ..., 1-m), sorted weakly
    decreasing, and keeps the matrix positions where the weight gap is at
    least 2.
    """
    parts = tuple(parts)
    if not is_partition_of(parts, n):
        raise ValueError(f"{parts} is not a partition of {n}")
    h = sorted((m - 1 - 2 * i for m in parts for i in range(m)), reverse=True)
    rs = build_root_system(("A", n - 1))
    members = set()
    for i in range(n):
        for j in range(i + 1, n):
            if h[i] - h[j] >= 2:
                members.add(tuple(1 if i <= k < j else 0 for k in range(n - 1)))
    return Ideal(rs, frozenset(members))
