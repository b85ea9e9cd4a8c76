"""Root systems of types A_n, B_n and G2 over the simple-root basis.

Roots are integer coefficient vectors relative to the simple roots.  The
invariant bilinear form is normalized so the highest root has squared
length 2 and is carried as exact `Fraction` values; nothing in the core
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Root = tuple[int, ...]

_RANKS = {"A": range(1, 8), "B": range(2, 5), "G": range(2, 3)}

_POSITIVE_COUNT = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "G": lambda n: 6}


def vadd(x: Root, y: Root) -> Root:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Root, y: Root) -> Root:
    return tuple(a - b for a, b in zip(x, y))


def vneg(x: Root) -> Root:
    return tuple(-a for a in x)


def _cartan(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Integer matrix of pairings of simple root i against simple coroot j."""
    if family == "G":
        # index 0 is the short simple root, index 1 the long one
        return ((2, -1), (-3, 2))
    rows = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        rows[i][i] = 2
        if i:
            rows[i][i - 1] = -1
        if i + 1 < rank:
            rows[i][i + 1] = -1
    if family == "B":
        # the last simple root is short
        rows[rank - 2][rank - 1] = -2
    return tuple(tuple(r) for r in rows)


class RootSystem:
    """Immutable root system with positive roots in height-then-lex order.

    Built by closing the simple roots under simple reflections.  Alongside
    the root set it precomputes the normalized bilinear form and integer
    coroot coordinates for every root, so that all affine-Weyl arithmetic
    downstream can stay in plain integers.
    """

    def __init__(self, family: str, rank: int):
        if family not in _RANKS or rank not in _RANKS[family]:
            raise ValueError(f"unsupported root system {family}{rank}")
        self.family = family
        self.rank = rank
        self.code = f"{family}{rank}"
        self.cartan = _cartan(family, rank)
        self.simple_roots = tuple(
            tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)
        )
        self.roots = frozenset(self._close())
        pos = sorted((r for r in self.roots if min(r) >= 0), key=lambda r: (sum(r), r))
        self.positive_roots: tuple[Root, ...] = tuple(pos)
        if len(pos) != _POSITIVE_COUNT[family](rank):
            raise AssertionError(f"positive root count wrong for {self.code}")
        top_height = sum(pos[-1])
        if sum(1 for r in pos if sum(r) == top_height) != 1:
            raise AssertionError("highest root is not unique")
        self.highest_root: Root = pos[-1]
        self._pos_index = {r: i for i, r in enumerate(pos)}
        self._half_norms = self._scaled_half_norms()
        self.form = tuple(
            tuple(self._half_norms[j] * self.cartan[i][j] for j in range(rank))
            for i in range(rank)
        )
        for i in range(rank):
            for j in range(rank):
                assert self.form[i][j] == self.form[j][i]
        self._coroot = {r: self._coroot_coords(r) for r in self.roots}

    def _close(self) -> set[Root]:
        C = self.cartan
        n = self.rank
        roots = set(self.simple_roots) | {vneg(s) for s in self.simple_roots}
        frontier = set(roots)
        while frontier:
            new = set()
            for r in frontier:
                for i in range(n):
                    c = sum(r[k] * C[k][i] for k in range(n))
                    img = list(r)
                    img[i] -= c
                    t = tuple(img)
                    if t not in roots:
                        new.add(t)
            roots |= new
            frontier = new
        return roots

    def _scaled_half_norms(self) -> tuple[Fraction, ...]:
        # propagate relative lengths along the Dynkin diagram, then rescale
        # so that (theta, theta) = 2
        C = self.cartan
        n = self.rank
        d: list[Fraction | None] = [None] * n
        d[0] = Fraction(1)
        todo = [0]
        while todo:
            i = todo.pop()
            for j in range(n):
                if j != i and C[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(C[j][i], C[i][j])
                    todo.append(j)
        assert all(x is not None for x in d)
        theta = self.highest_root
        norm = sum(
            theta[i] * theta[j] * d[j] * C[i][j] for i in range(n) for j in range(n)
        )
        scale = Fraction(2) / norm
        return tuple(x * scale for x in d)

    def _coroot_coords(self, r: Root) -> tuple[int, ...]:
        # r^vee = r / (r,r)/2; its coordinates over the simple coroots are
        # r_i * d_i / d_r, integral for every root
        d_r = self.inner(r, r) / 2
        out = []
        for i in range(self.rank):
            c = Fraction(r[i]) * self._half_norms[i] / d_r
            assert c.denominator == 1
            out.append(int(c))
        return tuple(out)

    def __repr__(self) -> str:
        return f"RootSystem({self.code})"

    def is_root(self, v: Root) -> bool:
        return v in self.roots

    def is_positive_root(self, v: Root) -> bool:
        return v in self._pos_index

    def height(self, r: Root) -> int:
        return sum(r)

    def index(self, r: Root) -> int:
        """Position of a positive root in the canonical enumeration."""
        return self._pos_index[r]

    def order_key(self, r: Root) -> tuple[int, Root]:
        return (sum(r), r)

    def inner(self, x, y) -> Fraction:
        """Bilinear form on arbitrary rational vectors over the simple roots."""
        total = Fraction(0)
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.form[i]
            for j, yj in enumerate(y):
                if yj:
                    total += xi * yj * row[j]
        return total

    def pairing(self, x, j: int) -> int:
        """Integer pairing of a root-lattice vector against simple coroot j."""
        return sum(x[i] * self.cartan[i][j] for i in range(self.rank))

    def coroot(self, r: Root) -> tuple[int, ...]:
        """Coordinates of r^vee over the simple coroots."""
        return self._coroot[r]

    def coroot_pairing(self, beta: Root, lam: tuple[int, ...]) -> int:
        """(beta, lam) for lam given in simple-coroot coordinates."""
        return sum(
            lam[j] * self.pairing(beta, j) for j in range(self.rank) if lam[j]
        )


def _parse_kind(kind) -> tuple[str, int]:
    if isinstance(kind, RootSystem):
        return kind.family, kind.rank
    if isinstance(kind, str):
        fam, tail = kind[:1].upper(), kind[1:]
        if not tail.isdigit():
            raise ValueError(f"unsupported root system {kind!r}")
        return fam, int(tail)
    family, rank = kind
    return str(family).upper(), int(rank)


@lru_cache(maxsize=None)
def _build(family: str, rank: int) -> RootSystem:
    return RootSystem(family, rank)


def build_root_system(kind) -> RootSystem:
    """Root system for a code like "B3" or a (family, rank) pair.

    Instances are cached, so repeated calls share one immutable object.
    """
    family, rank = _parse_kind(kind)
    return _build(family, rank)


def inner_product(rs: RootSystem, x, y) -> Fraction:
    return rs.inner(x, y)


def reflect(rs: RootSystem, mirror: Root, x: Root) -> Root:
    """Reflection of the root x through the hyperplane orthogonal to mirror."""
    if mirror not in rs.roots:
        raise ValueError(f"mirror {mirror} is not a root")
    if x not in rs.roots:
        raise ValueError(f"{x} is not a root")
    c = 2 * rs.inner(x, mirror) / rs.inner(mirror, mirror)
    assert c.denominator == 1
    return vsub(x, tuple(int(c) * m for m in mirror))
