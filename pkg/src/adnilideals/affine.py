"""Affine roots and affine Weyl group elements.

Elements are stored as (finite part, translation) pairs: the finite part as
the images of the simple roots, the translation in simple-coroot
coordinates.  The action on an affine root (beta, k), meaning beta + k*delta,
is

    w(beta + k*delta) = u(beta) + (k - (beta, lam)) * delta

with u the finite part and lam the translation, which keeps every level
computation in plain integers.  The inversion set is

    N(w) = {a positive affine root : w(a) is negative},

the convention under which dominance ("w sends every finite simple root to a
positive affine root") is equivalent to N(w) lying inside the levels >= 1
with negative finite parts; the two tests are cross-checked in the suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .ideals import Ideal, power_sequence
from .rootsys import Root, RootSystem, vadd, vneg

AffineRoot = tuple[Root, int]


@dataclass(frozen=True)
class AffineWeylElement:
    rs: RootSystem
    finite: tuple[Root, ...]
    translation: tuple[int, ...]

    def __repr__(self) -> str:
        return f"AffineWeylElement({self.rs.code}, word={list(word_of(self))})"


def is_positive_affine(r: AffineRoot) -> bool:
    beta, k = r
    if k != 0:
        return k > 0
    return min(beta) >= 0


def _apply_finite(images: tuple[Root, ...], beta: Root) -> Root:
    n = len(beta)
    out = [0] * n
    for i, c in enumerate(beta):
        if c:
            img = images[i]
            for k in range(n):
                out[k] += c * img[k]
    return tuple(out)


@lru_cache(maxsize=None)
def _context(rs: RootSystem) -> dict:
    """Per-system affine data: generators, affine simple roots, self-test."""
    n = rs.rank
    theta = rs.highest_root
    simples: list[AffineRoot] = [(vneg(theta), 1)]
    simples += [(a, 0) for a in rs.simple_roots]
    zero = (0,) * n

    gens: list[AffineWeylElement] = []
    # s_0 reflects through the affine wall; finite part s_theta, translation
    # -theta^vee
    s_theta = tuple(
        vadd(a, tuple(-rs.coroot_pairing(a, rs.coroot(theta)) * t for t in theta))
        for a in rs.simple_roots
    )
    gens.append(AffineWeylElement(rs, s_theta, vneg(rs.coroot(theta))))
    for i in range(n):
        imgs = []
        for j, a in enumerate(rs.simple_roots):
            c = rs.cartan[j][i]
            imgs.append(tuple(a[k] - c * rs.simple_roots[i][k] for k in range(n)))
        gens.append(AffineWeylElement(rs, tuple(imgs), zero))

    ctx = {
        "identity": AffineWeylElement(rs, rs.simple_roots, zero),
        "gens": tuple(gens),
        "simples": tuple(simples),
        "simple_index": {r: i for i, r in enumerate(simples)},
    }
    # sign-convention self-test: generator lengths and product lengths
    for g in gens:
        assert len(_inversion_set(g)) == 1, "length convention broken on a generator"
    for i in range(min(2, n + 1)):
        for j in range(i + 1, n + 1):
            w = _compose(ctx, gens[i], gens[j])
            assert len(_inversion_set(w)) == 2, "length convention broken on a product"
    return ctx


def identity(rs: RootSystem) -> AffineWeylElement:
    return _context(rs)["identity"]


def simple_reflection(rs: RootSystem, i: int) -> AffineWeylElement:
    gens = _context(rs)["gens"]
    if not 0 <= i < len(gens):
        raise ValueError(f"generator index {i} out of range")
    return gens[i]


def affine_simple_roots(rs: RootSystem) -> tuple[AffineRoot, ...]:
    return _context(rs)["simples"]


def act(w: AffineWeylElement, r: AffineRoot) -> AffineRoot:
    beta, k = r
    return (_apply_finite(w.finite, beta), k - w.rs.coroot_pairing(beta, w.translation))


def _finite_inverse_images(w: AffineWeylElement) -> tuple[Root, ...]:
    inv = {_apply_finite(w.finite, r): r for r in w.rs.roots}
    return tuple(inv[a] for a in w.rs.simple_roots)


def _coroot_apply(rs: RootSystem, images: tuple[Root, ...], lam: tuple[int, ...]):
    out = [0] * rs.rank
    for j, c in enumerate(lam):
        if c:
            cr = rs.coroot(images[j])
            for k in range(rs.rank):
                out[k] += c * cr[k]
    return tuple(out)


def _compose(ctx, w1: AffineWeylElement, w2: AffineWeylElement) -> AffineWeylElement:
    rs = w1.rs
    finite = tuple(_apply_finite(w1.finite, img) for img in w2.finite)
    lam = vadd(
        w2.translation,
        _coroot_apply(rs, _finite_inverse_images(w2), w1.translation),
    )
    return AffineWeylElement(rs, finite, lam)


def compose(w1: AffineWeylElement, w2: AffineWeylElement) -> AffineWeylElement:
    """Group product; acts as w1 after w2."""
    if w1.rs is not w2.rs:
        raise ValueError("elements from different root systems")
    return _compose(_context(w1.rs), w1, w2)


def inverse(w: AffineWeylElement) -> AffineWeylElement:
    rs = w.rs
    imgs = _finite_inverse_images(w)
    lam = vneg(_coroot_apply(rs, w.finite, w.translation))
    return AffineWeylElement(rs, imgs, lam)


def from_word(rs: RootSystem, word) -> AffineWeylElement:
    """Product of simple reflections, leftmost applied last."""
    ctx = _context(rs)
    w = ctx["identity"]
    for i in word:
        if not 0 <= i <= rs.rank:
            raise ValueError(f"generator index {i} out of range")
        w = _compose(ctx, w, ctx["gens"][i])
    return w


@lru_cache(maxsize=None)
def _inversion_set(w: AffineWeylElement) -> frozenset[AffineRoot]:
    rs = w.rs
    out: set[AffineRoot] = set()
    for beta in rs.roots:
        m = rs.coroot_pairing(beta, w.translation)
        kmin = 0 if min(beta) >= 0 else 1
        for k in range(kmin, m):
            out.add((beta, k))
        if m >= kmin and min(_apply_finite(w.finite, beta)) < 0:
            out.add((beta, m))
    return frozenset(out)


def inversion_set(w: AffineWeylElement) -> frozenset[AffineRoot]:
    """Positive affine roots sent to negative ones; its size is the length."""
    return _inversion_set(w)


def length(w: AffineWeylElement) -> int:
    return len(_inversion_set(w))


def is_dominant(w: AffineWeylElement) -> bool:
    """True when every finite simple root has a positive image."""
    rs = w.rs
    for i in range(rs.rank):
        shift = rs.coroot_pairing(rs.simple_roots[i], w.translation)
        if shift > 0:
            return False
        if shift == 0 and min(w.finite[i]) < 0:
            return False
    return True


def is_minimal(w: AffineWeylElement) -> bool:
    """Dominant, and the inverse drops no affine simple root below level -1."""
    if not is_dominant(w):
        return False
    winv = inverse(w)
    for a in affine_simple_roots(w.rs):
        _, k = act(winv, a)
        if k < -1:
            return False
    return True


def minimal_element(I: Ideal) -> AffineWeylElement:
    """The minimal element whose inversion set is the union of k*delta - I^k.

    Peels one affine simple root per step off the target set; the peeled
    indices, reversed, form a reduced word.  A nonempty target without an
    affine simple root would mean the target is not an inversion set, which
    the bijection rules out.
    """
    rs = I.rs
    ctx = _context(rs)
    target = frozenset(
        (vneg(g), k)
        for k, P in enumerate(power_sequence(I), start=1)
        for g in P.roots
    )
    simple_index = ctx["simple_index"]
    word_rev: list[int] = []
    T = set(target)
    while T:
        idx = min(
            (simple_index[r] for r in T if r in simple_index), default=None
        )
        if idx is None:
            raise AssertionError("peel found no affine simple root in the target")
        a = ctx["simples"][idx]
        word_rev.append(idx)
        s = ctx["gens"][idx]
        T = {act(s, r) for r in T if r != a}
    w = from_word(rs, reversed(word_rev))
    assert _inversion_set(w) == target
    return w


def first_layer_ideal(w: AffineWeylElement) -> Ideal:
    """Positive roots mu with delta - mu in the inversion set of a dominant w."""
    if not is_dominant(w):
        raise ValueError("first layer ideal requires a dominant element")
    rs = w.rs
    members = set()
    for mu in rs.positive_roots:
        img = act(w, (vneg(mu), 1))
        if not is_positive_affine(img):
            members.add(mu)
    return Ideal(rs, frozenset(members))


def generators_via_affine(I: Ideal) -> tuple[Root, ...]:
    """Members whose level -1 lift maps to an affine simple root."""
    w = minimal_element(I)
    simple_set = set(affine_simple_roots(I.rs))
    return tuple(
        a for a in I.sorted_roots if act(w, (a, -1)) in simple_set
    )


def normalizer_via_affine(I: Ideal) -> frozenset[Root]:
    """Simple roots whose image under the minimal element is affine simple."""
    w = minimal_element(I)
    simple_set = set(affine_simple_roots(I.rs))
    return frozenset(
        a for a in I.rs.simple_roots if act(w, (a, 0)) in simple_set
    )


def left_descents(w: AffineWeylElement) -> frozenset[int]:
    """Indices s with s*w shorter than w; those with a negative w^{-1} image."""
    ctx = _context(w.rs)
    winv = inverse(w)
    out = frozenset(
        s
        for s, a in enumerate(ctx["simples"])
        if not is_positive_affine(act(winv, a))
    )
    lw = length(w)
    for s in out:
        assert length(_compose(ctx, ctx["gens"][s], w)) == lw - 1
    return out


def braid_order(rs: RootSystem, s: int, t: int) -> int:
    """Order of the product of two distinct affine simple reflections."""
    if s == t:
        raise ValueError("braid order needs two distinct generators")
    a = affine_simple_roots(rs)[s][0]
    b = affine_simple_roots(rs)[t][0]
    prod = 4 * rs.inner(a, b) ** 2 / (rs.inner(a, a) * rs.inner(b, b))
    table = {0: 2, 1: 3, 2: 4, 3: 6}
    return table.get(prod, 0)  # 0 means infinite


def star_left(w: AffineWeylElement, s: int, t: int):
    """Left star operation for a generator pair whose product has order 3.

    Defined (non-None) exactly when one of s, t is a left descent; the image
    is the unique one of s*w, t*w with the same property, and applying the
    operation twice returns w.
    """
    rs = w.rs
    if braid_order(rs, s, t) != 3:
        raise ValueError("star undefined for this pair")
    mine = left_descents(w) & {s, t}
    if len(mine) != 1:
        return None
    ctx = _context(rs)
    members = [
        x
        for x in (
            _compose(ctx, ctx["gens"][s], w),
            _compose(ctx, ctx["gens"][t], w),
        )
        if len(left_descents(x) & {s, t}) == 1
    ]
    assert len(members) == 1
    return members[0]


def _solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(rows)
    M = [rows[i][:] + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        inv = Fraction(1) / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [M[i][n] for i in range(n)]


@lru_cache(maxsize=None)
def _interior_point(rs: RootSystem) -> tuple[Fraction, ...]:
    # the point pairing to 1/(2(h0+1)) with every simple root, h0 the height
    # of the highest root; it lies in the open fundamental alcove
    h0 = sum(rs.highest_root)
    c = Fraction(1, 2 * (h0 + 1))
    rows = [[rs.form[i][j] for j in range(rs.rank)] for i in range(rs.rank)]
    rhs = [c] * rs.rank
    return tuple(_solve_linear(rows, rhs))


def interior_point_image(w: AffineWeylElement) -> tuple[Fraction, ...]:
    """Image of the fundamental-alcove interior point under w^{-1}."""
    rs = w.rs
    x0 = _interior_point(rs)
    inv_imgs = _finite_inverse_images(w)
    y = [Fraction(0)] * rs.rank
    for i, c in enumerate(x0):
        img = inv_imgs[i]
        for k in range(rs.rank):
            y[k] += c * img[k]
    # translation vector in simple-root coordinates: coroot j is
    # alpha_j / d_j with d_j half the squared length
    for j, cj in enumerate(w.translation):
        if cj:
            y[j] -= Fraction(cj) / rs._half_norms[j]
    return tuple(y)


def elements_up_to_length(rs: RootSystem, max_length: int) -> list[list[AffineWeylElement]]:
    """All group elements grouped by length, lengths 0..max_length."""
    ctx = _context(rs)
    gens = ctx["gens"]
    levels = [[ctx["identity"]]]
    seen = {ctx["identity"]}
    for _ in range(max_length):
        nxt = []
        for w in levels[-1]:
            for g in gens:
                v = _compose(ctx, g, w)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        nxt.sort(key=lambda w: (w.finite, w.translation))
        levels.append(nxt)
    return levels


def dominant_elements_up_to_length(rs: RootSystem, max_length: int) -> list[AffineWeylElement]:
    out = []
    for level in elements_up_to_length(rs, max_length):
        out.extend(w for w in level if is_dominant(w))
    return out


def word_of(w: AffineWeylElement) -> tuple[int, ...]:
    """A reduced word (smallest descent first at each step)."""
    ctx = _context(w.rs)
    word = []
    x = w
    while x != ctx["identity"]:
        s = min(left_descents(x))
        word.append(s)
        x = _compose(ctx, ctx["gens"][s], x)
    return tuple(word)


def element_json(w: AffineWeylElement) -> dict:
    return {
        "word": list(word_of(w)),
        "finite": [list(r) for r in w.finite],
        "translation": list(w.translation),
    }
