"""Sign types: the -/0/+ label a point carries against each positive root,
with the two walls at pairing 0 and pairing 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .affine import AffineWeylElement, interior_point_image
from .ideals import Ideal
from .rootsys import RootSystem

SIGNS = ("-", "0", "+")


@dataclass(frozen=True)
class SignType:
    """One sign per positive root, aligned with the canonical root order."""

    rs: RootSystem
    signs: tuple[str, ...]

    def __post_init__(self):
        if len(self.signs) != len(self.rs.positive_roots):
            raise ValueError("sign vector length mismatch")
        if any(s not in SIGNS for s in self.signs):
            raise ValueError("signs must be '-', '0' or '+'")

    def sign_at(self, root) -> str:
        return self.signs[self.rs.index(root)]

    def __repr__(self) -> str:
        return f"SignType({self.rs.code}, {''.join(self.signs)})"


def sign_type_of_element(w: AffineWeylElement) -> SignType:
    """Sign type of the alcove of w^{-1}, read off an interior point.

    The pairings of an alcove-interior point never hit 0 or 1 exactly; a
    hit would mean the action conventions are broken, so it raises.
    """
    rs = w.rs
    y = interior_point_image(w)
    signs = []
    for alpha in rs.positive_roots:
        v = rs.inner(y, alpha)
        if v == 0 or v == 1:
            raise AssertionError(f"interior point landed on a wall at {alpha}")
        signs.append("+" if v > 1 else "0" if v > 0 else "-")
    return SignType(rs, tuple(signs))


def sign_type_of_ideal(I: Ideal) -> SignType:
    """Plus exactly on the ideal, zero elsewhere; injective over ideals."""
    rs = I.rs
    return SignType(
        rs, tuple("+" if r in I.roots else "0" for r in rs.positive_roots)
    )


def is_dominant_sign_type(st: SignType) -> bool:
    return "-" not in st.signs


def sign_type_json(st: SignType) -> dict:
    return {
        "signs": {
            ",".join(str(c) for c in root): st.signs[i]
            for i, root in enumerate(st.rs.positive_roots)
        }
    }
