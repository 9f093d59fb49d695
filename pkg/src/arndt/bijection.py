"""The sum-preserving bijection between scaled Arndt compositions and
congruence-restricted compositions.

Forward direction: each part pair (a, b) with b = q*s + r (Euclidean
division, 0 <= r < s) becomes a run of ones followed by one anchor part

    (a, b)  ->  (1^(a - q*t - L), q*(s+t) + r + L)   with L = ceil((r*t+1)/s),

and a trailing unpaired part m becomes a run of m ones.  The strict
inequality s*a > t*b makes the run length nonnegative, and the anchor
lands in the residue system of the constraint.

Backward direction: scan the congruence-restricted composition left to
right, grouping each maximal run of ones with the next part >= 2 into a
block (1^c, d); a trailing run of ones with no anchor maps to the single
part c.  Parts equal to 1 are never anchors, even though 1 itself is an
admissible residue; anchors with residue 1 are exactly the parts
1 + q*(s+t) with q >= 1.

Both directions validate their input and are defined only for k = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Composition,
    ScaledConstraint,
    ceil_div,
    residue_system,
    satisfies,
)

__all__ = ["ArndtPair", "OnesBlock", "map_pair", "unmap_block", "forward", "backward"]


@dataclass(frozen=True)
class ArndtPair:
    """One (odd, even) part pair; b = 0 encodes an absent final partner."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 1:
            raise ValueError(f"first part of a pair must be positive, got {self.a}")
        if self.b < 0:
            raise ValueError(f"second part of a pair must be >= 0, got {self.b}")


@dataclass(frozen=True)
class OnesBlock:
    """A run of ``ones`` parts 1, optionally terminated by an anchor >= 2.

    ``anchor=None`` marks the trailing block of a composition, which then
    must contain at least one 1.
    """

    ones: int
    anchor: int | None = None

    def __post_init__(self) -> None:
        if self.ones < 0:
            raise ValueError(f"run length must be >= 0, got {self.ones}")
        if self.anchor is None:
            if self.ones < 1:
                raise ValueError("a trailing block without anchor must be nonempty")
        elif self.anchor < 2:
            raise ValueError(f"anchors are parts >= 2, got {self.anchor}")


def _require_unscaled(cons: ScaledConstraint) -> None:
    if cons.k != 0:
        raise ValueError(f"the bijection is defined only for k = 0, got k = {cons.k}")


def map_pair(p: ArndtPair, cons: ScaledConstraint) -> OnesBlock:
    """Image of one complete pair (b >= 1) under the forward map.

    >>> map_pair(ArndtPair(5, 1), ScaledConstraint(2, 3))
    OnesBlock(ones=3, anchor=3)
    """
    _require_unscaled(cons)
    if p.b < 1:
        raise ValueError("map_pair needs a complete pair (b >= 1)")
    s, t = cons.s, cons.t
    if s * p.a <= t * p.b:
        raise ValueError(f"pair ({p.a}, {p.b}) violates {s}*a > {t}*b")
    q, r = divmod(p.b, s)
    lift = ceil_div(r * t + 1, s)
    ones = p.a - q * t - lift
    # s*a > t*b forces a >= q*t + lift, so the run length is >= 0.
    assert ones >= 0
    return OnesBlock(ones, q * (s + t) + r + lift)


def unmap_block(blk: OnesBlock, cons: ScaledConstraint) -> ArndtPair | int:
    """Preimage of one block: an (a, b) pair, or a bare part for the
    anchorless trailing block.

    >>> unmap_block(OnesBlock(2, 3), ScaledConstraint(2, 3))
    ArndtPair(a=4, b=1)
    >>> unmap_block(OnesBlock(6, None), ScaledConstraint(2, 3))
    6
    """
    _require_unscaled(cons)
    if blk.anchor is None:
        return blk.ones
    q, r = residue_system(cons).decompose(blk.anchor)
    s, t = cons.s, cons.t
    lift = ceil_div(r * t + 1, s)
    return ArndtPair(blk.ones + q * t + lift, q * s + r)


def forward(c: Composition, cons: ScaledConstraint) -> Composition:
    """Map a scaled Arndt composition to its congruence-restricted partner.

    Sum-preserving; rejects compositions violating the constraint.

    >>> str(forward(Composition((4, 1, 1)), ScaledConstraint(2, 3)))
    '1,1,3,1'
    """
    _require_unscaled(cons)
    if not satisfies(c, cons):
        raise ValueError(
            f"({','.join(map(str, c.parts))}) violates "
            f"{cons.s}*a > {cons.t}*b on some pair"
        )
    parts = c.parts
    out: list[int] = []
    for i in range(0, len(parts) - 1, 2):
        blk = map_pair(ArndtPair(parts[i], parts[i + 1]), cons)
        out.extend([1] * blk.ones)
        out.append(blk.anchor)
    if len(parts) % 2:
        out.extend([1] * parts[-1])
    return Composition(tuple(out))


def backward(c: Composition, cons: ScaledConstraint) -> Composition:
    """Inverse of :func:`forward`; input parts must all lie in the
    constraint's residue system.

    >>> str(backward(Composition((3, 3)), ScaledConstraint(2, 3)))
    '2,1,2,1'
    """
    _require_unscaled(cons)
    rs = residue_system(cons)
    for p in c.parts:
        if not rs.contains(p):
            raise ValueError(
                f"part {p} outside residue system "
                f"{list(rs.residues)} (mod {rs.modulus})"
            )
    out: list[int] = []
    ones = 0
    for p in c.parts:
        if p == 1:
            ones += 1
        else:
            pair = unmap_block(OnesBlock(ones, p), cons)
            out.extend((pair.a, pair.b))
            ones = 0
    if ones:
        out.append(ones)
    return Composition(tuple(out))
