"""Domain types and predicates for scaled Arndt compositions.

A composition of n is an ordered tuple of positive integers summing to n;
the empty tuple is the unique composition of 0.  A scaled Arndt composition
with parameters (s, t) is a composition whose consecutive part pairs
(c1, c2), (c3, c4), ... satisfy the strict inequality s*c_odd > t*c_even;
an unpaired final part is unconstrained.  The affine variant replaces the
right-hand side with t*c_even + k for an integer offset k.

Scaling (s, t) by a common factor does not change the condition, so
constraints are kept in lowest terms.  For coprime (s, t) with k = 0 the
admissible compositions are equinumerous with compositions into parts from
s prescribed residue classes modulo s+t; ``residue_system`` computes those
classes.

All arithmetic is exact integer arithmetic.  Every type here is an
immutable value and every function is pure, so unrestricted concurrent use
is safe.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

__all__ = [
    "Composition",
    "ScaledConstraint",
    "ResidueSystem",
    "ceil_div",
    "normalize",
    "satisfies",
    "residue_system",
]


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a/b for a >= 0, b >= 1, without floating point.

    >>> ceil_div(4, 2), ceil_div(5, 2), ceil_div(0, 3)
    (2, 3, 0)
    """
    return (a + b - 1) // b


_PARTS_RE = re.compile(r"\d+(,\d+)*")


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive integer parts.

    >>> c = Composition((4, 1, 1))
    >>> c.total, len(c), str(c)
    (6, 3, '4,1,1')

    The empty composition ``Composition(())`` is the one composition of 0.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if not all(isinstance(p, int) and p >= 1 for p in self.parts):
            raise ValueError(f"parts must be positive integers: {self.parts!r}")

    @property
    def total(self) -> int:
        """The number being composed (sum of parts)."""
        return sum(self.parts)

    @classmethod
    def from_string(cls, text: str) -> "Composition":
        """Parse the CLI wire form, e.g. ``"4,1,1"``; ``""`` is empty.

        Only comma-separated decimal digits are accepted, no whitespace.
        """
        if text == "":
            return cls(())
        if not _PARTS_RE.fullmatch(text):
            raise ValueError(f"malformed composition {text!r}; expected e.g. '4,1,1'")
        return cls(tuple(int(p) for p in text.split(",")))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]


@dataclass(frozen=True)
class ScaledConstraint:
    """Coprime scaling pair (s, t) with affine offset k (default 0).

    The constructor insists on coprime s and t; use :func:`normalize` to
    reduce an arbitrary pair.  k != 0 selects the exploratory affine
    condition, for which only brute-force enumeration is available.
    """

    s: int
    t: int
    k: int = 0

    def __post_init__(self) -> None:
        if self.s < 1 or self.t < 1:
            raise ValueError(f"s and t must be positive, got ({self.s}, {self.t})")
        if gcd(self.s, self.t) != 1:
            raise ValueError(
                f"({self.s}, {self.t}) is not coprime; reduce it with normalize()"
            )


def normalize(s: int, t: int, k: int = 0) -> ScaledConstraint:
    """Reduce (s, t) by their gcd and return the constraint.

    The reduction is only meaningful for k = 0 (the inequality
    s*a > t*b is invariant under scaling both sides); a non-coprime pair
    together with k != 0 is refused rather than silently rescaled.

    >>> normalize(4, 6)
    ScaledConstraint(s=2, t=3, k=0)
    """
    if s < 1 or t < 1:
        raise ValueError(f"s and t must be positive, got ({s}, {t})")
    g = gcd(s, t)
    if g > 1 and k != 0:
        raise ValueError(
            f"non-normalizable affine constraint ({s}, {t}, k={k}): "
            "dividing out the gcd changes the affine condition"
        )
    return ScaledConstraint(s // g, t // g, k)


def _satisfies_parts(parts, s: int, t: int, k: int) -> bool:
    # Pairs are (parts[0], parts[1]), (parts[2], parts[3]), ...; a final
    # unpaired part imposes nothing, hence the len-1 bound.
    for i in range(0, len(parts) - 1, 2):
        if s * parts[i] <= t * parts[i + 1] + k:
            return False
    return True


def satisfies(c: Composition, cons: ScaledConstraint) -> bool:
    """True iff every part pair of ``c`` meets s*a > t*b + k.

    The empty composition and single parts satisfy vacuously.

    >>> satisfies(Composition((3, 2, 1)), ScaledConstraint(1, 1))
    True
    >>> satisfies(Composition((3, 2, 1)), ScaledConstraint(2, 3))
    False
    """
    return _satisfies_parts(c.parts, cons.s, cons.t, cons.k)


@dataclass(frozen=True)
class ResidueSystem:
    """The part residues modulo s+t admissible for a coprime pair (s, t).

    ``residues`` is strictly increasing, starts at 1 and stays below the
    modulus, so every positive integer splits uniquely as
    ``q * modulus + residues[r]`` when it belongs to the system at all.
    """

    modulus: int
    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "residues", tuple(self.residues))
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        rs = self.residues
        if not rs or rs[0] != 1:
            raise ValueError("residue list must start at 1")
        if any(b <= a for a, b in zip(rs, rs[1:])) or rs[-1] >= self.modulus:
            raise ValueError(
                f"residues must increase strictly within [1, {self.modulus - 1}]"
            )

    def contains(self, part: int) -> bool:
        """True iff ``part`` (>= 1) falls in one of the residue classes."""
        if part < 1:
            raise ValueError(f"parts are positive integers, got {part}")
        return part % self.modulus in self.residues

    def decompose(self, part: int) -> tuple[int, int]:
        """Split ``part`` as q * modulus + residues[r]; return (q, r).

        Raises ValueError for parts outside the system.

        >>> residue_system(ScaledConstraint(2, 3)).decompose(6)
        (1, 0)
        """
        if part < 1:
            raise ValueError(f"parts are positive integers, got {part}")
        q, rem = divmod(part, self.modulus)
        try:
            r = self.residues.index(rem)
        except ValueError:
            raise ValueError(
                f"part {part} outside residue system "
                f"{list(self.residues)} (mod {self.modulus})"
            ) from None
        return q, r


def residue_system(cons: ScaledConstraint) -> ResidueSystem:
    """Residue classes mod s+t whose compositions match the Arndt count.

    The r-th allowed residue is r + ceil((r*t + 1) / s) for r = 0..s-1;
    the r = 0 class is always 1, so parts equal to 1 are always admitted.
    Defined only for the pure scaled condition (k = 0).

    >>> residue_system(ScaledConstraint(2, 3))
    ResidueSystem(modulus=5, residues=(1, 3))
    """
    if cons.k != 0:
        raise ValueError("residue systems exist only for offset k = 0")
    s, t = cons.s, cons.t
    residues = tuple(r + ceil_div(r * t + 1, s) for r in range(s))
    return ResidueSystem(s + t, residues)
