"""Numerical invariants of a cyclic-cover family.

For ``n = 1..m-1`` the group acts on the ``zeta^n`` eigenspace ``V_n`` of
holomorphic 1-forms, of dimension ``d_n = -1 + sum_i <-n a_i / m>``.
These dimensions determine the genus, the invariant part of ``S^2 H^0(K)``
and hence the dimension of invariant quadrics through the canonical curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .branch import BranchDatum, CanonicalDatum, canonicalize
from .errors import (
    DomainError,
    GenusTooSmall,
    InvariantViolation,
    NegativeDimension,
    ParityViolation,
)
from .exact import frac_part

__all__ = [
    "EigenProfile",
    "FamilyInvariants",
    "local_exponent",
    "eigen_dim",
    "genus_hurwitz",
    "eigen_profile",
    "invariant_sym2_dim",
    "invariant_quadric_dim",
    "family_invariants",
]


@dataclass(frozen=True)
class EigenProfile:
    m: int
    d: tuple[int, ...]
    genus: int

    def __post_init__(self):
        if len(self.d) != self.m - 1:
            raise InvariantViolation(f"expected {self.m - 1} eigenspace dimensions")
        if any(x < 0 for x in self.d):
            raise InvariantViolation(f"negative eigenspace dimension in {self.d}")
        if sum(self.d) != self.genus:
            raise InvariantViolation(
                f"sum of eigenspace dimensions {sum(self.d)} != genus {self.genus}")

    def dim(self, n: int) -> int:
        """``d_n`` for ``n`` taken mod ``m``; ``d_0 = 0``."""
        n %= self.m
        return 0 if n == 0 else self.d[n - 1]


@dataclass(frozen=True)
class FamilyInvariants:
    datum: CanonicalDatum
    profile: EigenProfile
    inv_sym2_dim: int
    family_dim: int
    inv_quadric_dim: int

    @property
    def genus(self) -> int:
        return self.profile.genus

    def as_dict(self) -> dict:
        return {
            **self.datum.as_dict(),
            "genus": self.genus,
            "d": list(self.profile.d),
            "inv_sym2_dim": self.inv_sym2_dim,
            "family_dim": self.family_dim,
            "inv_quadric_dim": self.inv_quadric_dim,
        }


def local_exponent(d: BranchDatum, i: int, n: int) -> int:
    """Floor of ``-n a_i / m`` for the 1-based branch index ``i``."""
    if not 1 <= i <= d.N:
        raise DomainError(f"branch index {i} outside 1..{d.N}")
    return (-n * d.a[i - 1]) // d.m


def eigen_dim(d: BranchDatum, n: int) -> int:
    if not 1 <= n <= d.m - 1:
        raise DomainError(f"eigenspace index {n} outside 1..{d.m - 1}")
    total = -1 + sum(frac_part(-n * x, d.m) for x in d.a)
    if total.denominator != 1:
        raise InvariantViolation(f"d_{n} = {total} is not an integer for {d}")
    return int(total)


def genus_hurwitz(d: BranchDatum) -> int:
    twice = (d.N - 2) * d.m - sum(math.gcd(d.m, x) for x in d.a)
    if twice % 2:
        raise ParityViolation(f"Hurwitz numerator {twice} is odd for {d}")
    return 1 + twice // 2


def eigen_profile(d: BranchDatum) -> EigenProfile:
    dims = tuple(eigen_dim(d, n) for n in range(1, d.m))
    return EigenProfile(d.m, dims, genus_hurwitz(d))


def invariant_sym2_dim(p: EigenProfile) -> int:
    """Dimension of the invariant part of ``S^2 H^0(K)``.

    ``V_n . V_k`` is invariant iff ``n + k = m``; pairs ``n < m - n``
    contribute ``d_n d_{m-n}`` and the self-paired ``V_{m/2}`` contributes
    its symmetric square.
    """
    m = p.m
    total = sum(p.dim(n) * p.dim(m - n) for n in range(1, m) if n < m - n)
    if m % 2 == 0:
        h = p.dim(m // 2)
        total += h * (h + 1) // 2
    return total


def invariant_quadric_dim(f: BranchDatum) -> int:
    p = eigen_profile(f)
    if p.genus < 4:
        raise GenusTooSmall(f"genus {p.genus} < 4 for {f}")
    value = invariant_sym2_dim(p) - (f.N - 3)
    if value < 0:
        raise NegativeDimension(
            f"invariant quadric dimension {value} < 0 for {f}", value)
    return value


def family_invariants(d: BranchDatum) -> FamilyInvariants:
    """All invariants of the class of ``d``.

    The quadric dimension is reported raw: for genus < 4 or a negative
    value it is meaningless, and the classifier decides what to make of it.
    """
    c = canonicalize(d)
    p = eigen_profile(c)
    sym2 = invariant_sym2_dim(p)
    return FamilyInvariants(
        datum=c,
        profile=p,
        inv_sym2_dim=sym2,
        family_dim=c.N - 3,
        inv_quadric_dim=sym2 - (c.N - 3),
    )

