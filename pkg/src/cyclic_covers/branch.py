"""Branch data ``(m, N, a)`` of cyclic covers of the projective line.

A datum describes the family of curves ``y^m = prod (x - t_i)^{a_i}``.
Two data give the same family exactly when they are related by a unit of
``Z/mZ`` acting diagonally and a permutation of the branch points.  The
canonical representative of an orbit is the lexicographically smallest
sorted tuple among ``sorted(u * a mod m)`` over all units ``u``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import (
    GcdNotOne,
    LengthMismatch,
    MOutOfRange,
    MonodromyOutOfRange,
    NOutOfRange,
    SumNotZeroModM,
)

__all__ = [
    "BranchDatum",
    "CanonicalDatum",
    "validate",
    "units",
    "canonicalize",
    "is_canonical",
    "equivalent",
    "enumerate_classes",
    "enumerate_candidates",
    "parse_monodromy",
]


def _check(m: int, N: int, a: tuple[int, ...]) -> None:
    if m < 3:
        raise MOutOfRange(f"m must be at least 3, got {m}")
    if N < 4:
        raise NOutOfRange(f"N must be at least 4, got {N}")
    if len(a) != N:
        raise LengthMismatch(f"expected {N} local monodromies, got {len(a)}")
    bad = [x for x in a if not 1 <= x <= m - 1]
    if bad:
        raise MonodromyOutOfRange(
            f"local monodromies must lie in [1, {m - 1}], got {bad}")
    if sum(a) % m:
        raise SumNotZeroModM(f"sum of a is {sum(a)}, not divisible by {m}")
    if reduce(math.gcd, a, m) != 1:
        raise GcdNotOne(f"gcd(m, a_1, ..., a_N) = {reduce(math.gcd, a, m)}")


@dataclass(frozen=True)
class BranchDatum:
    """A validated triple; construction raises on any violated constraint."""

    m: int
    N: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        _check(self.m, self.N, self.a)

    def __str__(self):
        return f"({self.m}, {self.N}, ({','.join(map(str, self.a))}))"

    def as_dict(self) -> dict:
        return {"m": self.m, "N": self.N, "a": list(self.a)}


@dataclass(frozen=True)
class CanonicalDatum(BranchDatum):
    """Sorted, unit-minimal representative of an equivalence class."""

    def __post_init__(self):
        super().__post_init__()
        if not is_canonical(self.m, self.a):
            raise ValueError(f"{self.a} is not the canonical form mod {self.m}")


def validate(m: int, N: int, a: Iterable[int]) -> BranchDatum:
    return BranchDatum(m, N, tuple(a))


def parse_monodromy(text: str) -> tuple[int, ...]:
    """Parse ``"1,3,3,3"`` into a tuple of ints."""
    return tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)


@lru_cache(maxsize=None)
def units(m: int) -> tuple[int, ...]:
    return tuple(u for u in range(1, m) if math.gcd(u, m) == 1)


def _min_image(m: int, a: Sequence[int]) -> tuple[int, ...]:
    return min(tuple(sorted(u * x % m for x in a)) for u in units(m))


def is_canonical(m: int, a: Sequence[int]) -> bool:
    a = tuple(a)
    if list(a) != sorted(a):
        return False
    for u in units(m)[1:]:
        if tuple(sorted(u * x % m for x in a)) < a:
            return False
    return True


def canonicalize(d: BranchDatum) -> CanonicalDatum:
    if isinstance(d, CanonicalDatum):
        return d
    return CanonicalDatum(d.m, d.N, _min_image(d.m, d.a))


def equivalent(d1: BranchDatum, d2: BranchDatum) -> bool:
    if d1.m != d2.m or d1.N != d2.N:
        return False
    return canonicalize(d1).a == canonicalize(d2).a


def _classes_with_first(m: int, N: int, first: int) -> list[tuple[int, ...]]:
    out = []
    for rest in combinations_with_replacement(range(first, m), N - 1):
        a = (first,) + rest
        if sum(a) % m or reduce(math.gcd, a, m) != 1:
            continue
        if is_canonical(m, a):
            out.append(a)
    return out


def enumerate_classes(m: int, N: int, jobs: int = 1) -> list[CanonicalDatum]:
    """One canonical representative per class, in lexicographic order.

    Multisets are scanned directly (the permutation quotient is free) and
    only those that are already unit-minimal are kept.  With ``jobs > 1``
    the scan is split by first entry across threads; the result is the
    same list either way.
    """
    if m < 3:
        raise MOutOfRange(f"m must be at least 3, got {m}")
    if N < 4:
        raise NOutOfRange(f"N must be at least 4, got {N}")
    # start values that cannot begin a canonical tuple yield nothing
    firsts = range(1, m)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(lambda f: _classes_with_first(m, N, f), firsts))
    else:
        chunks = [_classes_with_first(m, N, f) for f in firsts]
    found = sorted(a for chunk in chunks for a in chunk)
    return [CanonicalDatum(m, N, a) for a in found]


def enumerate_candidates(m: int, jobs: int = 1) -> list[CanonicalDatum]:
    """All classes with ``4 <= N <= 2m``.

    A family with ``N > 2m`` has both ``d_1`` and ``d_{m-1}`` at least 2,
    so it is never totally geodesic; this list is therefore a superset of
    the possible totally geodesic families for ``m``.
    """
    out: list[CanonicalDatum] = []
    for N in range(4, 2 * m + 1):
        out.extend(enumerate_classes(m, N, jobs=jobs))
    return out
