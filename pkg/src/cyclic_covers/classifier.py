"""Totally-geodesic screening of cyclic-cover families.

Two sufficient conditions are applied:

* no nonzero invariant quadric through the canonical curve (the invariant
  quadric dimension is zero) -- the family is totally geodesic;
* some ``n != m - n`` with ``d_n >= 2`` and ``d_{m-n} >= 2`` -- the family
  is not totally geodesic, provided its general member is not
  hyperelliptic.

Hyperellipticity is not decided here.  Families known to lie in the
hyperelliptic locus are listed in an allowlist and never receive a
negative verdict.
"""

from __future__ import annotations

import enum
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .branch import BranchDatum, CanonicalDatum, canonicalize, enumerate_classes, validate
from .errors import CyclicCoverError, GenusTooSmall, InvariantViolation
from .invariants import EigenProfile, FamilyInvariants, family_invariants

log = logging.getLogger(__name__)

ALLOWLIST_ENV = "GEODESIC_ALLOWLIST"

__all__ = [
    "Status",
    "Criterion",
    "Caveat",
    "Verdict",
    "HyperellipticAllowlist",
    "ALLOWLIST_ENV",
    "KNOWN_NOT_TG_BY_CM_POINT",
    "shimura_criterion",
    "exclusion_criterion",
    "classify",
    "survey",
    "load_allowlist",
    "parse_allowlist",
]


class Status(str, enum.Enum):
    TOTALLY_GEODESIC = "TotallyGeodesic"
    NOT_TOTALLY_GEODESIC = "NotTotallyGeodesic"
    UNDETERMINED = "Undetermined"
    NOT_APPLICABLE = "NotApplicable"


class Criterion(str, enum.Enum):
    NO_INVARIANT_QUADRICS = "NoInvariantQuadrics"
    EIGEN_DIM_EXCLUSION = "EigenDimExclusion"
    NONE = "None"


class Caveat(str, enum.Enum):
    HYPERELLIPTIC_ALLOWLISTED = "HyperellipticAllowlisted"
    GENUS_BELOW_FOUR = "GenusBelowFour"
    KNOWN_NOT_TG_BY_CM_POINT = "KnownNotTGByCMPoint"


# families shown elsewhere to contain a CM point without being Shimura;
# carried as annotation only
KNOWN_NOT_TG_BY_CM_POINT = frozenset({
    canonicalize(validate(5, 4, (1, 2, 3, 4))),
})


@dataclass(frozen=True)
class HyperellipticAllowlist:
    entries: frozenset = frozenset({canonicalize(validate(5, 4, (1, 1, 4, 4)))})

    def __contains__(self, d: BranchDatum) -> bool:
        return canonicalize(d) in self.entries

    def extended(self, data: Iterable[BranchDatum]) -> "HyperellipticAllowlist":
        return HyperellipticAllowlist(
            self.entries | frozenset(canonicalize(d) for d in data))


def parse_allowlist(text: str) -> list[CanonicalDatum]:
    """Parse lines of the form ``m N a1,a2,...,aN`` (``#`` starts a comment)."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 2)
        if len(parts) != 3:
            raise CyclicCoverError(f"allowlist line {lineno}: expected 'm N a1,...,aN'")
        m, N = int(parts[0]), int(parts[1])
        a = tuple(int(x) for x in parts[2].replace(" ", "").split(",") if x)
        out.append(canonicalize(validate(m, N, a)))
    return out


def load_allowlist(path: Optional[os.PathLike | str] = None) -> HyperellipticAllowlist:
    """The built-in allowlist, extended by ``path`` or ``$GEODESIC_ALLOWLIST``."""
    base = HyperellipticAllowlist()
    if path is None:
        path = os.environ.get(ALLOWLIST_ENV) or None
    if path is None:
        return base
    return base.extended(parse_allowlist(Path(path).read_text(encoding="utf-8")))


@dataclass(frozen=True)
class Verdict:
    datum: CanonicalDatum
    invariants: FamilyInvariants
    status: Status
    criterion: Criterion
    exclusion_n: Optional[int] = None
    caveats: frozenset = field(default_factory=frozenset)

    def as_dict(self) -> dict:
        return {
            **self.invariants.as_dict(),
            "status": self.status.value,
            "criterion": self.criterion.value,
            "exclusion_n": self.exclusion_n,
            "caveats": sorted(c.value for c in self.caveats),
        }


def shimura_criterion(f: FamilyInvariants) -> bool:
    if f.genus < 4:
        raise GenusTooSmall(f"genus {f.genus} < 4 for {f.datum}")
    return f.inv_quadric_dim == 0


def exclusion_criterion(p: EigenProfile) -> Optional[int]:
    """Smallest ``n`` with ``d_n, d_{m-n} >= 2`` and ``n != m - n``."""
    for n in range(1, p.m):
        if 2 * n != p.m and p.dim(n) >= 2 and p.dim(p.m - n) >= 2:
            return n
    return None


def classify(d: BranchDatum, allowlist: Optional[HyperellipticAllowlist] = None) -> Verdict:
    if allowlist is None:
        allowlist = HyperellipticAllowlist()
    inv = family_invariants(d)
    c = inv.datum
    caveats = set()
    if c in KNOWN_NOT_TG_BY_CM_POINT:
        caveats.add(Caveat.KNOWN_NOT_TG_BY_CM_POINT)
    if c in allowlist:
        caveats.add(Caveat.HYPERELLIPTIC_ALLOWLISTED)

    if inv.genus < 4:
        caveats.add(Caveat.GENUS_BELOW_FOUR)
        return Verdict(c, inv, Status.NOT_APPLICABLE, Criterion.NONE, None, frozenset(caveats))

    n = exclusion_criterion(inv.profile)
    if shimura_criterion(inv):
        if n is not None:
            raise InvariantViolation(
                f"{c}: no invariant quadrics yet the exclusion criterion fires at n={n}")
        return Verdict(c, inv, Status.TOTALLY_GEODESIC, Criterion.NO_INVARIANT_QUADRICS,
                       None, frozenset(caveats))
    if inv.inv_quadric_dim < 0:
        log.warning("%s: negative invariant quadric dimension %d", c, inv.inv_quadric_dim)
    if n is not None and Caveat.HYPERELLIPTIC_ALLOWLISTED not in caveats:
        return Verdict(c, inv, Status.NOT_TOTALLY_GEODESIC, Criterion.EIGEN_DIM_EXCLUSION,
                       n, frozenset(caveats))
    # an allowlisted family keeps the index that fired, but no negative verdict
    return Verdict(c, inv, Status.UNDETERMINED, Criterion.NONE, n, frozenset(caveats))


def survey(m: int, N_max: int, allowlist: Optional[HyperellipticAllowlist] = None,
           jobs: int = 1) -> list[Verdict]:
    """Classify every class with ``4 <= N <= N_max``, ordered by ``(N, a)``."""
    if allowlist is None:
        allowlist = HyperellipticAllowlist()
    data = [d for N in range(4, N_max + 1) for d in enumerate_classes(m, N, jobs=jobs)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda d: classify(d, allowlist), data))
    return [classify(d, allowlist) for d in data]
