"""Rank and dimension bounds for totally geodesic germs in the Jacobian locus.

``Y`` is a germ of a totally geodesic submanifold of ``A_g`` contained in
the Jacobian locus and passing through a ``k``-gonal curve of genus ``g``.
Bounds that are real numbers are floored, since ``dim Y`` is an integer.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .errors import DomainError, GenusTooSmall
from .exact import integer_sqrt_floor

__all__ = [
    "BoundReport",
    "FLOOR_CONVENTION",
    "gonality_upper",
    "rank_lower_bound",
    "tg_dim_bound_gonal",
    "tg_dim_bound",
    "generic_gonal_bound",
    "quadric_system_bound",
    "bound_report",
]

FLOOR_CONVENTION = "real-valued bounds are rounded down to integers"


def _need_genus(g: int) -> None:
    if g < 4:
        raise GenusTooSmall(f"genus must be at least 4, got {g}")


def _need_gonality(k: int) -> None:
    if k < 3:
        raise DomainError(f"gonality must be at least 3, got {k}")


def gonality_upper(g: int) -> int:
    """Maximal gonality of a genus ``g`` curve, ``floor((g + 3) / 2)``."""
    _need_genus(g)
    return (g + 3) // 2


def rank_lower_bound(g: int, k: int, degB: int) -> int:
    """Rank guaranteed for ``rho(Q)`` on a suitable rank-4 quadric ``Q``.

    ``degB`` is the degree of the base locus of ``|K - F|`` for the
    ``g^1_k`` given by ``F``; Clifford forces ``degB < k - 2``.  The result
    ``2g - 2 - k - degB`` always exceeds ``2g - 2k``.
    """
    _need_genus(g)
    _need_gonality(k)
    if not 0 <= degB < k - 2:
        raise DomainError(f"base locus degree must lie in [0, {k - 3}], got {degB}")
    return 2 * g - 2 - k - degB


def tg_dim_bound_gonal(g: int, k: int) -> int:
    _need_genus(g)
    _need_gonality(k)
    return 2 * g + k - 4


def tg_dim_bound(g: int) -> int:
    _need_genus(g)
    return 5 * (g - 1) // 2


def generic_gonal_bound(g: int, k: int) -> int:
    """Bound through a generic ``k``-gonal curve, ``floor(2g - 2 + k/2)``."""
    _need_genus(g)
    _need_gonality(k)
    return 2 * g - 2 + k // 2


def quadric_system_bound(g: int) -> int:
    """``floor((-1 + sqrt(32 g^2 - 40 g + 1)) / 2)`` in integer arithmetic.

    Flooring the square root first does not change the final floor.
    """
    _need_genus(g)
    return (integer_sqrt_floor(32 * g * g - 40 * g + 1) - 1) // 2


@dataclass(frozen=True)
class BoundReport:
    genus: int
    gonality: Optional[int]
    rank_lower: Optional[int]
    dim_bound_gonal: Optional[int]
    dim_bound: int
    generic_gonal_bound: Optional[int]
    quadric_system_bound: int
    base_degree: Optional[int] = None
    convention: str = FLOOR_CONVENTION

    def as_dict(self) -> dict:
        return asdict(self)


def bound_report(g: int, k: Optional[int] = None, degB: Optional[int] = None) -> BoundReport:
    """Every bound defined for ``g`` (and ``k`` when given).

    Without ``degB`` the rank bound uses the worst case ``k - 3`` allowed
    by Clifford, which holds for every ``k``-gonal curve.
    """
    _need_genus(g)
    rank = gonal = generic = None
    if k is not None:
        _need_gonality(k)
        if degB is None:
            degB = k - 3
        rank = rank_lower_bound(g, k, degB)
        gonal = tg_dim_bound_gonal(g, k)
        generic = generic_gonal_bound(g, k)
    elif degB is not None:
        raise DomainError("a base locus degree needs a gonality")
    return BoundReport(
        genus=g,
        gonality=k,
        rank_lower=rank,
        dim_bound_gonal=gonal,
        dim_bound=tg_dim_bound(g),
        generic_gonal_bound=generic,
        quadric_system_bound=quadric_system_bound(g),
        base_degree=degB,
    )
