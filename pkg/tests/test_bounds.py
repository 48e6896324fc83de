import pytest

from cyclic_covers.bounds import (
    bound_report,
    generic_gonal_bound,
    gonality_upper,
    quadric_system_bound,
    rank_lower_bound,
    tg_dim_bound,
    tg_dim_bound_gonal,
)
from cyclic_covers.errors import DomainError, GenusTooSmall

from oracles import isqrt_scan


@pytest.mark.parametrize("g, k", [(4, 3), (5, 4), (9, 6)])
def test_gonality_upper(g, k):
    assert gonality_upper(g) == k


def test_rank_lower_bound():
    assert rank_lower_bound(4, 3, 0) == 3
    assert rank_lower_bound(6, 4, 1) == 5
    with pytest.raises(DomainError):
        rank_lower_bound(6, 4, 2)
    with pytest.raises(DomainError):
        rank_lower_bound(6, 2, 0)


def test_rank_lower_bound_exceeds_2g_minus_2k():
    for g in range(4, 31):
        for k in range(3, 2 * g):
            for b in range(0, k - 2):
                assert rank_lower_bound(g, k, b) > 2 * g - 2 * k


@pytest.mark.parametrize("g, k, expected", [(4, 3, 7), (6, 4, 12), (10, 6, 22)])
def test_tg_dim_bound_gonal(g, k, expected):
    assert tg_dim_bound_gonal(g, k) == expected


@pytest.mark.parametrize("g, expected", [(4, 7), (5, 10), (11, 25)])
def test_tg_dim_bound(g, expected):
    assert tg_dim_bound(g) == expected


@pytest.mark.parametrize("g, k, expected", [(4, 3, 7), (6, 4, 12), (5, 4, 10)])
def test_generic_gonal_bound(g, k, expected):
    assert generic_gonal_bound(g, k) == expected


@pytest.mark.parametrize("g, expected", [(4, 8), (5, 11), (10, 25)])
def test_quadric_system_bound(g, expected):
    assert (isqrt_scan(32 * g * g - 40 * g + 1) - 1) // 2 == expected
    assert quadric_system_bound(g) == expected


@pytest.mark.parametrize("fn", [gonality_upper, tg_dim_bound, quadric_system_bound])
def test_genus_too_small(fn):
    with pytest.raises(GenusTooSmall):
        fn(3)


def test_consistency_up_to_200():
    for g in range(4, 201):
        assert tg_dim_bound(g) == tg_dim_bound_gonal(g, gonality_upper(g))
        assert quadric_system_bound(g) >= tg_dim_bound(g)


def test_monotone():
    for g in range(4, 60):
        for fn in (gonality_upper, tg_dim_bound, quadric_system_bound):
            assert fn(g + 1) >= fn(g)
        for k in range(3, 20):
            for fn in (tg_dim_bound_gonal, generic_gonal_bound):
                assert fn(g + 1, k) >= fn(g, k)
                assert fn(g, k + 1) >= fn(g, k)
            for b in range(0, k - 2):
                assert rank_lower_bound(g + 1, k, b) >= rank_lower_bound(g, k, b)


def test_bound_report():
    r = bound_report(4, 3)
    assert (r.dim_bound_gonal, r.dim_bound, r.quadric_system_bound) == (7, 7, 8)
    assert r.rank_lower == 3 and r.base_degree == 0
    r = bound_report(5)
    assert r.dim_bound == 10 and r.gonality is None and r.rank_lower is None
    assert bound_report(10, 6, 1).rank_lower == 11
    assert bound_report(10, 6).rank_lower == 2 * 10 - 2 * 6 + 1
    with pytest.raises(GenusTooSmall):
        bound_report(3)
    with pytest.raises(DomainError):
        bound_report(6, None, 1)
