import pytest
from hypothesis import assume, given, strategies as st

from cyclic_covers.branch import (
    BranchDatum,
    CanonicalDatum,
    canonicalize,
    enumerate_candidates,
    enumerate_classes,
    equivalent,
    is_canonical,
    validate,
)
from cyclic_covers.errors import (
    GcdNotOne,
    LengthMismatch,
    MOutOfRange,
    MonodromyOutOfRange,
    NOutOfRange,
    SumNotZeroModM,
)

from oracles import brute_classes, is_valid, orbit


@st.composite
def valid_data(draw, max_m=9, max_N=8):
    m = draw(st.integers(min_value=3, max_value=max_m))
    N = draw(st.integers(min_value=4, max_value=max_N))
    head = draw(st.lists(st.integers(min_value=1, max_value=m - 1), min_size=N - 1, max_size=N - 1))
    last = (-sum(head)) % m
    a = head + [last]
    assume(is_valid(m, a))
    return validate(m, N, a)


@pytest.mark.parametrize("m, N, a", [
    (3, 6, (1, 1, 1, 1, 1, 1)),
    (5, 4, (1, 3, 3, 3)),
])
def test_validate_accepts(m, N, a):
    d = validate(m, N, a)
    assert (d.m, d.N, d.a) == (m, N, a)


@pytest.mark.parametrize("m, N, a, error", [
    (5, 4, (1, 1, 1, 1), SumNotZeroModM),
    (2, 4, (1, 1, 1, 1), MOutOfRange),
    (5, 3, (1, 2, 2), NOutOfRange),
    (5, 4, (1, 2, 3), LengthMismatch),
    (5, 4, (0, 1, 4, 5), MonodromyOutOfRange),
    (6, 4, (2, 2, 4, 4), GcdNotOne),
])
def test_validate_rejects(m, N, a, error):
    with pytest.raises(error) as info:
        validate(m, N, a)
    assert info.value.constraint == error.__name__


def test_canonicalize_examples():
    assert canonicalize(validate(3, 6, (2,) * 6)).a == (1,) * 6
    assert canonicalize(validate(5, 4, (2, 1, 4, 3))).a == (1, 2, 3, 4)
    # the unit-minimal representative of (1,3,3,3) is (1,1,1,2): 2*(1,3,3,3) = (2,1,1,1)
    c = canonicalize(validate(5, 4, (3, 3, 3, 1)))
    assert c.a == (1, 1, 1, 2)
    assert equivalent(c, validate(5, 4, (1, 3, 3, 3)))


def test_canonical_datum_rejects_noncanonical():
    with pytest.raises(ValueError):
        CanonicalDatum(5, 4, (1, 3, 3, 3))
    assert isinstance(canonicalize(validate(5, 4, (1, 1, 1, 2))), CanonicalDatum)


@given(valid_data())
def test_canonicalize_idempotent_and_minimal(d):
    c = canonicalize(d)
    assert canonicalize(c) == c
    assert c.a == min(tuple(sorted(o)) for o in orbit(d.m, d.a))
    assert is_canonical(c.m, c.a)


@given(valid_data(), st.randoms(use_true_random=False))
def test_canonicalize_constant_on_orbits(d, rnd):
    img = list(rnd.choice(sorted(orbit(d.m, d.a))))
    assert canonicalize(validate(d.m, d.N, img)) == canonicalize(d)


def test_equivalent_examples():
    assert equivalent(validate(3, 6, (1,) * 6), validate(3, 6, (2,) * 6))
    d1, d2 = validate(5, 4, (1, 3, 3, 3)), validate(5, 4, (1, 2, 3, 4))
    assert not equivalent(d1, d2)
    assert tuple(d2.a) not in orbit(5, d1.a)
    assert equivalent(d1, d1)


@given(valid_data(max_m=6, max_N=6), valid_data(max_m=6, max_N=6), valid_data(max_m=6, max_N=6))
def test_equivalence_relation(x, y, z):
    assert equivalent(x, x)
    assert equivalent(x, y) == equivalent(y, x)
    if equivalent(x, y) and equivalent(y, z):
        assert equivalent(x, z)


def test_equivalent_needs_same_m_and_N():
    assert not equivalent(validate(3, 6, (1,) * 6), validate(3, 7, (1, 1, 1, 1, 1, 2, 2)))
    assert not equivalent(validate(4, 4, (1, 1, 1, 1)), validate(8, 4, (1, 1, 3, 3)))


def test_enumerate_classes_examples():
    assert [c.a for c in enumerate_classes(3, 6)] == [(1, 1, 1, 1, 1, 1), (1, 1, 1, 2, 2, 2)]
    assert [c.a for c in enumerate_classes(3, 4)] == [(1, 1, 2, 2)]
    five = {c.a for c in enumerate_classes(5, 4)}
    for a in [(1, 3, 3, 3), (1, 1, 4, 4), (1, 2, 3, 4), (2, 2, 2, 4), (1, 1, 1, 2)]:
        assert canonicalize(validate(5, 4, a)).a in five
    # (1,3,3,3), (2,2,2,4) and (1,1,1,2) share one orbit
    assert five == {(1, 1, 1, 2), (1, 1, 4, 4), (1, 2, 3, 4)}


@pytest.mark.parametrize("m", [3, 4, 5])
@pytest.mark.parametrize("N", [4, 5, 6, 7])
def test_enumerate_matches_brute_force(m, N):
    got = enumerate_classes(m, N)
    oracle = brute_classes(m, N)
    assert len(got) == len(oracle)
    # each representative lands in a distinct oracle orbit
    hits = sorted(next(i for i, o in enumerate(oracle) if c.a in o) for c in got)
    assert hits == list(range(len(oracle)))


@pytest.mark.parametrize("m, N", [(5, 6), (6, 6), (7, 5), (8, 6)])
def test_enumerate_output_contract(m, N):
    got = enumerate_classes(m, N)
    assert [c.a for c in got] == sorted(c.a for c in got)
    for c in got:
        assert isinstance(c, BranchDatum)
        assert canonicalize(validate(m, N, c.a)) == c
    assert enumerate_classes(m, N, jobs=4) == got


def test_enumerate_candidates():
    three = enumerate_candidates(3)
    assert {c.N for c in three} == {4, 5, 6}
    assert {c.N for c in enumerate_candidates(5)} == set(range(4, 11))
    five = set(enumerate_candidates(5))
    for N, a in [(4, (1, 3, 3, 3)), (5, (2, 2, 2, 2, 2)), (4, (1, 1, 4, 4)), (4, (1, 2, 3, 4)),
                 (5, (1, 1, 1, 3, 4)), (5, (1, 1, 2, 2, 4)), (6, (1, 1, 2, 2, 2, 2))]:
        assert canonicalize(validate(5, N, a)) in five
