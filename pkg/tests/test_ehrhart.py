import math
import random

import pytest
from hypothesis import given, settings

import oracles
from conftest import seqs
from lhall.ehrhart import (DeltaVector, delta, delta_via_ascents, delta_via_descents,
                           delta_via_parallelepiped, dilation_contains, ehrhart_direct,
                           ehrhart_from_delta, enumerate_dilation, series_check,
                           verify_volume)
from lhall.errors import InvalidInput, PreconditionError, SizeCapExceeded
from lhall.stats import eulerian_row

# delta-vectors computed by tests/oracles.delta_brute (box scan + series)
FROZEN_DELTAS = {
    (2, 3): (1, 4, 1),
    (1,): (1, 0),
    (2, 3, 1): (1, 4, 1, 0),
    (1, 2, 3): (1, 4, 1, 0),
    (3, 2, 1): (1, 4, 1, 0),
    (3, 1, 4): (1, 5, 6, 0),
    (2, 2, 3): (1, 7, 4, 0),
    (3, 2, 2): (1, 7, 4, 0),
    (4, 3): (1, 8, 3),
    (2, 5, 3, 1): (1, 14, 14, 1, 0),
    (1, 3, 2, 2): (1, 7, 4, 0, 0),
}


@pytest.mark.parametrize("s, expected", sorted(FROZEN_DELTAS.items()))
def test_frozen_deltas(s, expected):
    assert delta_via_parallelepiped(s).entries == expected
    assert delta_via_descents(s).entries == expected
    if s[0] == 1:
        assert delta_via_ascents(s).entries == expected


@pytest.mark.parametrize("s", [(2, 3), (3, 1, 4), (1, 4, 2), (2, 2, 2)])
def test_delta_matches_brute_oracle(s):
    assert delta(s).entries == oracles.delta_brute(s)


def test_ascent_example_and_precondition():
    assert delta_via_ascents((1, 2)).entries == (1, 1, 0)
    assert delta_via_ascents((1, 1, 1)).entries == (1, 0, 0, 0)
    with pytest.raises(PreconditionError):
        delta_via_ascents((2, 1))


def test_all_ones():
    for n in range(1, 6):
        assert delta_via_descents((1,) * n).entries == (1,) + (0,) * n


@pytest.mark.parametrize("n", range(1, 7))
def test_cube_law(n):
    row = eulerian_row(n) + (0,)
    lec, anti = tuple(range(1, n + 1)), tuple(range(n, 0, -1))
    for method in ("par", "des"):
        assert delta(lec, method).entries == row
        assert delta(anti, method).entries == row
    assert delta(lec, "asc").entries == row


@settings(max_examples=60)
@given(seqs(max_len=5, max_entry=5, max_volume=2000))
def test_three_way_agreement_and_volume(s):
    assert verify_volume(s) == []
    d = delta(s)
    assert sum(d) == math.prod(s) and d[0] == 1
    assert delta(tuple(reversed(s))).entries == d.entries


def test_delta_vector_shape_checked():
    with pytest.raises(InvalidInput):
        DeltaVector((2, 3), (1, 4))
    with pytest.raises(InvalidInput):
        DeltaVector((2,), (1, -1))
    with pytest.raises(InvalidInput):
        delta((2, 3), "nope")


def test_ehrhart_direct_examples():
    assert ehrhart_direct((2, 3), 0).count == 1
    assert ehrhart_direct((2, 3), 1).count == 7
    assert [ehrhart_direct((2, 3), t).count for t in range(6)] == [1, 7, 19, 37, 61, 91]
    with pytest.raises(InvalidInput):
        ehrhart_direct((2, 3), -1)


@pytest.mark.parametrize("s", [(2, 3), (3, 1, 4), (1, 2, 2), (4,), (2, 1, 3)])
def test_ehrhart_direct_matches_box_scan(s):
    for t in range(4):
        assert ehrhart_direct(s, t).count == oracles.ehrhart_brute(s, t)
        pts = list(enumerate_dilation(s, t))
        assert sorted(pts) == oracles.dilation_points_brute(s, t)
        assert all(dilation_contains(s, t, x) for x in pts)


def test_anti_lecture_hall_cube_counts():
    for n in range(1, 7):
        for t in range(5):
            assert ehrhart_direct(tuple(range(n, 0, -1)), t).count == (t + 1) ** n


def test_ehrhart_from_delta_examples():
    assert ehrhart_from_delta((1, 4, 1), 1).count == 7
    assert ehrhart_from_delta((1, 4, 1), 0).count == 1
    assert ehrhart_from_delta(eulerian_row(3) + (0,), 2).count == 27


def test_ehrhart_consistency_random():
    rng = random.Random(11)
    for _ in range(40):
        s = tuple(rng.randint(1, 6) for _ in range(rng.randint(1, 4)))
        if math.prod(s) > 1000:
            continue
        d = delta(s)
        for t in range(5):
            assert ehrhart_from_delta(d, t).count == ehrhart_direct(s, t).count


def test_series_check():
    assert series_check((2, 3), 6)
    assert series_check((1,), 3)
    assert not series_check((2, 3), 6, (1, 4, 2))
    assert not series_check((2, 3), 6, (1, 5, 0))
    with pytest.raises(InvalidInput):
        series_check((2, 3), 2)


def test_ehrhart_cap():
    with pytest.raises(SizeCapExceeded):
        ehrhart_direct((10, 10), 100, cap=50)


def test_big_dilation_is_exact():
    # (t+1)^n well beyond 64 bits
    assert ehrhart_direct((4, 3, 2, 1), 10**5).count == (10**5 + 1) ** 4
    assert ehrhart_from_delta(eulerian_row(4) + (0,), 10**12).count == (10**12 + 1) ** 4
