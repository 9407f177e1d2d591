import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rotatlas import Interval, IntervalSet, make_interval, parse_interval, parse_rational

rationals = st.builds(F, st.integers(-60, 60), st.integers(1, 12))


@st.composite
def intervals(draw):
    lo, hi = sorted((draw(rationals), draw(rationals)))
    if lo == hi:
        return Interval.point(lo)
    return Interval(lo, hi, draw(st.booleans()), draw(st.booleans()))


def probes_for(*ivals):
    pts = set()
    for iv in ivals:
        pts.update((iv.lo, iv.hi, iv.midpoint()))
    for p in sorted(pts):
        pts.add(p - F(1, 97))
        pts.add(p + F(1, 97))
    return pts


def test_intersect_containment():
    assert parse_interval("[-2,2)").intersect(parse_interval("[-1,0]")) == parse_interval("[-1,0]")


def test_intersect_touching_open_closed_is_empty():
    assert parse_interval("(-1,-1/2)").intersect(parse_interval("[-1/2,0)")) is None


def test_intersect_overlap_endpoints():
    got = parse_interval("[-3/2,-1)").intersect(parse_interval("(-4/3,2)"))
    assert got == parse_interval("(-4/3,-1)")


def test_subtract_open_hole_leaves_closed_edges():
    x = IntervalSet((parse_interval("[-1,2)"),))
    got = x.subtract(parse_interval("(-1,-1/2)"))
    assert [str(p) for p in got] == ["[-1]", "[-1/2,2)"]


def test_subtract_singleton():
    x = IntervalSet((parse_interval("[-1,2)"),))
    assert [str(p) for p in x.subtract(parse_interval("[-1]"))] == ["(-1,2)"]


def test_subtract_exact_removal():
    x = IntervalSet((parse_interval("[0,1]"),))
    assert len(x.subtract(parse_interval("[0,1]"))) == 0


def test_sample_points():
    x = IntervalSet((parse_interval("[-1]"), parse_interval("(-1,0)")))
    assert x.sample_points() == (F(-1), F(-1, 2))
    assert IntervalSet((parse_interval("(3/2,2)"),)).sample_points() == (F(7, 4),)
    assert IntervalSet((parse_interval("[-3/2,-1)"),)).sample_points() == (F(-5, 4),)


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(F(1), F(0), True, True)
    with pytest.raises(ValueError):
        Interval(F(1), F(1), True, False)
    assert Interval.point(F(1)).is_singleton


def test_interval_set_invariants():
    a, b = parse_interval("[0,1]"), parse_interval("[1,2]")
    with pytest.raises(ValueError):
        IntervalSet((a, b))  # both closed at the shared point
    IntervalSet((parse_interval("[0,1)"), b))  # touching, one side open: fine
    with pytest.raises(ValueError):
        IntervalSet((b, a))  # out of order


def test_make_interval_empty_cases():
    assert make_interval(F(1), True, F(0), True) is None
    assert make_interval(F(1), False, F(1), True) is None
    assert make_interval(F(1), True, F(1), True) == Interval.point(F(1))


@pytest.mark.parametrize(
    "text", ["[-1,0]", "[-1,0)", "(-1,0]", "(-1,0)", "[8/5]", "(-2,2)", "[-3/2,-1)"]
)
def test_format_parse_round_trip(text):
    assert str(parse_interval(text)) == text


def test_parse_rational():
    assert parse_rational("-5/3") == F(-5, 3)
    assert parse_rational("4") == F(4)
    with pytest.raises(ValueError):
        parse_rational("one")


def test_parse_interval_rejects_junk():
    for bad in ["", "[1,2", "1,2)", "(8/5)"]:
        with pytest.raises(ValueError):
            parse_interval(bad)


@given(intervals(), intervals())
def test_intersection_is_the_common_membership(a, b):
    got = a.intersect(b)
    for p in probes_for(a, b):
        expected = a.contains(p) and b.contains(p)
        assert (got is not None and got.contains(p)) == expected


@given(intervals(), intervals())
def test_subtract_and_intersect_partition_membership(a, hole):
    pieces = a.subtract(hole)
    common = a.intersect(hole)
    for p in probes_for(a, hole):
        in_pieces = any(piece.contains(p) for piece in pieces)
        in_common = common is not None and common.contains(p)
        assert in_pieces + in_common == a.contains(p)
        # pieces never reach into the hole
        assert not (in_pieces and hole.contains(p))


@given(st.lists(intervals(), min_size=1, max_size=6))
def test_subtract_chain_keeps_invariant_and_membership(holes):
    box = Interval(F(-10), F(10), True, True)
    x = IntervalSet((box,))
    for hole in holes:
        x = x.subtract(hole)
        IntervalSet(x.parts)  # revalidate: sorted, disjoint, no closed touching
        assert not any(part.intersect(hole) for part in x.parts)
    for p in probes_for(box, *holes):
        expected = box.contains(p) and not any(h.contains(p) for h in holes)
        assert x.contains(p) == expected


@given(intervals(), intervals())
def test_produced_endpoints_stay_canonical(a, b):
    got = a.intersect(b)
    for iv in ([got] if got else []) + a.subtract(b):
        for r in (iv.lo, iv.hi):
            assert r.denominator > 0
            assert math.gcd(abs(r.numerator), r.denominator) == 1
