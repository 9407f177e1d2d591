import dataclasses
from fractions import Fraction as F

import pytest

from rotatlas import (
    BudgetExceeded,
    Caps,
    OrbitCapExceeded,
    compute_atlas,
    parse_interval,
    rotation_equal,
    summarize_atlas,
    sweep,
    verify_atlas,
)


def entry_map(atlas):
    return {str(ival): word for ival, word in atlas.body}


def test_origin_is_trivial(atlas):
    at = atlas(0, 0)
    assert [(str(i), w) for i, w in at.body] == [("(-2,2)", (0,))]
    assert at.body_range == at.table_range == parse_interval("(-2,2)")
    assert verify_atlas(at).ok


def test_minus_one_minus_one(atlas):
    at = atlas(-1, -1)
    assert at.interval_count == 22
    assert at.singleton_count == 11
    lows = sorted({i.lo for i, _ in at.body} | {i.hi for i, _ in at.body})
    assert lows == [
        F(-1), F(-1, 2), F(0), F(1, 2), F(1), F(4, 3), F(3, 2),
        F(8, 5), F(5, 3), F(7, 4), F(9, 5), F(2),
    ]
    assert verify_atlas(at, probes_per_interval=3).ok


def test_named_cycles_for_minus_one_one(atlas):
    entries = entry_map(atlas(-1, 1))
    assert entries["(-3/2,-4/3)"] == (-1, 1, 3, 4, 3, 1, -1, -2)
    assert entries["[-4/3,-1)"] == (-1, 1, 3, 3, 1, -1, -2)
    assert entries["[-1]"] == (-1, 1, 2, 1, -1, -2)
    assert entries["(-1,-1/2)"] == (-1, 1, 2, 1, -1)


def test_minus_two_minus_two(atlas):
    at = atlas(-2, -2)
    assert at.interval_count == 59
    assert at.singleton_count == 20
    assert entry_map(at)["[-2/3,-1/2]"] == (-2, -2, 1, 3, 1)


def test_recomputation_is_deterministic(atlas):
    assert compute_atlas(-2, 1) == atlas(-2, 1)


def test_swap_symmetry_small_grid(atlas):
    for a0 in range(-3, 4):
        for a1 in range(-3, 4):
            fwd, rev = atlas(a0, a1), atlas(a1, a0)
            assert [i for i, _ in fwd.body] == [i for i, _ in rev.body]
            for (_, w1), (_, w2) in zip(fwd.body, rev.body):
                assert rotation_equal(w1, w2[::-1])


def test_last_entry_reaches_the_right_edge(atlas):
    for a0 in range(-3, 4):
        for a1 in range(-3, 4):
            last, _ = atlas(a0, a1).body[-1]
            assert last.hi == 2 and not last.hi_closed and not last.is_singleton


def test_every_stored_word_replays_at_its_sample(atlas):
    from rotatlas import word_is_cycle_at

    for pair in ((-2, -2), (2, 3), (0, 0), (-1, 2)):
        for ival, word in atlas(*pair).body:
            assert word_is_cycle_at(word, ival.midpoint())


def test_deferred_occurrence_pair_has_wider_body(atlas):
    at = atlas(2, 3)
    assert at.body_range == parse_interval("[-3/2,2)")
    assert at.table_range == parse_interval("[-1,2)")
    table = at.table_body()
    assert len(table) < at.interval_count
    assert entry_map(at)["[-4/3,-1)"] == (2, 3, 2, 0, -2, -2, 0)
    assert verify_atlas(at).ok


def test_verify_rejects_perturbed_endpoint(atlas):
    at = atlas(-1, -1)
    body = list(at.body)
    ival, word = body[1]
    body[1] = (dataclasses.replace(ival, hi=ival.hi - F(1, 10**6)), word)
    bad = dataclasses.replace(at, body=tuple(body))
    report = verify_atlas(bad)
    assert not report.ok and "coverage" in report.failure


def test_verify_rejects_swapped_cycles(atlas):
    at = atlas(-1, -1)
    body = list(at.body)
    (i1, w1), (i2, w2) = body[1], body[3]
    body[1], body[3] = (i1, w2), (i2, w1)
    bad = dataclasses.replace(at, body=tuple(body))
    report = verify_atlas(bad)
    assert not report.ok and "not the cycle's parameter set" in report.failure


def test_verify_rejects_duplicate_cycle(atlas):
    at = atlas(-1, -1)
    body = list(at.body)
    body[1] = (body[1][0], body[3][1])
    bad = dataclasses.replace(at, body=tuple(body))
    assert not verify_atlas(bad).ok


def test_verify_rejects_foreign_tail(atlas):
    at = atlas(-1, -1)
    bad = dataclasses.replace(at, tail=dataclasses.replace(at.tail, k_start=2))
    report = verify_atlas(bad)
    assert not report.ok and "tail" in report.failure


def test_round_budget_exhaustion():
    with pytest.raises(BudgetExceeded) as exc:
        compute_atlas(-2, -2, Caps(max_rounds=2))
    assert exc.value.start == (-2, -2)
    assert len(exc.value.residual) > 0


def test_orbit_cap_exhaustion():
    with pytest.raises(OrbitCapExceeded) as exc:
        compute_atlas(-1, -1, Caps(orbit_cap=10))
    assert exc.value.cap == 10
    assert F(-2) < exc.value.lam < F(2)


def test_total_step_budget_exhaustion():
    with pytest.raises(BudgetExceeded):
        compute_atlas(-2, -2, Caps(max_total_steps=50))


def test_summary_statistics(atlas):
    at = atlas(-1, -1)
    summary = summarize_atlas(at, verify_atlas(at))
    assert (summary.intervals, summary.singletons) == (22, 11)
    assert summary.max_len == 38 and summary.max_len_interval == "[8/5]"
    assert summary.shell == 1 and summary.verified
    assert summary.avg_len == F(summary.total_len, 22)


def test_sweep_shell_aggregates():
    rep = sweep(1)
    assert rep.all_verified
    assert len(rep.points) == 9
    row = rep.shell_stats(1)
    assert (row.card_point, row.cardinality, row.singletons) == ((-1, -1), 22, 11)
    assert (row.len_point, row.max_len, row.max_len_interval) == ((-1, -1), 38, "[8/5]")
    assert abs(float(row.avg_len_pooled) - 9.8172) < 5e-5


def test_sweep_parallel_matches_serial():
    assert sweep(1, jobs=2) == sweep(1)


def test_sweep_rejects_bad_m():
    with pytest.raises(ValueError):
        sweep(0)
