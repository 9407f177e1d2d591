"""Refinement of the finite part of the parameter interval, plus verification.

Given an integer initial pair, the tail module covers a left neighbourhood of
-2 with explicit cycles; the rest of the parameter interval (the "body") is
carved out by refinement: detect the cycle at a sample parameter, solve the
inverse problem for the exact interval on which that cycle occurs, subtract,
and resample midpoints of whatever is left.  The loop is expected to
terminate with a finite list of intervals; explicit budgets guard against the
alternative, which would mean either a bug or a counterexample.

`verify_atlas` re-checks a computed atlas from scratch: exact coverage,
disjointness, re-detection of every stored cycle at interval endpoints and
interior probes, pairwise distinctness of cycles up to rotation, and the
advertised tail structure.  `sweep` runs compute + verify over a square grid
of initial pairs and aggregates the statistics reported by `report`.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .constraints import interval_for_cycle
from .dynamics import (
    DEFAULT_ORBIT_CAP,
    ParamSpec,
    Word,
    canonical_rotation,
    detect_cycle,
)
from .intervals import Interval, IntervalSet
from .tail import TailDescription, tail_of, triangular_cycle, z_interval

FULL_RANGE = Interval.open(Fraction(-2), Fraction(2))


@dataclass(frozen=True)
class Caps:
    """Budgets guarding refinement; generous relative to everything observed."""

    orbit_cap: int = DEFAULT_ORBIT_CAP
    max_rounds: int = 10**4
    max_total_steps: int = 10**9


class OrbitCapExceeded(Exception):
    """An orbit at a sampled parameter failed to close within the step cap."""

    def __init__(self, lam: Fraction, start: tuple[int, int], cap: int):
        self.lam = lam
        self.start = start
        self.cap = cap
        super().__init__(f"orbit of {start} at parameter {lam} open after {cap} steps")


class BudgetExceeded(Exception):
    """Refinement ran out of rounds or total orbit steps; residual attached."""

    def __init__(self, reason: str, start: tuple[int, int], residual: IntervalSet):
        self.reason = reason
        self.start = start
        self.residual = residual
        super().__init__(f"refinement for {start} exceeded {reason}; residual {residual}")


@dataclass(frozen=True)
class PartitionAtlas:
    """The complete partition of the parameter interval for one initial pair."""

    a0: int
    a1: int
    tail: TailDescription
    body: tuple[tuple[Interval, Word], ...]

    @property
    def body_range(self) -> Interval:
        label = self.tail.label
        if label.d == 0 and label.s == 0:
            return FULL_RANGE
        return Interval(self.tail.interval.hi, Fraction(2), True, False)

    @property
    def table_range(self) -> Interval:
        """The range the summary tables count: right of the K-window edge.

        The verified body can extend further left than this when the pair's
        occurrence index exceeds K; the overhang windows are excluded from
        the tabulated statistics, which are defined over this range.
        """
        label = self.tail.label
        if label.d == 0:
            return self.body_range
        lo = -2 + Fraction(1, label.s + label.K * label.d)
        return Interval(lo, Fraction(2), True, False)

    def table_body(self) -> tuple[tuple[Interval, Word], ...]:
        """Body entries clipped to `table_range`; identical to body for most pairs."""
        rng = self.table_range
        if rng == self.body_range:
            return self.body
        out = []
        for ival, word in self.body:
            clipped = ival.intersect(rng)
            if clipped is not None:
                out.append((clipped, word))
        return tuple(out)

    @property
    def interval_count(self) -> int:
        return len(self.body)

    @property
    def singleton_count(self) -> int:
        return sum(1 for ival, _ in self.body if ival.is_singleton)

    @property
    def total_cycle_length(self) -> int:
        return sum(len(word) for _, word in self.body)

    @property
    def average_cycle_length(self) -> Fraction:
        return Fraction(self.total_cycle_length, len(self.body))

    def longest_cycle_entry(self) -> tuple[Interval, Word]:
        """The entry with the longest cycle (first in body order on a tie)."""
        return max(self.body, key=lambda entry: len(entry[1]))


def compute_atlas(a0: int, a1: int, caps: Caps = Caps()) -> PartitionAtlas:
    """Run the refinement loop for one initial pair.

    The pair (0, 0) short-circuits: its single cycle (0) covers everything.
    Otherwise the body range starts closed at the right edge of the tail and
    ends open at 2.  Sampled words are deduplicated; each found interval is
    clipped to the body range before subtraction so the tail/body boundary
    point stays with the body.
    """
    tail = tail_of(a0, a1)
    if (a0, a1) == (0, 0):
        return PartitionAtlas(a0, a1, tail, ((FULL_RANGE, (0,)),))

    body_range = Interval(tail.interval.hi, Fraction(2), True, False)
    remaining = IntervalSet((body_range,))
    found: dict[Word, Interval] = {}
    start = (a0, a1)
    rounds = 0
    total_steps = 0
    while remaining:
        rounds += 1
        if rounds > caps.max_rounds:
            raise BudgetExceeded(f"round budget {caps.max_rounds}", start, remaining)
        for lam in remaining.sample_points():
            result = detect_cycle(ParamSpec.exact(lam), start, caps.orbit_cap)
            if result.outcome != "cycle":
                raise OrbitCapExceeded(lam, start, caps.orbit_cap)
            total_steps += result.steps_used
            if total_steps > caps.max_total_steps:
                raise BudgetExceeded(
                    f"total step budget {caps.max_total_steps}", start, remaining
                )
            word = result.cycle
            if word in found:
                continue
            ival = interval_for_cycle(word)
            assert ival is not None and ival.contains(lam), (
                f"detected cycle at {lam} whose parameter interval misses it"
            )
            clipped = ival.intersect(body_range)
            assert clipped is not None
            found[word] = clipped
            remaining = remaining.subtract(clipped)
    body = tuple(
        (ival, word)
        for word, ival in sorted(found.items(), key=lambda kv: (kv[1].lo, kv[1].hi))
    )
    return PartitionAtlas(a0, a1, tail, body)


@dataclass(frozen=True)
class VerificationReport:
    """Pass/fail of an atlas re-check, with the first counterexample if any."""

    ok: bool
    failure: Optional[str] = None
    probes_run: int = 0


def _fail(message: str, probes: int) -> VerificationReport:
    return VerificationReport(False, message, probes)


def verify_atlas(
    atlas: PartitionAtlas,
    probes_per_interval: int = 2,
    tail_pieces: int = 4,
    caps: Caps = Caps(),
) -> VerificationReport:
    """Re-check a computed atlas against the dynamics from scratch."""
    a0, a1 = atlas.a0, atlas.a1
    body_range = atlas.body_range
    probes = 0

    # Tiling: the body entries cover the body range exactly, in order, with
    # complementary closures at shared endpoints.
    if not atlas.body:
        return _fail("empty body", probes)
    first, last = atlas.body[0][0], atlas.body[-1][0]
    if (first.lo, first.lo_closed) != (body_range.lo, body_range.lo_closed):
        return _fail(f"body starts at {first}, expected lower edge {body_range}", probes)
    if (last.hi, last.hi_closed) != (body_range.hi, body_range.hi_closed):
        return _fail(f"body ends at {last}, expected upper edge {body_range}", probes)
    for (cur, _), (nxt, _) in zip(atlas.body, atlas.body[1:]):
        if cur.hi != nxt.lo or cur.hi_closed == nxt.lo_closed:
            return _fail(f"coverage breaks between {cur} and {nxt}", probes)

    # Tail structure: the stored tail is the one the label dictates, and its
    # advertised pieces are genuine (window = exact parameter interval of the
    # window's cycle, and the detected orbit there is that cycle up to rotation).
    label = atlas.tail.label
    if atlas.tail != tail_of(a0, a1):
        return _fail(f"stored tail {atlas.tail.interval} is not the pair's tail", probes)
    if label.d > 0:
        for k in range(atlas.tail.k_start, atlas.tail.k_start + tail_pieces):
            window = z_interval(label.s, label.d, k)
            cycle = triangular_cycle(label.s, label.d, k)
            if interval_for_cycle(cycle) != window:
                return _fail(f"tail window mismatch at k={k}", probes)
            n = len(cycle)
            if not any(
                cycle[i] == a0 and cycle[(i + 1) % n] == a1 for i in range(n)
            ):
                return _fail(f"initial pair absent from tail cycle k={k}", probes)
            result = detect_cycle(ParamSpec.exact(window.midpoint()), (a0, a1), caps.orbit_cap)
            probes += 1
            if result.outcome != "cycle" or canonical_rotation(
                result.cycle
            ) != canonical_rotation(cycle):
                return _fail(f"tail cycle not re-detected at k={k}", probes)
    else:
        result = detect_cycle(
            ParamSpec.exact(atlas.tail.interval.midpoint()), (a0, a1), caps.orbit_cap
        )
        probes += 1
        if result.outcome != "cycle" or result.cycle != (label.s,):
            return _fail("constant tail cycle not re-detected", probes)

    # Body entries: distinct cycles up to rotation, each containing the
    # initial pair adjacently, each with the exact advertised interval, and
    # each re-detected at every closed endpoint and at interior probes.
    seen: set[Word] = set()
    for ival, word in atlas.body:
        canon = canonical_rotation(word)
        if canon in seen:
            return _fail(f"duplicate cycle (up to rotation) on {ival}", probes)
        seen.add(canon)
        n = len(word)
        if not any(word[i] == a0 and word[(i + 1) % n] == a1 for i in range(n)):
            return _fail(f"initial pair absent from cycle on {ival}", probes)
        exact = interval_for_cycle(word)
        if exact is None or exact.intersect(body_range) != ival:
            return _fail(f"stored interval {ival} is not the cycle's parameter set", probes)
        lams = []
        if ival.lo_closed:
            lams.append(ival.lo)
        if ival.hi_closed and not ival.is_singleton:
            lams.append(ival.hi)
        if not ival.is_singleton:
            span = ival.hi - ival.lo
            lams.extend(
                ival.lo + span * Fraction(j, probes_per_interval + 1)
                for j in range(1, probes_per_interval + 1)
            )
        for lam in lams:
            result = detect_cycle(ParamSpec.exact(lam), (a0, a1), caps.orbit_cap)
            probes += 1
            if result.outcome != "cycle" or result.cycle != word:
                return _fail(f"cycle on {ival} not re-detected at {lam}", probes)

    return VerificationReport(True, None, probes)


@dataclass(frozen=True)
class PointSummary:
    """Per-initial-pair statistics retained by a sweep."""

    a0: int
    a1: int
    shell: int
    intervals: int
    singletons: int
    max_len: int
    max_len_interval: str
    total_len: int
    verified: bool
    failure: Optional[str] = None

    @property
    def avg_len(self) -> Fraction:
        return Fraction(self.total_len, self.intervals)


@dataclass(frozen=True)
class ShellStats:
    """Aggregates over all pairs with max(|a0|, |a1|) equal to one value."""

    m: int
    card_point: tuple[int, int]
    cardinality: int
    singletons: int
    len_point: tuple[int, int]
    max_len: int
    max_len_interval: str
    avg_len_pooled: Fraction
    avg_len_at_max_point: Fraction


@dataclass(frozen=True)
class SweepReport:
    """Everything a sweep over max(|a0|, |a1|) <= max_m retains."""

    max_m: int
    points: tuple[PointSummary, ...]

    @property
    def all_verified(self) -> bool:
        return all(p.verified for p in self.points)

    def failures(self) -> list[PointSummary]:
        return [p for p in self.points if not p.verified]

    def shell_stats(self, m: int) -> ShellStats:
        """Recompute one shell's aggregates from the per-point summaries.

        Argmax scans lexicographically ascending and keeps the last point
        attaining the maximum, so among tied symmetric pairs the
        lexicographically largest is reported.
        """
        shell = sorted(
            (p for p in self.points if p.shell == m), key=lambda p: (p.a0, p.a1)
        )
        if not shell:
            raise ValueError(f"no points at shell {m}")
        card_best = shell[0]
        len_best = shell[0]
        for p in shell[1:]:
            if p.intervals >= card_best.intervals:
                card_best = p
            if p.max_len >= len_best.max_len:
                len_best = p
        total = sum(p.total_len for p in shell)
        count = sum(p.intervals for p in shell)
        return ShellStats(
            m=m,
            card_point=(card_best.a0, card_best.a1),
            cardinality=card_best.intervals,
            singletons=card_best.singletons,
            len_point=(len_best.a0, len_best.a1),
            max_len=len_best.max_len,
            max_len_interval=len_best.max_len_interval,
            avg_len_pooled=Fraction(total, count),
            avg_len_at_max_point=len_best.avg_len,
        )

    def shells(self) -> list[ShellStats]:
        return [self.shell_stats(m) for m in range(1, self.max_m + 1)]


def summarize_atlas(atlas: PartitionAtlas, verdict: VerificationReport) -> PointSummary:
    """Statistics over the table body (the range the reference tables count)."""
    entries = atlas.table_body()
    longest_interval, longest_word = max(entries, key=lambda entry: len(entry[1]))
    return PointSummary(
        a0=atlas.a0,
        a1=atlas.a1,
        shell=max(abs(atlas.a0), abs(atlas.a1)),
        intervals=len(entries),
        singletons=sum(1 for ival, _ in entries if ival.is_singleton),
        max_len=len(longest_word),
        max_len_interval=str(longest_interval),
        total_len=sum(len(word) for _, word in entries),
        verified=verdict.ok,
        failure=verdict.failure,
    )


def _sweep_point(args: tuple) -> PointSummary:
    a0, a1, caps, probes_per_interval, out_dir = args
    atlas = compute_atlas(a0, a1, caps)
    verdict = verify_atlas(atlas, probes_per_interval=probes_per_interval, caps=caps)
    if out_dir is not None:
        from . import report

        report.write_atlas_json(atlas, out_dir)
    return summarize_atlas(atlas, verdict)


def sweep(
    max_m: int,
    caps: Caps = Caps(),
    jobs: int = 1,
    probes_per_interval: int = 1,
    out_dir: Optional[str] = None,
) -> SweepReport:
    """Compute and verify atlases for every pair with max(|a0|, |a1|) <= max_m.

    Budget failures propagate as exceptions naming the offending pair.  The
    result is deterministic and independent of ``jobs``; with ``out_dir``
    set, one JSON atlas per pair is written as a side effect.
    """
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    grid = [
        (a0, a1, caps, probes_per_interval, out_dir)
        for a0 in range(-max_m, max_m + 1)
        for a1 in range(-max_m, max_m + 1)
    ]
    if jobs > 1:
        # chunksize 1: pairs differ wildly in cost, let idle workers pull
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            summaries = list(pool.map(_sweep_point, grid, chunksize=1))
    else:
        summaries = [_sweep_point(args) for args in grid]
    summaries.sort(key=lambda p: (p.a0, p.a1))
    return SweepReport(max_m, tuple(summaries))
