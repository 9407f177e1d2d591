"""Exact rational intervals with per-endpoint closure, and their disjoint unions.

Endpoints are `fractions.Fraction` throughout; nothing in this module (or in
the rest of the package) ever rounds.  Closure is tracked separately for each
endpoint because the parameter partitions we manipulate mix open, closed,
half-open and singleton intervals, and set difference at a boundary point has
to be decided exactly.

The canonical textual form used by every emitter and parser in the package:
rationals render as ``p/q`` (plain ``n`` for integers), intervals as
``[lo,hi]`` / ``[lo,hi)`` / ``(lo,hi]`` / ``(lo,hi)``, singletons as ``[r]``.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``n`` into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def _lo_key(value: Fraction, closed: bool) -> tuple[Fraction, int]:
    # Position of an interval's infimum on the (value, side) scale:
    # (v, 0) includes v itself, (v, 1) starts just after it.
    return (value, 0 if closed else 1)


def _hi_key(value: Fraction, closed: bool) -> tuple[Fraction, int]:
    # Position of the supremum: (v, 0) includes v, (v, -1) ends just before it.
    return (value, 0 if closed else -1)


@dataclass(frozen=True)
class Interval:
    """A non-empty rational interval; equal closed endpoints make a singleton."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool
    hi_closed: bool

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"reversed interval: lo={self.lo} > hi={self.hi}")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise ValueError(
                f"empty interval at {self.lo}: a singleton needs both ends closed"
            )

    @classmethod
    def open(cls, lo, hi) -> "Interval":
        return cls(lo, hi, False, False)

    @classmethod
    def closed(cls, lo, hi) -> "Interval":
        return cls(lo, hi, True, True)

    @classmethod
    def closed_open(cls, lo, hi) -> "Interval":
        return cls(lo, hi, True, False)

    @classmethod
    def open_closed(cls, lo, hi) -> "Interval":
        return cls(lo, hi, False, True)

    @classmethod
    def point(cls, r) -> "Interval":
        return cls(r, r, True, True)

    @property
    def is_singleton(self) -> bool:
        return self.lo == self.hi

    def midpoint(self) -> Fraction:
        """The arithmetic mean of the endpoints (the point itself for a singleton)."""
        return (self.lo + self.hi) / 2

    def contains(self, r) -> bool:
        r = Fraction(r)
        return _lo_key(self.lo, self.lo_closed) <= (r, 0) <= _hi_key(self.hi, self.hi_closed)

    def intersect(self, other: "Interval") -> Optional["Interval"]:
        """Set intersection with exact endpoint closure; None if empty."""
        lo_k = max(_lo_key(self.lo, self.lo_closed), _lo_key(other.lo, other.lo_closed))
        hi_k = min(_hi_key(self.hi, self.hi_closed), _hi_key(other.hi, other.hi_closed))
        return make_interval(lo_k[0], lo_k[1] == 0, hi_k[0], hi_k[1] == 0)

    def subtract(self, hole: "Interval") -> list["Interval"]:
        """Set difference ``self \\ hole`` as zero, one or two intervals in order."""
        if self.intersect(hole) is None:
            return [self]
        pieces = []
        left = make_interval(self.lo, self.lo_closed, hole.lo, not hole.lo_closed)
        if left is not None:
            pieces.append(left)
        right = make_interval(hole.hi, not hole.hi_closed, self.hi, self.hi_closed)
        if right is not None:
            pieces.append(right)
        return pieces

    def __str__(self) -> str:
        if self.is_singleton:
            return f"[{self.lo}]"
        lo_br = "[" if self.lo_closed else "("
        hi_br = "]" if self.hi_closed else ")"
        return f"{lo_br}{self.lo},{self.hi}{hi_br}"


def make_interval(lo, lo_closed: bool, hi, hi_closed: bool) -> Optional[Interval]:
    """Interval from raw endpoint data, or None if the set would be empty."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi or (lo == hi and not (lo_closed and hi_closed)):
        return None
    return Interval(lo, hi, lo_closed, hi_closed)


def parse_interval(text: str) -> Interval:
    """Parse the canonical textual interval form, including singletons ``[r]``."""
    text = text.strip()
    if len(text) < 3 or text[0] not in "[(" or text[-1] not in "])":
        raise ValueError(f"not an interval: {text!r}")
    body = text[1:-1]
    if "," not in body:
        if text[0] != "[" or text[-1] != "]":
            raise ValueError(f"singleton must be written [r]: {text!r}")
        r = parse_rational(body)
        return Interval.point(r)
    lo_text, hi_text = body.split(",", 1)
    return Interval(
        parse_rational(lo_text),
        parse_rational(hi_text),
        text[0] == "[",
        text[-1] == "]",
    )


@dataclass(frozen=True)
class IntervalSet:
    """An ordered union of pairwise disjoint intervals.

    Consecutive parts may touch at a point only when at most one of the
    touching ends is closed; such parts stay separate (they are distinct
    gaps as far as refinement is concerned).
    """

    parts: tuple[Interval, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        for prev, nxt in zip(self.parts, self.parts[1:]):
            if prev.hi > nxt.lo or (
                prev.hi == nxt.lo and prev.hi_closed and nxt.lo_closed
            ):
                raise ValueError(f"parts overlap or are out of order: {prev} then {nxt}")

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls(())

    @classmethod
    def _from_sorted(cls, parts: tuple[Interval, ...]) -> "IntervalSet":
        # Internal: parts already satisfy the invariant by construction.
        out = object.__new__(cls)
        object.__setattr__(out, "parts", parts)
        return out

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.parts)

    def contains(self, r) -> bool:
        return any(part.contains(r) for part in self.parts)

    def subtract(self, hole: Interval) -> "IntervalSet":
        """Remove ``hole`` from every part, preserving exact closures.

        Parts are sorted, so only the contiguous run whose spans reach the
        hole needs rewriting; value-level bisection brackets that run (the
        endpoints inside it still get the exact closure treatment).
        """
        parts = self.parts
        i = bisect_left(parts, hole.lo, key=lambda p: p.hi)
        j = bisect_right(parts, hole.hi, lo=i, key=lambda p: p.lo)
        if i >= j:
            return self
        rewritten: list[Interval] = []
        for part in parts[i:j]:
            rewritten.extend(part.subtract(hole))
        return IntervalSet._from_sorted(parts[:i] + tuple(rewritten) + parts[j:])

    def sample_points(self) -> tuple[Fraction, ...]:
        """One rational per part, in part order: the midpoint, or the point itself."""
        return tuple(part.midpoint() for part in self.parts)

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.parts) + "}"
