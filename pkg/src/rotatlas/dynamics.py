"""Round-off rotation step maps on the integer lattice, and orbit cycle detection.

The exact map with rotation parameter ``lam = p/q`` sends ``(x, y)`` to
``(y, z)`` where ``z`` is the unique integer with ``0 <= z + lam*y + x < 1``,
i.e. ``z = ceil(-lam*y - x)``.  The one-sided variants realize the pointwise
limits ``lam -> p/q + 0`` and ``lam -> p/q - 0``: they add 1 to the ceiling
exactly on the lattice lines where the tie would flip, namely ``q | y`` with
``y < 0`` (plus side) or ``y > 0`` (minus side).

The boundary specializations are the interesting extremes: ``minus_zero`` at
2 is the always-periodic map whose cycles are cyclic palindromes, and
``plus_zero`` at -2 is the map that fixes the non-negative diagonal and blows
every other orbit up.  For the latter, ``x - y`` never increases along an
orbit, which yields the divergence certificate used by `detect_cycle`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

DEFAULT_ORBIT_CAP = 10**7

_KINDS = ("exact", "plus_zero", "minus_zero")

LatticePoint = tuple[int, int]
Word = tuple[int, ...]


@dataclass(frozen=True)
class ParamSpec:
    """A rotation parameter: an exact rational, or a one-sided limit at one."""

    kind: str
    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))
        if self.kind not in _KINDS:
            raise ValueError(f"unknown kind {self.kind!r}, expected one of {_KINDS}")
        v = self.value
        if self.kind == "exact" and not (-2 < v < 2):
            raise ValueError(f"exact parameter must lie in (-2,2), got {v}")
        if self.kind == "plus_zero" and not (-2 <= v < 2):
            raise ValueError(f"plus-side parameter must lie in [-2,2), got {v}")
        if self.kind == "minus_zero" and not (-2 < v <= 2):
            raise ValueError(f"minus-side parameter must lie in (-2,2], got {v}")

    @classmethod
    def exact(cls, value) -> "ParamSpec":
        return cls("exact", Fraction(value))

    @classmethod
    def plus_zero(cls, value) -> "ParamSpec":
        return cls("plus_zero", Fraction(value))

    @classmethod
    def minus_zero(cls, value) -> "ParamSpec":
        return cls("minus_zero", Fraction(value))


@dataclass(frozen=True)
class OrbitResult:
    """Outcome of iterating one orbit to first return.

    outcome is "cycle" (word holds one full period starting at the initial
    pair), "cap_exceeded" (no return within the step cap), or "diverged"
    (a certificate proves the orbit unbounded).
    """

    outcome: str
    cycle: Optional[Word]
    steps_used: int
    max_abs: int


def step(spec: ParamSpec, point: LatticePoint) -> LatticePoint:
    """One application of the rotation map."""
    x, y = point
    p, q = spec.value.numerator, spec.value.denominator
    # ceil(-(p*y + q*x)/q) via floor division; q > 0 always.
    z = -((p * y + q * x) // q)
    if y % q == 0:
        if spec.kind == "plus_zero" and y < 0:
            z += 1
        elif spec.kind == "minus_zero" and y > 0:
            z += 1
    return (y, z)


def step_inverse(spec: ParamSpec, point: LatticePoint) -> LatticePoint:
    """Inverse of `step`; the defining inequality is symmetric in x and z."""
    x, y = point
    p, q = spec.value.numerator, spec.value.denominator
    w = -((p * x + q * y) // q)
    if x % q == 0:
        if spec.kind == "plus_zero" and x < 0:
            w += 1
        elif spec.kind == "minus_zero" and x > 0:
            w += 1
    return (w, x)


def detect_cycle(
    spec: ParamSpec, start: LatticePoint, cap: int = DEFAULT_ORBIT_CAP
) -> OrbitResult:
    """Iterate from ``start`` until the state pair returns to ``start``.

    The map is a bijection, so any periodic orbit is purely periodic and the
    first return yields the minimal period; the returned word is the orbit
    values of one full period starting at ``start``.  ``cap_exceeded`` after
    ``cap`` steps is a result, not an error.  ``diverged`` is reported early
    only under the plus-side map at -2, where a drop of ``x - y`` below zero
    certifies an unbounded orbit (``x - y`` is non-increasing there, and once
    negative the orbit values increase strictly forever).
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    x0, y0 = start
    p, q = spec.value.numerator, spec.value.denominator
    plus = spec.kind == "plus_zero"
    minus = spec.kind == "minus_zero"
    certify_divergence = plus and p == -2 * q

    word: list[int] = []
    x, y = x0, y0
    max_abs = max(abs(x0), abs(y0))
    steps = 0
    while steps < cap:
        if certify_divergence and x - y < 0:
            return OrbitResult("diverged", None, steps, max_abs)
        word.append(x)
        z = -((p * y + q * x) // q)
        if y % q == 0:
            if plus and y < 0:
                z += 1
            elif minus and y > 0:
                z += 1
        x, y = y, z
        steps += 1
        if z > max_abs:
            max_abs = z
        elif -z > max_abs:
            max_abs = -z
        if x == x0 and y == y0:
            return OrbitResult("cycle", tuple(word), steps, max_abs)
    return OrbitResult("cap_exceeded", None, steps, max_abs)


def word_is_cycle_at(word: Word, lam: Fraction) -> bool:
    """Exact check that one period ``word`` satisfies every step inequality at ``lam``."""
    lam = Fraction(lam)
    u, v = lam.numerator, lam.denominator
    n = len(word)
    for i in range(n):
        b0, b1, b2 = word[i], word[(i + 1) % n], word[(i + 2) % n]
        val = v * b2 + u * b1 + v * b0  # v * (b2 + lam*b1 + b0)
        if not 0 <= val < v:
            return False
    return True


def _least_rotation_index(word: Word) -> int:
    # Booth's algorithm for the lexicographically least rotation, O(n).
    s = word + word
    n = len(s)
    f = [-1] * n
    k = 0
    for j in range(1, n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def canonical_rotation(word: Word) -> Word:
    """The lexicographically least cyclic rotation; canonical form for cycle equality."""
    if not word:
        raise ValueError("cycle words are non-empty")
    k = _least_rotation_index(tuple(word))
    return tuple(word[k:]) + tuple(word[:k])


def rotation_equal(a: Word, b: Word) -> bool:
    """Cycle equality: equality of words up to cyclic rotation."""
    return len(a) == len(b) and canonical_rotation(a) == canonical_rotation(b)


def is_cyclic_palindrome(word: Word) -> bool:
    """True when the reversed word is one of the word's cyclic rotations."""
    return rotation_equal(tuple(word), tuple(word)[::-1])
