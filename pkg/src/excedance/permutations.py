"""Desk-scale enumeration of symmetric groups and permutation statistics.

This module is the ground truth the rest of the package is checked
against: statistics are computed straight from their definitions, and
aggregates come from exhaustive enumeration behind an explicit size guard
(12, i.e. about 4.8e8 permutations; the default verification paths stay at
length 8).  Positions and values are 1-based throughout: a permutation is
its one-line notation (sigma(1), ..., sigma(n)) and length 0 is the empty
permutation, which has no excedances and counts as alternating.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exact import as_rational

__all__ = [
    "ENUMERATION_GUARD",
    "GuardError",
    "Permutation",
    "excedance_count",
    "is_alternating_up_down",
    "enumerate_permutations",
    "excedance_distribution",
    "alternating_sum_bruteforce",
    "count_alternating",
    "eulerian_poly_bruteforce",
]

ENUMERATION_GUARD = 12

CONVENTIONS = ("standard", "shifted")


class GuardError(ValueError):
    """Raised when an enumeration would exceed the configured size guard."""


@dataclass(frozen=True)
class Permutation:
    """One-line notation (sigma(1), ..., sigma(n)) over {1..n}.

    >>> Permutation((2, 4, 1, 3)).images
    (2, 4, 1, 3)
    >>> Permutation((1, 1, 2))
    Traceback (most recent call last):
        ...
    ValueError: images (1, 1, 2) are not a bijection on {1..3}
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"images {images} are not a bijection on {{1..{n}}}")

    def __len__(self) -> int:
        return len(self.images)


def _check_guard(n: int, guard: int) -> None:
    if n < 0:
        raise ValueError(f"permutation length must be >= 0, got {n}")
    if n > guard:
        raise GuardError(
            f"refusing to enumerate all {n}! permutations of length {n} "
            f"(guard is {guard}); pass guard={n} to raise it deliberately"
        )


def _raw_permutations(n: int) -> Iterator[tuple[int, ...]]:
    # itertools.permutations of a sorted input is lexicographic.
    return itertools.permutations(range(1, n + 1))


def _excedances(images: tuple[int, ...]) -> int:
    return sum(1 for i, v in enumerate(images, 1) if v > i)


def excedance_count(p: Permutation) -> int:
    """Number of positions i with sigma(i) > i.

    >>> excedance_count(Permutation((2, 4, 1, 3)))
    2
    >>> excedance_count(Permutation((1, 2, 3)))
    0
    >>> excedance_count(Permutation((2, 3, 1)))
    2
    """
    return _excedances(p.images)


def is_alternating_up_down(p: Permutation) -> bool:
    """True iff sigma(1) < sigma(2) > sigma(3) < sigma(4) > ...

    Lengths 0 and 1 are vacuously alternating.

    >>> is_alternating_up_down(Permutation((1, 3, 2)))
    True
    >>> is_alternating_up_down(Permutation((1, 2, 3)))
    False
    >>> is_alternating_up_down(Permutation((2, 3, 1)))
    True
    """
    images = p.images
    return all(
        images[i] < images[i + 1] if i % 2 == 0 else images[i] > images[i + 1]
        for i in range(len(images) - 1)
    )


def enumerate_permutations(
    n: int, *, guard: int = ENUMERATION_GUARD
) -> Iterator[Permutation]:
    """Yield every permutation of length n exactly once, lexicographically.

    >>> [p.images for p in enumerate_permutations(0)]
    [()]
    >>> [p.images for p in enumerate_permutations(1)]
    [(1,)]
    >>> first, *_, last = enumerate_permutations(3)
    >>> first.images, last.images
    ((1, 2, 3), (3, 2, 1))
    """
    _check_guard(n, guard)
    return (Permutation(raw) for raw in _raw_permutations(n))


def excedance_distribution(n: int, *, guard: int = ENUMERATION_GUARD) -> list[int]:
    """Tally of permutations of length n by excedance count, k = 0..n-1.

    >>> excedance_distribution(3)
    [1, 4, 1]
    >>> excedance_distribution(0)
    []
    """
    _check_guard(n, guard)
    if n == 0:
        return []
    tally = [0] * n
    for raw in _raw_permutations(n):
        tally[_excedances(raw)] += 1
    return tally


def alternating_sum_bruteforce(n: int, *, guard: int = ENUMERATION_GUARD) -> int:
    """Sum of (-1)^exc(sigma) over all permutations of length n.

    >>> alternating_sum_bruteforce(0)
    1
    >>> alternating_sum_bruteforce(2)
    0
    >>> alternating_sum_bruteforce(3)
    -2
    """
    _check_guard(n, guard)
    return sum(-1 if _excedances(raw) % 2 else 1 for raw in _raw_permutations(n))


@functools.cache
def _count_alternating_inner(n: int) -> int:
    # Backtracking over alternating prefixes only: each completed branch is
    # one up-down permutation, so this is still exhaustive enumeration, just
    # with the non-alternating subtrees never entered.
    if n <= 1:
        return 1

    def extend(last: int, used: int, depth: int, want_up: bool) -> int:
        if depth == n:
            return 1
        total = 0
        candidates = range(last + 1, n + 1) if want_up else range(1, last)
        for v in candidates:
            if not used >> v & 1:
                total += extend(v, used | 1 << v, depth + 1, not want_up)
        return total

    return sum(extend(first, 1 << first, 1, True) for first in range(1, n + 1))


def count_alternating(n: int, *, guard: int = ENUMERATION_GUARD) -> int:
    """Number of up-down permutations of length n.

    >>> count_alternating(1)
    1
    >>> count_alternating(3)
    2
    >>> count_alternating(5)
    16
    """
    _check_guard(n, guard)
    return _count_alternating_inner(n)


def eulerian_poly_bruteforce(
    n: int,
    t: Fraction | int,
    convention: str = "standard",
    *,
    guard: int = ENUMERATION_GUARD,
) -> Fraction:
    """Evaluate the excedance generating polynomial of length n at t.

    "standard" sums t^exc(sigma); "shifted" sums t^(exc(sigma)+1), except
    that the shifted value for n = 0 is defined as 1 so that evaluation at
    t = 1 always yields n!.

    >>> eulerian_poly_bruteforce(3, 1)
    Fraction(6, 1)
    >>> eulerian_poly_bruteforce(3, -1)
    Fraction(-2, 1)
    >>> eulerian_poly_bruteforce(3, -1, "shifted")
    Fraction(2, 1)
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}, got {convention!r}")
    _check_guard(n, guard)
    t = as_rational(t)
    if n == 0:
        return Fraction(1)
    tally = [0] * n
    for raw in _raw_permutations(n):
        tally[_excedances(raw)] += 1
    value = sum((count * t**k for k, count in enumerate(tally)), Fraction(0))
    if convention == "shifted":
        value = t * value
    return value
