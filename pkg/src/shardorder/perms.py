"""
Permutations of [n] = {1, ..., n} in one-line notation.

A permutation is stored as the tuple (p(1), ..., p(n)); all values are
1-based.  Text form is the compact digit string "26314758" when n <= 9 and
the comma-separated form "2,6,3,1,4,7,5,8" otherwise; both are accepted by
:func:`Permutation.parse`.

The descending-run decomposition defined here is the backbone of the whole
package: runs become the blocks of the pre-order associated to a
permutation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator


@dataclass(frozen=True, order=True)
class Permutation:
    """One-line word of a permutation of [n].

    >>> Permutation.parse("4312").word
    (4, 3, 1, 2)
    >>> str(Permutation((2, 6, 3, 1, 4, 7, 5, 8)))
    '26314758'
    """

    word: tuple[int, ...]

    def __post_init__(self):
        n = len(self.word)
        if n < 1:
            raise ValueError("permutation must have size n >= 1")
        if sorted(self.word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {self.word!r}")

    @property
    def n(self) -> int:
        return len(self.word)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        if "," in text:
            values = tuple(int(tok) for tok in text.split(","))
        else:
            if not text.isdigit():
                raise ValueError(f"cannot parse permutation from {text!r}")
            values = tuple(int(ch) for ch in text)
        return cls(values)

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.word)
        return ",".join(str(v) for v in self.word)

    def position(self, value: int) -> int:
        """0-based position of a value in the word."""
        return self.word.index(value)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def reversal(n: int) -> Permutation:
    """The word n, n-1, ..., 1 (maximal element of the lattice under mu)."""
    return Permutation(tuple(range(n, 0, -1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic word order."""
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def inversions(p: Permutation) -> set[tuple[int, int]]:
    """Value pairs (a, b) with a before b in the word and a > b.

    >>> sorted(inversions(Permutation.parse("4312")))
    [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3)]
    """
    w = p.word
    return {(w[i], w[j]) for i in range(p.n) for j in range(i + 1, p.n) if w[i] > w[j]}


def descents(p: Permutation) -> set[tuple[int, int]]:
    """Adjacent pairs (p_i, p_{i+1}) with p_i > p_{i+1}.

    >>> sorted(descents(Permutation.parse("4312")))
    [(3, 1), (4, 3)]
    """
    w = p.word
    return {(w[i], w[i + 1]) for i in range(p.n - 1) if w[i] > w[i + 1]}


@dataclass(frozen=True)
class DescendingRun:
    """A maximal strictly decreasing contiguous factor of a word.

    ``start``/``end`` are 0-based inclusive positions; ``values`` keeps the
    word order, so values[0] is the largest member and values[-1] the
    smallest.
    """

    values: tuple[int, ...]
    start: int
    end: int

    @property
    def min(self) -> int:
        return self.values[-1]

    @property
    def max(self) -> int:
        return self.values[0]

    @property
    def interval(self) -> tuple[int, int]:
        return (self.min, self.max)


def descending_runs(p: Permutation) -> list[DescendingRun]:
    """Left-to-right decomposition into maximal descending runs.

    >>> [run.values for run in descending_runs(Permutation.parse("1642735"))]
    [(1,), (6, 4, 2), (7, 3), (5,)]
    """
    w = p.word
    runs = []
    start = 0
    for i in range(p.n):
        if i + 1 == p.n or w[i] < w[i + 1]:
            runs.append(DescendingRun(w[start : i + 1], start, i))
            start = i + 1
    return runs


class BarredPattern(Enum):
    """The two barred patterns used by the sortability criterion.

    UPPER_231: an occurrence of 231 whose "2" value is upper-barred.
    LOWER_312: an occurrence of 312 whose "2" value is lower-barred.
    """

    UPPER_231 = "2bar-31"
    LOWER_312 = "31-2bar"


def barred_pattern_instances(p, pattern, barring) -> list[tuple[int, int, int]]:
    """All value triples (left to right) realizing the barred pattern.

    ``barring`` must expose frozensets ``upper`` and ``lower`` over the
    values 2..n-1 (1 and n carry no bar, so they never fill the barred
    role).  Search is brute force over index triples; n stays small.
    """
    w = p.word
    out = []
    for i, j, k in itertools.combinations(range(p.n), 3):
        a, b, c = w[i], w[j], w[k]
        if pattern is BarredPattern.UPPER_231:
            # c < a < b, the "2" role is the first value a
            if c < a < b and a in barring.upper:
                out.append((a, b, c))
        elif pattern is BarredPattern.LOWER_312:
            # b < c < a, the "2" role is the last value c
            if b < c < a and c in barring.lower:
                out.append((a, b, c))
        else:
            raise ValueError(f"unknown pattern {pattern!r}")
    return out


def contains_barred_pattern(p, pattern, barring) -> bool:
    return bool(barred_pattern_instances(p, pattern, barring))


def is_indecomposable(p: Permutation) -> bool:
    """True iff no proper prefix of the word is a permutation of 1..k.

    Counting these over S_n gives 1, 1, 3, 13, 71, 461, ... which is also
    the absolute Moebius number of the full lattice.

    >>> is_indecomposable(Permutation.parse("1"))
    True
    >>> is_indecomposable(Permutation.parse("2134"))
    False
    """
    top = 0
    for k, value in enumerate(p.word[:-1], start=1):
        top = max(top, value)
        if top == k:
            return False
    return True
