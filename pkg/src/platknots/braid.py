"""Braid words in the Artin generators and their permutations.

A word is stored as a tuple of signed integers: ``+i`` is the generator
sigma_i and ``-i`` its inverse. Only free reduction is done here; equality
in the braid group is decided by :func:`platknots.dynamics.is_trivial`.

Puncture labels
---------------
Punctures are numbered right to left across the strands, so sigma_i
exchanges punctures ``2n - i`` and ``2n + 1 - i`` of ``B_2n``. This is the
labelling under which the published permutation tables for plats
reproduce (for instance sigma_2^2 sigma_1^-1 sigma_3 sigma_2^-3 maps to
[3, 1, 4, 2]). Bridge pairs {2i-1, 2i} are preserved by the relabelling, so
component counts do not depend on it.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence

from .errors import BraidSyntaxError, IndexOutOfRange, OddStrands, StrandMismatch

_TOKEN = re.compile(r"^[sS](\d+)(?:\^([+-]?\d+))?$")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strands:
                raise IndexOutOfRange(
                    f"generator s{abs(x)} is outside B_{self.strands} "
                    f"(max s{self.strands - 1})"
                )
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return format_braid(self)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __pow__(self, m: int) -> "BraidWord":
        return power(self, m)

    def __invert__(self) -> "BraidWord":
        return inverse(self)

    def pairs(self) -> list[tuple[int, int]]:
        """Letters as (generator index, sign) pairs."""
        return [(abs(x), 1 if x > 0 else -1) for x in self.letters]

    @property
    def bridges(self) -> int:
        return self.strands // 2

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def reduced(self) -> "BraidWord":
        return free_reduce(self)


def parse_braid(text: str, strands: int, *, allow_odd: bool = False) -> BraidWord:
    """Parse ``s2^2 s1^-1 s3``-style text into a word on ``strands`` strands.

    Odd strand counts are rejected unless ``allow_odd`` is set, since plat
    closures need an even number of strands.
    """
    if strands % 2 and not allow_odd:
        raise OddStrands(f"plats need an even strand count, got {strands}")
    if strands < 2:
        raise OddStrands(f"need at least 2 strands, got {strands}")
    letters: list[int] = []
    for tok in text.replace(",", " ").split():
        m = _TOKEN.match(tok)
        if m is None:
            raise BraidSyntaxError(f"malformed token {tok!r}")
        gen = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if gen < 1 or gen >= strands:
            raise IndexOutOfRange(
                f"generator s{gen} is outside B_{strands} (max s{strands - 1})"
            )
        sign = 1 if exp > 0 else -1
        letters.extend([sign * gen] * abs(exp))
    return BraidWord(strands, tuple(letters))


def format_braid(w: BraidWord) -> str:
    """Inverse of :func:`parse_braid`; consecutive equal letters become a run."""
    out = []
    runs = _runs(w.letters)
    for x, count in runs:
        exp = count if x > 0 else -count
        out.append(f"s{abs(x)}" if exp == 1 else f"s{abs(x)}^{exp}")
    return " ".join(out)


def _runs(letters: Sequence[int]) -> list[tuple[int, int]]:
    runs: list[tuple[int, int]] = []
    for x in letters:
        if runs and runs[-1][0] == x:
            runs[-1] = (x, runs[-1][1] + 1)
        else:
            runs.append((x, 1))
    return runs


def parse_numeric(line: str) -> BraidWord:
    """Parse the file form ``strands: i1 i2 ...`` (sign = crossing sign)."""
    head, sep, body = line.partition(":")
    if not sep:
        raise BraidSyntaxError(f"missing 'strands:' prefix in {line!r}")
    try:
        strands = int(head.strip())
        letters = tuple(int(tok) for tok in body.replace(",", " ").split())
    except ValueError as exc:
        raise BraidSyntaxError(f"malformed numeric braid {line!r}") from exc
    if strands % 2:
        raise OddStrands(f"plats need an even strand count, got {strands}")
    return BraidWord(strands, letters)


def format_numeric(w: BraidWord) -> str:
    return f"{w.strands}: " + " ".join(str(x) for x in w.letters)


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return BraidWord(w.strands, tuple(stack))


def _check_same(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise StrandMismatch(f"B_{a.strands} and B_{b.strands} do not compose")


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    _check_same(a, b)
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-x for x in reversed(w.letters)))


def power(w: BraidWord, m: int) -> BraidWord:
    if m < 0:
        return power(inverse(w), -m)
    return BraidWord(w.strands, w.letters * m)


def product(words: Iterable[BraidWord], strands: int) -> BraidWord:
    return reduce(concat, words, identity(strands))


def identity(strands: int) -> BraidWord:
    return BraidWord(strands, ())


def garside_delta(strands: int) -> BraidWord:
    """Positive half twist (s1 s2 ... s_{k-1})(s1 ... s_{k-2}) ... (s1)."""
    letters = [i for top in range(strands - 1, 0, -1) for i in range(1, top + 1)]
    return BraidWord(strands, tuple(letters))


def full_twist(strands: int) -> BraidWord:
    d = garside_delta(strands)
    return concat(d, d)


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..k} stored as its image tuple.

    Products read left to right: ``(p * q)(j) = q(p(j))``, matching
    concatenation of braid words.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(tuple(range(1, k + 1)))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self) != len(other):
            raise StrandMismatch("permutations of different degree")
        return Permutation(tuple(other(self(j)) for j in range(1, len(self) + 1)))

    def __pow__(self, m: int) -> "Permutation":
        p = self if m >= 0 else self.inverse()
        result = Permutation.identity(len(self))
        base, e = p, abs(m)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for j, x in enumerate(self.images, start=1):
            inv[x - 1] = j
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == j for j, x in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return permutation_order(self)

    def as_list(self) -> list[int]:
        return list(self.images)


def _generator_transposition(i: int, k: int) -> tuple[int, int]:
    # right-to-left puncture labels
    return k - i, k + 1 - i


def canonical_projection(w: BraidWord) -> Permutation:
    """Image of ``w`` in the symmetric group; crossing signs are ignored."""
    k = w.strands
    where = list(range(1, k + 1))  # where[j-1] = current label of puncture j
    for x in w.letters:
        u, v = _generator_transposition(abs(x), k)
        where = [v if p == u else u if p == v else p for p in where]
    return Permutation(tuple(where))


def permutation_order(p: Permutation) -> int:
    return reduce(math.lcm, (len(c) for c in p.cycles()), 1)
