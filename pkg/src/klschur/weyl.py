"""The symmetric group S_r as a Coxeter group.

Conventions (fixed, and locked by the test-suite):

* a permutation is stored in one-line notation ``(w(1), ..., w(r))``;
* ``x * y`` is composition of functions, ``(x * y)(i) = x(y(i))``, so
  right multiplication by ``s_i`` swaps the entries in *positions* i, i+1
  and left multiplication by ``s_i`` swaps the *values* i, i+1;
* a word ``(i1, ..., ik)`` denotes ``s_i1 * ... * s_ik``.

Young subgroups are block-diagonal: the composition ``(2, 1, 0)`` gives the
subgroup permuting {1, 2} and fixing 3.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NonUniqueExtremum


class Permutation(tuple):
    """A permutation of {1, ..., r} in one-line notation."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        return tuple.__new__(cls, images)

    @classmethod
    def _raw(cls, images) -> "Permutation":
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, r: int) -> "Permutation":
        return cls._raw(range(1, r + 1))

    @classmethod
    def simple(cls, i: int, r: int) -> "Permutation":
        if not 1 <= i < r:
            raise ValueError(f"s_{i} does not exist in S_{r}")
        img = list(range(1, r + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        return cls._raw(img)

    @classmethod
    def from_word(cls, word: Sequence[int], r: int) -> "Permutation":
        w = cls.identity(r)
        for i in word:
            w = w.right_mul_simple(i)
        return w

    @classmethod
    def parse(cls, text: str, r: int) -> "Permutation":
        """Parse ``"e"``, ``"s1s2s1"`` or a one-line list ``"3,2,1"``."""
        text = text.strip()
        if text in ("e", "id", "1", ""):
            return cls.identity(r)
        if text.startswith("s"):
            word = [int(m) for m in re.findall(r"s_?(\d+)", text)]
            if "".join(f"s{i}" for i in word) != text.replace("_", ""):
                raise ValueError(f"cannot parse reduced word {text!r}")
            return cls.from_word(word, r)
        return cls(int(x) for x in text.replace("[", "").replace("]", "").split(","))

    @property
    def rank(self) -> int:
        return len(self)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation._raw(self[o - 1] for o in other)

    def __rmul__(self, other):
        return NotImplemented

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self, start=1):
            inv[x - 1] = i
        return Permutation._raw(inv)

    def right_mul_simple(self, i: int) -> "Permutation":
        img = list(self)
        img[i - 1], img[i] = img[i], img[i - 1]
        return Permutation._raw(img)

    def left_mul_simple(self, i: int) -> "Permutation":
        return Permutation._raw(i + 1 if x == i else i if x == i + 1 else x for x in self)

    def length(self) -> int:
        n = len(self)
        return sum(1 for a in range(n) for b in range(a + 1, n) if self[a] > self[b])

    def right_descents(self) -> frozenset[int]:
        return frozenset(i for i in range(1, len(self)) if self[i - 1] > self[i])

    def left_descents(self) -> frozenset[int]:
        return self.inverse().right_descents()

    def reduced_word(self) -> tuple[int, ...]:
        """Peel off the smallest right descent repeatedly."""
        word = []
        w = self
        while True:
            d = w.right_descents()
            if not d:
                break
            i = min(d)
            word.append(i)
            w = w.right_mul_simple(i)
        return tuple(reversed(word))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self, start=1))

    def is_involution(self) -> bool:
        return self * self == Permutation.identity(len(self))

    def word_str(self) -> str:
        word = self.reduced_word()
        return "".join(f"s{i}" for i in word) if word else "e"

    def __repr__(self):
        return f"Permutation({list(self)})"

    def __str__(self):
        return self.word_str()


def length(w: Permutation) -> int:
    return w.length()


class Composition(tuple):
    """An n-tuple of non-negative integers (zero parts allowed)."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"{parts} has a negative part")
        return tuple.__new__(cls, parts)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def r(self) -> int:
        return sum(self)

    def blocks(self) -> list[range]:
        out, start = [], 1
        for p in self:
            out.append(range(start, start + p))
            start += p
        return out

    def __repr__(self):
        return f"Composition({list(self)})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"


def compositions(n: int, r: int) -> list[Composition]:
    """All compositions of r with exactly n parts, lexicographically decreasing."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(Composition(prefix + [remaining]))
            return
        for first in range(remaining, -1, -1):
            rec(prefix + [first], remaining - first, slots - 1)

    rec([], r, n)
    return out


@lru_cache(maxsize=None)
def all_permutations(r: int) -> tuple[Permutation, ...]:
    """S_r ordered by (length, one-line notation)."""
    perms = [Permutation._raw(p) for p in itertools.permutations(range(1, r + 1))]
    return tuple(sorted(perms, key=lambda w: (w.length(), tuple(w))))


def longest_element(r: int) -> Permutation:
    return Permutation._raw(range(r, 0, -1))


@lru_cache(maxsize=None)
def bruhat_interval(w: Permutation) -> frozenset[Permutation]:
    """All y <= w: the products of subwords of a fixed reduced word of w."""
    reachable = {Permutation.identity(len(w))}
    for i in w.reduced_word():
        reachable |= {y.right_mul_simple(i) for y in reachable}
    return frozenset(reachable)


def bruhat_leq(y: Permutation, w: Permutation) -> bool:
    if len(y) != len(w):
        raise ValueError("permutations of different degrees")
    return y in bruhat_interval(w)


@dataclass(frozen=True)
class YoungSubgroup:
    composition: Composition
    elements: tuple[Permutation, ...]
    longest: Permutation
    generators: frozenset[int]

    def __contains__(self, w) -> bool:
        return w in self._members

    @property
    def _members(self) -> frozenset:
        return frozenset(self.elements)

    def __len__(self):
        return len(self.elements)


@lru_cache(maxsize=None)
def young_subgroup(lam: Composition) -> YoungSubgroup:
    r = sum(lam)
    blocks = Composition(lam).blocks()
    factors = [list(itertools.permutations(b)) for b in blocks]
    elements = []
    for choice in itertools.product(*factors):
        img = []
        for block in choice:
            img.extend(block)
        elements.append(Permutation._raw(img))
    elements.sort(key=lambda w: (w.length(), tuple(w)))
    longest = Permutation._raw(x for b in blocks for x in reversed(b))
    gens = frozenset(i for b in blocks for i in b if i + 1 in b)
    assert len(elements) == _product_factorials(lam) and r == len(longest)
    return YoungSubgroup(Composition(lam), tuple(elements), longest, gens)


def _product_factorials(lam) -> int:
    out = 1
    for p in lam:
        for k in range(2, p + 1):
            out *= k
    return out


@dataclass(frozen=True)
class DoubleCosetRep:
    lam: Composition
    mu: Composition
    w_min: Permutation
    w_max: Permutation
    size: int


def is_minimal_rep(w: Permutation, lam: Composition, mu: Composition) -> bool:
    """w is the shortest element of W_lam w W_mu."""
    return (not (w.left_descents() & young_subgroup(lam).generators)
            and not (w.right_descents() & young_subgroup(mu).generators))


@lru_cache(maxsize=None)
def double_coset_reps(lam: Composition, mu: Composition) -> tuple[DoubleCosetRep, ...]:
    """Every W_lam-W_mu double coset, with its unique shortest and longest element.

    Found by brute-force enumeration of the cosets; the uniqueness of both
    length extremes is checked rather than assumed.
    """
    lam, mu = Composition(lam), Composition(mu)
    r = sum(lam)
    if sum(mu) != r:
        raise ValueError("compositions of different integers")
    wl, wm = young_subgroup(lam).elements, young_subgroup(mu).elements
    seen: set[Permutation] = set()
    reps = []
    for w in all_permutations(r):
        if w in seen:
            continue
        coset = {x * w * y for x in wl for y in wm}
        seen |= coset
        by_len = sorted(coset, key=lambda u: u.length())
        lo, hi = by_len[0].length(), by_len[-1].length()
        mins = [u for u in coset if u.length() == lo]
        maxs = [u for u in coset if u.length() == hi]
        if len(mins) != 1 or len(maxs) != 1:
            raise NonUniqueExtremum(f"double coset of {w} for {lam}, {mu}")
        reps.append(DoubleCosetRep(lam, mu, mins[0], maxs[0], len(coset)))
    reps.sort(key=lambda d: (d.w_min.length(), tuple(d.w_min)))
    return tuple(reps)


def maximal_reps(lam: Composition, mu: Composition) -> list[Permutation]:
    return [d.w_max for d in double_coset_reps(lam, mu)]


def sigma(lam: Composition, w: Permutation, mu: Composition) -> Permutation:
    """The longest element of the double coset W_lam w W_mu (w its shortest element)."""
    for d in double_coset_reps(Composition(lam), Composition(mu)):
        if d.w_min == w:
            return d.w_max
    raise ValueError(f"{w.word_str()} is not a minimal ({lam}, {mu}) double coset representative")


def rs_shape(w: Permutation) -> tuple[int, ...]:
    """Shape of the Robinson-Schensted insertion tableau of the one-line word."""
    rows: list[list[int]] = []
    for x in w:
        for row in rows:
            bumped = next((k for k, y in enumerate(row) if y > x), None)
            if bumped is None:
                row.append(x)
                x = None
                break
            row[bumped], x = x, row[bumped]
        if x is not None:
            rows.append([x])
    return tuple(len(row) for row in rows)


def partitions_at_most(r: int, n: int) -> list[tuple[int, ...]]:
    """Partitions of r with at most n non-zero parts, in decreasing lexicographic order."""
    out = []

    def rec(prefix, remaining, cap):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == n:
            return
        for part in range(min(remaining, cap), 0, -1):
            rec(prefix + [part], remaining - part, part)

    rec([], r, r)
    return out
