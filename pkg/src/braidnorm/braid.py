"""
Braid words in the Artin generators and the elementary maps on them.

A braid word is a finite sequence of nonzero integers: ``+i`` stands for the
Artin generator sigma_i and ``-i`` for its inverse.  Words are finitely
supported, so every word lives in B_inf = union of the B_n; operations that
need an explicit strand count take it as an argument.

Conjugation follows ``x^g = g x g^{-1}`` and the commutator is
``[f, g] = f g f^{-1} g^{-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

MAX_STRAND = 2 ** 16


class BraidError(ValueError):
    """Raised for malformed words or violated preconditions."""


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0:
                raise BraidError("letter 0 is not an Artin generator")
            if abs(x) >= MAX_STRAND:
                raise BraidError(f"letter {x} exceeds the strand limit {MAX_STRAND}")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return BraidWord(self.letters[item])
        return self.letters[item]

    def __mul__(self, other: WordLike) -> BraidWord:
        return BraidWord(self.letters + as_word(other).letters)

    def __rmul__(self, other: WordLike) -> BraidWord:
        return BraidWord(as_word(other).letters + self.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.letters * k)

    def __bool__(self):
        return bool(self.letters)

    def __str__(self):
        return " ".join(str(x) for x in self.letters)

    def __repr__(self):
        return f"BraidWord({list(self.letters)})"

    @property
    def width(self) -> int:
        """Smallest n such that the word is a word in B_n."""
        return max((abs(x) for x in self.letters), default=0) + 1

    def inverse(self) -> BraidWord:
        return BraidWord(tuple(-x for x in reversed(self.letters)))

    def mirror(self) -> BraidWord:
        return BraidWord(tuple(-x for x in self.letters))


WordLike = Union[BraidWord, Sequence[int], Iterable[int]]


def as_word(w: WordLike) -> BraidWord:
    if isinstance(w, BraidWord):
        return w
    return BraidWord(tuple(w))


def sigma(i: int, e: int = 1) -> BraidWord:
    """The single-letter word sigma_i^e, e = +-1."""
    return BraidWord((i if e > 0 else -i,))


def free_reduce(w: WordLike) -> BraidWord:
    out: list[int] = []
    for x in as_word(w).letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return BraidWord(tuple(out))


def conjugate(w: WordLike, g: WordLike) -> BraidWord:
    """w^g = g w g^{-1}, freely reduced."""
    g = as_word(g)
    return free_reduce(g * as_word(w) * g.inverse())


def commutator(f: WordLike, g: WordLike) -> BraidWord:
    f, g = as_word(f), as_word(g)
    return free_reduce(f * g * f.inverse() * g.inverse())


def shift(w: WordLike, k: int) -> BraidWord:
    """Translate every letter by k strands (k >= 0, or down to strand 1)."""
    w = as_word(w)
    if k < 0 and any(abs(x) + k < 1 for x in w.letters):
        raise BraidError("shift would move a letter below sigma_1")
    return BraidWord(tuple(x + k if x > 0 else x - k for x in w.letters))


def exponent_sum(w: WordLike) -> int:
    return sum(1 if x > 0 else -1 for x in as_word(w).letters)


def support(w: WordLike) -> tuple[int, int] | None:
    """Smallest strand interval [lo, hi] touched by w, or None for the empty word."""
    w = as_word(w)
    if not w:
        return None
    idx = [abs(x) for x in w.letters]
    return min(idx), max(idx) + 1


def is_in_commutator_subgroup(w: WordLike) -> bool:
    return exponent_sum(w) == 0


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n, stored as the tuple of images of 1, 2, ..., n.

    ``p * q`` is the composition p after q.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise BraidError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.n != self.n:
            raise BraidError("cannot compose permutations of different degree")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out


def underlying_permutation(w: WordLike, n: int | None = None) -> Permutation:
    """Image of w under B_n -> S_n, sigma_i -> (i, i+1).

    The map is a homomorphism for composition of functions, so the letters
    act from right to left.
    """
    w = as_word(w)
    if n is None:
        n = w.width
    if n < w.width:
        raise BraidError(f"strand count too small: word needs {w.width}, got {n}")
    images = list(range(1, n + 1))
    for x in w.letters:
        a = abs(x)
        images[a - 1], images[a] = images[a], images[a - 1]
    return Permutation(tuple(images))


def translator(block: int, k: int) -> BraidWord:
    """Conjugator moving a braid on strands 1..block onto strands k+1..k+block.

    Uses (s_j s_{j+1} ... s_{j+block-1}) s_i (...)^{-1} = s_{i+1} for the letters
    of the block; the product is applied innermost first.
    """
    letters: list[int] = []
    for j in range(k, 0, -1):
        letters.extend(range(j, j + block))
    return BraidWord(tuple(letters))


def generator_translator(j: int) -> BraidWord:
    """A word d with d sigma_1 d^{-1} = sigma_j."""
    return translator(2, j - 1)
