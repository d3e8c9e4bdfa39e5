"""Braid words over n strands and their cheap invariants.

A braid word is a finite sequence of generator letters sigma_i^{+-1},
stored as signed 1-based indices: the letter k with k > 0 means sigma_k,
and k < 0 means sigma_{|k|}^{-1}.  Words are kept exactly as written --
no free cancellation, no use of the braid relations.  Deciding whether
two words represent the same group element is the job of the exact
engines (garside, freegroup); everything in this module is a total,
cheap function of the letter sequence.

Words apply left to right: in a product u*v the letters of u act first.
This matches concatenation and makes the permutation of a product the
composition "permutation of u, then permutation of v".
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class WordSyntaxError(ValueError):
    """A word (text or letter list) is malformed for the given strand count."""


class StrandCountMismatchError(ValueError):
    """Two words that must live in the same braid group do not."""


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators sigma_1 .. sigma_{n-1} of the n-strand braid group."""

    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strand_count < 1:
            raise WordSyntaxError(f"strand count must be >= 1, got {self.strand_count}")
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for k in self.letters:
            if k == 0 or not 1 <= abs(k) <= self.strand_count - 1:
                raise WordSyntaxError(
                    f"letter {k} out of range: generator index must lie in "
                    f"[1, {self.strand_count - 1}] for {self.strand_count} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if self.strand_count != other.strand_count:
            raise StrandCountMismatchError(
                f"cannot concatenate words on {self.strand_count} and {other.strand_count} strands"
            )
        return BraidWord(self.strand_count, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strand_count, tuple(-k for k in reversed(self.letters)))

    def __pow__(self, exponent: int) -> "BraidWord":
        base = self if exponent >= 0 else self.inverse()
        return BraidWord(self.strand_count, base.letters * abs(exponent))

    def to_text(self) -> str:
        """Serialize to the whitespace-separated signed-integer syntax."""
        return " ".join(str(k) for k in self.letters)

    @classmethod
    def from_text(cls, text: str, strand_count: int) -> "BraidWord":
        """Parse the signed-integer syntax; "" is the identity word.

        Rejects malformed tokens and generator indices outside
        [1, strand_count - 1], naming the offending token.
        """
        letters = []
        for token in text.split():
            try:
                k = int(token)
            except ValueError:
                raise WordSyntaxError(f"malformed token {token!r}: expected a nonzero integer") from None
            if k == 0 or not 1 <= abs(k) <= strand_count - 1:
                raise WordSyntaxError(
                    f"token {token!r} out of range: generator index must lie in "
                    f"[1, {strand_count - 1}] for {strand_count} strands"
                )
            letters.append(k)
        return cls(strand_count, tuple(letters))


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, .., n}, stored as the tuple of images (1-based)."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition in word order: self first, then other."""
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def order(self) -> int:
        k, p = 1, self
        ident = Permutation.identity(len(self.images))
        while p != ident:
            p = p * self
            k += 1
        return k


@dataclass(frozen=True)
class Residue:
    """An element of Z_{2(n-1)}: the value of the abelianization map xi."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"value {self.value} not reduced modulo {self.modulus}")

    def is_zero(self) -> bool:
        return self.value == 0

    def order(self) -> int:
        """Order of this residue in the cyclic group Z_modulus."""
        return self.modulus // math.gcd(self.modulus, self.value)


def exponent_sum(w: BraidWord) -> int:
    """Sum of the letter signs, as an unreduced integer."""
    return sum(1 if k > 0 else -1 for k in w.letters)


def xi(w: BraidWord) -> Residue:
    """Exponent sum reduced modulo 2(n-1); the abelianization of the sphere braid group."""
    n = w.strand_count
    if n < 2:
        raise WordSyntaxError("xi is undefined for n = 1: the modulus 2(n-1) vanishes")
    modulus = 2 * (n - 1)
    return Residue(exponent_sum(w) % modulus, modulus)


def permutation(w: BraidWord) -> Permutation:
    """Image of w in the symmetric group; sigma_i acts as the transposition (i, i+1).

    Letters act left to right: the leftmost letter moves strands first.
    """
    n = w.strand_count
    # cur[p] = strand currently at position p+1
    cur = list(range(1, n + 1))
    for k in w.letters:
        i = abs(k) - 1
        cur[i], cur[i + 1] = cur[i + 1], cur[i]
    images = [0] * n
    for pos, strand in enumerate(cur):
        images[strand - 1] = pos + 1
    return Permutation(tuple(images))


def mirror(w: BraidWord) -> BraidWord:
    """Apply the index flip sigma_i -> sigma_{n-i} to every letter, keeping order and signs."""
    n = w.strand_count
    if n < 2:
        raise WordSyntaxError("mirror needs n >= 2")
    flip = lambda k: (n - abs(k)) * (1 if k > 0 else -1)
    return BraidWord(n, tuple(flip(k) for k in w.letters))


def _run(lo: int, hi: int) -> tuple[int, ...]:
    """Letters sigma_lo sigma_{lo+1} .. sigma_hi (empty if lo > hi)."""
    return tuple(range(lo, hi + 1))


NAMED_ELEMENTS = (
    "alpha0",
    "alpha1",
    "alpha2",
    "full_twist",
    "half_twist",
    "bipolar_twist",
    "surface_relator",
)


def named_element(name: str, n: int) -> BraidWord:
    """Constructors for the distinguished braid words.

    alpha0           sigma_1 .. sigma_{n-1}
    alpha1           sigma_1 .. sigma_{n-2} sigma_{n-1}^2
    alpha2           sigma_1 .. sigma_{n-3} sigma_{n-2}^2              (n >= 3)
    full_twist       (sigma_1 .. sigma_{n-1})^n
    half_twist       (sigma_1 .. sigma_{n-1})(sigma_1 .. sigma_{n-2}) .. sigma_1
    bipolar_twist    positive half twist on strands 1..m followed by the
                     negative half twist on strands m+1..2m, n = 2m       (n even, n >= 4)
    surface_relator  sigma_1 .. sigma_{n-2} sigma_{n-1}^2 sigma_{n-2} .. sigma_1
    """
    if name not in NAMED_ELEMENTS:
        raise ValueError(f"unknown element name {name!r}; choose from {NAMED_ELEMENTS}")
    if n < 2:
        raise ValueError(f"{name} needs n >= 2, got n = {n}")
    if name == "alpha0":
        return BraidWord(n, _run(1, n - 1))
    if name == "alpha1":
        return BraidWord(n, _run(1, n - 2) + (n - 1, n - 1))
    if name == "alpha2":
        if n < 3:
            raise ValueError(f"alpha2 needs n >= 3, got n = {n}")
        return BraidWord(n, _run(1, n - 3) + (n - 2, n - 2))
    if name == "full_twist":
        return BraidWord(n, _run(1, n - 1) * n)
    if name == "half_twist":
        letters: tuple[int, ...] = ()
        for top in range(n - 1, 0, -1):
            letters += _run(1, top)
        return BraidWord(n, letters)
    if name == "bipolar_twist":
        if n < 4 or n % 2 != 0:
            raise ValueError(f"bipolar_twist needs even n >= 4, got n = {n}")
        m = n // 2
        letters = ()
        for top in range(m - 1, 0, -1):
            letters += _run(1, top)
        for start in range(2 * m - 1, m, -1):
            letters += tuple(-i for i in _run(start, 2 * m - 1))
        return BraidWord(n, letters)
    # surface_relator
    return BraidWord(n, _run(1, n - 2) + (n - 1, n - 1) + tuple(range(n - 2, 0, -1)))
