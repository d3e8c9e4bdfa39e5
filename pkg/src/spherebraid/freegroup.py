"""Freely reduced words, endomorphisms on a basis, and the Artin action.

The n-strand braid group acts on the free group of rank n by

    sigma_i:      x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i
    sigma_i^-1:   x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}

with all other generators fixed.  Letters of a braid word act left to
right, matching words.permutation.  The resulting map from words to
endomorphisms separates braid-group elements (faithfulness of the Artin
action, trust-ledger axiom A4), which makes endomorphism comparison an
exact equality engine for B_n -- the second engine, independent of the
Garside normal form.

Free words are plain tuples of signed generator indices internally;
all arithmetic runs on int lists with a cancellation stack.
"""

from __future__ import annotations

from dataclasses import dataclass


class BudgetExceededError(RuntimeError):
    """An endomorphism image outgrew the configured letter budget."""


def _reduce_concat(parts, budget: int | None = None) -> list[int]:
    """Freely reduce the concatenation of letter sequences."""
    out: list[int] = []
    for part in parts:
        for x in part:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        if budget is not None and len(out) > budget:
            raise BudgetExceededError(
                f"endomorphism image exceeded {budget} letters; raise the budget to continue"
            )
    return out


def _inv(letters) -> list[int]:
    return [-x for x in reversed(letters)]


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in the free group of the given rank."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        prev = 0
        for k in self.letters:
            if k == 0 or abs(k) > self.rank:
                raise ValueError(f"letter {k} out of range for rank {self.rank}")
            if k == -prev:
                raise ValueError(f"word {self.letters} is not freely reduced")
            prev = k

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple(_inv(self.letters)))

    def to_text(self) -> str:
        """The same signed-integer text syntax braid words use."""
        return " ".join(str(k) for k in self.letters)


def reduce(letters, rank: int) -> FreeWord:
    """Free reduction of a raw letter list; the result is independent of cancellation order."""
    for k in letters:
        if k == 0 or abs(k) > rank:
            raise ValueError(f"letter {k} out of range for rank {rank}")
    return FreeWord(rank, tuple(_reduce_concat([letters])))


@dataclass(frozen=True)
class EndoOnBasis:
    """An endomorphism of a free group, given by the images of the basis generators."""

    rank: int
    images: tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise ValueError(f"expected {self.rank} images, got {len(self.images)}")
        for img in self.images:
            if img.rank != self.rank:
                raise ValueError("image rank mismatch")

    def is_identity(self) -> bool:
        return all(img.letters == (j,) for j, img in enumerate(self.images, start=1))


def identity_endo(rank: int) -> EndoOnBasis:
    return EndoOnBasis(rank, tuple(FreeWord(rank, (j,)) for j in range(1, rank + 1)))


def _substitute(images: list[tuple[int, ...] | list[int]], letters, budget: int | None = None) -> list[int]:
    out: list[int] = []
    for k in letters:
        img = images[abs(k) - 1]
        seq = img if k > 0 else _inv(img)
        for x in seq:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        if budget is not None and len(out) > budget:
            raise BudgetExceededError(
                f"endomorphism image exceeded {budget} letters; raise the budget to continue"
            )
    return out


def apply_endo(e: EndoOnBasis, w: FreeWord) -> FreeWord:
    """Image of w under e: substitute each letter by its (possibly inverted) image and reduce."""
    if e.rank != w.rank:
        raise ValueError(f"rank mismatch: endomorphism has rank {e.rank}, word has rank {w.rank}")
    raw = [img.letters for img in e.images]
    return FreeWord(w.rank, tuple(_substitute(raw, w.letters)))


def compose_endo(e1: EndoOnBasis, e2: EndoOnBasis) -> EndoOnBasis:
    """The endomorphism "e1 first, then e2": each generator g maps to e2(e1(g))."""
    if e1.rank != e2.rank:
        raise ValueError(f"rank mismatch: {e1.rank} vs {e2.rank}")
    return EndoOnBasis(e1.rank, tuple(apply_endo(e2, img) for img in e1.images))


def _artin_images(strand_count: int, letters, budget: int | None = None) -> list[list[int]]:
    """Images of x_1..x_n under the word's action, as raw reduced letter lists.

    Builds the composite right-to-left so each braid letter touches only
    two images; this keeps the cost proportional to the sizes of the
    images actually rewritten.
    """
    imgs: list[list[int]] = [[j] for j in range(1, strand_count + 1)]
    for k in reversed(letters):
        i = abs(k) - 1
        a, b = imgs[i], imgs[i + 1]
        if k > 0:
            imgs[i] = _reduce_concat([a, b, _inv(a)], budget)
            imgs[i + 1] = a
        else:
            imgs[i] = b
            imgs[i + 1] = _reduce_concat([_inv(b), a, b], budget)
    return imgs


def artin_disk_endo(w, max_image_letters: int | None = None) -> EndoOnBasis:
    """The action of a braid word on the rank-n free group (n = strand count)."""
    n = w.strand_count
    imgs = _artin_images(n, w.letters, max_image_letters)
    return EndoOnBasis(n, tuple(FreeWord(n, tuple(img)) for img in imgs))


def eq_Bn(w, v, max_image_letters: int | None = None) -> bool:
    """Exact equality in B_n via the Artin action.

    True iff the action of w * v^-1 is the identity endomorphism;
    computed as equality of the two actions, which is the same predicate.
    """
    if w.strand_count != v.strand_count:
        from .words import StrandCountMismatchError

        raise StrandCountMismatchError(
            f"cannot compare words on {w.strand_count} and {v.strand_count} strands"
        )
    return _artin_images(w.strand_count, w.letters, max_image_letters) == _artin_images(
        v.strand_count, v.letters, max_image_letters
    )
