"""Garside left-canonical normal form for the braid groups B_n.

Every braid is written uniquely as Delta^p A_1 .. A_k where Delta is the
half twist, each A_i is a permutation braid (a positive braid in which
any two strands cross at most once, determined by its permutation), no
A_i is trivial or Delta, and consecutive factors are left-weighted: the
finishing set of A_i contains the starting set of A_{i+1}.  Comparing
normal forms componentwise decides equality in B_n; this engine is
independent of the free-group action in freegroup.

Representation choices:
  * a permutation braid is stored as the image tuple of its permutation
    (1-based, word order: in a product the left factor permutes first);
  * starting/finishing sets are bitmasks of descents, cached per
    permutation;
  * a negative letter sigma_i^-1 enters the pipeline as Delta^-1 times
    the simple factor Delta sigma_i^-1, so only positive factors are
    ever normalized;
  * left-weighting runs the standard local slide on adjacent pairs to a
    fixed point, with per-pair results memoized.

The canonical positive word of a simple factor, when one is needed, is
rebuilt by repeatedly stripping the lowest starting descent; the choice
does not affect the normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .words import BraidWord, Permutation, StrandCountMismatchError


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Word-order composition: p first, then q."""
    return tuple(q[v - 1] for v in p)


def _inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def inversion_count(p: tuple[int, ...]) -> int:
    """Word length of the permutation braid with permutation p."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


class _Ctx:
    """Cached tables for one strand count.

    Cache entries are pure functions of their keys, so concurrent reads
    and duplicate writes are benign.
    """

    def __init__(self, n: int):
        self.n = n
        self.identity = tuple(range(1, n + 1))
        self.delta = tuple(range(n, 0, -1))
        # sigma_i as a permutation, and the simple complement Delta*sigma_i^-1
        self.sigma: dict[int, tuple[int, ...]] = {}
        self.neg_factor: dict[int, tuple[int, ...]] = {}
        for i in range(1, n):
            s = list(self.identity)
            s[i - 1], s[i] = s[i], s[i - 1]
            self.sigma[i] = tuple(s)
            self.neg_factor[i] = _compose(self.delta, self.sigma[i])
        self._start: dict[tuple[int, ...], int] = {}
        self._finish: dict[tuple[int, ...], int] = {}
        self._tau: dict[tuple[int, ...], tuple[int, ...]] = {}
        self._pair: dict[tuple[tuple[int, ...], tuple[int, ...]], tuple] = {}

    def start_mask(self, p: tuple[int, ...]) -> int:
        """Bitmask of i with sigma_i a left divisor of the simple braid p."""
        m = self._start.get(p)
        if m is None:
            m = 0
            for i in range(len(p) - 1):
                if p[i] > p[i + 1]:
                    m |= 1 << i
            self._start[p] = m
        return m

    def finish_mask(self, p: tuple[int, ...]) -> int:
        """Bitmask of i with sigma_i a right divisor of the simple braid p."""
        m = self._finish.get(p)
        if m is None:
            m = self.start_mask(_inverse(p))
            self._finish[p] = m
        return m

    def tau(self, p: tuple[int, ...]) -> tuple[int, ...]:
        """Conjugation by Delta (the index flip); an involution on simples."""
        t = self._tau.get(p)
        if t is None:
            n = self.n
            t = tuple(n + 1 - p[n - j] for j in range(1, n + 1))
            self._tau[p] = t
        return t

    def left_weight_pair(self, a: tuple[int, ...], b: tuple[int, ...]):
        """The left-weighted factorization of the product of two simples."""
        key = (a, b)
        hit = self._pair.get(key)
        if hit is not None:
            return hit
        la, lb = list(a), list(b)
        while True:
            need = self.start_mask(tuple(lb)) & ~self.finish_mask(tuple(la))
            if need == 0:
                break
            i = (need & -need).bit_length()  # lowest movable index (1-based)
            # a <- a * sigma_i : swap the values i, i+1 in a's images
            pi = la.index(i)
            pj = la.index(i + 1)
            la[pi], la[pj] = la[pj], la[pi]
            # b <- sigma_i * b : swap the entries at positions i, i+1
            lb[i - 1], lb[i] = lb[i], lb[i - 1]
        result = (tuple(la), tuple(lb))
        self._pair[key] = result
        return result


@lru_cache(maxsize=None)
def _ctx(n: int) -> _Ctx:
    return _Ctx(n)


@dataclass(frozen=True)
class PermutationBraid:
    """A simple factor: the positive braid determined by its permutation."""

    strand_count: int
    permutation: Permutation

    def __post_init__(self):
        if len(self.permutation.images) != self.strand_count:
            raise ValueError("permutation size does not match strand count")

    def letter_length(self) -> int:
        return inversion_count(self.permutation.images)

    def word(self) -> BraidWord:
        """The canonical positive word: strip the lowest starting descent until trivial."""
        ctx = _ctx(self.strand_count)
        p = self.permutation.images
        letters: list[int] = []
        while p != ctx.identity:
            need = ctx.start_mask(p)
            i = (need & -need).bit_length()
            letters.append(i)
            # strip sigma_i from the left: p <- sigma_i * p
            lp = list(p)
            lp[i - 1], lp[i] = lp[i], lp[i - 1]
            p = tuple(lp)
        return BraidWord(self.strand_count, tuple(letters))


@dataclass(frozen=True)
class GarsideNormalForm:
    """Delta power plus left-weighted simple factors; the canonical form of a braid."""

    strand_count: int
    delta_power: int
    factors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        ctx = _ctx(self.strand_count)
        for f in self.factors:
            if f == ctx.identity or f == ctx.delta:
                raise ValueError("normal-form factors must be neither trivial nor Delta")

    def factor_braids(self) -> tuple[PermutationBraid, ...]:
        return tuple(
            PermutationBraid(self.strand_count, Permutation(f)) for f in self.factors
        )

    def exponent_sum(self) -> int:
        n = self.strand_count
        return self.delta_power * (n * (n - 1) // 2) + sum(
            inversion_count(f) for f in self.factors
        )

    def to_word(self) -> BraidWord:
        """Some braid word representing this element (Delta letters first)."""
        n = self.strand_count
        half = _half_twist_letters(n)
        letters: list[int] = []
        if self.delta_power >= 0:
            letters.extend(half * self.delta_power)
        else:
            letters.extend([-k for k in reversed(half)] * (-self.delta_power))
        for f in self.factors:
            letters.extend(PermutationBraid(n, Permutation(f)).word().letters)
        return BraidWord(n, tuple(letters))

    def as_dict(self) -> dict:
        return {
            "delta_power": self.delta_power,
            "factors": [list(f) for f in self.factors],
        }


def _half_twist_letters(n: int) -> list[int]:
    letters: list[int] = []
    for top in range(n - 1, 0, -1):
        letters.extend(range(1, top + 1))
    return letters


def is_left_weighted(nf: GarsideNormalForm) -> bool:
    """Check the descent condition between consecutive factors (test helper)."""
    ctx = _ctx(nf.strand_count)
    for a, b in zip(nf.factors, nf.factors[1:]):
        if ctx.start_mask(b) & ~ctx.finish_mask(a):
            return False
    return True


def _normalize_factors(ctx: _Ctx, factors: list[tuple[int, ...]]) -> tuple[int, list[tuple[int, ...]]]:
    """Slide adjacent pairs to a fixed point, then strip Delta prefix and trivial suffix."""
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            a, b = factors[i], factors[i + 1]
            a2, b2 = ctx.left_weight_pair(a, b)
            if a2 != a:
                factors[i], factors[i + 1] = a2, b2
                changed = True
    lo = 0
    hi = len(factors)
    while lo < hi and factors[lo] == ctx.delta:
        lo += 1
    while lo < hi and factors[hi - 1] == ctx.identity:
        hi -= 1
    return lo, factors[lo:hi]


def normal_form(w: BraidWord) -> GarsideNormalForm:
    """The left-canonical form of the element represented by w."""
    n = w.strand_count
    if n < 2:
        return GarsideNormalForm(n, 0, ())
    ctx = _ctx(n)
    # Each letter becomes Delta^d * simple with d in {0, -1}; collecting the
    # Delta powers at the front conjugates every factor to their right by
    # tau once per collected Delta (tau is an involution, so parity suffices).
    raw: list[tuple[int, tuple[int, ...]]] = []
    for k in w.letters:
        if k > 0:
            raw.append((0, ctx.sigma[k]))
        else:
            raw.append((-1, ctx.neg_factor[-k]))
    delta = 0
    factors: list[tuple[int, ...]] = []
    suffix = 0  # parity of Delta powers strictly to the right
    for d, f in reversed(raw):
        factors.append(ctx.tau(f) if suffix & 1 else f)
        suffix += -d
        delta += d
    factors.reverse()
    lead, trimmed = _normalize_factors(ctx, factors)
    return GarsideNormalForm(n, delta + lead, tuple(trimmed))


def equal_Bn(w: BraidWord, v: BraidWord) -> bool:
    """Exact equality in B_n: componentwise equality of normal forms."""
    if w.strand_count != v.strand_count:
        raise StrandCountMismatchError(
            f"cannot compare words on {w.strand_count} and {v.strand_count} strands"
        )
    return normal_form(w) == normal_form(v)


def conjugate_by_half_twist(w: BraidWord) -> GarsideNormalForm:
    """Normal form of x w x^-1 for the half twist x; equals normal_form(mirror(w))."""
    n = w.strand_count
    half = BraidWord(n, tuple(_half_twist_letters(n)))
    return normal_form(half * w * half.inverse())
