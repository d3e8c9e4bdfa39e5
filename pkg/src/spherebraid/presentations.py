"""Finite presentations, coset enumeration and small-group classification.

todd_coxeter enumerates the cosets of the trivial subgroup of a finitely
presented group with the HLT strategy: walk every relator from every
live coset, defining new cosets to fill gaps, closing scans into
deductions, and merging coincidences through a union-find with path
compression.  A cap on the number of live cosets guarantees
termination; when the cap is hit the result is Overflow, never a wrong
table.  On success the cosets are exactly the group elements, and the
full multiplication table is rebuilt by tracing representative words,
which downstream classifiers (element orders, the five groups of order
eight, derived subgroups) consume.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


class PresentationError(ValueError):
    """A presentation is malformed (bad generator index in a relator)."""


@dataclass(frozen=True)
class FinitePresentation:
    """Generators 1..generator_count and relator words in signed indices."""

    generator_count: int
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.generator_count < 1:
            raise PresentationError("need at least one generator")
        for rel in self.relators:
            for k in rel:
                if k == 0 or abs(k) > self.generator_count:
                    raise PresentationError(
                        f"relator letter {k} out of range for {self.generator_count} generators"
                    )


@dataclass(frozen=True)
class Overflow:
    """The live-coset cap was exceeded before the enumeration closed."""

    max_cosets: int


@dataclass(frozen=True)
class CayleyTable:
    """Multiplication table of a finite group; element 0 is the identity.

    table[a][b] is the index of the product a*b (a acting first, then b,
    matching word order).  generator_images maps the presentation's
    generators to element indices.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    generator_images: tuple[int, ...]

    def multiply(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(0)

    def element_order(self, a: int) -> int:
        k, acc = 1, a
        while acc != 0:
            acc = self.table[acc][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def involution_count(self) -> int:
        return sum(1 for a in range(1, self.order) if self.table[a][a] == 0)

    def word_to_element(self, word) -> int:
        acc = 0
        for k in word:
            g = self.generator_images[abs(k) - 1]
            acc = self.table[acc][g if k > 0 else self.inverse(g)]
        return acc

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "table": [v for row in self.table for v in row],
            "generator_images": list(self.generator_images),
        }


def presentation_library(name: str, n: int = 0) -> FinitePresentation:
    """The presentations used throughout: sphere_braid(n), q8, dicyclic(n).

    sphere_braid(n): sigma_1..sigma_{n-1} with the two braid relation
    families and the sphere relator.  q8: <a, b | a^4, a^2 b^-2, b^-1 a b a>.
    dicyclic(n): <a, b | a^(2n), a^n b^-2, b^-1 a b a>, of order 4n.
    """
    if name == "q8":
        return FinitePresentation(2, ((1, 1, 1, 1), (1, 1, -2, -2), (-2, 1, 2, 1)))
    if name == "dicyclic":
        if n < 2:
            raise PresentationError(f"dicyclic needs n >= 2, got {n}")
        return FinitePresentation(
            2, (tuple([1] * (2 * n)), tuple([1] * n + [-2, -2]), (-2, 1, 2, 1))
        )
    if name == "sphere_braid":
        if n < 2:
            raise PresentationError(f"sphere_braid needs n >= 2, got {n}")
        rels: list[tuple[int, ...]] = []
        for i in range(1, n - 1):
            for j in range(i + 2, n):
                rels.append((i, j, -i, -j))
        for i in range(1, n - 1):
            rels.append((i, i + 1, i, -(i + 1), -i, -(i + 1)))
        rels.append(
            tuple(range(1, n - 1)) + (n - 1, n - 1) + tuple(range(n - 2, 0, -1))
        )
        return FinitePresentation(n - 1, tuple(rels))
    raise PresentationError(f"unknown presentation {name!r}")


class _Enumeration:
    """Mutable state of one HLT coset enumeration."""

    def __init__(self, ngens: int, max_cosets: int):
        self.ncols = 2 * ngens
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.p = [0]
        self.live = 1
        self.queue: list[int] = []

    def col(self, letter: int) -> int:
        g = abs(letter) - 1
        return 2 * g if letter > 0 else 2 * g + 1

    def inv_col(self, c: int) -> int:
        return c ^ 1

    def rep(self, k: int) -> int:
        root = k
        while self.p[root] != root:
            root = self.p[root]
        while self.p[k] != root:
            self.p[k], k = root, self.p[k]
        return root

    def define(self, alpha: int, c: int):
        beta = len(self.table)
        self.table.append([None] * self.ncols)
        self.p.append(beta)
        self.live += 1
        if self.live > self.max_cosets:
            raise _OverflowSignal
        self.table[alpha][c] = beta
        self.table[beta][self.inv_col(c)] = alpha

    def merge(self, a: int, b: int):
        a, b = self.rep(a), self.rep(b)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.p[hi] = lo
            self.live -= 1
            self.queue.append(hi)

    def coincidence(self, a: int, b: int):
        self.merge(a, b)
        while self.queue:
            e = self.queue.pop()
            for c in range(self.ncols):
                f = self.table[e][c]
                if f is None:
                    continue
                self.table[f][self.inv_col(c)] = None
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][c] is not None:
                    self.merge(f1, self.table[e1][c])
                elif self.table[f1][self.inv_col(c)] is not None:
                    self.merge(e1, self.table[f1][self.inv_col(c)])
                else:
                    self.table[e1][c] = f1
                    self.table[f1][self.inv_col(c)] = e1

    def scan_and_fill(self, alpha: int, word: tuple[int, ...]):
        f, b = alpha, alpha
        i, j = 0, len(word) - 1
        while True:
            while i <= j and self.table[f][self.col(word[i])] is not None:
                f = self.table[f][self.col(word[i])]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and self.table[b][self.inv_col(self.col(word[j]))] is not None:
                b = self.table[b][self.inv_col(self.col(word[j]))]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                c = self.col(word[i])
                self.table[f][c] = b
                self.table[b][self.inv_col(c)] = f
                return
            self.define(f, self.col(word[i]))


class _OverflowSignal(Exception):
    pass


def todd_coxeter(
    p: FinitePresentation, max_cosets: int, strategy: str = "default"
) -> CayleyTable | Overflow:
    """Enumerate the cosets of the trivial subgroup; the table is the group.

    Returns Overflow when more than max_cosets cosets would be live at
    once.  The two strategies process relators in opposite orders; the
    resulting group is the same, which the tests use as a sanity check.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    if strategy not in ("default", "alt"):
        raise ValueError(f"unknown strategy {strategy!r}")
    relators = [rel for rel in p.relators if rel]
    if strategy == "alt":
        relators = list(reversed(relators))
    enum = _Enumeration(p.generator_count, max_cosets)
    try:
        alpha = 0
        while alpha < len(enum.table):
            if enum.p[alpha] != alpha:
                alpha += 1
                continue
            for rel in relators:
                enum.scan_and_fill(alpha, rel)
                if enum.p[alpha] != alpha:
                    break
            if enum.p[alpha] == alpha:
                for c in range(enum.ncols):
                    if enum.table[alpha][c] is None:
                        enum.define(alpha, c)
            alpha += 1
    except _OverflowSignal:
        return Overflow(max_cosets)

    live = [k for k in range(len(enum.table)) if enum.p[k] == k]
    index = {k: i for i, k in enumerate(live)}
    order = len(live)
    # compact generator action and verify completeness / relator closure
    action = [[index[enum.rep(enum.table[k][c])] for c in range(enum.ncols)] for k in live]
    for i in range(order):
        for rel in relators:
            acc = i
            for k in rel:
                acc = action[acc][enum.col(k)]
            if acc != i:
                raise RuntimeError("coset table failed relator verification")

    # representative word per element via breadth-first search from the identity
    reps: list[tuple[int, ...] | None] = [None] * order
    reps[0] = ()
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for g in range(p.generator_count):
                for letter in (g + 1, -(g + 1)):
                    b = action[a][enum.col(letter)]
                    if reps[b] is None:
                        reps[b] = reps[a] + (letter,)
                        nxt.append(b)
        frontier = nxt
    if any(r is None for r in reps):
        raise RuntimeError("coset table is not transitive over the identity coset")

    table = []
    for a in range(order):
        row = []
        for b in range(order):
            acc = a
            for k in reps[b]:
                acc = action[acc][enum.col(k)]
            row.append(acc)
        table.append(tuple(row))
    gen_images = tuple(action[0][enum.col(g + 1)] for g in range(p.generator_count))
    return CayleyTable(order, tuple(table), gen_images)


def order_spectrum(t: CayleyTable) -> Counter:
    """Multiset of element orders."""
    return Counter(t.element_order(a) for a in range(t.order))


def iso_type_order8(t: CayleyTable) -> str:
    """One of Q8, D4, Z8, Z4xZ2, Z2cubed, by abelianness and involution count."""
    if t.order != 8:
        raise ValueError(f"classifier needs order 8, got {t.order}")
    involutions = t.involution_count()
    if not t.is_abelian():
        return "Q8" if involutions == 1 else "D4"
    max_order = max(t.element_order(a) for a in range(t.order))
    if max_order == 8:
        return "Z8"
    if max_order == 4:
        return "Z4xZ2"
    return "Z2cubed"


def subgroup_closure(t: CayleyTable, elements) -> tuple[int, ...]:
    """The subgroup generated by the given element indices."""
    seen = {0}
    frontier = [0]
    gens = sorted(set(elements))
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = t.table[a][g]
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return tuple(sorted(seen))


def derived_subgroup(t: CayleyTable) -> tuple[int, ...]:
    """Element indices of the commutator subgroup."""
    comms = set()
    for a in range(t.order):
        ia = t.inverse(a)
        for b in range(t.order):
            c = t.table[t.table[t.table[ia][t.inverse(b)]][a]][b]
            comms.add(c)
    return subgroup_closure(t, comms)


def is_cyclic_subgroup(t: CayleyTable, elements) -> bool:
    elems = set(elements)
    return any(
        len(elems) == t.element_order(a) and set(subgroup_closure(t, [a])) == elems
        for a in elems
    )


def abelianization_order(t: CayleyTable) -> int:
    return t.order // len(derived_subgroup(t))
