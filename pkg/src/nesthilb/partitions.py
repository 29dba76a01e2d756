"""Partitions, nested pairs, and torus characters of monomial ideals."""

from __future__ import annotations

from functools import lru_cache

from .laurent import LaurentPoly


class Partition:
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        self.parts = parts

    @property
    def size(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __repr__(self):
        return f"Partition{self.parts}"

    def contains(self, other):
        """Containment of Young diagrams: other fits inside self row by row."""
        if len(other) > len(self):
            return False
        return all(other.parts[i] <= self.parts[i] for i in range(len(other)))

    def cells(self):
        """Zero-based (row, column) cells of the Young diagram."""
        for a, row in enumerate(self.parts):
            for b in range(row):
                yield (a, b)

    def generators(self):
        """Exponents of the minimal monomial generators of the ideal.

        Row a of the diagram occupies columns 0..parts[a]-1 with t1-exponent a;
        the ideal below the staircase is generated by the corner monomials.
        """
        gens = []
        prev = None
        for a in range(len(self.parts) + 1):
            width = self.parts[a] if a < len(self.parts) else 0
            if prev is None or width < prev:
                gens.append((a, width))
            prev = width
        return gens


EMPTY = Partition()


class NestedPair:
    """A containment pair of partitions: inner fits inside outer."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer, inner):
        if not outer.contains(inner):
            raise ValueError("inner partition does not fit inside outer")
        self.outer = outer
        self.inner = inner

    def __eq__(self, other):
        return (
            isinstance(other, NestedPair)
            and self.outer == other.outer
            and self.inner == other.inner
        )

    def __hash__(self):
        return hash((self.outer, self.inner))

    def __repr__(self):
        return f"NestedPair({self.outer.parts}, {self.inner.parts})"


@lru_cache(maxsize=None)
def enumerate_partitions(n):
    """All partitions of n, in decreasing lexicographic order of part tuples.

    The order is canonical: (4) > (3,1) > (2,2) > (2,1,1) > (1,1,1,1).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining, maximum):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, maximum), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in gen(n, n))


@lru_cache(maxsize=None)
def enumerate_nested_pairs(n1, n2):
    """All pairs (outer of n1, inner of n2) with inner contained in outer."""
    if n1 < n2:
        raise ValueError("empty nesting range")
    pairs = []
    for outer in enumerate_partitions(n1):
        for inner in enumerate_partitions(n2):
            if outer.contains(inner):
                pairs.append(NestedPair(outer, inner))
    return tuple(pairs)


@lru_cache(maxsize=None)
def z_character(mu):
    """Torus character of the cokernel of the monomial ideal of mu.

    Cell (a, b) contributes t1^a t2^b; rows index the t1 direction.
    """
    terms = {}
    for a, b in mu.cells():
        terms[(a, b)] = 1
    return LaurentPoly(terms)


@lru_cache(maxsize=None)
def staircase_numerator(mu):
    """Numerator of the Hilbert series of the ideal's free resolution.

    Computed from the Taylor complex on the minimal monomial generators:
    every nonempty subset contributes (-1)^(size-1) times its lcm monomial.
    The cokernel character then equals (1 - numerator)/((1-t1)(1-t2)).
    """
    gens = mu.generators()
    s = len(gens)
    result = LaurentPoly.zero()
    for mask in range(1, 1 << s):
        a = b = 0
        size = 0
        for i in range(s):
            if mask >> i & 1:
                size += 1
                a = max(a, gens[i][0])
                b = max(b, gens[i][1])
        result = result + LaurentPoly.monomial(a, b, (-1) ** (size - 1))
    return result
