"""Integer partitions and their statistics."""

from __future__ import annotations

from collections import Counter
from math import factorial, prod
from typing import Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The empty tuple is the empty partition.  ``len(p)`` is the length and
    ``p.weight`` the sum of parts.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        if any(x < 1 for x in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``"3,1,1"``; ``"-"`` or ``""`` is the empty partition."""
        text = text.strip()
        if text in ("", "-"):
            return cls()
        try:
            parts = [int(x) for x in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed partition {text!r}") from None
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, i: int) -> int:
        if i < 1:
            raise ValueError("part values start at 1")
        return self.count(i)

    def multiplicities(self) -> dict:
        """Part value -> multiplicity, for values that occur."""
        return dict(sorted(Counter(self).items()))

    def z(self) -> int:
        return prod(i ** m * factorial(m) for i, m in Counter(self).items())

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for x in self if x >= j) for j in range(1, self[0] + 1))

    def cells(self) -> list:
        """Ferrers diagram as 1-indexed (row, column) pairs, row by row."""
        return [(i, j) for i, row in enumerate(self, 1) for j in range(1, row + 1)]

    def __str__(self):
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self):
        return f"Partition({tuple(self)})"


def multiplicity(p: Partition, i: int) -> int:
    return p.multiplicity(i)


def z_mu(p: Partition) -> int:
    return p.z()


def conjugate(p: Partition) -> Partition:
    return p.conjugate()


def cells(p: Partition) -> list:
    return p.cells()


def _bounded(n: int, largest: int, max_length: int | None) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    if max_length == 0:
        return
    nxt = None if max_length is None else max_length - 1
    for first in range(min(n, largest), 0, -1):
        for rest in _bounded(n - first, first, nxt):
            yield (first,) + rest


def enumerate_partitions(n: int, max_part: int | None = None,
                         max_length: int | None = None) -> list:
    """All partitions of ``n`` in reverse lexicographic order.

    >>> [str(p) for p in enumerate_partitions(4)]
    ['4', '3,1', '2,2', '2,1,1', '1,1,1,1']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    largest = n if max_part is None else max_part
    return [Partition(p) for p in _bounded(n, largest, max_length)]


def partitions_up_to(max_weight: int, max_part: int | None = None,
                     max_length: int | None = None) -> list:
    """Partitions of every weight 0..max_weight, grouped by weight."""
    out = []
    for n in range(max_weight + 1):
        out.extend(enumerate_partitions(n, max_part, max_length))
    return out
