"""Partitions, cells and the small amount of plumbing everything else sits on.

A partition is stored as a tuple of weakly decreasing positive parts.  Cells are
``(x, y)`` lattice points, 1-indexed, with ``x`` the column and ``y`` the row, so
the cell in row ``i`` at the end of the row is ``(parts[i-1], i)``.
"""
from __future__ import annotations

import re
from typing import Iterable, NamedTuple

# Hull predicates multiply two coordinate differences; keep those products in 64 bits.
COORD_LIMIT = 2**31


class PartitionError(ValueError):
    """Raised for malformed partition text or invalid part sequences."""


class NotTriangularError(ValueError):
    """Raised when an operation needs a triangular partition and did not get one."""


class Cell(NamedTuple):
    x: int
    y: int

    def __repr__(self) -> str:
        return f"({self.x},{self.y})"


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    >>> p = Partition([8, 6, 5, 3, 1])
    >>> p.size, p.height, p.width
    (23, 5, 8)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(v) for v in parts)
        for i, v in enumerate(parts):
            if v < 1:
                raise PartitionError(f"part {v} at position {i + 1} is not positive")
            if i and v > parts[i - 1]:
                raise PartitionError(f"parts are not weakly decreasing at position {i + 1}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def height(self) -> int:
        return len(self)

    @property
    def width(self) -> int:
        return self[0] if self else 0

    def __contains__(self, cell) -> bool:  # type: ignore[override]
        x, y = cell
        return 1 <= y <= len(self) and 1 <= x <= self[y - 1]

    def cells(self) -> Iterable[Cell]:
        for y, row in enumerate(self, start=1):
            for x in range(1, row + 1):
                yield Cell(x, y)

    def remove_cell(self, cell) -> "Partition":
        """Return the partition with ``cell`` removed; it must be a corner cell."""
        x, y = cell
        if not (1 <= y <= len(self) and self[y - 1] == x):
            raise PartitionError(f"{tuple(cell)} is not at the end of a row")
        if y < len(self) and self[y] == x:
            raise PartitionError(f"{tuple(cell)} is not a corner cell")
        parts = list(self)
        parts[y - 1] -= 1
        if parts[y - 1] == 0:
            parts.pop()
        return Partition(parts)

    def add_cell(self, cell) -> "Partition":
        """Return the partition with ``cell`` added; it must be a complementary corner."""
        x, y = cell
        k = len(self)
        if y == k + 1 and x == 1:
            return Partition(self + (1,))
        if not (1 <= y <= k and self[y - 1] + 1 == x and (y == 1 or self[y - 2] >= x)):
            raise PartitionError(f"{tuple(cell)} is not a complementary corner cell")
        parts = list(self)
        parts[y - 1] += 1
        return Partition(parts)

    def __repr__(self) -> str:
        return f"Partition({format_partition(self) or 'empty'})"


_TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"8,6,5,3,1"`` or ``"5^576,4^1037"`` style text.

    Whitespace is ignored and the empty string is the empty partition.  Bare
    digit strings such as ``"86531"`` are read as a single part.
    """
    text = "".join(text.split())
    if not text:
        return Partition()
    parts: list[int] = []
    for term in text.split(","):
        m = _TERM.match(term)
        if m is None:
            raise PartitionError(f"cannot parse term {term!r}")
        value = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) is not None else 1
        if value == 0:
            raise PartitionError("zero parts are not allowed")
        if mult == 0:
            raise PartitionError(f"multiplicity must be positive in {term!r}")
        if value >= COORD_LIMIT or len(parts) + mult >= COORD_LIMIT:
            raise PartitionError(f"{term!r} exceeds the supported coordinate range")
        parts.extend([value] * mult)
    return Partition(parts)


def format_partition(p: Iterable[int]) -> str:
    """Canonical text; runs of four or more equal parts use ``part^count``."""
    out = []
    parts = list(p)
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        run = j - i
        if run >= 4:
            out.append(f"{parts[i]}^{run}")
        else:
            out.extend([str(parts[i])] * run)
        i = j
    return ",".join(out)


def conjugate(p: Partition) -> Partition:
    parts = []
    k = len(p)
    for j in range(1, p.width + 1):
        while k and p[k - 1] < j:
            k -= 1
        parts.append(k)
    return Partition(parts)


def corner_cells(p: Partition) -> list[Cell]:
    """C(p): corner cells plus (1,1), (p1,1), (1,k), counter-clockwise from (1,1)."""
    if not p:
        raise PartitionError("corner cells of the empty partition are undefined")
    k = len(p)
    out = [Cell(1, 1)]
    if p[0] > 1:
        out.append(Cell(p[0], 1))
    for i in range(1, k + 1):
        if i == k or p[i - 1] > p[i]:
            c = Cell(p[i - 1], i)
            if c != out[-1]:
                out.append(c)
    if out[-1] != Cell(1, k):
        out.append(Cell(1, k))
    return out


def complementary_corner_cells(p: Partition) -> list[Cell]:
    """C'(p): complementary corners plus (p1+1, k+1), clockwise from that far corner."""
    if not p:
        return [Cell(1, 1)]
    k = len(p)
    out = [Cell(p[0] + 1, k + 1), Cell(p[0] + 1, 1)]
    for i in range(2, k + 1):
        if p[i - 2] > p[i - 1]:
            out.append(Cell(p[i - 1] + 1, i))
    out.append(Cell(1, k + 1))
    return out


def contains(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(a <= b for a, b in zip(inner, outer))


def staircase(k: int) -> Partition:
    return Partition(range(k, 0, -1))


def bounding_partition(h: int, l: int) -> Partition:
    """The triangular partition whose subpartitions are the ones fitting in an h x l box.

    Row ``j`` has ``floor(l + 1 - (l*(j-1) + 1)/h)`` cells.
    """
    if h < 1 or l < 1:
        raise ValueError("box dimensions must be positive")
    return Partition(((l + 1) * h - l * (j - 1) - 1) // h for j in range(1, h + 1))


def classify_wide_tall(p: Partition) -> dict[str, bool]:
    """Wide/tall flags of a triangular partition (assumed, not checked)."""
    wide = all(a > b for a, b in zip(p, p[1:]))
    q = conjugate(p)
    tall = all(a > b for a, b in zip(q, q[1:]))
    return {"wide": wide, "tall": tall}


def partitions_of(n: int, max_part: int | None = None) -> Iterable[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return

    def rec(rest, cap, prefix):
        if rest == 0:
            yield Partition(prefix)
            return
        for v in range(min(rest, cap), 0, -1):
            prefix.append(v)
            yield from rec(rest - v, v, prefix)
            prefix.pop()

    yield from rec(n, max_part, [])
