"""The poset of triangular partitions under containment.

Join and meet are read off convex hulls row by row; the Moebius function has a
closed form and a textbook recursive version kept around as an oracle.
"""
from __future__ import annotations

import math
import threading
from functools import lru_cache

from .core import (
    Cell,
    NotTriangularError,
    Partition,
    PartitionError,
    complementary_corner_cells,
    contains,
    corner_cells,
)
from .hull import graham_chain, is_triangular

DEFAULT_MEMO_CAP = 2**22


class MemoBudgetExceeded(RuntimeError):
    pass


def _report(p: Partition):
    r = is_triangular(p, witness=False)
    if not r.triangular:
        raise NotTriangularError(f"{p!r} is not triangular")
    return r


def covers_down(p: Partition) -> list[Partition]:
    if not p:
        _report(p)
        return []
    return [p.remove_cell(c) for c in _report(p).removable]


def covers_up(p: Partition) -> list[Partition]:
    return [p.add_cell(c) for c in _report(p).addable]


def _hull(points) -> list:
    """Counter-clockwise convex hull (monotone chain), collinear points dropped."""
    pts = sorted(set(map(tuple, points)))
    if len(pts) <= 2:
        return pts
    lower = graham_chain(pts, +1)
    upper = graham_chain(pts[::-1], +1)
    return lower[:-1] + upper[:-1]


def _row_extent(poly, y: int):
    """Exact (min_x, max_x) of a convex polygon on the line at height y, as fractions."""
    lo = hi = None
    n = len(poly)
    for i in range(n):
        (xa, ya), (xb, yb) = poly[i], poly[(i + 1) % n]
        if n == 1:
            xb, yb = xa, ya
        if min(ya, yb) <= y <= max(ya, yb):
            if ya == yb:
                cand = [(xa, 1), (xb, 1)]
            else:
                cand = [(xa * (yb - ya) + (xb - xa) * (y - ya), yb - ya)]
            for num, den in cand:
                if den < 0:
                    num, den = -num, -den
                if lo is None or num * lo[1] < lo[0] * den:
                    lo = (num, den)
                if hi is None or num * hi[1] > hi[0] * den:
                    hi = (num, den)
    return lo, hi


def join(p: Partition, q: Partition) -> Partition:
    """Least triangular partition containing both: lattice points of Conv(p u q)."""
    _report(p)
    _report(q)
    if not p:
        return q
    if not q:
        return p
    poly = _hull(corner_cells(p) + corner_cells(q))
    rows = []
    for y in range(1, max(len(p), len(q)) + 1):
        _, (num, den) = _row_extent(poly, y)
        rows.append(num // den)
    return Partition(rows)


def meet(p: Partition, q: Partition) -> Partition:
    """Greatest triangular partition contained in both.

    Keeps the cells of the pointwise minimum that avoid the convex hull of its
    complement.
    """
    _report(p)
    _report(q)
    rho = Partition(min(a, b) for a, b in zip(p, q))
    if not rho:
        return rho
    cc = complementary_corner_cells(rho)
    # far corner stands in for the unbounded part of the complement
    far = Cell(cc[0].x + 1 + len(rho), cc[0].y + 1 + rho[0])
    poly = _hull(cc[1:] + [Cell(far.x, 1), far, Cell(1, far.y)])
    rows = []
    for y in range(1, len(rho) + 1):
        (num, den), _ = _row_extent(poly, y)
        x = -((-num) // den) - 1
        if x <= 0:
            break
        rows.append(x)
    return Partition(rows)


def diagonal(p: Partition) -> list[Cell]:
    """Lattice points on the segment between the removable cells, left to right."""
    if not p:
        raise PartitionError("the empty partition has no diagonal")
    rem = _report(p).removable
    if len(rem) == 1:
        return [rem[0]]
    (xa, ya), (xb, yb) = rem
    g = math.gcd(xb - xa, ya - yb)
    dx, dy = (xb - xa) // g, (ya - yb) // g
    return [Cell(xa + s * dx, ya - s * dy) for s in range(g + 1)]


def interior(p: Partition) -> Partition:
    if not p:
        _report(p)
        return p
    diag = {c.y: c.x for c in diagonal(p)}
    rows = []
    for y, row in enumerate(p, start=1):
        if y in diag:
            # diagonal cells are row ends; the diagonal has distinct rows
            row -= 1
        if row:
            rows.append(row)
    return Partition(rows)


def mobius(p: Partition, q: Partition) -> int:
    """Closed-form Moebius function of the triangular Young lattice."""
    _report(p)
    rq = _report(q)
    if not contains(q, p):
        raise ValueError(f"{p!r} is not contained in {q!r}")
    if p == q:
        return 1
    if q.size - p.size == 1:
        return -1
    if len(rq.removable) == 2 and interior(q) == p:
        return 1
    return 0


def interval(p: Partition, q: Partition) -> list[Partition]:
    """All triangular r with p <= r <= q, by walking covers upward from p."""
    seen = {p}
    frontier = [p]
    while frontier:
        nxt = []
        for r in frontier:
            for s in covers_up(r):
                if s not in seen and contains(q, s):
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(seen, key=lambda r: (r.size, r))


def mobius_reference(p: Partition, q: Partition, max_gap: int = 20) -> int:
    """Recursive Moebius sum over the explicitly enumerated interval [p, q]."""
    _report(p)
    _report(q)
    if not contains(q, p):
        raise ValueError(f"{p!r} is not contained in {q!r}")
    if q.size - p.size > max_gap:
        raise ValueError(f"interval rank {q.size - p.size} exceeds guard {max_gap}")
    elems = interval(p, q)
    mu: dict[Partition, int] = {}
    for r in elems:
        if r == p:
            mu[r] = 1
        else:
            mu[r] = -sum(v for s, v in mu.items() if contains(r, s))
    return mu[q]


class _Memo:
    """Dict memo with a hard size cap; overflowing is an error, not an eviction."""

    def __init__(self, cap: int):
        self.cap = cap
        self.data: dict = {}
        self.lock = threading.Lock()

    def get(self, key):
        return self.data.get(key)

    def put(self, key, value):
        with self.lock:
            if len(self.data) >= self.cap and key not in self.data:
                raise MemoBudgetExceeded(f"memo table exceeded {self.cap} entries")
            self.data[key] = value


def count_subpartitions(p: Partition, memo_cap: int = DEFAULT_MEMO_CAP) -> int:
    """Number of triangular partitions contained in p.

    Uses I(p) = I(p - c-) + I(p - c+) - I(interior) + 1 with I(empty) = 1.
    """
    _report(p)
    memo = _Memo(memo_cap)

    def rec(r: Partition) -> int:
        if not r:
            return 1
        hit = memo.get(r)
        if hit is not None:
            return hit
        rem = is_triangular(r, witness=False).removable
        if len(rem) == 1:
            val = rec(r.remove_cell(rem[0])) + 1
        else:
            val = rec(r.remove_cell(rem[0])) + rec(r.remove_cell(rem[1])) - rec(interior(r)) + 1
        memo.put(r, val)
        return val

    # recursion depth is bounded by |p|; walk up sizes first to keep the stack shallow
    return _bottom_up(p, rec)


def _bottom_up(p: Partition, rec) -> int:
    import sys

    limit = sys.getrecursionlimit()
    need = 4 * p.size + 100
    if need > limit:
        sys.setrecursionlimit(need)
    try:
        return rec(p)
    finally:
        if need > limit:
            sys.setrecursionlimit(limit)


def tyt_count_two_row(t1: int, t2: int) -> int:
    """Triangular Young tableaux of the two-row shape (t1, t2)."""
    if t2 < 1 or t1 < t2 or t1 < 2 * t2 - 1:
        raise NotTriangularError(f"({t1},{t2}) is not a triangular two-row shape")
    num = (t1 - 2 * t2 + 2) * math.comb(t1 + t2 + 1, t2)
    q, r = divmod(num, t1 + 2)
    assert r == 0
    return q


def tyt_count_brute(p: Partition, max_size: int = 18) -> int:
    """Count maximal chains from the empty partition to p by memoised descent."""
    _report(p)
    if p.size > max_size:
        raise ValueError(f"size {p.size} exceeds guard {max_size}")

    @lru_cache(maxsize=None)
    def walks(r: Partition) -> int:
        if not r:
            return 1
        return sum(walks(s) for s in covers_down(r))

    return walks(p)


def tyt_enumerate(p: Partition, max_size: int = 12):
    """Yield each triangular Young tableau of shape p as a dict cell -> label."""
    _report(p)
    if p.size > max_size:
        raise ValueError(f"size {p.size} exceeds guard {max_size}")

    def rec(r: Partition, labels: dict):
        if not r:
            yield dict(labels)
            return
        for c in is_triangular(r, witness=False).removable:
            labels[c] = r.size
            yield from rec(r.remove_cell(c), labels)
            del labels[c]

    yield from rec(p, {})
