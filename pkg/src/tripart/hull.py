"""Exact lattice convex hulls and triangularity recognition.

Every predicate here is an integer cross product or a Fraction comparison.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .core import (
    Cell,
    NotTriangularError,
    Partition,
    PartitionError,
    complementary_corner_cells,
    conjugate,
    corner_cells,
)


def cross(o, a, b) -> int:
    """z-component of (a - o) x (b - o); positive for a left turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class HullChain:
    """Strict vertices of a hull boundary, ordered right to left.

    ``upper`` is True for the partition side and False for the complement side.
    """

    vertices: tuple
    upper: bool = True

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class SlopeInterval:
    t_minus: Fraction
    t_plus: Fraction

    @property
    def nonempty(self) -> bool:
        return self.t_minus < self.t_plus


@dataclass(frozen=True)
class TriangularReport:
    triangular: bool
    removable: tuple = field(default=())
    addable: tuple = field(default=())
    witness: Optional[Fraction] = None


def arm_leg(p: Partition, c) -> tuple[int, int]:
    x, y = c
    if (x, y) not in p:
        raise PartitionError(f"{(x, y)} is not a cell of {p!r}")
    col = sum(1 for part in p if part >= x)
    return p[y - 1] - x, col - y


def slope_interval(p: Partition) -> SlopeInterval:
    """Bounds (t-, t+) on the slope parameter of cutting lines.

    Only cells at the end of a row or the top of a column can attain either
    extremum, but every cell is scanned so this doubles as the reference
    oracle for triangularity.
    """
    if not p:
        raise PartitionError("slope interval of the empty partition is undefined")
    cols = conjugate(p)
    lo_num, lo_den = 0, 1
    hi_num, hi_den = 1, 1
    for y, row in enumerate(p, start=1):
        for x in range(1, row + 1):
            arm = row - x
            leg = cols[x - 1] - y
            hook = arm + leg + 1
            if leg * lo_den > lo_num * hook:
                lo_num, lo_den = leg, hook
            if (leg + 1) * hi_den < hi_num * hook:
                hi_num, hi_den = leg + 1, hook
    return SlopeInterval(Fraction(lo_num, lo_den), Fraction(hi_num, hi_den))


def is_triangular_reference(p: Partition) -> bool:
    if not p:
        return True
    return slope_interval(p).nonempty


def graham_chain(points: Sequence, turn: int) -> list:
    """Single Graham pass over points already in angular order.

    ``turn`` is +1 to keep strict left turns and -1 for strict right turns;
    collinear points are dropped.
    """
    out: list = []
    for pt in points:
        while len(out) >= 2 and cross(out[-2], out[-1], pt) * turn <= 0:
            out.pop()
        out.append(pt)
    return out


def partition_hull(p: Partition) -> HullChain:
    """Vertices of Conv(p) other than (1,1), from (p1,1) round to (1,k)."""
    cells = corner_cells(p)
    chain = graham_chain(cells + [cells[0]], +1)[:-1]
    rest = [c for c in chain if c != (1, 1)]
    return HullChain(tuple(rest) if rest else (Cell(1, 1),), upper=True)


def complement_hull(p: Partition) -> HullChain:
    """Vertices of Conv(N^2 minus p), from (p1+1,1) round to (1,k+1)."""
    cells = complementary_corner_cells(p)
    if len(cells) == 1:
        return HullChain(tuple(cells), upper=False)
    far = cells[0]
    chain = graham_chain(cells + [far], -1)[:-1]
    return HullChain(tuple(c for c in chain if c != far), upper=False)


def extreme_vertex(chain, normal) -> Cell:
    """Vertex minimising ``normal . v``; ties go to the lower index.

    Along either hull chain the edge directions turn monotonically inside one
    quadrant, so the sign of ``normal . edge`` changes at most once from
    negative to non-negative for the normals used here.  Binary search for
    that change.
    """
    verts = chain.vertices if isinstance(chain, HullChain) else chain
    nx, ny = normal
    lo, hi = 0, len(verts) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        a, b = verts[mid], verts[mid + 1]
        if nx * (b[0] - a[0]) + ny * (b[1] - a[1]) >= 0:
            hi = mid
        else:
            lo = mid + 1
    return verts[lo]


def _line_normal(right, left) -> tuple[int, int]:
    # Upward normal of the line through two chain vertices (right has larger x).
    return (left[1] - right[1], right[0] - left[0])


def _dot(n, c) -> int:
    return n[0] * c[0] + n[1] * c[1]


def _parallel_neighbours(verts, idx, normal) -> list:
    """Endpoints of an edge at ``verts[idx]`` parallel to the line with ``normal``."""
    here = _dot(normal, verts[idx])
    for j in (idx - 1, idx + 1):
        if 0 <= j < len(verts) and _dot(normal, verts[j]) == here:
            return sorted([verts[idx], verts[j]])
    return [verts[idx]]


def _search(w, other, sign):
    """Binary search over edges of ``w`` for a pair of extreme cells.

    ``sign`` is +1 when ``w`` is the partition chain (looking for removable
    cells) and -1 when it is the complement chain (looking for addable ones).
    Returns ``(False, None)`` if the partition is not triangular, ``(True,
    (pair, single))`` on success and ``None`` if the search ran out.
    """
    lo, hi = 0, len(w)
    while hi - lo >= 2:
        i = hi - lo
        c2 = w[lo + i // 2 - 1]
        c1 = w[lo + i // 2]
        n = _line_normal(c2, c1)
        target = _dot(n, c1)
        probe = (n[0] * sign, n[1] * sign)
        verts = other.vertices
        c = extreme_vertex(verts, probe)
        f = (_dot(n, c) - target) * sign
        if f > 0:
            idx = verts.index(c)
            single = _parallel_neighbours(verts, idx, n)
            return True, (sorted([c1, c2]), single)
        if c[0] < c1[0]:
            lo = lo + i // 2
        elif c[0] > c2[0]:
            hi = lo + i // 2
        else:
            return False, None
    return None


def _degenerate_report(p: Partition) -> TriangularReport:
    k, w = len(p), p.width
    if k == 1 and w == 1:
        rem, add = [Cell(1, 1)], [Cell(1, 2), Cell(2, 1)]
    elif k == 1:
        rem, add = [Cell(w, 1)], [Cell(1, 2), Cell(w + 1, 1)]
    else:
        rem, add = [Cell(1, k)], [Cell(1, k + 1), Cell(2, 1)]
    return TriangularReport(True, tuple(rem), tuple(add), _midpoint(p))


def _midpoint(p: Partition) -> Fraction:
    s = slope_interval(p)
    return (s.t_minus + s.t_plus) / 2


def is_triangular(p: Partition, *, witness: bool = True) -> TriangularReport:
    """Decide triangularity via hull-edge binary search.

    Removable and addable cells are reported sorted by x.  The witness slope is
    the midpoint of the slope interval; pass ``witness=False`` to skip the
    O(n) scan it needs.
    """
    if not p:
        return TriangularReport(True, (), (Cell(1, 1),), None)
    if len(p) == 1 or p[0] == 1:
        return _degenerate_report(p) if witness else _drop_witness(_degenerate_report(p))
    w = partition_hull(p)
    wc = complement_hull(p)
    found = _search(w.vertices, wc, +1)
    if found is None:
        found = _search(wc.vertices, w, -1)
        if found is None or not found[0]:
            return TriangularReport(False)
        addable, removable = found[1]
    elif not found[0]:
        return TriangularReport(False)
    else:
        removable, addable = found[1]
    return TriangularReport(
        True, tuple(removable), tuple(addable), _midpoint(p) if witness else None
    )


def _drop_witness(r: TriangularReport) -> TriangularReport:
    return TriangularReport(r.triangular, r.removable, r.addable, None)


def removable_cells(p: Partition) -> tuple:
    r = is_triangular(p, witness=False)
    if not r.triangular:
        raise NotTriangularError(f"{p!r} is not triangular")
    return r.removable


def addable_cells(p: Partition) -> tuple:
    r = is_triangular(p, witness=False)
    if not r.triangular:
        raise NotTriangularError(f"{p!r} is not triangular")
    return r.addable


def removable_via_extremes(p: Partition) -> list[Cell]:
    """Removable cells from the supporting lines at slope parameters t- and t+."""
    if not p:
        raise PartitionError("the empty partition has no removable cells")
    s = slope_interval(p)
    if not s.nonempty:
        raise NotTriangularError(f"{p!r} is not triangular")

    def best(t, key):
        top = None
        found = []
        for y, row in enumerate(p, start=1):
            # the maximum of t*x + (1-t)*y over a row sits at its last cell
            val = t * row + (1 - t) * y
            if top is None or val > top:
                top, found = val, [Cell(row, y)]
            elif val == top:
                found.append(Cell(row, y))
        return max(found, key=key)

    c_minus = best(s.t_minus, key=lambda c: c.x)
    c_plus = best(s.t_plus, key=lambda c: c.y)
    if c_minus == c_plus:
        return [c_minus]
    return sorted([c_minus, c_plus])
