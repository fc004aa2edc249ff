"""Balanced binary words and their encodings of wide triangular partitions.

Words are plain strings over ``"0"`` and ``"1"``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .core import Cell, NotTriangularError, Partition, PartitionError, conjugate
from .hull import is_triangular

BRUTE_LEN_GUARD = 30


def _check_word(w: str) -> str:
    if any(ch not in "01" for ch in w):
        raise ValueError(f"not a binary word: {w!r}")
    return w


def complement(w: str) -> str:
    return w.translate(str.maketrans("01", "10"))


def is_balanced_naive(w: str) -> bool:
    """Compare one-counts of every pair of equal-length factors."""
    _check_word(w)
    n = len(w)
    pre = [0]
    for ch in w:
        pre.append(pre[-1] + (ch == "1"))
    for h in range(1, n + 1):
        counts = [pre[i + h] - pre[i] for i in range(n - h + 1)]
        if max(counts) - min(counts) > 1:
            return False
    return True


def is_balanced(w: str) -> bool:
    """Balance test by reduction to triangularity of the word's partition."""
    _check_word(w)
    if not w:
        return True
    if w[0] == "0":
        w = complement(w)
    n = len(w)
    lam = Partition(n - i for i, ch in enumerate(w) if ch == "1")
    return is_triangular(lam, witness=False).triangular


def mechanical_word(alpha: Fraction, beta: Fraction, length: int) -> str:
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not (0 < alpha < 1 and 0 < beta < 1):
        raise ValueError("alpha and beta must lie strictly between 0 and 1")
    if length < 0:
        raise ValueError("length must be nonnegative")
    return "".join(
        str(math.floor(i * alpha + beta) - math.floor((i - 1) * alpha + beta))
        for i in range(1, length + 1)
    )


def _is_wide_triangular(p: Partition) -> bool:
    return (
        bool(p)
        and all(a > b for a, b in zip(p, p[1:]))
        and is_triangular(p, witness=False).triangular
    )


def omega(p: Partition) -> str:
    """The word 1 0^(p1-p2-1) 1 ... 1 0^(pk-1)."""
    if not _is_wide_triangular(p):
        raise NotTriangularError(f"{p!r} is not a nonempty wide triangular partition")
    nxt = list(p[1:]) + [0]
    return "".join("1" + "0" * (a - b - 1) for a, b in zip(p, nxt))


def omega_inv(w: str) -> Partition:
    _check_word(w)
    if not w or w[0] != "1":
        raise ValueError("word must be nonempty and start with 1")
    if not is_balanced(w):
        raise ValueError(f"{w} is not balanced")
    n = len(w)
    return Partition(n - i for i, ch in enumerate(w) if ch == "1")


class ChiTriple(NamedTuple):
    m: int
    d: int
    w: str


def validate_triple(t: ChiTriple) -> None:
    m, d, w = t
    _check_word(w)
    if m < 1 or d < 1:
        raise ValueError("m and d must be positive")
    if "0" not in w:
        raise ValueError("the word must contain a zero")
    if m > d + 1:
        raise ValueError("m must be at most d + 1")
    if not is_balanced(w):
        raise ValueError(f"{w} is not balanced")
    if m == d + 1 and not is_balanced(w + "1"):
        raise ValueError(f"{w}1 must be balanced when m = d + 1")


def chi(p: Partition) -> ChiTriple:
    """(smallest part, smallest gap, gap-excess word) of a wide triangular partition."""
    if len(p) < 2 or not _is_wide_triangular(p):
        raise NotTriangularError(f"{p!r} is not wide triangular with at least two parts")
    gaps = [a - b for a, b in zip(p, p[1:])]
    d = min(gaps)
    return ChiTriple(p[-1], d, "".join(str(g - d) for g in gaps))


def xi(t: ChiTriple) -> Partition:
    t = ChiTriple(*t)
    validate_triple(t)
    m, d, w = t
    parts = [m]
    for bit in reversed(w):
        parts.append(parts[-1] + int(bit) + d)
    return Partition(reversed(parts))


def chi_size(t: ChiTriple) -> int:
    m, d, w = ChiTriple(*t)
    validate_triple(ChiTriple(m, d, w))
    k = len(w) + 1
    return k * m + math.comb(k, 2) * d + sum(i for i, b in enumerate(w, start=1) if b == "1")


@dataclass(frozen=True)
class BalanceState:
    """Snapshot of a balanced word for O(len) extension checks.

    ``lo[h-1]``/``hi[h-1]`` are the least and greatest one-counts over the
    factors of length ``h``; ``prefix`` holds running one-counts.
    """

    prefix: tuple = (0,)
    lo: tuple = ()
    hi: tuple = ()

    @property
    def length(self) -> int:
        return len(self.prefix) - 1

    @property
    def ones(self) -> int:
        return self.prefix[-1]


def state_of(w: str) -> BalanceState:
    s: Optional[BalanceState] = BalanceState()
    for ch in _check_word(w):
        s = extend_state(s, int(ch))
        if s is None:
            raise ValueError(f"{w} is not balanced")
    return s


def extend_state(s: BalanceState, bit: int) -> Optional[BalanceState]:
    """State of the word with ``bit`` appended, or None if it is unbalanced.

    Appending creates exactly one new factor of each length h, the suffix.
    """
    if bit not in (0, 1):
        raise ValueError("bit must be 0 or 1")
    pre = s.prefix
    n = len(pre)  # new length is n
    total = pre[-1] + bit
    lo, hi = list(s.lo), list(s.hi)
    for h in range(1, n):
        c = total - pre[n - h]
        if c < lo[h - 1]:
            lo[h - 1] = c
        elif c > hi[h - 1]:
            hi[h - 1] = c
        if hi[h - 1] - lo[h - 1] > 1:
            return None
    lo.append(total)
    hi.append(total)
    return BalanceState(pre + (total,), tuple(lo), tuple(hi))


def balanced_enumerate(length: int) -> list[str]:
    """All balanced words of the given length, in lexicographic order."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length > BRUTE_LEN_GUARD:
        raise ValueError(f"length {length} exceeds guard {BRUTE_LEN_GUARD}")
    out: list[str] = []

    def rec(word: str, s: BalanceState):
        if len(word) == length:
            out.append(word)
            return
        for bit in (0, 1):
            t = extend_state(s, bit)
            if t is not None:
                rec(word + str(bit), t)

    rec("", BalanceState())
    return out


def balanced_count_formula(length: int) -> int:
    """1 + sum over i of (length - i + 1) * totient(i)."""
    from .enumeration import totient_sieve

    if length < 0:
        raise ValueError("length must be nonnegative")
    phi = totient_sieve(length)
    return 1 + sum((length - i + 1) * int(phi[i]) for i in range(1, length + 1))


def removable_via_reduction(p: Partition) -> list[Cell]:
    """Removable cells of a possibly huge triangular partition via a small proxy.

    The proxy shares the difference word of ``p`` but has minimal smallest
    part and gap, so it has only ``len(p)`` rows of small width.
    """
    if len(p) < 2:
        raise PartitionError("need at least two parts")
    flip = not all(a > b for a, b in zip(p, p[1:]))
    q = conjugate(p) if flip else p
    if len(q) == 1:
        cells = [Cell(q[0], 1)]
    else:
        try:
            m, d, w = chi(q)
        except NotTriangularError:
            raise NotTriangularError(f"{p!r} is not triangular") from None
        if "0" not in w:
            raise NotTriangularError(f"{p!r} is not triangular")
        nu = xi(ChiTriple(2, 1, w) if m - d == 1 else ChiTriple(1, 1, w))
        cells = [Cell(q[c.y - 1], c.y) for c in is_triangular(nu, witness=False).removable]
    if flip:
        cells = [Cell(c.y, c.x) for c in cells]
    return sorted(cells)
