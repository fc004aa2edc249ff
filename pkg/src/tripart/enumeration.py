"""Counting triangular partitions: DFS engine, generating-function counters,
class series, the phi bijection and the totient closed forms.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import _dfs
from .core import NotTriangularError, Partition, PartitionError, conjugate, partitions_of
from .hull import is_triangular, is_triangular_reference

GF_GUARD = 2000
BRUTE_GUARD = 40
PREFIX_LEN = 8
INT63 = 2**63 - 1


@dataclass(frozen=True)
class CountSeries:
    """Counts indexed by n = 0..N."""

    label: str
    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if any(v < 0 for v in vals):
            raise ValueError(f"series {self.label} has a negative entry")
        if any(v > INT63 for v in vals):
            raise OverflowError(f"series {self.label} exceeds 63-bit range")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    @property
    def max_n(self) -> int:
        return len(self.values) - 1


def _checked(series: np.ndarray, label: str) -> CountSeries:
    return CountSeries(label, tuple(int(v) for v in series))


# ---------------------------------------------------------------- number theory


def totient_sieve(limit: int) -> np.ndarray:
    """Euler's totient for 0..limit (entry 0 is 0)."""
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if phi[p] == p:  # untouched so far, hence prime
            phi[p::p] -= phi[p::p] // p
    return phi


def _coprime_product_counts(limit: int) -> np.ndarray:
    # entry P is the number of ordered coprime pairs with product P, i.e. 2^omega(P)
    omega = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if omega[p] == 0:
            omega[p::p] += 1
    out = np.left_shift(np.ones(limit + 1, dtype=np.int64), omega)
    out[0] = 0
    return out


def coprime_pair_count(m: int) -> int:
    """Ordered pairs (a, b) with gcd 1 and a*b < m."""
    if m <= 1:
        return 0
    return int(_coprime_product_counts(m - 1).sum())


def coprime_pair_series(limit: int) -> np.ndarray:
    """pp(m) for m = 0..limit in one pass."""
    counts = _coprime_product_counts(max(limit, 1))
    pp = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        pp[1:] = np.cumsum(counts[: limit])
    return pp


# ------------------------------------------------------- generating functions


def _tsum(a: int, b: int, j: int) -> int:
    return sum(r * b // a + 1 for r in range(1, j + 1))


def n_delta(a: int, b: int, k: int, m: int, i: int, j: int) -> int:
    """Size of the partition cut off by the ray (a, b) with line data (k, m, i, j)."""
    if math.gcd(a, b) != 1 or a < 1 or b < 1:
        raise ValueError("a and b must be coprime positive integers")
    if not (0 <= j < a and 0 <= i < b and 1 <= m <= k):
        raise ValueError("require 0 <= j < a, 0 <= i < b, 1 <= m <= k")
    return (
        (k - 1) * ((a + 1) * (b + 1) - 2) // 2
        + math.comb(k - 1, 2) * a * b
        + i * j
        + i * (k - 1) * a
        + j * (k - 1) * b
        + _tsum(a, b, j)
        + _tsum(b, a, i)
        + m
    )


def _gf_walk(n_max: int, visit) -> None:
    """Call visit(base, k) for every (a, b, i, j, k) whose size with m = 1 fits.

    ``base`` is the size minus m.  Every loop stops once its smallest possible
    size exceeds n_max; the size grows with each parameter.
    """
    a = 1
    while 2 * (a + 1) <= 2 * n_max:
        b = 1
        while (a + 1) * (b + 1) <= 2 * n_max:
            if math.gcd(a, b) == 1:
                _gf_ray(n_max, a, b, visit)
            b += 1
        a += 1


def _gf_ray(n_max: int, a: int, b: int, visit) -> None:
    ti = 0
    for i in range(b):
        if i:
            ti += i * a // b + 1
        tj = 0
        for j in range(a):
            if j:
                tj += j * b // a + 1
            const = i * j + ti + tj
            k = 2
            while True:
                base = (
                    (k - 1) * ((a + 1) * (b + 1) - 2) // 2
                    + (k - 1) * (k - 2) // 2 * a * b
                    + (k - 1) * (i * a + j * b)
                    + const
                )
                if base + 1 > n_max:
                    break
                visit(base, k)
                k += 1
            if k == 2:
                if j == 0:
                    return
                break


def count_delta_gf(n_max: int) -> CountSeries:
    """|Delta(n)| for n <= n_max from the ray-sum generating function."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if n_max > GF_GUARD:
        raise ValueError(f"n_max {n_max} exceeds guard {GF_GUARD}")
    diff = np.zeros(n_max + 2, dtype=np.int64)

    def visit(base, k):
        # m runs over 1..k-1
        diff[base + 1] += 1
        diff[min(base + k, n_max + 1)] -= 1

    _gf_walk(n_max, visit)
    series = np.cumsum(diff)[: n_max + 1] + 1
    return _checked(series, "delta")


def count_delta2(n_max: int) -> CountSeries:
    """|Delta_2(n)|: triangular partitions with two removable cells."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if n_max > GF_GUARD:
        raise ValueError(f"n_max {n_max} exceeds guard {GF_GUARD}")
    out = np.zeros(n_max + 1, dtype=np.int64)

    def visit(base, k):
        if base + k <= n_max:
            out[base + k] += 1

    _gf_walk(n_max, visit)
    return _checked(out, "delta2")


# ---------------------------------------------------------------- DFS engine


def _prefixes(length: int) -> list:
    from .words import balanced_enumerate

    return [np.array([int(c) for c in w], dtype=np.int64) for w in balanced_enumerate(length)]


def _default_threads() -> int:
    env = os.environ.get("TRIPART_THREADS")
    if env:
        return max(1, int(env))
    return 1


def count_delta_dfs(n_max: int, threads: int | None = None) -> CountSeries:
    """|Delta(n)| for n <= n_max by depth-first search over balanced words.

    Subtrees below each balanced prefix of length 8 are independent tasks, so
    the result does not depend on ``threads``.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    threads = _default_threads() if threads is None else threads
    if threads < 1:
        raise ValueError("threads must be positive")
    max_len = math.isqrt(2 * n_max) + 1
    total = np.zeros(n_max + 1, dtype=np.int64)
    empty = np.zeros(0, dtype=np.int64)
    _dfs.count_subtree(n_max, empty, min(PREFIX_LEN - 1, max_len), total)
    if max_len >= PREFIX_LEN:
        tasks = _prefixes(PREFIX_LEN)

        def run(prefix):
            out = np.zeros(n_max + 1, dtype=np.int64)
            _dfs.count_subtree(n_max, prefix, max_len, out)
            return out

        if threads == 1:
            parts = map(run, tasks)
        else:
            pool = ThreadPoolExecutor(max_workers=threads)
            parts = pool.map(run, tasks)
        for part in parts:
            total += part
        if threads > 1:
            pool.shutdown()
    # single rows and single columns are outside the word encoding
    total[0] = 1
    total[1] += 1
    total[2:] += 2
    return _checked(total, "delta")


def count_delta_brute(n_max: int) -> CountSeries:
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if n_max > BRUTE_GUARD:
        raise ValueError(f"n_max {n_max} exceeds guard {BRUTE_GUARD}")
    vals = [sum(1 for p in partitions_of(n) if is_triangular_reference(p)) for n in range(n_max + 1)]
    return CountSeries("delta", tuple(vals))


# ------------------------------------------------------------- class series


class ClassSeries(NamedTuple):
    d1: CountSeries
    d_up1: CountSeries
    d_up2: CountSeries
    d2_up2: CountSeries


def derive_class_series(delta: CountSeries, delta2: CountSeries) -> ClassSeries:
    """Split counts by removable/addable cell numbers using the edge identity.

    ``delta`` and ``delta2`` must run one index past the last n wanted.
    """
    if len(delta) != len(delta2) or len(delta) < 2:
        raise ValueError("need equal-length series with at least two entries")
    top = len(delta) - 2
    d, d2 = delta.values, delta2.values
    d1 = [0] + [d[n] - d2[n] for n in range(1, top + 1)]
    up2 = [1 if n == 0 else d[n + 1] + d2[n + 1] - d[n] for n in range(top + 1)]
    # n = 0: the empty partition has one addable cell, hence counts in up1
    up2[0] = 0
    up1 = [d[n] - up2[n] for n in range(top + 1)]
    d2up2 = [0] + [d2[n] - up1[n] for n in range(1, top + 1)]
    try:
        return ClassSeries(
            CountSeries("d1", d1),
            CountSeries("dUp1", up1),
            CountSeries("dUp2", up2),
            CountSeries("d2Up2", d2up2),
        )
    except ValueError as exc:
        raise ValueError(f"inconsistent input series: {exc}") from None


def classify_direct(n: int) -> dict:
    """Census of Delta(n) by numbers of removable and addable cells."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > BRUTE_GUARD:
        raise ValueError(f"n {n} exceeds guard {BRUTE_GUARD}")
    res = {"d1": 0, "d2": 0, "dUp1": 0, "dUp2": 0, "d2Up2": 0}
    for p in partitions_of(n):
        r = is_triangular(p, witness=False)
        if not r.triangular:
            continue
        nr, na = len(r.removable), len(r.addable)
        if n:
            res["d1" if nr == 1 else "d2"] += 1
        res["dUp1" if na == 1 else "dUp2"] += 1
        if nr == 2 and na == 2:
            res["d2Up2"] += 1
    return res


# ------------------------------------------------------------------ phi map


class PhiQuad(NamedTuple):
    a: int
    b: int
    d: int
    e: int


def phi_map(p: Partition) -> PhiQuad:
    """(rightmost removable cell, primitive escape direction of least slope)."""
    if not p or p[0] == 1:
        raise PartitionError("phi is undefined on single columns and the empty partition")
    r = is_triangular(p, witness=False)
    if not r.triangular:
        raise NotTriangularError(f"{p!r} is not triangular")
    a, b = max(r.removable, key=lambda c: c.x)
    cols = conjugate(p)
    best = None
    for d in range(1, a):
        e = cols[a - d - 1] - b + 1
        if e < 1:
            continue
        if best is None or e * best[0] < best[1] * d:
            best = (d, e)
    if best is None:
        raise AssertionError("no escape direction found")
    return PhiQuad(a, b, *best)


def phi_inv(q: PhiQuad) -> Partition:
    a, b, d, e = q
    if min(q) < 1 or d >= a or math.gcd(d, e) != 1:
        raise ValueError("require positive entries, d < a and gcd(d, e) = 1")
    c = e * a + d * b
    rows = []
    y = 1
    while True:
        rhs = c - d * y
        x = -((-rhs) // e) - 1  # largest x with e*x < rhs
        if rhs % e == 0 and rhs // e >= a:
            x = rhs // e
        if x < 1:
            break
        rows.append(x)
        y += 1
    return Partition(rows)


def triangle_counts(d: int, e: int, l: int) -> dict:
    """Lattice points of the two triangles used to sort quads into the square."""
    if min(d, e, l) < 1:
        raise ValueError("d, e, l must be positive")
    less = geq = 0
    y = 1
    while True:
        lim_less = (e + d * (l + 1) - d * y) // e
        lim_geq = -((-(e * (l + 1) + d - d * y)) // e) - 1
        if max(lim_less, lim_geq) < d + 1:
            break
        less += max(0, lim_less - d)
        geq += max(0, lim_geq - d)
        y += 1
    return {"less": less, "geq": geq}


def square_count(l: int) -> int:
    """Triangular partitions fitting in an l x l square."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    phi = totient_sieve(l)
    return 1 + sum(math.comb(l - i + 2, 2) * int(phi[i]) for i in range(1, l + 1))


def rect_counts(l: int) -> dict:
    """Closed forms for the l x (l-1) and l x (l-2) boxes and two width counts.

    Fields whose range excludes ``l`` are returned as None.
    """
    from .words import balanced_count_formula

    if l < 1:
        raise ValueError("l must be positive")
    phi = [int(v) for v in totient_sieve(l)]
    s1 = sum((l - i + 1) ** 2 * phi[i] for i in range(1, l + 1))
    s2 = sum(((l - i + 1) * (l - i) + 1) * phi[i] for i in range(1, l + 1))
    return {
        "minus1": (1 + s1) // 2 if l >= 2 else None,
        "minus2": 1 - l + s2 // 2 if l >= 3 else None,
        "widthExact": balanced_count_formula(l) // 2,
        "narrowTall": l - 1 if l >= 2 else None,
    }


def bench_rows(n_max: int, threads: int | None = None) -> list[dict]:
    """Per-n growth data: |Delta(n)|, pp bounds and |Delta(n)| / (n log n)."""
    delta = count_delta_dfs(n_max, threads)
    pp = coprime_pair_series(2 * n_max + 1)
    rows = []
    for n in range(1, n_max + 1):
        rows.append(
            {
                "n": n,
                "delta": delta[n],
                "pp_upper": int(pp[2 * n + 1]),
                "pp_lower": int(pp[(n + 1) // 2]) / 3,
                "ratio_nlogn": delta[n] / (n * math.log(n)) if n > 1 else None,
            }
        )
    return rows
