"""Compiled kernel for the balanced-word depth-first counter.

Falls back to plain Python when numba is unavailable, which is correct but slow.
"""
from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@njit(cache=True, nogil=True)
def _extend(pre, lo, hi, depth, bit, write):
    # Append ``bit`` to the word of length ``depth``; the new word has one new
    # factor per length h, namely its suffix of length h.
    total = pre[depth] + bit
    n = depth + 1
    for h in range(1, n):
        c = total - pre[n - h]
        a = lo[depth, h]
        b = hi[depth, h]
        if c < a:
            a = c
        elif c > b:
            b = c
        if b - a > 1:
            return False
        if write:
            lo[n, h] = a
            hi[n, h] = b
    if write:
        lo[n, n] = total
        hi[n, n] = total
        pre[n] = total
    return True


@njit(cache=True, nogil=True)
def _children(pre, lo, hi, alt_lo, alt_hi, depth):
    # Test both one-letter extensions in a single sweep.  The 0-child state is
    # written to row depth + 1 and the 1-child state to the alt buffers; the
    # suffix count with a trailing 1 is always the 0-suffix count plus one.
    total = pre[depth]
    n = depth + 1
    ok0 = True
    ok1 = True
    for h in range(1, n):
        c = total - pre[n - h]
        a = lo[depth, h]
        b = hi[depth, h]
        if ok0:
            a0 = c if c < a else a
            b0 = c if c > b else b
            if b0 - a0 > 1:
                ok0 = False
            else:
                lo[n, h] = a0
                hi[n, h] = b0
        if ok1:
            a1 = c + 1 if c + 1 < a else a
            b1 = c + 1 if c + 1 > b else b
            if b1 - a1 > 1:
                ok1 = False
                if not ok0:
                    break
            else:
                alt_lo[depth, h] = a1
                alt_hi[depth, h] = b1
    lo[n, n] = total
    hi[n, n] = total
    alt_lo[depth, n] = total + 1
    alt_hi[depth, n] = total + 1
    return ok0, ok1


@njit(cache=True, nogil=True)
def count_subtree(n_max, init_bits, max_len, out):
    """Add triple counts for the subtree rooted at ``init_bits`` into ``out``.

    Nodes deeper than ``max_len`` letters are not visited.  Returns False if
    the root word is not balanced.
    """
    size = max_len + 2
    pre = np.zeros(size, np.int64)
    lo = np.zeros((size, size), np.int64)
    hi = np.zeros((size, size), np.int64)
    alt_lo = np.zeros((size, size), np.int64)
    alt_hi = np.zeros((size, size), np.int64)
    nmin = np.zeros(size, np.int64)
    zeros = np.zeros(size, np.int64)
    stage = np.zeros(size, np.int64)
    can = np.zeros((size, 2), np.bool_)

    root = init_bits.shape[0]
    if root > max_len:
        return True
    for t in range(root):
        b = init_bits[t]
        if not _extend(pre, lo, hi, t, b, True):
            return False
        nmin[t + 1] = nmin[t] + (t + 1) * (1 + b)
        zeros[t + 1] = zeros[t] + (1 - b)

    depth = root
    stage[depth] = 0
    while depth >= root:
        st = stage[depth]
        if st == 0:
            ell = depth
            if nmin[depth] + ell + 1 > n_max:
                # even (m, d) = (1, 1) overshoots, and so does every descendant
                depth -= 1
                continue
            ok0, ok1 = _children(pre, lo, hi, alt_lo, alt_hi, depth)
            can[depth, 0] = ok0
            can[depth, 1] = ok1
            if ell >= 1 and zeros[depth] > 0:
                tri = ell * (ell + 1) // 2
                stair = zeros[depth] == ell
                d = 1
                while True:
                    m_top = d + 1 if ok1 else d
                    m = 1
                    finished = False
                    while m <= m_top:
                        s = nmin[depth] + tri * (d - 1) + (ell + 1) * m
                        if s > n_max:
                            if m == 1:
                                finished = True
                            break
                        if stair and m == 1 and d == 1:
                            out[s] += 1
                        else:
                            out[s] += 2
                        m += 1
                    if finished:
                        break
                    d += 1
            stage[depth] = 1
        elif st == 1:
            stage[depth] = 2
            if can[depth, 0] and depth < max_len:
                pre[depth + 1] = pre[depth]
                nmin[depth + 1] = nmin[depth] + depth + 1
                zeros[depth + 1] = zeros[depth] + 1
                depth += 1
                stage[depth] = 0
        elif st == 2:
            stage[depth] = 3
            if can[depth, 1] and depth < max_len:
                n = depth + 1
                for h in range(1, n + 1):
                    lo[n, h] = alt_lo[depth, h]
                    hi[n, h] = alt_hi[depth, h]
                pre[n] = pre[depth] + 1
                nmin[n] = nmin[depth] + 2 * n
                zeros[n] = zeros[depth]
                depth = n
                stage[depth] = 0
        else:
            depth -= 1
    return True
