# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Counting triangular partitions with balanced words
#
# A binary word is balanced when any two factors of the same length contain
# numbers of ones that differ by at most one.  Wide triangular partitions
# (those with distinct parts) are encoded by balanced words, and this turns
# counting into a depth-first search over a tree of words.

# %%
import math
import time

import numpy as np

from tripart import Partition
from tripart.enumeration import (
    coprime_pair_series,
    count_delta2,
    count_delta_dfs,
    count_delta_gf,
    derive_class_series,
)
from tripart.words import ChiTriple, balanced_enumerate, chi, chi_size, omega, xi

# %% [markdown]
# ## Two encodings
#
# `omega` writes a 1 for each part followed by zeros for the gap to the next
# part.  `chi` keeps the smallest part, the smallest gap and a word recording
# which gaps exceed the smallest.

# %%
print(omega(Partition([8, 6, 5, 3, 1])))
t = chi(Partition([12, 9, 7, 4, 1]))
print(t, xi(t), chi_size(t))

# %% [markdown]
# The size of the partition behind a triple is a simple polynomial, which is
# what lets the search price every (m, d) pair in constant time.

# %%
for m, d in [(1, 1), (1, 2), (2, 2), (3, 2)]:
    t = ChiTriple(m, d, "01")
    print(t, chi_size(t), xi(t))

# %% [markdown]
# ## The search
#
# Words are extended one letter at a time.  Balance is checked incrementally
# by tracking, for every window length, the smallest and largest number of
# ones seen so far.

# %%
print([len(balanced_enumerate(n)) for n in range(10)])

# %%
t0 = time.perf_counter()
delta = count_delta_dfs(2000)
print(f"{time.perf_counter() - t0:.3f}s (includes compilation on first run)")
print(delta.values[:21])

# %% [markdown]
# A generating-function counter gives the same numbers but scales far worse.

# %%
assert count_delta_gf(300).values == count_delta_dfs(300).values

# %% [markdown]
# ## Removable and addable cells
#
# Splitting the count by the number of removable cells needs one more series;
# the rest follows from an identity relating consecutive sizes.

# %%
cs = derive_class_series(count_delta_dfs(21), count_delta2(21))
print("one removable cell :", cs.d1.values[1:21])
print("two removable cells:", count_delta2(20).values[1:])

# %% [markdown]
# ## Growth
#
# The count grows like n log n and sits between two coprime-pair counts.

# %%
n = np.arange(2, 2001)
vals = np.array(delta.values)[2:]
pp = coprime_pair_series(4001)
ratio = vals / (n * np.log(n))
print("ratio range over the last 500 terms:", ratio[-500:].min().round(3), ratio[-500:].max().round(3))
print("inside bounds:", bool(np.all((pp[(n + 1) // 2] / 3 <= vals) & (vals <= pp[2 * n + 1]))))
