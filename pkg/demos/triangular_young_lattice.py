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
# # The lattice of triangular partitions
#
# Ordered by containment of diagrams, triangular partitions form a lattice.
# Joins and meets come from convex hulls, and the Moebius function only ever
# takes the values -1, 0 and 1.

# %%
from tripart import Partition, staircase
from tripart.lattice import (
    count_subpartitions,
    covers_down,
    covers_up,
    diagonal,
    interior,
    interval,
    join,
    meet,
    mobius,
    tyt_count_brute,
    tyt_count_two_row,
)

# %% [markdown]
# ## Covers
#
# Going down removes one removable cell, going up adds one addable cell.

# %%
p = Partition([7, 5, 4, 2, 1])
print("below:", covers_down(p))
print("above:", covers_up(p))

# %% [markdown]
# ## Join and meet
#
# The join is the set of lattice points in the convex hull of both diagrams.
# The union of two triangular diagrams is usually not triangular, so the join
# can be much larger than either input.

# %%
a, b = Partition([8, 6, 5, 3, 1]), Partition([4, 3, 3, 3, 2, 2, 1, 1, 1])
print("join:", join(a, b))
print("meet:", meet(a, b))

# %% [markdown]
# ## Diagonal, interior and the Moebius function
#
# The cells on the segment between the two removable cells form the
# diagonal.  Removing all of them gives the interior, the only element
# strictly below a partition where the Moebius function can equal 1.

# %%
q = staircase(3)
print("diagonal:", diagonal(q), "interior:", interior(q))
for r in interval(Partition(), q):
    print(f"mu({str(tuple(r)):12s}, 321) = {mobius(r, q):+d}")

# %% [markdown]
# ## Counting below a partition
#
# Inclusion-exclusion over the two lower covers gives a recurrence for the
# number of triangular subpartitions.  Below a staircase it counts the
# triangular partitions that fit in a square box.

# %%
print([count_subpartitions(staircase(l)) if l else 1 for l in range(10)])

# %% [markdown]
# ## Tableaux
#
# A triangular Young tableau is a saturated chain from the empty partition.
# Two-row shapes have a closed form; other shapes are counted by walking the
# lattice.

# %%
print([tyt_count_two_row(t1, 2) for t1 in range(3, 10)])
print(tyt_count_brute(Partition([5, 3, 1])))
