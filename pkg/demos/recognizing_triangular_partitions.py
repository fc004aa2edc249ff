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
# # Recognizing triangular partitions
#
# A partition is *triangular* when a straight line separates the cells of its
# Ferrers diagram from the remaining lattice points of the quadrant.  This
# notebook walks through the recognition test and the cells that can be added
# or removed while staying triangular.

# %%
from tripart import Partition, is_triangular, parse_partition, slope_interval
from tripart.hull import complement_hull, partition_hull
from tripart.words import removable_via_reduction

# %% [markdown]
# ## A yes and a no
#
# `8,6,5,3,1` can be cut off by a line; `8,6,3,3,1` cannot, because the two
# rows of length 3 stick out past any line that keeps the first two rows.

# %%
for text in ["8,6,5,3,1", "8,6,3,3,1"]:
    p = parse_partition(text)
    print(text, is_triangular(p).triangular)

# %% [markdown]
# The reference test looks at every cell's arm and leg and computes an open
# interval of admissible slope parameters.  The partition is triangular
# exactly when that interval is nonempty.

# %%
s = slope_interval(parse_partition("8,6,5,3,1"))
print(s.t_minus, s.t_plus, s.nonempty)
s = slope_interval(parse_partition("8,6,3,3,1"))
print(s.t_minus, s.t_plus, s.nonempty)

# %% [markdown]
# ## Hulls
#
# The fast test never looks at individual cells.  It builds the convex chain
# through the corners of the diagram and the chain through the corners of the
# complement, then binary-searches for an edge of one chain that the other
# chain does not cross.

# %%
p = Partition([8, 6, 5, 3, 1])
print("partition hull :", list(partition_hull(p)))
print("complement hull:", list(complement_hull(p)))

# %% [markdown]
# The same search reports the removable and addable cells: there are never
# more than two of each.

# %%
for text in ["7,5,4,2,1", "6,5,4,2,1", "6,5,3,2,1"]:
    r = is_triangular(parse_partition(text))
    print(f"{text:10s} removable={list(r.removable)} addable={list(r.addable)}")

# %% [markdown]
# ## Very large inputs
#
# Only the corners matter, so partitions with thousands of rows are cheap.
# For wide partitions there is a further shortcut: replace the partition by a
# small proxy with the same pattern of gaps between consecutive parts, find
# the proxy's removable cell and map its row back.

# %%
huge = parse_partition("5^576,4^1037,3^1037,2^1036,1^1037")
print(huge.size, "cells in", huge.height, "rows")
print("removable:", removable_via_reduction(huge))
