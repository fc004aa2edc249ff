"""Triangular partitions: partitions whose Ferrers diagram a straight line cuts off."""
from .core import (
    Cell,
    NotTriangularError,
    Partition,
    PartitionError,
    conjugate,
    format_partition,
    parse_partition,
    staircase,
)
from .hull import is_triangular, is_triangular_reference, slope_interval

__all__ = [
    "Cell",
    "NotTriangularError",
    "Partition",
    "PartitionError",
    "conjugate",
    "format_partition",
    "parse_partition",
    "staircase",
    "is_triangular",
    "is_triangular_reference",
    "slope_interval",
]
__version__ = "0.1.0"
