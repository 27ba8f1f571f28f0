"""Exact verification tools for partition inequalities with impermissible parts."""

from .partitions import ClassParams, Partition, is_member, parse, serialize, weight

__all__ = ["ClassParams", "Partition", "is_member", "parse", "serialize", "weight"]
__version__ = "0.1.0"
