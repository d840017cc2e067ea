"""Exact computations for rank-one ideals on cubic AS-regular quadrics."""

__version__ = "0.1.0"
