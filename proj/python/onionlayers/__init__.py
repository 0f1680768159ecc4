"""Convex layers (onion peeling) with exact integer predicates.

The heavy lifting lives in the compiled `_core` module: four monotone convex
chains per layer, maintained in hull trees so the full peel costs
O(n log n).  Coordinates must be integers with |x|, |y| <= 2**30.
"""

from ._core import depths, fixture, peel

__all__ = ["depths", "fixture", "peel"]
