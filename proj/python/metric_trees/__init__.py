"""Finite metric trees: geodesics, covering profiles and structure checks."""

from ._mtree import (
    MtreeError,
    Tree,
    check_four_point,
    gallery_names,
    lifschitz_counterexample,
    tree_from_distances,
)

__all__ = [
    "MtreeError",
    "Tree",
    "check_four_point",
    "gallery_names",
    "lifschitz_counterexample",
    "tree_from_distances",
]
