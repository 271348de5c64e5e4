"""Tree decompositions, exact and heuristic treewidth, chordal lifts."""

from decomposition.tree_decomposition import (
    TreeDecomposition,
    ValidationReport,
    normalize,
    validate,
    width,
)

__all__ = ["TreeDecomposition", "ValidationReport", "normalize", "validate", "width"]
