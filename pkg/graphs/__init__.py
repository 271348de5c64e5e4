"""Graphs, generators, cartesian products and connectivity."""

from graphs.core import Graph, ProductGraph, cartesian_product, copy_of_g, copy_of_h

__all__ = ["Graph", "ProductGraph", "cartesian_product", "copy_of_g", "copy_of_h"]
