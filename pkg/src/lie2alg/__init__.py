"""Exact-arithmetic cohomology of strict Lie 2-algebras.

Crossed modules of Lie algebras over the rationals, their 2-representations,
the triple-graded cochain complex with its total differential, cohomology
groups, and the classification of extensions by degree-2 classes.
"""

from ._kernel import BACKEND as KERNEL_BACKEND

__all__ = ["KERNEL_BACKEND"]
__version__ = "0.1.0"
