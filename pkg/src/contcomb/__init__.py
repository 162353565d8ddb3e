"""Exact computational checks for continuous combinatorics.

Subpackages and modules:

* ``scalars``, ``linalg``, ``lp``: exact arithmetic over R, C and H
  (rational components), subspaces and exact linear programming;
* ``simplicial``: complexes, homology, group quotients, mod-2 cup powers;
* ``posets``: finite posets, order complexes, symmetric joins, hocolims;
* ``crossmat``: sign vectors and K-matroids;
* ``strata``: face-space Euler sums of convex bodies;
* ``grassmann``: Grassmannian Euler characteristics and χ-vectors;
* ``index``: Z/2-index and Sarkaria-type inequalities;
* ``experiments`` and ``cli``: the experiment registry and command line.

The homology kernels come from a compiled extension when available; see
``contcomb.kernels.BACKEND``.
"""

__version__ = "0.1.0"

from .kernels import BACKEND  # noqa: E402

__all__ = ["BACKEND", "__version__"]
