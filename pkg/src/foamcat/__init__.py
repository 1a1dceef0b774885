"""foamcat: exact diagrammatic Soergel calculus with sl(2) and sl(3) foam targets.

The package has three layers:

* ``scalars`` -- exact ground rings: Gaussian rationals, Q(i)[t] and
  Q[a,b,c] with their q-gradings, and integer Laurent polynomials.
* ``soergel`` / ``cob2`` / ``foam3`` -- the source category (colored
  planar generator words) and the two target categories (disoriented
  cobordisms in dotted-disk normal form, combinatorial pre-foams
  compared through closures).
* ``functors`` / ``verify`` -- the two evaluation functors and the
  relation-verification harness behind the ``verify`` command line tool.
"""

from foamcat.scalars import GaussRational, GroundPoly2, GroundPoly3, LaurentPoly

__all__ = [
    "GaussRational",
    "GroundPoly2",
    "GroundPoly3",
    "LaurentPoly",
]
