"""Exact symbolic engine for dotted web diagrams of type Q.

Subpackages: combinat (partitions, dominance, pair combinatorics),
polyring (symmetric-function calculus and the leading-term model),
webterm (diagram terms and the relation library), sergeev (the affine
Sergeev superalgebra and PBW straightening), normalform (reduction to
the elementary chicken-foot basis), qrep (the representation-functor
oracle), cli (batch front end).
"""

__version__ = "0.1.0"
