"""Exact fermionic skein calculus of set partitions.

Exterior-algebra fermions attached to set partitions, the skein action of the
symmetric group on noncrossing partitions, crossing resolution, the quadratic
ring model, fermionic diagonal coinvariant dimensions and the symmetric
function identities tying them together.
"""

from skeinlab.extalg import ExtMonomial, Fermion, theta, xi
from skeinlab.setpart import SegmentedPermutation, SetPartition
from skeinlab.skein import NCVector

__all__ = [
    "ExtMonomial",
    "Fermion",
    "NCVector",
    "SegmentedPermutation",
    "SetPartition",
    "theta",
    "xi",
]

__version__ = "0.1.0"
