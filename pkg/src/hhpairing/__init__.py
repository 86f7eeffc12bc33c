"""Exact Hochschild-homology pairings and integral transforms for small
smooth projective varieties, computed on Hodge cohomology."""

__version__ = "0.1.0"

from .backend import BACKEND
from .characteristic import BundleData, chern_character, star, todd_class, vee, w_involution
from .graded_ring import BigradedAlgebra, HodgeClass, diagonal_pushforward, koszul_swap, tensor
from .hochschild import HHClass, kunneth, mukai_pairing, shklyarov_pairing
from .spaces import SpaceModel, curve, point, product, projective_space
from .transforms import Kernel, adjoint, compose, convolve, identity_kernel, mukai_convolve

__all__ = [
    "BACKEND",
    "BigradedAlgebra",
    "BundleData",
    "HHClass",
    "HodgeClass",
    "Kernel",
    "SpaceModel",
    "adjoint",
    "chern_character",
    "compose",
    "convolve",
    "curve",
    "diagonal_pushforward",
    "identity_kernel",
    "koszul_swap",
    "kunneth",
    "mukai_convolve",
    "mukai_pairing",
    "point",
    "product",
    "projective_space",
    "shklyarov_pairing",
    "star",
    "tensor",
    "todd_class",
    "vee",
    "w_involution",
]
