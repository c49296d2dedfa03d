"""Exact PBW arithmetic in H_R(G(m,1,n)) and identity checks."""

from .algebra import CherednikAlgebra, Element, ResourceLimitError, commutator
from .elements import (
    dunkl_opdam_z,
    dunkl_opdam_z_alt,
    euler_element,
    gamma,
    gamma1,
    jucys_murphy_u,
    psi,
    sym_poly_S,
    xi,
)
from .group import WElement, w_act, w_mul

__all__ = [
    "CherednikAlgebra",
    "Element",
    "ResourceLimitError",
    "WElement",
    "commutator",
    "dunkl_opdam_z",
    "dunkl_opdam_z_alt",
    "euler_element",
    "gamma",
    "gamma1",
    "jucys_murphy_u",
    "psi",
    "sym_poly_S",
    "w_act",
    "w_mul",
    "xi",
]
