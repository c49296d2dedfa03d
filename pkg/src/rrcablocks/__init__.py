"""Block decompositions of restricted rational Cherednik algebras for G(m,1,n)
and G(m,d,n), with an exact PBW rewriting engine for H_R(G(m,1,n))."""

from .blocks import (
    BlockInvariant,
    BlockPartition,
    baby_verma_eigenvalues,
    block_invariant,
    block_partition_g_m_1_n,
    block_partition_g_m_d_n,
    same_block,
)
from .combin import Multipartition, Partition, enumerate_multipartitions, enumerate_standard_tableaux
from .exactnum import Cyclotomic, LinearExponent, MultiPoly
from .params import DerivedParams, ParamSpec, c_to_H, H_to_c

__version__ = "0.1.0"

__all__ = [
    "BlockInvariant",
    "BlockPartition",
    "baby_verma_eigenvalues",
    "block_invariant",
    "block_partition_g_m_1_n",
    "block_partition_g_m_d_n",
    "same_block",
    "Multipartition",
    "Partition",
    "enumerate_multipartitions",
    "enumerate_standard_tableaux",
    "Cyclotomic",
    "LinearExponent",
    "MultiPoly",
    "DerivedParams",
    "ParamSpec",
    "c_to_H",
    "H_to_c",
]
