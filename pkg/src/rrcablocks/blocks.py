"""Block decomposition of restricted rational Cherednik algebras of G(m,1,n)
and G(m,d,n) at t = 0.

Two baby Verma modules for G(m,1,n) lie in the same block exactly when the
multisets {a_beta(b) - kappa*ct(b) : b a box} of their multipartitions agree.
Those multisets are the :class:`BlockInvariant` values computed here.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence, Union

from .combin import (
    Multipartition,
    OrbitLabel,
    StandardTableau,
    content,
    delta_action,
    enumerate_multipartitions,
    is_d_stuttering,
    orbit_labels,
)
from .exactnum import Cyclotomic
from .params import ParamSpec, ParameterError, c_to_H, generic_exponent, is_admissible

Label = Union[Multipartition, OrbitLabel]


@dataclass(frozen=True)
class BlockInvariant:
    mode: str
    entries: tuple

    def __len__(self) -> int:
        return len(self.entries)

    def to_json(self) -> list:
        if self.mode == "generic":
            return [e.to_json() for e in self.entries]
        return [str(e) for e in self.entries]

    def __str__(self) -> str:
        return "{" + ", ".join(str(e) for e in self.entries) + "}"


@dataclass(frozen=True)
class BlockPartition:
    group: tuple[int, int, int]
    mode: str
    labels: tuple
    classes: tuple[tuple, ...]

    def to_json(self) -> dict:
        m, d, n = self.group
        return {
            "group": {"m": m, "d": d, "n": n},
            "mode": self.mode,
            "blocks": [[lab.to_json() for lab in cls] for cls in self.classes],
        }

    def as_sets(self) -> set[frozenset]:
        return {frozenset(c) for c in self.classes}

    def class_of(self, label) -> tuple:
        for cls in self.classes:
            if label in cls:
                return cls
        raise KeyError(label)


def _check_m(lam: Multipartition, params: ParamSpec):
    if lam.m != params.m:
        raise ParameterError(f"multipartition has {lam.m} components but m={params.m}")


def block_invariant(lam: Multipartition, params: ParamSpec, period: int | None = None) -> BlockInvariant:
    """The sorted multiset {a_beta(b) - kappa*ct(b)} over the boxes of ``lam``.

    ``period`` (generic mode only) imposes a_{i+p} = a_i, the shape of the
    a-vector for parameters coming from G(m,d,n) with p = m/d.
    """
    _check_m(lam, params)
    if params.is_generic:
        p = period or params.m
        entries = sorted(
            generic_exponent(b.component % p, content(b), params.m) for b in lam.boxes()
        )
        return BlockInvariant("generic", tuple(entries))
    derived = c_to_H(params)
    kappa = params.kappa
    entries = [derived.a[b.component] - kappa * content(b) for b in lam.boxes()]
    entries.sort(key=Cyclotomic.sort_key)
    return BlockInvariant("numeric", tuple(entries))


def same_block(lam: Multipartition, mu: Multipartition, params: ParamSpec) -> bool:
    if lam.n != mu.n:
        raise ParameterError(f"sizes differ: |lambda|={lam.n}, |mu|={mu.n}")
    return block_invariant(lam, params) == block_invariant(mu, params)


def _group_by_invariant(labels: Sequence[Multipartition], invariants: Sequence[BlockInvariant]) -> dict:
    groups: dict[BlockInvariant, list] = {}
    for lam, inv in zip(labels, invariants):
        groups.setdefault(inv, []).append(lam)
    return groups


def _invariants(labels, params, threads: int = 1, period: int | None = None) -> list[BlockInvariant]:
    if threads > 1 and len(labels) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda lam: block_invariant(lam, params, period), labels))
    return [block_invariant(lam, params, period) for lam in labels]


def block_partition_g_m_1_n(m: int, n: int, params: ParamSpec, threads: int = 1) -> BlockPartition:
    """Group P(m, n) by equal block invariant; classes listed in enumeration order."""
    if params.m != m:
        raise ParameterError(f"parameters are for m={params.m}, not m={m}")
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    labels = enumerate_multipartitions(m, n)
    groups = _group_by_invariant(labels, _invariants(labels, params, threads))
    return BlockPartition((m, 1, n), params.mode, tuple(labels), tuple(tuple(g) for g in groups.values()))


def check_gmdn_input(m: int, d: int, n: int, params: ParamSpec):
    if d < 1 or m % d:
        raise ParameterError(f"d={d} does not divide m={m}")
    if params.m != m:
        raise ParameterError(f"parameters are for m={params.m}, not m={m}")
    if d > 1:
        if n < 2:
            raise ParameterError(
                f"n={n} is excluded for d>1; G(m,d,n) blocks assume n > 2, or n = 2 and d odd"
            )
        if n == 2 and d % 2 == 0:
            raise ParameterError(
                f"n=2 with even d={d} is excluded; G(m,d,n) blocks assume n > 2, or n = 2 and d odd"
            )
    if not is_admissible(params, d):
        bad = [l for l, v in enumerate(params.c, start=1) if l % d and not v.is_zero()]
        raise ParameterError(
            f"c_l must vanish when d={d} does not divide l; nonzero at l={bad}"
        )


def block_partition_g_m_d_n(m: int, d: int, n: int, params: ParamSpec, threads: int = 1) -> BlockPartition:
    """Blocks for G(m,d,n), labelled by (orbit representative, epsilon).

    Distinct orbits merge when their invariants agree. A d-stuttering orbit
    whose invariant is shared by no other multipartition splits into one
    block per epsilon; every other orbit keeps all its epsilons together.
    """
    check_gmdn_input(m, d, n, params)
    if d == 1:
        return block_partition_g_m_1_n(m, n, params, threads)
    p = m // d
    period = p if params.is_generic else None
    all_lams = enumerate_multipartitions(m, n)
    invs = _invariants(all_lams, params, threads, period)
    inv_of = dict(zip(all_lams, invs))
    for lam in all_lams:
        if inv_of[delta_action(lam, d)] != inv_of[lam]:
            raise AssertionError(f"block invariant is not constant on the orbit of {lam}")
    class_size: dict[BlockInvariant, int] = {}
    for inv in invs:
        class_size[inv] = class_size.get(inv, 0) + 1

    labels = orbit_labels(m, n, d)
    groups: dict = {}
    for lab in labels:
        lam = lab.representative
        inv = inv_of[lam]
        if is_d_stuttering(lam, d) and class_size[inv] == 1:
            key = (inv, lab.epsilon)
        else:
            key = (inv, None)
        groups.setdefault(key, []).append(lab)
    return BlockPartition((m, d, n), params.mode, tuple(labels), tuple(tuple(g) for g in groups.values()))


def baby_verma_eigenvalues(lam: Multipartition, tab: StandardTableau, params: ParamSpec) -> list[Cyclotomic]:
    """Entry i (1-based) is the eigenvalue of z_{n-i+1}: -kappa*m*ct(T(i)) - sum_l c_l eta^(l beta_T(i))."""
    if params.is_generic:
        raise ParameterError("eigenvalues need numeric parameters")
    _check_m(lam, params)
    if tab.shape != lam:
        raise ParameterError(f"tableau shape {tab.shape} is not {lam}")
    m, eta = params.m, params.eta
    out = []
    for b in tab.placement:
        value = -params.kappa * (m * content(b))
        for l in range(1, m):
            value = value - params.c[l - 1] * eta ** (l * b.component)
        out.append(value)
    return out


def eigenvalue_multiset(lam: Multipartition, params: ParamSpec) -> tuple[Cyclotomic, ...]:
    """Sorted {C + m*a_beta - m*kappa*ct} over the boxes of ``lam``."""
    _check_m(lam, params)
    derived = c_to_H(params)
    m = params.m
    vals = [derived.C + derived.a[b.component] * m - params.kappa * (m * content(b)) for b in lam.boxes()]
    return tuple(sorted(vals, key=Cyclotomic.sort_key))


def scaled_invariant_classes_agree(lam: Multipartition, mu: Multipartition, params: ParamSpec) -> bool:
    """Eigenvalue-multiset equality and block-invariant equality give the same verdict."""
    by_eigen = eigenvalue_multiset(lam, params) == eigenvalue_multiset(mu, params)
    by_invariant = block_invariant(lam, params) == block_invariant(mu, params)
    return by_eigen == by_invariant


def kappa_zero_key(lam: Multipartition, params: ParamSpec) -> tuple:
    """Canonical form of sum_i x^(a_i) |lam^i| (the kappa = 0 block criterion)."""
    derived = c_to_H(params)
    weights: dict[Cyclotomic, int] = {}
    for a, size in zip(derived.a, lam.sizes()):
        if size:
            weights[a] = weights.get(a, 0) + size
    return tuple(sorted(((a.sort_key(), k) for a, k in weights.items())))


__all__ = [
    "BlockInvariant",
    "BlockPartition",
    "block_invariant",
    "same_block",
    "block_partition_g_m_1_n",
    "block_partition_g_m_d_n",
    "baby_verma_eigenvalues",
    "eigenvalue_multiset",
    "scaled_invariant_classes_agree",
    "kappa_zero_key",
]
