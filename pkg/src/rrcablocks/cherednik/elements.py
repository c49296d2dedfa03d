"""Named elements of H_R(G(m,1,n)): Dunkl-Opdam elements, gamma_ij, xi_ij,
Jucys-Murphy elements, the Euler element, elementary symmetric polynomials
in the z_i, and the involution psi.

All indices are 1-based, matching the generator methods of the algebra.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .algebra import CherednikAlgebra, Element
from .group import WElement


def _reflection_sum(alg: CherednikAlgebra, i: int, j: int, sign_i: int) -> list[tuple[int, Element]]:
    """[(l, s_ij g_i^(sign_i*l) g_j^(-sign_i*l)) for l in 0..m-1]."""
    out = []
    for l in range(alg.m):
        out.append((l, alg.s(i, j) * alg.g(i, sign_i * l) * alg.g(j, -sign_i * l)))
    return out


def dunkl_opdam_z(alg: CherednikAlgebra, i: int) -> Element:
    """z_i = y_i x_i - t/2 + kappa sum_l sum_{j<i} s_ij g_i^l g_j^-l - sum_{l>=1} c_l eta^-l g_i^l."""
    key = ("z", i)
    cache = _cache(alg)
    if key in cache:
        return cache[key]
    z = alg.y(i) * alg.x(i) - alg.from_scalar(alg.t * Fraction(1, 2))
    for j in range(1, i):
        for _, w in _reflection_sum(alg, i, j, +1):
            z = z + w * alg.kappa
    for l in range(1, alg.m):
        z = z - alg.g(i, l) * (alg.c(l) * alg.eta_power(-l))
    cache[key] = z
    return z


def dunkl_opdam_z_alt(alg: CherednikAlgebra, i: int) -> Element:
    """The second expression: x_i y_i + t/2 - kappa sum_l sum_{j>i} s_ij g_i^l g_j^-l - sum_{l>=1} c_l g_i^l."""
    z = alg.x(i) * alg.y(i) + alg.from_scalar(alg.t * Fraction(1, 2))
    for j in range(i + 1, alg.n + 1):
        for _, w in _reflection_sum(alg, i, j, +1):
            z = z - w * alg.kappa
    for l in range(1, alg.m):
        z = z - alg.g(i, l) * alg.c(l)
    return z


def gamma(alg: CherednikAlgebra, i: int, j: int) -> Element:
    """gamma_ij = -kappa sum_l s_ij g_i^-l g_j^l (i != j)."""
    if i == j:
        raise ValueError("gamma_ij needs i != j")
    key = ("gamma", i, j)
    cache = _cache(alg)
    if key not in cache:
        total = alg.zero()
        for _, w in _reflection_sum(alg, i, j, -1):
            total = total + w
        cache[key] = total * (-alg.kappa)
    return cache[key]


def gamma1(alg: CherednikAlgebra, j: int) -> Element:
    """gamma_j = gamma_1j."""
    return gamma(alg, 1, j)


def xi(alg: CherednikAlgebra, i: int, j: int) -> Element:
    """xi_ij = sum_l g_i^l g_j^-l."""
    total = alg.zero()
    for l in range(alg.m):
        total = total + alg.g(i, l) * alg.g(j, -l)
    return total


def jucys_murphy_u(alg: CherednikAlgebra, i: int) -> Element:
    """u_i = sum_l sum_{j<i} s_ij g_i^-l g_j^l (an element of the group algebra)."""
    total = alg.zero()
    for j in range(1, i):
        for _, w in _reflection_sum(alg, i, j, -1):
            total = total + w
    return total


def euler_element(alg: CherednikAlgebra) -> Element:
    """eu = sum x_i y_i + n t/2 - kappa sum_{i<j} sum_l s_ij g_i^-l g_j^l - sum_i sum_{l>=1} c_l g_i^l.

    The pair sum runs over unordered pairs; see the test pinning sum z_i == eu.
    """
    n = alg.n
    total = alg.from_scalar(alg.t * Fraction(n, 2))
    for i in range(1, n + 1):
        total = total + alg.x(i) * alg.y(i)
        for l in range(1, alg.m):
            total = total - alg.g(i, l) * alg.c(l)
    for i, j in combinations(range(1, n + 1), 2):
        for _, w in _reflection_sum(alg, i, j, -1):
            total = total - w * alg.kappa
    return total


def sym_poly_S(alg: CherednikAlgebra, r: int, z=None) -> Element:
    """The r-th elementary symmetric polynomial in z_1..z_n (or in the supplied list ``z``)."""
    n = alg.n
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= {n}, got r={r}")
    zs = z if z is not None else [dunkl_opdam_z(alg, i) for i in range(1, n + 1)]
    # e_r via the recurrence e_k(z_1..z_j) = e_k(z_1..z_{j-1}) + e_{k-1}(z_1..z_{j-1}) z_j
    e = [alg.one()] + [alg.zero()] * r
    for zj in zs:
        for k in range(r, 0, -1):
            if not e[k - 1].is_zero():
                e[k] = e[k] + e[k - 1] * zj
    return e[r]


# ----------------------------------------------------------------------------
# the involution


def psi_group(alg: CherednikAlgebra, w: WElement) -> WElement:
    """g_i -> g_{n-i+1}^-1 and sigma -> w0 sigma w0."""
    n, m = alg.n, alg.m
    e, s = w
    new_e = [0] * n
    for i in range(n):
        new_e[n - 1 - i] = (-e[i]) % m
    new_s = tuple(n - 1 - s[n - 1 - k] for k in range(n))
    return WElement(tuple(new_e), new_s)


def psi_scalar(alg: CherednikAlgebra, coeff):
    """t -> -t, kappa -> -kappa, c_l -> eta^l c_{-l}."""
    mapping = {"t": (-1, "t"), "kappa": (-1, "kappa")}
    for l in range(1, alg.m):
        mapping[f"c{l}"] = (alg.eta_power(l), f"c{(-l) % alg.m}")
    return coeff.substitute_scaled(mapping)


def psi(a: Element) -> Element:
    """Apply the automorphism psi and renormalize."""
    alg = a.algebra
    n = alg.n
    total = alg.zero()
    cache: dict = {}
    for (alpha, w, beta), coeff in a.terms.items():
        # psi(y^alpha) = x^alpha reversed, psi(x^beta) = y^beta reversed
        xs = tuple(alpha[n - 1 - k] for k in range(n))
        ys = tuple(beta[n - 1 - k] for k in range(n))
        w2 = psi_group(alg, w)
        key = (xs, w2, ys)
        if key not in cache:
            left = alg.element({(alg._zero_exp, alg._id, xs): alg._one_poly})
            right = alg.element({(ys, alg._id, alg._zero_exp): alg._one_poly})
            cache[key] = left * alg.group_element(w2) * right
        total = total + cache[key] * psi_scalar(alg, coeff)
    return total


def _cache(alg: CherednikAlgebra) -> dict:
    return alg.__dict__.setdefault("_named_cache", {})


__all__ = [
    "dunkl_opdam_z",
    "dunkl_opdam_z_alt",
    "gamma",
    "gamma1",
    "xi",
    "jucys_murphy_u",
    "euler_element",
    "sym_poly_S",
    "psi",
    "psi_group",
    "psi_scalar",
]
