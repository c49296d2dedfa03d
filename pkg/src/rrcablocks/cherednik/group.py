"""The wreath product G(m,1,n) = S_n x| (C_m)^n in the normal form g^e * sigma.

Indices are 0-based internally. ``sigma[k]`` is the image of k.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterator, NamedTuple


class WElement(NamedTuple):
    """g_1^e_1 ... g_n^e_n * sigma, exponents reduced mod m."""

    e: tuple[int, ...]
    sigma: tuple[int, ...]


def identity(n: int) -> WElement:
    return WElement((0,) * n, tuple(range(n)))


def torus(n: int, m: int, exps: dict[int, int]) -> WElement:
    """Product of g_i^l over ``exps`` (0-based i -> l)."""
    e = [0] * n
    for i, l in exps.items():
        e[i] = (e[i] + l) % m
    return WElement(tuple(e), tuple(range(n)))


def transposition(n: int, i: int, j: int) -> WElement:
    sigma = list(range(n))
    sigma[i], sigma[j] = j, i
    return WElement((0,) * n, tuple(sigma))


def w_mul(u: WElement, v: WElement, m: int) -> WElement:
    """(g^e s)(g^f t) = g^(e + s.f) (s t), where (s.f)_i = f_(s^-1(i))."""
    e, s = u
    f, t = v
    new = list(e)
    for k, fk in enumerate(f):
        if fk:
            new[s[k]] = (new[s[k]] + fk) % m
    return WElement(tuple(new), tuple(s[t[k]] for k in range(len(t))))


def w_inverse(u: WElement, m: int) -> WElement:
    e, s = u
    n = len(s)
    inv = [0] * n
    for k in range(n):
        inv[s[k]] = k
    return WElement(tuple((-e[s[i]]) % m for i in range(n)), tuple(inv))


def w_act(u: WElement, kind: str, j: int) -> tuple[int, int]:
    """Image of y_j (``kind='y'``) or x_j (``'x'``) under u, as (power of eta, new index).

    u.y_j = eta^(e_sigma(j)) y_sigma(j); x_j picks up the inverse scalar.
    """
    e, s = u
    k = s[j]
    if kind == "y":
        return e[k], k
    if kind == "x":
        return -e[k], k
    raise ValueError(f"unknown generator kind {kind!r}")


def elements(m: int, n: int) -> Iterator[WElement]:
    for sigma in permutations(range(n)):
        for e in product(range(m), repeat=n):
            yield WElement(tuple(e), tuple(sigma))


def order(m: int, n: int) -> int:
    total = m**n
    for k in range(2, n + 1):
        total *= k
    return total
