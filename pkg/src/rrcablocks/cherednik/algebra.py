"""Exact arithmetic in the rational Cherednik algebra H_R of G(m,1,n) over
R = Q(eta)[t, kappa, c_1, ..., c_{m-1}], in PBW normal form y^alpha * w * x^beta.

Every product is reduced with the defining relations

    [y_i, x_i] = t - kappa sum_l sum_{j != i} s_ij g_i^-l g_j^l - sum_{l>=1} c_l (1 - eta^-l) g_i^l
    [y_i, x_j] = kappa sum_l eta^-l s_ij g_i^-l g_j^l          (i != j)
    w v w^-1 = w(v)   for v in V or V*.

Only x^beta * y^gamma needs rewriting; it is memoized per algebra, and the
product of two PBW monomials is then assembled in closed form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from ..exactnum import Cyclotomic, MultiPoly
from . import group as G
from .group import WElement

Monomial = tuple  # (alpha, w, beta)

MAX_GROUP_ORDER = 10**4
MAX_TERMS = 10**6


class ResourceLimitError(RuntimeError):
    """A computation exceeded the desk-scale caps of the engine."""


def _add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


class CherednikAlgebra:
    """H_R(G(m,1,n)); create elements through the generator methods."""

    def __init__(self, m: int, n: int):
        if m < 1 or n < 1:
            raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
        if G.order(m, n) > MAX_GROUP_ORDER:
            raise ResourceLimitError(
                f"|G({m},1,{n})| = {G.order(m, n)} exceeds the cap {MAX_GROUP_ORDER}"
            )
        self.m, self.n = m, n
        self.variables = ("t", "kappa") + tuple(f"c{l}" for l in range(1, m))
        self.eta = Cyclotomic.zeta(m, 1)
        self._eta_pow = [Cyclotomic.zeta(m, k) for k in range(m)]
        self._one_poly = MultiPoly.constant(self.variables, Cyclotomic.one(m))
        self._id = G.identity(n)
        self._zero_exp = (0,) * n
        self._wmul_cache: dict = {}
        self._winv_cache: dict = {}
        self._act_y_cache: dict = {}
        self._act_xinv_cache: dict = {}
        self._xy_cache: dict = {}
        self._comm = self._commutators()

    # -- coefficient helpers -----------------------------------------------

    def scalar(self, value) -> MultiPoly:
        """Coerce ints, fractions, cyclotomics and polynomials to coefficients."""
        if isinstance(value, MultiPoly):
            if value.variables != self.variables:
                raise ValueError("coefficient over a different variable list")
            return value
        if isinstance(value, Fraction):
            value = Cyclotomic.from_rational(value, self.m)
        return MultiPoly.constant(self.variables, Cyclotomic.coerce(value, self.m))

    def param(self, name: str) -> MultiPoly:
        return MultiPoly.variable(self.variables, name, Cyclotomic.one(self.m))

    @property
    def t(self) -> MultiPoly:
        return self.param("t")

    @property
    def kappa(self) -> MultiPoly:
        return self.param("kappa")

    def c(self, l: int) -> MultiPoly:
        if not 1 <= l <= self.m - 1:
            raise IndexError(f"c_l needs 1 <= l <= {self.m - 1}, got l={l}")
        return self.param(f"c{l}")

    def eta_power(self, k: int) -> Cyclotomic:
        return self._eta_pow[k % self.m]

    # -- group helpers -----------------------------------------------------

    def wmul(self, u: WElement, v: WElement) -> WElement:
        key = (u, v)
        r = self._wmul_cache.get(key)
        if r is None:
            r = G.w_mul(u, v, self.m)
            self._wmul_cache[key] = r
        return r

    def winv(self, u: WElement) -> WElement:
        r = self._winv_cache.get(u)
        if r is None:
            r = G.w_inverse(u, self.m)
            self._winv_cache[u] = r
        return r

    def _act_y(self, w: WElement, alpha: tuple) -> tuple[int, tuple]:
        """w * y^alpha = eta^k y^alpha' * w; returns (k, alpha')."""
        key = (w, alpha)
        r = self._act_y_cache.get(key)
        if r is None:
            e, s = w
            new = [0] * self.n
            k = 0
            for i, a in enumerate(alpha):
                if a:
                    new[s[i]] = a
                    k += a * e[s[i]]
            r = (k % self.m, tuple(new))
            self._act_y_cache[key] = r
        return r

    def _act_xinv(self, u: WElement, beta: tuple) -> tuple[int, tuple]:
        """x^beta * u = eta^k u * x^beta'; returns (k, beta') with x^beta' the image under u^-1."""
        key = (u, beta)
        r = self._act_xinv_cache.get(key)
        if r is None:
            e, s = self.winv(u)
            new = [0] * self.n
            k = 0
            for i, b in enumerate(beta):
                if b:
                    new[s[i]] = b
                    k -= b * e[s[i]]
            r = (k % self.m, tuple(new))
            self._act_xinv_cache[key] = r
        return r

    def _commutators(self) -> list[list[list[tuple[MultiPoly, WElement]]]]:
        """comm[i][j] = [y_i, x_j] as (coefficient, group element) pairs."""
        m, n = self.m, self.n
        kappa, t = self.kappa, self.t
        comm = []
        for i in range(n):
            row = []
            for j in range(n):
                acc: dict[WElement, MultiPoly] = {}

                def put(w, coeff):
                    prev = acc.get(w)
                    acc[w] = coeff if prev is None else prev + coeff

                if i == j:
                    put(self._id, t)
                    for k in range(n):
                        if k == i:
                            continue
                        s = G.transposition(n, i, k)
                        for l in range(m):
                            w = self.wmul(s, G.torus(n, m, {i: -l, k: l}))
                            put(w, -kappa)
                    for l in range(1, m):
                        w = G.torus(n, m, {i: l})
                        put(w, -self.c(l) * (1 - self.eta_power(-l)))
                else:
                    s = G.transposition(n, i, j)
                    for l in range(m):
                        w = self.wmul(s, G.torus(n, m, {i: -l, j: l}))
                        put(w, kappa * self.eta_power(-l))
                row.append([(c, w) for w, c in acc.items() if not c.is_zero()])
            comm.append(row)
        return comm

    # -- core rewriting ----------------------------------------------------

    def _x_times_y(self, beta: tuple, j: int) -> dict:
        """Normal form of x^beta * y_j."""
        n = self.n
        ej = tuple(1 if k == j else 0 for k in range(n))
        out: dict = {(ej, self._id, beta): self._one_poly}
        # x^beta y_j = y_j x^beta - [y_j, x^beta], expanding the commutator as a derivation
        # over the ordered word x_0^beta_0 x_1^beta_1 ...
        for k in range(n):
            bk = beta[k]
            if not bk:
                continue
            for q in range(bk):
                prefix = beta[:k] + (q,) + self._zero_exp[k + 1:]
                suffix = self._zero_exp[:k] + (bk - q - 1,) + beta[k + 1:]
                for coeff, u in self._comm[j][k]:
                    sk, moved = self._act_xinv(u, prefix)
                    key = (self._zero_exp, u, _add(moved, suffix))
                    val = -(coeff * self._eta_pow[sk]) if sk else -coeff
                    prev = out.get(key)
                    out[key] = val if prev is None else prev + val
        return {k: v for k, v in out.items() if not v.is_zero()}

    def _xy(self, beta: tuple, gamma: tuple) -> dict:
        """Normal form of x^beta * y^gamma, memoized."""
        key = (beta, gamma)
        r = self._xy_cache.get(key)
        if r is not None:
            return r
        if not any(gamma):
            r = {(self._zero_exp, self._id, beta): self._one_poly}
        else:
            j = max(k for k in range(self.n) if gamma[k])
            rest = gamma[:j] + (gamma[j] - 1,) + gamma[j + 1:]
            if not any(rest):
                r = self._x_times_y(beta, j)
            else:
                out: dict = {}
                for (a2, v, b2), c in self._xy(beta, rest).items():
                    self._accumulate(out, a2, v, self._xy(b2, tuple(1 if k == j else 0 for k in range(self.n))),
                                     self._id, self._zero_exp, c)
                r = {k: v for k, v in out.items() if not v.is_zero()}
        self._xy_cache[key] = r
        return r

    def _accumulate(self, out: dict, alpha: tuple, w: WElement, middle: Mapping, u: WElement,
                    delta: tuple, coeff: MultiPoly):
        """out += coeff * y^alpha w * middle * u x^delta, where middle is in normal form."""
        for (a2, v, b2), c in middle.items():
            k1, a_new = self._act_y(w, a2)
            k2, b_new = self._act_xinv(u, b2)
            wvu = self.wmul(self.wmul(w, v), u)
            key = (_add(alpha, a_new), wvu, _add(b_new, delta))
            val = coeff * c
            k = (k1 + k2) % self.m
            if k:
                val = val * self._eta_pow[k]
            prev = out.get(key)
            out[key] = val if prev is None else prev + val

    def _mul_terms(self, left: Mapping, right: Mapping) -> dict:
        out: dict = {}
        for (alpha, w, beta), c1 in left.items():
            for (gamma, u, delta), c2 in right.items():
                self._accumulate(out, alpha, w, self._xy(beta, gamma), u, delta, c1 * c2)
            if len(out) > MAX_TERMS:
                raise ResourceLimitError(f"product exceeds {MAX_TERMS} PBW terms")
        return {k: v for k, v in out.items() if not v.is_zero()}

    # -- element constructors ---------------------------------------------

    def element(self, terms: Mapping) -> "Element":
        return Element(self, {k: v for k, v in terms.items() if not v.is_zero()})

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return self.from_scalar(1)

    def from_scalar(self, value) -> "Element":
        c = self.scalar(value)
        if c.is_zero():
            return self.zero()
        return Element(self, {(self._zero_exp, self._id, self._zero_exp): c})

    def _check_index(self, i: int):
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} outside 1..{self.n}")

    def x(self, i: int) -> "Element":
        self._check_index(i)
        e = tuple(1 if k == i - 1 else 0 for k in range(self.n))
        return Element(self, {(self._zero_exp, self._id, e): self._one_poly})

    def y(self, i: int) -> "Element":
        self._check_index(i)
        e = tuple(1 if k == i - 1 else 0 for k in range(self.n))
        return Element(self, {(e, self._id, self._zero_exp): self._one_poly})

    def group_element(self, w: WElement) -> "Element":
        return Element(self, {(self._zero_exp, WElement(tuple(v % self.m for v in w.e), tuple(w.sigma)),
                               self._zero_exp): self._one_poly})

    def g(self, i: int, l: int = 1) -> "Element":
        """g_i^l."""
        self._check_index(i)
        return self.group_element(G.torus(self.n, self.m, {i - 1: l}))

    def s(self, i: int, j: int | None = None) -> "Element":
        """The transposition s_ij, or the simple reflection s_i = s_{i,i+1} when j is omitted."""
        if j is None:
            j = i + 1
        self._check_index(i)
        self._check_index(j)
        if i == j:
            raise ValueError("a transposition needs two distinct indices")
        return self.group_element(G.transposition(self.n, i - 1, j - 1))

    def word(self, *factors) -> "Element":
        """Normal form of a formal product of generators.

        Factors may be elements, group elements, scalars, or tokens such as
        ``"x1"``, ``"y2"``, ``"g1"``, ``"g2^-1"``, ``"s12"``, ``"s1"``, ``"t"``, ``"kappa"``, ``"c1"``.
        """
        result = self.one()
        for f in factors:
            result = result * self._factor(f)
        return result

    def _factor(self, f) -> "Element":
        if isinstance(f, Element):
            return f
        if isinstance(f, WElement):
            return self.group_element(f)
        if isinstance(f, str):
            return self._token(f)
        return self.from_scalar(f)

    def _token(self, tok: str) -> "Element":
        tok = tok.strip()
        if tok in self.variables:
            return self.from_scalar(self.param(tok))
        head, _, power = tok.partition("^")
        kind, digits = head[0], head[1:]
        if kind in "xy" and digits.isdigit() and not power:
            return self.x(int(digits)) if kind == "x" else self.y(int(digits))
        if kind == "g" and digits.isdigit():
            return self.g(int(digits), int(power) if power else 1)
        if kind == "s" and digits.isdigit() and not power:
            if len(digits) == 2 and self.n >= 10:
                raise ValueError(f"ambiguous transposition token {tok!r} for n >= 10")
            if len(digits) == 1:
                return self.s(int(digits))
            return self.s(int(digits[0]), int(digits[1:]))
        raise ValueError(f"unknown generator token {tok!r}")

    normal_form = word


ScalarLike = Union[int, Fraction, Cyclotomic, MultiPoly]


class Element:
    """A finite R-linear combination of PBW monomials y^alpha w x^beta."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: CherednikAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.algebra is not self.algebra:
                raise ValueError("elements of different algebras")
            return other
        return self.algebra.from_scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            prev = out.get(k)
            if prev is None:
                out[k] = v
            else:
                s = prev + v
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
        return Element(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Element):
            c = self.algebra.scalar(other)
            if c.is_zero():
                return self.algebra.zero()
            return Element(self.algebra, {k: v * c for k, v in self.terms.items()})
        other = self._coerce(other)
        return Element(self.algebra, self.algebra._mul_terms(self.terms, other.terms))

    def __rmul__(self, other):
        # scalars are central
        return self * other

    def __pow__(self, k: int):
        result = self.algebra.one()
        for _ in range(k):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra is other.algebra and self.terms == other.terms
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    __hash__ = None

    def __len__(self) -> int:
        return len(self.terms)

    def coefficients(self) -> Iterable[MultiPoly]:
        return self.terms.values()

    def coefficient(self, alpha: tuple, w: WElement, beta: tuple) -> MultiPoly:
        return self.terms.get((tuple(alpha), w, tuple(beta)),
                              MultiPoly.constant(self.algebra.variables, 0))

    def is_t_divisible(self) -> bool:
        return all(c.is_divisible_by("t") for c in self.terms.values())

    def max_degree(self) -> int:
        return max((sum(a) + sum(b) for a, _, b in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (alpha, w, beta) in sorted(self.terms, key=lambda k: (-sum(k[0]) - sum(k[2]), k)):
            c = self.terms[(alpha, w, beta)]
            mono = []
            for i, a in enumerate(alpha, start=1):
                if a:
                    mono.append(f"y{i}" + (f"^{a}" if a > 1 else ""))
            mono.append(_w_str(w))
            for i, b in enumerate(beta, start=1):
                if b:
                    mono.append(f"x{i}" + (f"^{b}" if b > 1 else ""))
            mono = [p for p in mono if p]
            parts.append(f"({c})" + ("*" + "*".join(mono) if mono else ""))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Element({self})"


def commutator(a: Element, b: Element) -> Element:
    return a * b - b * a


def _w_str(w: WElement) -> str:
    e, s = w
    parts = [f"g{i}" + (f"^{k}" if k != 1 else "") for i, k in enumerate(e, start=1) if k]
    if any(s[k] != k for k in range(len(s))):
        parts.append("[" + ",".join(str(v + 1) for v in s) + "]")
    return "*".join(parts)
