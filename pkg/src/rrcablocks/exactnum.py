"""Exact arithmetic: rationals, cyclotomic fields Q(zeta_N), multivariate
polynomials over them, and integer linear forms for generic parameters.

Rationals are ``gmpy2.mpq`` values (always reduced, denominator positive).
A :class:`Cyclotomic` is stored in the power basis ``1, z, ..., z^(phi(N)-1)``
modulo the N-th cyclotomic polynomial, so equality is coefficient-wise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

from gmpy2 import mpq

Rational = type(mpq(0))

_ZERO = mpq(0)
_ONE = mpq(1)


def rational(value) -> Rational:
    """Coerce an int, mpq, Fraction or ``"p/q"`` string to a reduced rational."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, str):
        text = value.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            raise ValueError(f"not a rational literal: {value!r}")
        if "/" in text:
            num, den = text.split("/")
            if int(den) == 0:
                raise ZeroDivisionError(f"zero denominator in {value!r}")
            return mpq(int(num), int(den))
        return mpq(int(text))
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return mpq(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return mpq(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(q: Rational) -> str:
    return str(q)


# ----------------------------------------------------------------------------
# dense univariate polynomials over Q, low degree first


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return _trim(out)


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else _ZERO) - (b[i] if i < len(b) else _ZERO) for i in range(n)]
    return _trim(out)


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Long division of ``a`` by nonzero ``b``."""
    rem = [mpq(c) for c in a]
    _trim(rem)
    b = [mpq(c) for c in b]
    _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(rem) < len(b):
        return [], rem
    quot = [_ZERO] * (len(rem) - len(b) + 1)
    lead = b[-1]
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        factor = rem[-1] / lead
        quot[shift] = factor
        for i, bi in enumerate(b):
            rem[shift + i] -= factor * bi
        rem.pop()
        _trim(rem)
    return _trim(quot), rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Integer coefficients of the ``order``-th cyclotomic polynomial, low degree first.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if order < 1:
        raise ValueError(f"cyclotomic order must be positive, got {order}")
    numerator = [mpq(-1)] + [_ZERO] * (order - 1) + [_ONE]
    divisor = [_ONE]
    for d in range(1, order):
        if order % d == 0:
            divisor = _poly_mul(divisor, [mpq(c) for c in cyclotomic_polynomial(d)])
    quot, rem = _poly_divmod(numerator, divisor)
    assert not rem
    assert all(c.denominator == 1 for c in quot)
    return tuple(int(c) for c in quot)


def euler_phi(order: int) -> int:
    return len(cyclotomic_polynomial(order)) - 1


class _Field:
    """Precomputed reduction data for Q(zeta_N)."""

    __slots__ = ("order", "phi", "modulus", "power_table", "zero", "one")

    def __init__(self, order: int):
        self.order = order
        self.modulus = [mpq(c) for c in cyclotomic_polynomial(order)]
        self.phi = len(self.modulus) - 1
        # power_table[k] = canonical vector of zeta^k for 0 <= k < max(order, 2*phi)
        table = []
        vec = [_ZERO] * self.phi
        vec[0] = _ONE
        for _ in range(max(order, 2 * self.phi)):
            table.append(tuple(vec))
            # multiply by zeta
            top = vec[-1]
            vec = [_ZERO] + vec[:-1]
            if top:
                for i in range(self.phi):
                    vec[i] -= top * self.modulus[i]
        self.power_table = table
        self.zero = (_ZERO,) * self.phi
        self.one = table[0]

    def reduce(self, raw: Sequence) -> tuple:
        phi = self.phi
        out = list(raw[:phi]) + [_ZERO] * max(0, phi - len(raw))
        for k in range(phi, len(raw)):
            ck = raw[k]
            if ck:
                row = self.power_table[k % self.order] if k >= len(self.power_table) else self.power_table[k]
                for i in range(phi):
                    if row[i]:
                        out[i] += ck * row[i]
        return tuple(out)


@lru_cache(maxsize=None)
def _field(order: int) -> _Field:
    if order < 1:
        raise ValueError(f"cyclotomic order must be positive, got {order}")
    return _Field(order)


Scalar = Union[int, Rational, "Cyclotomic"]


class Cyclotomic:
    """An element of Q(zeta_N), immutable.

    Mixed arithmetic between different orders embeds both operands into
    Q(zeta_lcm).
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Iterable = ()):
        field = _field(order)
        raw = [rational(c) for c in coeffs]
        if len(raw) == field.phi:
            self.coeffs = tuple(raw)
        else:
            self.coeffs = field.reduce(raw)
        self.order = order
        self._hash = None

    @classmethod
    def _raw(cls, order: int, coeffs: tuple) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, order: int = 1) -> "Cyclotomic":
        return cls._raw(order, _field(order).zero)

    @classmethod
    def one(cls, order: int = 1) -> "Cyclotomic":
        return cls._raw(order, _field(order).one)

    @classmethod
    def from_rational(cls, value, order: int = 1) -> "Cyclotomic":
        field = _field(order)
        q = rational(value)
        return cls._raw(order, (q,) + field.zero[1:])

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "Cyclotomic":
        """``zeta_order ** power`` (negative powers allowed)."""
        field = _field(order)
        return cls._raw(order, field.power_table[power % order])

    @classmethod
    def coerce(cls, value, order: int | None = None) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            return value if order is None else value.embed(order)
        return cls.from_rational(value, 1 if order is None else order)

    # -- structure ----------------------------------------------------------

    @property
    def phi(self) -> int:
        return len(self.coeffs)

    def embed(self, order: int) -> "Cyclotomic":
        """Image under Q(zeta_self.order) -> Q(zeta_order); requires divisibility."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        step = order // self.order
        raw = [_ZERO] * (step * (self.phi - 1) + 1)
        for k, c in enumerate(self.coeffs):
            raw[k * step] = c
        return Cyclotomic._raw(order, _field(order).reduce(raw))

    def _align(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.from_rational(other, self.order)
            return self, other
        if other.order == self.order:
            return self, other
        common = self.order * other.order // gcd(self.order, other.order)
        return self.embed(common), other.embed(common)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Rational:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic._raw(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic._raw(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Cyclotomic):
            try:
                q = rational(other)
            except TypeError:
                return NotImplemented
            return Cyclotomic._raw(self.order, tuple(x * q for x in self.coeffs))
        a, b = self._align(other)
        phi = len(a.coeffs)
        if phi == 1:
            return Cyclotomic._raw(a.order, (a.coeffs[0] * b.coeffs[0],))
        raw = [_ZERO] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        raw[i + j] += x * y
        return Cyclotomic._raw(a.order, _field(a.order).reduce(raw))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if len(self.coeffs) == 1:
            return Cyclotomic._raw(self.order, (1 / self.coeffs[0],))
        field = _field(self.order)
        # invariant: s_i * a == r_i  (mod modulus)
        r0, r1 = list(field.modulus), _trim(list(self.coeffs))
        s0, s1 = [], [_ONE]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r1 is a nonzero constant since Phi_N is irreducible
        c = r1[0]
        return Cyclotomic._raw(self.order, field.reduce([x / c for x in s1]))

    def __truediv__(self, other):
        if not isinstance(other, Cyclotomic):
            q = rational(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic._raw(self.order, tuple(x / q for x in self.coeffs))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other, self.order) * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = Cyclotomic.one(self.order)
        e = abs(exponent)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return self.coeffs == other.coeffs
            a, b = self._align(other)
            return a.coeffs == b.coeffs
        try:
            q = rational(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.is_rational() and self.coeffs[0] == q

    def __hash__(self):
        if self._hash is None:
            # rational values hash like the rational so cross-order equality stays consistent
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.order, self.coeffs))
        return self._hash

    def sort_key(self) -> tuple:
        """Total order: lexicographic on the rational coefficient vector."""
        return (self.order, self.coeffs)

    # -- text / json --------------------------------------------------------

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, {str(self)!r})"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Cyclotomic":
        order = int(data["order"])
        coeffs = [rational(c) for c in data["coeffs"]]
        if len(coeffs) != euler_phi(order):
            raise ValueError(f"expected {euler_phi(order)} coefficients for order {order}")
        return cls._raw(order, tuple(coeffs))

    @classmethod
    def parse(cls, text: str, order: int) -> "Cyclotomic":
        """Parse a literal such as ``"1/2 - 3*z^2 + z"``; ``z`` denotes zeta_order."""
        return parse_cyclotomic(text, order)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(z)|(\^)|(\*)|([+-]))")


def parse_cyclotomic(text: str, order: int) -> Cyclotomic:
    """Parse ``term (('+'|'-') term)*`` with ``term := rational ['*' z ['^' int]] | z ['^' int]``.

    A leading sign is accepted.
    """
    tokens = []
    pos = 0
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty cyclotomic literal")
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ValueError(f"unexpected character {text[pos:].strip()[0]!r} in {text!r}")
        pos = mt.end()
        kind = mt.lastindex
        tokens.append((kind, mt.group(kind)))

    raw: dict[int, Rational] = {}
    i = 0

    def expect_exponent() -> int:
        nonlocal i
        if i < len(tokens) and tokens[i][0] == 3:
            i += 1
            sign = 1
            if i < len(tokens) and tokens[i][0] == 5:
                sign = -1 if tokens[i][1] == "-" else 1
                i += 1
            if i >= len(tokens) or tokens[i][0] != 1 or "/" in tokens[i][1]:
                raise ValueError(f"expected integer exponent in {text!r}")
            value = sign * int(tokens[i][1])
            i += 1
            return value
        return 1

    sign = 1
    if tokens and tokens[0][0] == 5:
        sign = -1 if tokens[0][1] == "-" else 1
        i = 1
    while True:
        if i >= len(tokens):
            raise ValueError(f"dangling operator in {text!r}")
        kind, value = tokens[i]
        if kind == 1:
            coeff = rational(value)
            i += 1
            power = 0
            if i < len(tokens) and tokens[i][0] == 4:
                i += 1
                if i >= len(tokens) or tokens[i][0] != 2:
                    raise ValueError(f"expected 'z' after '*' in {text!r}")
                i += 1
                power = expect_exponent()
        elif kind == 2:
            coeff = _ONE
            i += 1
            power = expect_exponent()
        else:
            raise ValueError(f"expected a term in {text!r}")
        power %= order
        raw[power] = raw.get(power, _ZERO) + sign * coeff
        if i >= len(tokens):
            break
        if tokens[i][0] != 5:
            raise ValueError(f"expected '+' or '-' in {text!r}")
        sign = -1 if tokens[i][1] == "-" else 1
        i += 1
    vec = [_ZERO] * (max(raw) + 1)
    for k, c in raw.items():
        vec[k] = c
    return Cyclotomic(order, vec)


def cyclo_canonicalize(raw: Sequence, order: int) -> Cyclotomic:
    """Reduce ``sum raw[k] * zeta^k`` modulo Phi_order."""
    return Cyclotomic(order, [rational(c) for c in raw])


def cyclo_invert(a: Cyclotomic) -> Cyclotomic:
    return a.inverse()


# ----------------------------------------------------------------------------
# multivariate polynomials


class MultiPoly:
    """Polynomial in named commuting variables with :class:`Cyclotomic` coefficients.

    ``terms`` maps exponent tuples to nonzero coefficients. Values are treated
    as immutable; arithmetic returns new objects.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Cyclotomic] | None = None):
        self.variables = tuple(variables)
        clean = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != len(self.variables):
                    raise ValueError("exponent vector length does not match variables")
                c = Cyclotomic.coerce(c)
                if not c.is_zero():
                    clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "MultiPoly":
        obj = object.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, variables: Sequence[str], value) -> "MultiPoly":
        variables = tuple(variables)
        c = Cyclotomic.coerce(value)
        if c.is_zero():
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str, coeff=1) -> "MultiPoly":
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if sum(exps) != 1:
            raise KeyError(f"unknown variable {name!r}")
        c = Cyclotomic.coerce(coeff)
        return cls._raw(variables, {exps: c} if not c.is_zero() else {})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: "MultiPoly"):
        if other.variables != self.variables:
            raise ValueError("polynomials over different variable lists")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.variables, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            prev = out.get(e)
            if prev is None:
                out[e] = c
            else:
                s = prev + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return MultiPoly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = Cyclotomic.coerce(other)
            if c.is_zero():
                return MultiPoly._raw(self.variables, {})
            return MultiPoly._raw(self.variables, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                prev = out.get(e)
                out[e] = prod if prev is None else prev + prod
        return MultiPoly._raw(self.variables, {e: c for e, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        try:
            return self == MultiPoly.constant(self.variables, other)
        except TypeError:
            return NotImplemented

    __hash__ = None

    def evaluate(self, values: Mapping[str, Scalar]) -> Cyclotomic:
        """Substitute a value for every variable."""
        point = [Cyclotomic.coerce(values[v]) for v in self.variables]
        total = Cyclotomic.zero()
        for exps, c in self.terms.items():
            term = c
            for base, k in zip(point, exps):
                if k:
                    term = term * base**k
            total = total + term
        return total

    def substitute_scaled(self, mapping: Mapping[str, tuple[Scalar, str]]) -> "MultiPoly":
        """Apply ``v -> scalar * w`` for each listed variable (others fixed)."""
        index = {v: i for i, v in enumerate(self.variables)}
        rules = []
        for i, v in enumerate(self.variables):
            if v in mapping:
                scalar, target = mapping[v]
                rules.append((Cyclotomic.coerce(scalar), index[target]))
            else:
                rules.append((None, i))
        out: dict = {}
        for exps, c in self.terms.items():
            new = [0] * len(exps)
            coeff = c
            for i, k in enumerate(exps):
                if not k:
                    continue
                scalar, j = rules[i]
                new[j] += k
                if scalar is not None:
                    coeff = coeff * scalar**k
            key = tuple(new)
            prev = out.get(key)
            out[key] = coeff if prev is None else prev + coeff
        return MultiPoly._raw(self.variables, {e: c for e, c in out.items() if not c.is_zero()})

    def is_divisible_by(self, name: str) -> bool:
        k = self.variables.index(name)
        return all(e[k] >= 1 for e in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, exps) if k
            )
            cs = str(c)
            if not mono:
                pieces.append(cs)
            elif cs == "1":
                pieces.append(mono)
            elif cs == "-1":
                pieces.append("-" + mono)
            else:
                pieces.append(f"({cs})*{mono}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"


def poly_is_t_divisible(p: MultiPoly, t: str = "t") -> bool:
    """True iff every term of ``p`` carries a positive power of ``t``."""
    return p.is_divisible_by(t)


# ----------------------------------------------------------------------------
# generic-mode exponents


@dataclass(frozen=True, order=True)
class LinearExponent:
    """The formal linear form ``kappa_coeff * kappa + sum_j h_coeffs[j-1] * H_j``."""

    kappa_coeff: int
    h_coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "h_coeffs", tuple(int(c) for c in self.h_coeffs))

    def __str__(self) -> str:
        parts = []
        for j, c in enumerate(self.h_coeffs, start=1):
            if c:
                parts.append(_signed(c, f"H{j}"))
        if self.kappa_coeff:
            parts.append(_signed(self.kappa_coeff, "kappa"))
        if not parts:
            return "0"
        text = parts[0].lstrip("+")
        for p in parts[1:]:
            text += " " + p[0] + " " + p[1:]
        return text

    def to_json(self) -> dict:
        return {"kappa": self.kappa_coeff, "H": list(self.h_coeffs)}

    @classmethod
    def from_json(cls, data: Mapping) -> "LinearExponent":
        return cls(int(data["kappa"]), tuple(int(c) for c in data["H"]))


def _signed(c: int, name: str) -> str:
    mag = abs(c)
    body = name if mag == 1 else f"{mag}*{name}"
    return ("-" if c < 0 else "+") + body
