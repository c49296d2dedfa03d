"""Parameters (kappa, c_1..c_{m-1}) and the derived (h, H_0..H_{m-1}), a, C.

Numeric parameters live in one field Q(zeta_N) with m | N; eta = zeta_N^(N/m).
Generic parameters carry no values: kappa and H_1..H_{m-1} are free symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Sequence

from .exactnum import Cyclotomic, LinearExponent, parse_cyclotomic


class ParameterError(ValueError):
    """Invalid or inconsistent parameter input."""


NUMERIC = "numeric"
GENERIC = "generic"


@dataclass(frozen=True)
class ParamSpec:
    m: int
    mode: str = NUMERIC
    kappa: Cyclotomic | None = None
    c: tuple[Cyclotomic, ...] = ()
    zeta_order: int = 0

    def __post_init__(self):
        if self.m < 1:
            raise ParameterError(f"m must be positive, got {self.m}")
        order = self.zeta_order or self.m
        if order % self.m:
            raise ParameterError(f"zeta order {order} must be a multiple of m={self.m}")
        object.__setattr__(self, "zeta_order", order)
        if self.mode == GENERIC:
            if self.kappa is not None or self.c:
                raise ParameterError("generic mode takes no parameter values")
            return
        if self.mode != NUMERIC:
            raise ParameterError(f"unknown parameter mode {self.mode!r}")
        if self.kappa is None:
            raise ParameterError("numeric mode needs a value for kappa")
        if len(self.c) != self.m - 1:
            raise ParameterError(
                f"expected exactly m-1={self.m - 1} values of c, got {len(self.c)}"
            )
        try:
            kappa = Cyclotomic.coerce(self.kappa).embed(order)
            cs = tuple(Cyclotomic.coerce(v).embed(order) for v in self.c)
        except ValueError as exc:
            raise ParameterError(str(exc)) from None
        object.__setattr__(self, "kappa", kappa)
        object.__setattr__(self, "c", cs)

    @classmethod
    def numeric(cls, m: int, kappa, c: Sequence = (), zeta_order: int = 0) -> "ParamSpec":
        return cls(m, NUMERIC, Cyclotomic.coerce(kappa), tuple(Cyclotomic.coerce(v) for v in c), zeta_order)

    @classmethod
    def generic(cls, m: int) -> "ParamSpec":
        return cls(m, GENERIC)

    @classmethod
    def parse(cls, m: int, kappa: str, c: str | None, zeta_order: int = 0) -> "ParamSpec":
        """Build a numeric spec from cyclotomic literals (``c`` comma separated)."""
        order = zeta_order or m
        if order < 1 or order % m:
            raise ParameterError(f"zeta order {order} must be a positive multiple of m={m}")
        try:
            k = parse_cyclotomic(kappa, order)
            items = [] if c is None or c.strip() == "" else c.split(",")
            cs = tuple(parse_cyclotomic(v, order) for v in items)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"bad parameter literal: {exc}") from None
        return cls(m, NUMERIC, k, cs, order)

    @property
    def is_generic(self) -> bool:
        return self.mode == GENERIC

    @property
    def eta(self) -> Cyclotomic:
        return Cyclotomic.zeta(self.zeta_order, self.zeta_order // self.m)

    def to_json(self) -> dict:
        if self.is_generic:
            return {"m": self.m, "mode": GENERIC}
        return {
            "m": self.m,
            "mode": NUMERIC,
            "zeta_order": self.zeta_order,
            "kappa": str(self.kappa),
            "c": [str(v) for v in self.c],
        }


@dataclass(frozen=True)
class DerivedParams:
    H: tuple[Cyclotomic, ...]
    a: tuple[Cyclotomic, ...]
    C: Cyclotomic
    h: Cyclotomic

    def to_json(self) -> dict:
        return {
            "H": [str(v) for v in self.H],
            "a": [str(v) for v in self.a],
            "C": str(self.C),
            "h": str(self.h),
        }


def _derived_from_H(H: Sequence[Cyclotomic], kappa: Cyclotomic) -> DerivedParams:
    m = len(H)
    order = H[0].order
    a = [Cyclotomic.zero(order)]
    for j in range(1, m):
        a.append(a[-1] + H[j])
    C = Cyclotomic.zero(order)
    for j in range(1, m):
        C = C + H[j] * (j - m)
    return DerivedParams(tuple(H), tuple(a), C, -kappa)


def c_to_H(spec: ParamSpec) -> DerivedParams:
    """Solve -c_l(1 - eta^-l) = sum_j eta^(-lj) H_j with sum_j H_j = 0 by Fourier inversion."""
    if spec.is_generic:
        raise ParameterError("c_to_H needs numeric parameters")
    m, order, eta = spec.m, spec.zeta_order, spec.eta
    zero = Cyclotomic.zero(order)
    b = [zero] + [-spec.c[l - 1] * (1 - eta ** (-l)) for l in range(1, m)]
    H = []
    for j in range(m):
        total = zero
        for l in range(m):
            total = total + eta ** (l * j) * b[l]
        H.append(total / m)
    return _derived_from_H(H, spec.kappa)


def _common_order(values: Sequence, m: int) -> int:
    return lcm(m, *(Cyclotomic.coerce(v).order for v in values))


def H_to_c(H: Sequence, zeta_order: int = 0) -> tuple[Cyclotomic, ...]:
    """Inverse of :func:`c_to_H` on the H-vector: c_l = -(sum_j eta^(-lj) H_j) / (1 - eta^-l)."""
    m = len(H)
    if m < 2:
        raise ParameterError("H_to_c needs m >= 2")
    order = zeta_order or _common_order(H, m)
    if order % m:
        raise ParameterError(f"zeta order {order} must be a multiple of m={m}")
    Hs = [Cyclotomic.coerce(v).embed(order) for v in H]
    total = Cyclotomic.zero(order)
    for v in Hs:
        total = total + v
    if not total.is_zero():
        raise ParameterError(f"H must sum to zero, got {total}")
    eta = Cyclotomic.zeta(order, order // m)
    out = []
    for l in range(1, m):
        s = Cyclotomic.zero(order)
        for j, v in enumerate(Hs):
            s = s + eta ** (-l * j) * v
        out.append(-s / (1 - eta ** (-l)))
    return tuple(out)


def derived_from_H(H: Sequence, kappa, zeta_order: int = 0) -> DerivedParams:
    order = zeta_order or _common_order(H, len(H))
    return _derived_from_H([Cyclotomic.coerce(v).embed(order) for v in H], Cyclotomic.coerce(kappa, order))


def check_beta_identity(spec: ParamSpec, beta: int) -> bool:
    """Exact check of -sum_l c_l eta^(beta l) == C + m a_beta."""
    if not 0 <= beta < spec.m:
        raise ParameterError(f"beta must lie in [0, {spec.m - 1}], got {beta}")
    d = c_to_H(spec)
    eta = spec.eta
    lhs = Cyclotomic.zero(spec.zeta_order)
    for l in range(1, spec.m):
        lhs = lhs - spec.c[l - 1] * eta ** (beta * l)
    return lhs == d.C + d.a[beta] * spec.m


def scale_params(spec: ParamSpec, factor) -> ParamSpec:
    """Multiply kappa and every c_l by a nonzero scalar."""
    if spec.is_generic:
        raise ParameterError("scaling applies to numeric parameters")
    a = Cyclotomic.coerce(factor, spec.zeta_order) if not isinstance(factor, Cyclotomic) else factor
    if a.is_zero():
        raise ParameterError("scaling factor must be nonzero")
    return ParamSpec(spec.m, NUMERIC, spec.kappa * a, tuple(v * a for v in spec.c), spec.zeta_order)


def is_admissible(spec: ParamSpec, d: int) -> bool:
    """c_l = 0 whenever d does not divide l (parameters coming from G(m,d,n))."""
    if spec.is_generic:
        return True
    return all(v.is_zero() for l, v in enumerate(spec.c, start=1) if l % d)


def generic_exponent(beta: int, ct: int, m: int) -> LinearExponent:
    """The form a_beta - kappa*ct = H_1 + ... + H_beta - ct*kappa."""
    if not 0 <= beta < m:
        raise ParameterError(f"beta must lie in [0, {m - 1}], got {beta}")
    return LinearExponent(-ct, tuple(1 if j <= beta else 0 for j in range(1, m)))
