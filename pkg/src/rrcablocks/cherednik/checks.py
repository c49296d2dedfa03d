"""Identity suites evaluated as exact normal-form equalities in H_R.

Each suite returns a :class:`Report`; a failing identity is a report entry,
never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable

from .algebra import CherednikAlgebra, Element, commutator
from .elements import (
    dunkl_opdam_z,
    dunkl_opdam_z_alt,
    euler_element,
    gamma,
    gamma1,
    psi,
    sym_poly_S,
    xi,
)
from .group import WElement

SUITES = ("hecke", "gamma", "zcomm", "plemmas", "central", "euler", "psi", "do-equality")


@dataclass
class Report:
    suite: str
    cases: list[tuple[str, bool]] = field(default_factory=list)

    def add(self, case_id: str, ok: bool):
        self.cases.append((case_id, bool(ok)))

    def extend(self, other: "Report"):
        self.cases.extend(other.cases)

    @property
    def all_pass(self) -> bool:
        return all(ok for _, ok in self.cases)

    def failures(self) -> list[str]:
        return [cid for cid, ok in self.cases if not ok]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "cases": [{"id": cid, "pass": ok} for cid, ok in self.cases],
            "all_pass": self.all_pass,
        }


def _sum(alg: CherednikAlgebra, items) -> Element:
    total = alg.zero()
    for it in items:
        total = total + it
    return total


class _Named:
    """Cached z_i and gamma_j for one algebra, 1-based."""

    def __init__(self, alg: CherednikAlgebra):
        self.alg = alg
        self.z = {i: dunkl_opdam_z(alg, i) for i in range(1, alg.n + 1)}

    def g(self, j: int) -> Element:
        return gamma1(self.alg, j)

    def gsum(self, lo: int, hi: int) -> Element:
        """sum of gamma_t for lo < t <= hi."""
        return _sum(self.alg, (self.g(t) for t in range(max(lo + 1, 2), hi + 1)))


# ----------------------------------------------------------------------------
# relations among z, s, g


def check_hecke(alg: CherednikAlgebra) -> Report:
    rep = Report("hecke")
    N = _Named(alg)
    n = alg.n
    z = N.z
    for i, j in combinations(range(1, n + 1), 2):
        rep.add(f"[z{i},z{j}]=0", commutator(z[i], z[j]).is_zero())
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            for l in range(1, alg.m):
                g = alg.g(k, l)
                rep.add(f"z{i}*g{k}^{l}=g{k}^{l}*z{i}", z[i] * g == g * z[i])
    for i in range(1, n):
        s = alg.s(i)
        rep.add(f"z{i}*s{i}=s{i}*z{i + 1}-kappa*xi{i}{i + 1}",
                z[i] * s == s * z[i + 1] - xi(alg, i, i + 1) * alg.kappa)
    for i in range(1, n + 1):
        for j in range(1, n):
            if i in (j, j + 1):
                continue
            s = alg.s(j)
            rep.add(f"z{i}*s{j}=s{j}*z{i}", z[i] * s == s * z[i])
    return rep


def check_do_equality(alg: CherednikAlgebra) -> Report:
    rep = Report("do-equality")
    for i in range(1, alg.n + 1):
        rep.add(f"z{i}:yx-form=xy-form", dunkl_opdam_z(alg, i) == dunkl_opdam_z_alt(alg, i))
    return rep


def check_euler(alg: CherednikAlgebra) -> Report:
    rep = Report("euler")
    total = _sum(alg, (dunkl_opdam_z(alg, i) for i in range(1, alg.n + 1)))
    rep.add("sum z_i = eu", total == euler_element(alg))
    return rep


# ----------------------------------------------------------------------------
# gamma identities


def check_gamma(alg: CherednikAlgebra) -> Report:
    rep = Report("gamma")
    n = alg.n
    N = _Named(alg)
    z, g = N.z, N.g
    for i, j in combinations(range(1, n + 1), 2):
        rep.add(f"gamma{i}{j}=gamma{j}{i}", gamma(alg, i, j) == gamma(alg, j, i))
    for perm in permutations(range(n)):
        sigma = WElement((0,) * n, tuple(perm))
        se = alg.group_element(sigma)
        sinv = alg.group_element(alg.winv(sigma))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                lhs = se * gamma(alg, i, j) * sinv
                rhs = gamma(alg, perm[i - 1] + 1, perm[j - 1] + 1)
                rep.add(f"sigma{''.join(str(p + 1) for p in perm)}*gamma{i}{j}*sigma^-1", lhs == rhs)

    # gamma_u z_v, 1 < u
    for u in range(2, n + 1):
        for v in range(1, n + 1):
            lhs = g(u) * z[v]
            if v == 1:
                rhs = z[u] * g(u) + _sum(alg, (g(u) * g(t) for t in range(2, u + 1)))
                case = "v=1"
            elif u < v:
                rhs = z[v] * g(u)
                case = "u<v"
            elif u == v:
                rhs = (z[1] - N.gsum(1, u)) * g(u)
                case = "u=v"
            else:
                rhs = z[v] * g(u) + g(v) * g(u) - g(u) * g(v)
                case = "u>v!=1"
            rep.add(f"gamma{u}*z{v} ({case})", lhs == rhs)

    # the two rearranged forms, u, v != 1
    for u in range(2, n + 1):
        for v in range(2, n + 1):
            zg = z[v] + g(v)
            if u < v:
                inner = z[v] + gamma(alg, u, v)
                five_rhs, six_rhs = inner * g(u), g(u) * inner
            elif u == v:
                inner = z[1] - N.gsum(1, u - 1)
                five_rhs, six_rhs = inner * g(u), g(u) * inner
            else:
                five_rhs, six_rhs = zg * g(u), g(u) * zg
            rep.add(f"gamma{u}*(z{v}+gamma{v})", g(u) * zg == five_rhs)
            rep.add(f"(z{v}+gamma{v})*gamma{u}", zg * g(u) == six_rhs)

    # consequence used in the key calculation; holds for 1 <= k < u (at k = u the left side is empty)
    for u in range(2, n + 1):
        for k in range(1, u):
            lhs = (z[u] + g(u)) * N.gsum(k, u)
            mid = g(u) * (z[1] - N.gsum(1, u - 1)) + (z[u] + g(u)) * N.gsum(k, u - 1)
            rhs = g(u) * z[1] - g(u) * N.gsum(1, k) + N.gsum(k, u - 1) * z[u]
            rep.add(f"useful u={u} k={k} (first)", lhs == mid)
            rep.add(f"useful u={u} k={k} (second)", lhs == rhs)
    return rep


# ----------------------------------------------------------------------------
# commutators with x_i, y_i


def check_zcomm(alg: CherednikAlgebra) -> Report:
    rep = Report("zcomm")
    n = alg.n
    N = _Named(alg)
    z = N.z
    t = alg.t
    for i in range(1, n + 1):
        xi_, yi = alg.x(i), alg.y(i)
        for j in range(1, n + 1):
            if i == j:
                rx = xi_ * (-t)
                ry = yi * t
                for k in range(1, i):
                    rx = rx - xi_ * gamma(alg, k, i)
                    ry = ry + gamma(alg, k, i) * yi
                for k in range(i + 1, n + 1):
                    rx = rx - gamma(alg, i, k) * xi_
                    ry = ry + yi * gamma(alg, i, k)
            elif i < j:
                rx = gamma(alg, i, j) * xi_
                ry = -(yi * gamma(alg, i, j))
            else:
                rx = xi_ * gamma(alg, i, j)
                ry = -(gamma(alg, i, j) * yi)
            rep.add(f"[x{i},z{j}]", commutator(xi_, z[j]) == rx)
            rep.add(f"[y{i},z{j}]", commutator(yi, z[j]) == ry)
    return rep


def check_relation_suite(m: int, n: int) -> Report:
    alg = CherednikAlgebra(m, n)
    rep = Report("relations")
    for fn in (check_hecke, check_gamma, check_zcomm):
        rep.extend(fn(alg))
    return rep


# ----------------------------------------------------------------------------
# P elements


class PElements:
    """P_J and P~_J for increasing J inside {2..n}."""

    def __init__(self, alg: CherednikAlgebra):
        self.alg = alg
        self.N = _Named(alg)
        self._cache: dict = {}

    def _build(self, J: tuple[int, ...], allow_empty_gamma: bool) -> Element:
        key = (J, allow_empty_gamma)
        if key in self._cache:
            return self._cache[key]
        alg = self.alg
        total = alg.zero()
        r = len(J)
        for size in range(r + 1):
            for L in combinations(J, size):
                if not L and not allow_empty_gamma:
                    continue
                K = [j for j in J if j not in L]
                term = alg.one()
                for k in K:
                    term = term * self.N.z[k]
                for l in L:
                    term = term * self.N.g(l)
                total = total + term
        self._cache[key] = total
        return total

    def P(self, J) -> Element:
        return self._build(tuple(J), False)

    def Ptilde(self, J) -> Element:
        return self._build(tuple(J), True)

    def zprod(self, J) -> Element:
        out = self.alg.one()
        for j in J:
            out = out * self.N.z[j]
        return out


def check_P_lemmas(m: int, n: int, r: int, k: int, alg: CherednikAlgebra | None = None) -> Report:
    if not 1 <= r <= n - 1:
        raise ValueError(f"need 1 <= r <= n-1, got r={r}, n={n}")
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    alg = alg or CherednikAlgebra(m, n)
    PE = PElements(alg)
    N = PE.N
    z, g = N.z, N.g
    x1 = alg.x(1)
    rep = Report("plemmas")
    for J in combinations(range(2, n + 1), r):
        tag = ",".join(map(str, J))
        P, Pt, zJ = PE.P(J), PE.Ptilde(J), PE.zprod(J)
        rep.add(f"P~[{tag}]=P[{tag}]+z..z", Pt == P + zJ)
        prod = alg.one()
        for j in J:
            prod = prod * (z[j] + g(j))
        rep.add(f"P~[{tag}]=prod(z+gamma)", Pt == prod)
        rest = J[1:]
        P_rest = PE.P(rest) if rest else alg.zero()
        rep.add(f"P[{tag}] recursion", P == (z[J[0]] + g(J[0])) * P_rest + g(J[0]) * PE.zprod(rest))
        rep.add(f"[x1,z[{tag}]]=P x1", commutator(x1, zJ) == P * x1)
        rep.add(f"x1 z[{tag}]=P~ x1", x1 * zJ == Pt * x1)

    # key calculation for (r, k)
    window = range(k + 1, n + 1)
    shift = z[1] - N.gsum(k, n)
    lhs = alg.zero()
    rhs = alg.zero()
    low = N.gsum(1, k)
    for J in combinations(window, r):
        lhs = lhs + shift * PE.Ptilde(J)
        rhs = rhs + z[1] * PE.zprod(J) + low * PE.P(J)
    for J in combinations(window, r + 1):
        rhs = rhs - PE.P(J)
    rep.add(f"key calculation r={r} k={k}", lhs == rhs)
    return rep


def check_all_P_lemmas(m: int, n: int) -> Report:
    alg = CherednikAlgebra(m, n)
    rep = Report("plemmas")
    for r in range(1, n):
        for k in range(1, n):
            rep.extend(check_P_lemmas(m, n, r, k, alg))
    return rep


# ----------------------------------------------------------------------------
# centrality


def check_centrality(r: int, m: int, n: int, perturb: Callable[[CherednikAlgebra, int, Element], Element] | None = None,
                     alg: CherednikAlgebra | None = None) -> Report:
    """[x_1, S_r] in t H_R, plus [w, S_r] = 0 for generators of W and t-divisibility
    of [x_i, S_r], [y_i, S_r] for every i.

    ``perturb(alg, i, z_i)`` replaces z_i, for negative controls.
    """
    alg = alg or CherednikAlgebra(m, n)
    zs = [dunkl_opdam_z(alg, i) for i in range(1, n + 1)]
    if perturb is not None:
        zs = [perturb(alg, i, z) for i, z in enumerate(zs, start=1)]
    S = sym_poly_S(alg, r, zs)
    rep = Report("central")
    rep.add(f"[x1,S{r}] in tH", commutator(alg.x(1), S).is_t_divisible())
    gens = [("g1", alg.g(1))] if m > 1 else []
    gens += [(f"s{i}", alg.s(i)) for i in range(1, n)]
    for name, w in gens:
        rep.add(f"[{name},S{r}]=0", commutator(w, S).is_zero())
    for i in range(1, n + 1):
        if i > 1:
            rep.add(f"[x{i},S{r}] in tH", commutator(alg.x(i), S).is_t_divisible())
        rep.add(f"[y{i},S{r}] in tH", commutator(alg.y(i), S).is_t_divisible())
    return rep


def check_all_centrality(m: int, n: int) -> Report:
    alg = CherednikAlgebra(m, n)
    rep = Report("central")
    for r in range(1, n + 1):
        rep.extend(check_centrality(r, m, n, alg=alg))
    return rep


def x1_perturbation(alg: CherednikAlgebra, i: int, z: Element) -> Element:
    """z_i -> z_i + x_1."""
    return z + alg.x(1)


# ----------------------------------------------------------------------------
# involution


def check_psi(alg: CherednikAlgebra) -> Report:
    rep = Report("psi")
    n, m = alg.n, alg.m
    gens = []
    for i in range(1, n + 1):
        gens += [(f"x{i}", alg.x(i)), (f"y{i}", alg.y(i)), (f"g{i}", alg.g(i))]
    gens += [(f"s{i}", alg.s(i)) for i in range(1, n)]
    gens += [("t", alg.from_scalar(alg.t)), ("kappa", alg.from_scalar(alg.kappa))]
    gens += [(f"c{l}", alg.from_scalar(alg.c(l))) for l in range(1, m)]
    for name, el in gens:
        rep.add(f"psi^2({name})={name}", psi(psi(el)) == el)
    for i in range(1, n + 1):
        rep.add(f"psi(z{i})=z{n - i + 1}", psi(dunkl_opdam_z(alg, i)) == dunkl_opdam_z(alg, n - i + 1))
    # psi respects the defining relations: apply psi to both sides of each relation
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lhs = psi(alg.y(i)) * psi(alg.x(j)) - psi(alg.x(j)) * psi(alg.y(i))
            rhs = psi(commutator(alg.y(i), alg.x(j)))
            rep.add(f"psi[y{i},x{j}]", lhs == rhs)
            if i < j:
                rep.add(f"psi[x{i},x{j}]", commutator(psi(alg.x(i)), psi(alg.x(j))).is_zero())
                rep.add(f"psi[y{i},y{j}]", commutator(psi(alg.y(i)), psi(alg.y(j))).is_zero())
    for i in range(1, n + 1):
        for name, w in [(f"g{k}", alg.g(k)) for k in range(1, n + 1)] + [(f"s{k}", alg.s(k)) for k in range(1, n)]:
            for vname, v in ((f"x{i}", alg.x(i)), (f"y{i}", alg.y(i))):
                # w v w^-1 is again linear in V or V*; psi must preserve the relation
                winv = _group_inverse(alg, w)
                lhs = psi(w) * psi(v) * psi(winv)
                rhs = psi(w * v * winv)
                rep.add(f"psi({name}{vname}{name}^-1)", lhs == rhs)
    return rep


def _group_inverse(alg: CherednikAlgebra, w: Element) -> Element:
    ((alpha, g, beta), _), = w.terms.items()
    return alg.group_element(alg.winv(g))


# ----------------------------------------------------------------------------


def run_suite(suite: str, m: int, n: int, r: int | None = None, k: int | None = None) -> Report:
    """Dispatch one named suite; ``r``/``k`` restrict centrality and P-lemma runs."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if suite == "plemmas":
        if r is None and k is None:
            return check_all_P_lemmas(m, n)
        alg = CherednikAlgebra(m, n)
        rep = Report("plemmas")
        for rr in ([r] if r is not None else range(1, n)):
            for kk in ([k] if k is not None else range(1, n)):
                rep.extend(check_P_lemmas(m, n, rr, kk, alg))
        return rep
    if suite == "central":
        if r is None:
            return check_all_centrality(m, n)
        return check_centrality(r, m, n)
    alg = CherednikAlgebra(m, n)
    fn = {
        "hecke": check_hecke,
        "gamma": check_gamma,
        "zcomm": check_zcomm,
        "euler": check_euler,
        "psi": check_psi,
        "do-equality": check_do_equality,
    }[suite]
    return fn(alg)
