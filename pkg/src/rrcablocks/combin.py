"""Partitions, multipartitions, contents, residues, standard tableaux and the
cyclic rotation action used for G(m,d,n) labels.

Rows and columns are 1-based, so the corner box has content 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing: {list(parts)}")
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive: {list(parts)}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def boxes(self) -> Iterator[tuple[int, int]]:
        for row, length in enumerate(self, start=1):
            for col in range(1, length + 1):
                yield row, col

    def order_key(self) -> tuple:
        """Length first, then parts."""
        return (len(self), tuple(self))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, largest first part first (reverse lexicographic)."""

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


@dataclass(frozen=True)
class Box:
    component: int
    row: int
    col: int


def content(b: Box) -> int:
    return b.col - b.row


def residue(lam: Sequence[int]) -> dict[int, int]:
    """Content multiplicities of ``lam``: the coefficients of sum_b x^ct(b)."""
    res: dict[int, int] = {}
    for row, col in Partition(lam).boxes():
        res[col - row] = res.get(col - row, 0) + 1
    return dict(sorted(res.items()))


@dataclass(frozen=True)
class Multipartition:
    components: tuple[Partition, ...]

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in self.components)
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *components: Sequence[int]) -> "Multipartition":
        return cls(tuple(Partition(c) for c in components))

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def n(self) -> int:
        return sum(c.size for c in self.components)

    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.components)

    def boxes(self) -> Iterator[Box]:
        for k, comp in enumerate(self.components):
            for row, col in comp.boxes():
                yield Box(k, row, col)

    def order_key(self) -> tuple:
        return tuple(c.order_key() for c in self.components)

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.components]

    def __str__(self) -> str:
        return "(" + ", ".join(
            "(" + ",".join(str(p) for p in c) + ")" if c else "∅" for c in self.components
        ) + ")"

    def __repr__(self) -> str:
        return f"Multipartition({self.to_json()})"


def parse_multipartition(text: str, m: int | None = None) -> Multipartition:
    """Parse a JSON array of arrays, e.g. ``"[[3,3],[2,1,1]]"``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed multipartition JSON {text!r}: {exc.msg}") from None
    if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
        raise ValueError(f"multipartition must be a JSON array of arrays, got {text!r}")
    for comp in data:
        if not all(isinstance(p, int) and not isinstance(p, bool) for p in comp):
            raise ValueError(f"multipartition parts must be integers, got {text!r}")
    if m is not None and len(data) != m:
        raise ValueError(f"multipartition has {len(data)} components but m={m}")
    return Multipartition(tuple(Partition(c) for c in data))


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` into ``k`` parts, first part largest first."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_multipartitions(m: int, n: int) -> tuple[Multipartition, ...]:
    """Every m-multipartition of n exactly once, in a fixed order."""
    if m < 1 or n < 0:
        raise ValueError(f"need m >= 1 and n >= 0, got m={m}, n={n}")
    out = []
    for sizes in compositions(n, m):
        out.extend(_products([partitions(s) for s in sizes]))
    return tuple(out)


def _products(choices: list[tuple[Partition, ...]]) -> Iterator[Multipartition]:
    if not choices:
        return
    idx = [0] * len(choices)
    while True:
        yield Multipartition(tuple(c[i] for c, i in zip(choices, idx)))
        k = len(choices) - 1
        while k >= 0:
            idx[k] += 1
            if idx[k] < len(choices[k]):
                break
            idx[k] = 0
            k -= 1
        if k < 0:
            return


# ----------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True)
class StandardTableau:
    """``placement[i-1]`` is the box holding entry ``i``."""

    shape: Multipartition
    placement: tuple[Box, ...]

    @property
    def n(self) -> int:
        return len(self.placement)

    def box(self, i: int) -> Box:
        if not 1 <= i <= self.n:
            raise IndexError(f"tableau entry {i} out of range 1..{self.n}")
        return self.placement[i - 1]

    def rows(self) -> list[list[list[int]]]:
        """Entries laid out per component and row."""
        grid = [[[0] * length for length in comp] for comp in self.shape.components]
        for i, b in enumerate(self.placement, start=1):
            grid[b.component][b.row - 1][b.col - 1] = i
        return grid

    def is_standard(self) -> bool:
        grid = self.rows()
        for comp in grid:
            for r, row in enumerate(comp):
                for c, val in enumerate(row):
                    if c + 1 < len(row) and row[c + 1] <= val:
                        return False
                    if r + 1 < len(comp) and c < len(comp[r + 1]) and comp[r + 1][c] <= val:
                        return False
        entries = sorted(v for comp in grid for row in comp for v in row)
        return entries == list(range(1, self.n + 1))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Sequence[int]]]) -> "StandardTableau":
        shape = Multipartition(tuple(Partition([len(r) for r in comp]) for comp in rows))
        where = {}
        for k, comp in enumerate(rows):
            for r, row in enumerate(comp, start=1):
                for c, val in enumerate(row, start=1):
                    where[val] = Box(k, r, c)
        if sorted(where) != list(range(1, shape.n + 1)):
            raise ValueError("tableau entries must be exactly 1..n")
        tab = cls(shape, tuple(where[i] for i in range(1, shape.n + 1)))
        if not tab.is_standard():
            raise ValueError("tableau rows and columns must increase")
        return tab


def removable_corners(lam: Multipartition) -> list[tuple[int, int]]:
    """(component, row) of every removable box, in increasing order."""
    out = []
    for k, comp in enumerate(lam.components):
        for r, length in enumerate(comp):
            nxt = comp[r + 1] if r + 1 < len(comp) else 0
            if length > nxt:
                out.append((k, r + 1))
    return out


def _remove(lam: Multipartition, k: int, row: int) -> Multipartition:
    comps = list(lam.components)
    parts = list(comps[k])
    parts[row - 1] -= 1
    comps[k] = Partition([p for p in parts if p])
    return Multipartition(tuple(comps))


@lru_cache(maxsize=4096)
def _tableaux(lam: Multipartition) -> tuple[tuple[Box, ...], ...]:
    n = lam.n
    if n == 0:
        return ((),)
    out = []
    for k, row in removable_corners(lam):
        col = lam.components[k][row - 1]
        smaller = _remove(lam, k, row)
        for prefix in _tableaux(smaller):
            out.append(prefix + (Box(k, row, col),))
    return tuple(out)


def enumerate_standard_tableaux(lam: Multipartition) -> list[StandardTableau]:
    """All standard tableaux on ``lam``, ordered by the (component, row) of n, n-1, ..."""
    return [StandardTableau(lam, placement) for placement in _tableaux(lam)]


@lru_cache(maxsize=None)
def count_standard_tableaux(lam: Multipartition) -> int:
    if lam.n == 0:
        return 1
    return sum(count_standard_tableaux(_remove(lam, k, r)) for k, r in removable_corners(lam))


def tableau_box_data(tab: StandardTableau, i: int) -> tuple[int, int]:
    """(content, component) of the box holding entry ``i``."""
    b = tab.box(i)
    return content(b), b.component


# ----------------------------------------------------------------------------
# the C_d rotation action


def _check_divisor(m: int, d: int):
    if d < 1 or m % d:
        raise ValueError(f"d={d} does not divide m={m}")


def delta_action(lam: Multipartition, d: int) -> Multipartition:
    """Rotate components right by p = m/d positions."""
    m = lam.m
    _check_divisor(m, d)
    p = m // d
    comps = lam.components
    return Multipartition(comps[m - p:] + comps[: m - p])


def orbit_and_stabilizer(lam: Multipartition, d: int) -> tuple[frozenset[Multipartition], int]:
    _check_divisor(lam.m, d)
    orbit = [lam]
    nxt = delta_action(lam, d)
    while nxt != lam:
        orbit.append(nxt)
        nxt = delta_action(nxt, d)
    return frozenset(orbit), d // len(orbit)


def orbit_representative(lam: Multipartition, d: int) -> Multipartition:
    orbit, _ = orbit_and_stabilizer(lam, d)
    return min(orbit, key=Multipartition.order_key)


@dataclass(frozen=True)
class OrbitLabel:
    """An irreducible G(m,d,n) label: an orbit representative and a stabilizer index."""

    representative: Multipartition
    epsilon: int

    def to_json(self) -> dict:
        return {"orbit_rep": self.representative.to_json(), "epsilon": self.epsilon}

    def __str__(self) -> str:
        return f"({{{self.representative}}}, {self.epsilon})"


def orbit_labels(m: int, n: int, d: int) -> list[OrbitLabel]:
    """All (orbit, epsilon) labels, in enumeration order of the representatives."""
    _check_divisor(m, d)
    labels = []
    for lam in enumerate_multipartitions(m, n):
        orbit, stab = orbit_and_stabilizer(lam, d)
        if lam != min(orbit, key=Multipartition.order_key):
            continue
        labels.extend(OrbitLabel(lam, eps) for eps in range(stab))
    return labels


def is_d_stuttering(lam: Multipartition, d: int) -> bool:
    m = lam.m
    _check_divisor(m, d)
    p = m // d
    blocks = [lam.components[i * p:(i + 1) * p] for i in range(d)]
    return all(b == blocks[0] for b in blocks)
