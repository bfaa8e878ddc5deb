"""Finite semigroups given by Cayley tables, their automorphisms and subset algebra.

Elements are the indices ``0..n-1``; ``table[x][y]`` is the product ``xy``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 4

Table = tuple[tuple[int, ...], ...]


class NotAssociative(ValueError):
    def __init__(self, x: int, y: int, z: int):
        super().__init__(f"not associative at ({x}, {y}, {z})")
        self.triple = (x, y, z)


class IndexOutOfRange(ValueError):
    pass


class LimitExceeded(ValueError):
    pass


class NotAnAutomorphism(ValueError):
    pass


def _as_table(rows: Sequence[Sequence[int]]) -> Table:
    table = tuple(tuple(int(v) for v in row) for row in rows)
    n = len(table)
    if n == 0:
        raise IndexOutOfRange("empty table")
    for x, row in enumerate(table):
        if len(row) != n:
            raise IndexOutOfRange(f"row {x} has {len(row)} entries, expected {n}")
        for y, v in enumerate(row):
            if not 0 <= v < n:
                raise IndexOutOfRange(f"entry ({x}, {y}) = {v} outside [0, {n})")
    return table


def first_associativity_failure(table: Table) -> tuple[int, int, int] | None:
    n = len(table)
    for x in range(n):
        tx = table[x]
        for y in range(n):
            txy = table[tx[y]]
            ty = table[y]
            for z in range(n):
                if txy[z] != tx[ty[z]]:
                    return (x, y, z)
    return None


@dataclass(frozen=True)
class FiniteSemigroup:
    table: Table

    def __post_init__(self):
        object.__setattr__(self, "table", _as_table(self.table))
        bad = first_associativity_failure(self.table)
        if bad is not None:
            raise NotAssociative(*bad)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def product(self, *xs: int) -> int:
        acc = xs[0]
        for x in xs[1:]:
            acc = self.table[acc][x]
        return acc

    def is_commutative(self) -> bool:
        return all(self.table[x][y] == self.table[y][x] for x in self.elements for y in self.elements)

    def period(self, x: int) -> int:
        """The p with x^(i+p) == x^i, where i is the index of x."""
        seen: dict[int, int] = {}
        cur, k = x, 1
        while cur not in seen:
            seen[cur] = k
            cur = self.table[cur][x]
            k += 1
        return k - seen[cur]

    @cached_property
    def exponent(self) -> int:
        """lcm of all element periods."""
        return math.lcm(*(self.period(x) for x in self.elements))

    def relabel(self, perm: Sequence[int]) -> FiniteSemigroup:
        n = self.order
        new = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                new[perm[x]][perm[y]] = perm[self.table[x][y]]
        return FiniteSemigroup(new)

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.table for v in row)


def validate_semigroup(table: Sequence[Sequence[int]]) -> FiniteSemigroup:
    return FiniteSemigroup(table)


def canonical_table(table: Table) -> Table:
    """Lexicographically least table over all relabelings."""
    n = len(table)
    best = None
    for perm in itertools.permutations(range(n)):
        new = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                new[perm[x]][perm[y]] = perm[table[x][y]]
        cand = tuple(tuple(r) for r in new)
        if best is None or cand < best:
            best = cand
    return best


def _associative_tables(n: int) -> Iterator[Table]:
    cells = [(x, y) for x in range(n) for y in range(n)]
    t = [[-1] * n for _ in range(n)]

    def consistent() -> bool:
        for x in range(n):
            for y in range(n):
                xy = t[x][y]
                if xy < 0:
                    continue
                for z in range(n):
                    left = t[xy][z]
                    yz = t[y][z]
                    if left < 0 or yz < 0:
                        continue
                    right = t[x][yz]
                    if right >= 0 and left != right:
                        return False
        return True

    def extend(k: int) -> Iterator[Table]:
        if k == len(cells):
            yield tuple(tuple(r) for r in t)
            return
        x, y = cells[k]
        for v in range(n):
            t[x][y] = v
            if consistent():
                yield from extend(k + 1)
        t[x][y] = -1

    yield from extend(0)


def enumerate_semigroups(n: int, collapse: bool = False, max_order: int = MAX_ORDER) -> Iterator[FiniteSemigroup]:
    """All associative tables of order n in lexicographic order.

    With ``collapse`` only canonical representatives (the least table of each
    isomorphism class) are produced.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n > max_order:
        raise LimitExceeded(f"order {n} exceeds configured maximum {max_order}")
    for table in _associative_tables(n):
        if collapse and canonical_table(table) != table:
            continue
        yield FiniteSemigroup(table)


@dataclass(frozen=True)
class Automorphism:
    semigroup: FiniteSemigroup
    perm: tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        object.__setattr__(self, "perm", perm)
        n = self.semigroup.order
        if sorted(perm) != list(range(n)):
            raise NotAnAutomorphism(f"{perm} is not a bijection on [0, {n})")
        t = self.semigroup.table
        for x in range(n):
            for y in range(n):
                if perm[t[x][y]] != t[perm[x]][perm[y]]:
                    raise NotAnAutomorphism(f"{perm} breaks the product at ({x}, {y})")

    def __call__(self, x: int) -> int:
        return self.perm[x]

    def compose(self, other: Automorphism) -> Automorphism:
        """``self after other``."""
        return Automorphism(self.semigroup, tuple(self.perm[other.perm[x]] for x in range(len(self.perm))))

    def inverse(self) -> Automorphism:
        inv = [0] * len(self.perm)
        for x, px in enumerate(self.perm):
            inv[px] = x
        return Automorphism(self.semigroup, tuple(inv))

    def power(self, k: int) -> Automorphism:
        result = identity_automorphism(self.semigroup)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = base.compose(result)
        return result

    def is_identity(self) -> bool:
        return all(p == x for x, p in enumerate(self.perm))

    def image(self, subset: Iterable[int]) -> frozenset[int]:
        return frozenset(self.perm[x] for x in subset)


def identity_automorphism(S: FiniteSemigroup) -> Automorphism:
    return Automorphism(S, tuple(S.elements))


def enumerate_automorphisms(S: FiniteSemigroup) -> list[Automorphism]:
    out = []
    t = S.table
    for perm in itertools.permutations(S.elements):
        if all(perm[t[x][y]] == t[perm[x]][perm[y]] for x in S.elements for y in S.elements):
            out.append(Automorphism(S, perm))
    return out


def product_set(S: FiniteSemigroup, T: Iterable[int]) -> frozenset[int]:
    T = list(T)
    return frozenset(S.table[x][y] for x in T for y in T)


def is_ideal(S: FiniteSemigroup, T: Iterable[int]) -> bool:
    T = frozenset(T)
    return all(S.table[s][x] in T and S.table[x][s] in T for x in T for s in S.elements)


def is_subsemigroup(S: FiniteSemigroup, T: Iterable[int]) -> bool:
    T = frozenset(T)
    return all(S.table[x][y] in T for x in T for y in T)


def is_central(S: FiniteSemigroup, h: Sequence) -> bool:
    t = S.table
    return all(h[t[x][y]] == h[t[y][x]] for x in S.elements for y in S.elements)


def is_abelian(S: FiniteSemigroup, h: Sequence) -> bool:
    if not is_central(S, h):
        return False
    t = S.table
    return all(
        h[t[t[x][y]][z]] == h[t[t[x][z]][y]]
        for x in S.elements
        for y in S.elements
        for z in S.elements
    )


def central_witness(S: FiniteSemigroup, h: Sequence) -> tuple[int, int] | None:
    t = S.table
    for x in S.elements:
        for y in S.elements:
            if h[t[x][y]] != h[t[y][x]]:
                return (x, y)
    return None
