"""Multiplicative functions, admissible weights, and the sets attached to a character.

Character values on a finite semigroup are 0 or roots of unity whose order
divides the period of the element, so every multiplicative map takes values
in ``{0} | <zeta_M>`` with ``M`` the lcm of all element periods.  Enumeration
works on exponent vectors (``None`` for the value 0) and only converts to
:class:`Cyc` at the end.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .cyclotomic import ZERO, Cyc, root_of_unity
from .linalg import LinearSystem, solve_linear
from .semigroup import (
    Automorphism,
    FiniteSemigroup,
    is_ideal,
    is_subsemigroup,
    product_set,
)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ComplexMap:
    """A function S -> Q(zeta), one exact value per element."""

    values: tuple[Cyc, ...]

    def __init__(self, values: Iterable):
        object.__setattr__(self, "values", tuple(Cyc.coerce(v) for v in values))

    @classmethod
    def zero(cls, n: int) -> ComplexMap:
        return cls([ZERO] * n)

    @classmethod
    def constant(cls, n: int, value=1) -> ComplexMap:
        return cls([value] * n)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, x: int) -> Cyc:
        return self.values[x]

    def __iter__(self):
        return iter(self.values)

    def __add__(self, other: ComplexMap) -> ComplexMap:
        return ComplexMap(a + b for a, b in zip(self.values, other.values))

    def __sub__(self, other: ComplexMap) -> ComplexMap:
        return ComplexMap(a - b for a, b in zip(self.values, other.values))

    def __neg__(self) -> ComplexMap:
        return ComplexMap(-a for a in self.values)

    def __mul__(self, other) -> ComplexMap:
        if isinstance(other, ComplexMap):
            return ComplexMap(a * b for a, b in zip(self.values, other.values))
        return ComplexMap(a * other for a in self.values)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> ComplexMap:
        return ComplexMap(a / scalar for a in self.values)

    def is_zero(self) -> bool:
        return not any(self.values)

    def zero_set(self) -> frozenset[int]:
        return frozenset(x for x, v in enumerate(self.values) if not v)

    def compose(self, perm: Sequence[int]) -> ComplexMap:
        """``x -> self(perm[x])``."""
        return ComplexMap(self.values[perm[x]] for x in range(len(self.values)))

    def to_json(self) -> list[str]:
        return [str(v) for v in self.values]

    @classmethod
    def from_json(cls, items: Sequence[str]) -> ComplexMap:
        return cls(Cyc.parse(s) for s in items)


def is_multiplicative(S: FiniteSemigroup, h: Sequence) -> bool:
    t = S.table
    return all(h[t[x][y]] == h[x] * h[y] for x in S.elements for y in S.elements)


# -- enumeration of multiplicative maps --------------------------------------


def _principal_ideal(S: FiniteSemigroup, x: int) -> frozenset[int]:
    t = S.table
    left = {x} | {t[s][x] for s in S.elements}
    return frozenset(left | {t[a][s] for a in left for s in S.elements})


def zero_sets_by_ideals(S: FiniteSemigroup) -> list[frozenset[int]]:
    """Candidate zero sets, built as unions of principal ideals."""
    principals = {_principal_ideal(S, x) for x in S.elements}
    ideals = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for ideal in frontier:
            for p in principals:
                u = ideal | p
                if u not in ideals:
                    ideals.add(u)
                    nxt.append(u)
        frontier = nxt
    full = frozenset(S.elements)
    keep = [I for I in ideals if I != full and is_subsemigroup(S, full - I)]
    return sorted(keep, key=lambda I: (len(I), sorted(I)))


def zero_sets_by_subsets(S: FiniteSemigroup) -> list[frozenset[int]]:
    """Same candidates, found by filtering all 2^n subsets."""
    full = frozenset(S.elements)
    keep = []
    for k in range(S.order):
        for combo in itertools.combinations(S.elements, k):
            I = frozenset(combo)
            if (not I or is_ideal(S, I)) and is_subsemigroup(S, full - I):
                keep.append(I)
    return sorted(keep, key=lambda I: (len(I), sorted(I)))


def _exponent_maps(S: FiniteSemigroup, zero_set: frozenset[int], m: int) -> Iterator[tuple]:
    """Maps complement -> Z/m that are additive on products (backtracking)."""
    t = S.table
    support = [x for x in S.elements if x not in zero_set]
    exps: list[int | None] = [None] * S.order

    def ok(upto: int) -> bool:
        assigned = support[: upto + 1]
        for x in assigned:
            for y in assigned:
                xy = t[x][y]
                e = exps[xy]
                if e is not None and e != (exps[x] + exps[y]) % m:
                    return False
        return True

    def extend(i: int) -> Iterator[tuple]:
        if i == len(support):
            yield tuple(exps)
            return
        for e in range(m):
            exps[support[i]] = e
            if ok(i):
                yield from extend(i + 1)
        exps[support[i]] = None

    for result in extend(0):
        # products landing in an assigned element were checked; confirm the rest
        if all(
            result[t[x][y]] is not None and result[t[x][y]] == (result[x] + result[y]) % m
            for x in support
            for y in support
        ):
            yield result


def _from_exponents(exps: Sequence[int | None], m: int) -> ComplexMap:
    return ComplexMap(ZERO if e is None else root_of_unity(e, m) for e in exps)


def enumerate_multiplicative(S: FiniteSemigroup, cross_check: bool = False) -> list[ComplexMap]:
    """Every multiplicative map S -> C, the zero map first."""
    m = S.exponent
    zero_sets = zero_sets_by_ideals(S)
    if cross_check and zero_sets != zero_sets_by_subsets(S):
        raise AssertionError("ideal-based and subset-based zero sets disagree")
    out = [ComplexMap.zero(S.order)]
    for zs in zero_sets:
        for exps in _exponent_maps(S, zs, m):
            out.append(_from_exponents(exps, m))
    for chi in out:
        assert is_multiplicative(S, chi)
    return out


def nonzero_characters(S: FiniteSemigroup) -> list[ComplexMap]:
    return enumerate_multiplicative(S)[1:]


# -- admissible weights and the Wilson context --------------------------------


def is_admissible(S: FiniteSemigroup, sigma: Automorphism, mu: Sequence) -> bool:
    return is_multiplicative(S, mu) and all(mu[S.table[x][sigma(x)]] == 1 for x in S.elements)


def enumerate_weights(S: FiniteSemigroup, sigma: Automorphism) -> list[ComplexMap]:
    out = []
    for mu in enumerate_multiplicative(S):
        if all(mu[S.table[x][sigma(x)]] == 1 for x in S.elements):
            if not all(mu.values):
                raise AssertionError("admissible weight vanishes somewhere")
            out.append(mu)
    return out


class InvalidContext(ValueError):
    pass


@dataclass(frozen=True)
class WilsonContext:
    """A semigroup together with an automorphism and an admissible weight."""

    S: FiniteSemigroup
    sigma: Automorphism
    mu: ComplexMap

    def __post_init__(self):
        if self.sigma.semigroup != self.S:
            raise InvalidContext("automorphism belongs to a different semigroup")
        if len(self.mu) != self.S.order:
            raise InvalidContext("weight has the wrong length")
        if not is_admissible(self.S, self.sigma, self.mu):
            raise InvalidContext("weight is not multiplicative with mu(x sigma(x)) = 1")

    @property
    def n(self) -> int:
        return self.S.order

    @property
    def context_id(self) -> str:
        payload = "|".join(
            [
                ";".join(",".join(map(str, row)) for row in self.S.table),
                ",".join(map(str, self.sigma.perm)),
                ",".join(str(v) for v in self.mu),
            ]
        )
        return hashlib.sha256(payload.encode()).hexdigest()[:16]


def enumerate_contexts(S: FiniteSemigroup) -> Iterator[WilsonContext]:
    from .semigroup import enumerate_automorphisms

    for sigma in enumerate_automorphisms(S):
        for mu in enumerate_weights(S, sigma):
            yield WilsonContext(S, sigma, mu)


def star(h: Sequence, ctx: WilsonContext) -> ComplexMap:
    """``x -> mu(x) h(sigma(x))``."""
    return ComplexMap(ctx.mu[x] * h[ctx.sigma(x)] for x in ctx.S.elements)


def even_part(h: Sequence, ctx: WilsonContext) -> ComplexMap:
    return (ComplexMap(h) + star(h, ctx)) * HALF


def odd_part(h: Sequence, ctx: WilsonContext) -> ComplexMap:
    return (ComplexMap(h) - star(h, ctx)) * HALF


def g_of(chi: ComplexMap, ctx: WilsonContext) -> ComplexMap:
    """``(chi + chi*) / 2``."""
    return (chi + star(chi, ctx)) * HALF


# -- the sets I, I^2, P -------------------------------------------------------


class ZeroCharacter(ValueError):
    pass


@dataclass(frozen=True)
class ChiDecomposition:
    I_chi: frozenset[int]
    I_chi_sq: frozenset[int]
    P_chi: frozenset[int]
    complement: frozenset[int]

    @property
    def I_minus_P(self) -> frozenset[int]:
        return self.I_chi - self.P_chi

    def sizes(self) -> dict[str, int]:
        return {"I": len(self.I_chi), "I2": len(self.I_chi_sq), "P": len(self.P_chi)}


def chi_decompose(S: FiniteSemigroup, chi: Sequence) -> ChiDecomposition:
    if not any(chi):
        raise ZeroCharacter("the zero map has no decomposition")
    I = frozenset(x for x in S.elements if not chi[x])
    I2 = product_set(S, I)
    comp = frozenset(S.elements) - I
    core = I - I2
    t = S.table
    P = frozenset(
        p
        for p in core
        if all(
            t[u][p] in core and t[p][v] in core and t[t[u][p]][v] in core
            for u in comp
            for v in comp
        )
    )
    return ChiDecomposition(I, I2, P, comp)


@dataclass(frozen=True)
class InvariantSetsReport:
    status: str  # "pass", "fail" or "hypothesis-not-met"
    witnesses: tuple[tuple[str, int], ...] = ()

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def invariant_sets_check(S: FiniteSemigroup, chi: Sequence, sigma: Automorphism) -> InvariantSetsReport:
    """sigma maps P_chi into itself and I_chi \\ P_chi into itself when chi o sigma = chi."""
    if any(chi[sigma(x)] != chi[x] for x in S.elements):
        return InvariantSetsReport("hypothesis-not-met")
    dec = chi_decompose(S, chi)
    bad = [("P", x) for x in sorted(dec.P_chi) if sigma(x) not in dec.P_chi]
    bad += [("I-P", x) for x in sorted(dec.I_minus_P) if sigma(x) not in dec.I_minus_P]
    return InvariantSetsReport("fail" if bad else "pass", tuple(bad))


# -- additive functions --------------------------------------------------------


class DomainNotClosed(ValueError):
    pass


@dataclass(frozen=True)
class AdditiveSpace:
    domain: tuple[int, ...]
    basis: tuple[tuple[Fraction, ...], ...]
    odd_basis: tuple[tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def extend(self, coeffs: Sequence[Fraction], odd: bool = True) -> dict[int, Fraction]:
        basis = self.odd_basis if odd else self.basis
        return {
            x: sum((c * b[i] for c, b in zip(coeffs, basis)), Fraction(0))
            for i, x in enumerate(self.domain)
        }


def _rational_nullspace(rows: list[list[int]], k: int) -> tuple[tuple[Fraction, ...], ...]:
    if k == 0:
        return ()
    if not rows:
        rows = [[0] * k]
    basis = solve_linear(LinearSystem(rows, ncols=k)).basis
    return tuple(tuple(v.coeffs[0] for v in vec) for vec in basis)


def additive_space(S: FiniteSemigroup, domain: Iterable[int], sigma: Automorphism | None = None) -> AdditiveSpace:
    """Rational basis of {A : A(xy) = A(x) + A(y)} on a subsemigroup, and its sigma-odd part."""
    dom = tuple(sorted(set(domain)))
    index = {x: i for i, x in enumerate(dom)}
    t = S.table
    rows = []
    for x in dom:
        for y in dom:
            xy = t[x][y]
            if xy not in index:
                raise DomainNotClosed(f"{x}*{y} = {xy} leaves the domain")
            row = [0] * len(dom)
            row[index[xy]] += 1
            row[index[x]] -= 1
            row[index[y]] -= 1
            rows.append(row)
    basis = _rational_nullspace(rows, len(dom))
    if sigma is None:
        odd = ()
    else:
        odd_rows = list(rows)
        for x in dom:
            sx = sigma(x)
            if sx not in index:
                raise DomainNotClosed(f"sigma({x}) = {sx} leaves the domain")
            row = [0] * len(dom)
            row[index[sx]] += 1
            row[index[x]] += 1
            odd_rows.append(row)
        odd = _rational_nullspace(odd_rows, len(dom))
    return AdditiveSpace(dom, basis, odd)
