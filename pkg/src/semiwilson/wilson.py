"""The equation f(xy) + mu(y) f(sigma(y) x) = 2 f(x) g(y) on a finite semigroup.

Solution families with ``g != 0`` and ``f != 0`` come in two shapes:

* ``f = alpha*chi + beta*chi*`` with ``g = (chi + chi*)/2`` when ``chi* != chi``
  (``beta != 0`` additionally needs ``chi o sigma^2 == chi``);
* ``f = chi*(c + A)`` off the zero set of ``chi``, ``rho`` on ``P_chi`` and 0 on
  the rest, with ``g = chi``, when ``chi* == chi``.

For fixed ``g`` the equation is linear in ``f``; :func:`solve_f_given_g`
returns its exact nullspace and serves as the independent oracle.
"""

from __future__ import annotations

import contextlib
import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .characters import (
    AdditiveSpace,
    ChiDecomposition,
    ComplexMap,
    WilsonContext,
    additive_space,
    chi_decompose,
    even_part,
    g_of,
    is_multiplicative,
    odd_part,
    star,
)
from .cyclotomic import ONE, ZERO, Cyc
from .linalg import LinearSystem, in_span, rank, solve_linear

# flipped to -1 only by the failure-path self test of the CLI
_MU_SIGN = 1


@contextlib.contextmanager
def injected_sign_bug() -> Iterator[None]:
    global _MU_SIGN
    _MU_SIGN = -1
    try:
        yield
    finally:
        _MU_SIGN = 1


class CaseTag(str, enum.Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"
    HOMOGENEOUS_G0 = "HomogeneousG0"
    UNCLASSIFIED = "Unclassified"


class PreconditionViolated(ValueError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name


class ResidualNonzero(AssertionError):
    """A theorem-shaped pair failed the equation."""


def residual(ctx: WilsonContext, f: Sequence, g: Sequence) -> list[list[Cyc]]:
    t = ctx.S.table
    sigma, mu = ctx.sigma, ctx.mu
    n = ctx.n
    return [
        [f[t[x][y]] + _MU_SIGN * mu[y] * f[t[sigma(y)][x]] - 2 * f[x] * g[y] for y in range(n)]
        for x in range(n)
    ]


def is_solution(ctx: WilsonContext, f: Sequence, g: Sequence) -> tuple[bool, tuple[int, int] | None]:
    r = residual(ctx, f, g)
    for x, row in enumerate(r):
        for y, v in enumerate(row):
            if v:
                return False, (x, y)
    return True, None


@dataclass(frozen=True)
class SolutionPair:
    f: ComplexMap
    g: ComplexMap
    case_tag: CaseTag


def _checked_pair(ctx: WilsonContext, f: ComplexMap, g: ComplexMap, tag: CaseTag) -> SolutionPair:
    ok, where = is_solution(ctx, f, g)
    if not ok:
        raise ResidualNonzero(f"{tag.value} pair has nonzero residual at {where}")
    return SolutionPair(f, g, tag)


def sigma_squared_fixes(ctx: WilsonContext, chi: Sequence) -> bool:
    s2 = ctx.sigma.compose(ctx.sigma)
    return all(chi[s2(x)] == chi[x] for x in ctx.S.elements)


def build_case2(ctx: WilsonContext, chi: ComplexMap, alpha, beta) -> SolutionPair:
    alpha, beta = Cyc.coerce(alpha), Cyc.coerce(beta)
    if chi.is_zero():
        raise PreconditionViolated("chi_zero")
    chi_s = star(chi, ctx)
    if chi_s == chi:
        raise PreconditionViolated("chi_star_equals_chi")
    if not alpha and not beta:
        raise PreconditionViolated("alpha_beta_zero")
    if beta and not sigma_squared_fixes(ctx, chi):
        raise PreconditionViolated("chi_sigma2_differs")
    f = chi * alpha + chi_s * beta
    return _checked_pair(ctx, f, g_of(chi, ctx), CaseTag.CASE2)


# -- the rho constraints --------------------------------------------------------


@dataclass(frozen=True)
class RhoSpace:
    """Solutions rho on P_chi of propagation, oddness and zeroing constraints."""

    domain: tuple[int, ...]
    basis: tuple[tuple[Cyc, ...], ...]
    feasible: bool = True
    membership_failures: tuple[tuple[str, int, int, int], ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def embed(self, coeffs: Sequence, n: int) -> ComplexMap:
        vals = [ZERO] * n
        for c, b in zip(coeffs, self.basis):
            c = Cyc.coerce(c)
            for x, v in zip(self.domain, b):
                vals[x] = vals[x] + c * v
        return ComplexMap(vals)


def rho_space(ctx: WilsonContext, chi: ComplexMap, dec: ChiDecomposition | None = None) -> RhoSpace:
    S, sigma, mu = ctx.S, ctx.sigma, ctx.mu
    t = S.table
    dec = dec or chi_decompose(S, chi)
    P = tuple(sorted(dec.P_chi))
    if not P:
        return RhoSpace((), ())
    index = {p: i for i, p in enumerate(P)}
    k = len(P)
    rows: list[list[Cyc]] = []
    failures = []

    def row(*terms: tuple[int, Cyc]) -> None:
        r = [ZERO] * k
        for x, c in terms:
            r[index[x]] = r[index[x]] + c
        rows.append(r)

    comp = sorted(dec.complement)
    # (a) propagation rho(up) = chi(u) rho(p), rho(pv) = chi(v) rho(p), rho(upv) = chi(uv) rho(p)
    for p in P:
        for u in comp:
            for v in comp:
                up, pv = t[u][p], t[p][v]
                upv = t[up][v]
                for kind, x, factor in (("up", up, chi[u]), ("pv", pv, chi[v]), ("upv", upv, chi[t[u][v]])):
                    if x not in index:
                        failures.append((kind, p, u, v))
                        continue
                    row((x, ONE), (p, -factor))
    # (b) oddness mu(x) rho(sigma(x)) = -rho(x)
    for x in P:
        sx = sigma(x)
        if sx not in index:
            failures.append(("sigma", x, x, x))
            continue
        row((sx, mu[x]), (x, ONE))
    # (c) products of the complement with I \ P that land in P vanish
    for x in comp:
        for y in sorted(dec.I_minus_P):
            for z in (t[x][y], t[y][x]):
                if z in index:
                    row((z, ONE))
    if failures:
        return RhoSpace(P, (), False, tuple(failures))
    basis = solve_linear(LinearSystem(rows, ncols=k)).basis if rows else tuple(
        tuple(ONE if i == j else ZERO for i in range(k)) for j in range(k)
    )
    return RhoSpace(P, basis)


# -- solution families -------------------------------------------------------------


@dataclass(frozen=True)
class SolutionFamily:
    case_tag: CaseTag
    chi: ComplexMap
    g: ComplexMap
    spanning: tuple[ComplexMap, ...]
    decomposition: ChiDecomposition | None = None
    additive: AdditiveSpace | None = None
    rho: RhoSpace | None = None
    flags: dict = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        if not self.spanning:
            return 0
        return rank([v.values for v in self.spanning])

    def materialize(self, params: Sequence) -> SolutionPair:
        """Linear combination of the spanning vectors; params follow ``spanning``."""
        if len(params) != len(self.spanning):
            raise ValueError(f"expected {len(self.spanning)} parameters, got {len(params)}")
        n = len(self.g)
        f = ComplexMap.zero(n)
        for c, v in zip(params, self.spanning):
            f = f + v * Cyc.coerce(c)
        return SolutionPair(f, self.g, self.case_tag)

    def contains(self, f: Sequence) -> bool:
        return in_span([v.values for v in self.spanning], list(f))


def case2_family(ctx: WilsonContext, chi: ComplexMap) -> SolutionFamily:
    if chi.is_zero():
        raise PreconditionViolated("chi_zero")
    chi_s = star(chi, ctx)
    if chi_s == chi:
        raise PreconditionViolated("chi_star_equals_chi")
    both = sigma_squared_fixes(ctx, chi)
    spanning = (chi, chi_s) if both else (chi,)
    return SolutionFamily(
        CaseTag.CASE2,
        chi,
        g_of(chi, ctx),
        spanning,
        flags={"chi_sigma2_fixed": both},
    )


def build_case3_family(ctx: WilsonContext, chi: ComplexMap) -> SolutionFamily:
    if chi.is_zero():
        raise PreconditionViolated("chi_zero")
    if star(chi, ctx) != chi:
        raise PreconditionViolated("chi_star_not_equal_chi")
    S = ctx.S
    dec = chi_decompose(S, chi)
    add = additive_space(S, dec.complement, ctx.sigma)
    rho = rho_space(ctx, chi, dec)
    n = S.order
    if not rho.feasible:
        spanning: tuple[ComplexMap, ...] = ()
    else:
        spanning = (chi,)
        for b in add.odd_basis:
            a = dict(zip(add.domain, b))
            spanning += (ComplexMap(chi[x] * a[x] if x in a else ZERO for x in range(n)),)
        for j in range(rho.dimension):
            spanning += (rho.embed([int(i == j) for i in range(rho.dimension)], n),)
    return SolutionFamily(
        CaseTag.CASE3,
        chi,
        chi,
        spanning,
        decomposition=dec,
        additive=add,
        rho=rho,
        flags={"rho_feasible": rho.feasible},
    )


def theorem_families(ctx: WilsonContext, characters: Sequence[ComplexMap]) -> list[SolutionFamily]:
    out = []
    for chi in characters:
        if chi.is_zero():
            continue
        if star(chi, ctx) == chi:
            out.append(build_case3_family(ctx, chi))
        else:
            out.append(case2_family(ctx, chi))
    return out


# -- the linear oracle -------------------------------------------------------------


def f_system(ctx: WilsonContext, g: Sequence) -> LinearSystem:
    """n^2 homogeneous equations in the unknowns f(0..n-1)."""
    t = ctx.S.table
    n = ctx.n
    g = [Cyc.coerce(v) for v in g]
    rows = []
    for x in range(n):
        for y in range(n):
            r = [ZERO] * n
            r[t[x][y]] = r[t[x][y]] + ONE
            z = t[ctx.sigma(y)][x]
            r[z] = r[z] + _MU_SIGN * ctx.mu[y]
            r[x] = r[x] - 2 * g[y]
            rows.append(r)
    return LinearSystem(rows, ncols=n)


def solve_f_given_g(ctx: WilsonContext, g: Sequence):
    return solve_linear(f_system(ctx, g))


def sample_parameters(k: int, rng: random.Random) -> list[Fraction]:
    """Small nonzero-ish rationals, numerators and denominators at most 7."""
    return [Fraction(rng.randint(-7, 7), rng.randint(1, 7)) for _ in range(k)]


# -- identities satisfied by every solution pair ----------------------------------


@dataclass(frozen=True)
class IdentityPart:
    part: int
    status: str  # "pass", "fail", "hypothesis-not-met"
    witness: tuple | None = None


@dataclass(frozen=True)
class PairIdentitiesReport:
    parts: tuple[IdentityPart, ...]

    @property
    def ok(self) -> bool:
        return all(p.status != "fail" for p in self.parts)

    def status(self, part: int) -> str:
        return self.parts[part - 1].status


def _solvable(columns: list[list[Cyc]], rhs: list[Cyc]) -> bool:
    rows = [[col[i] for col in columns] for i in range(len(rhs))]
    return solve_linear(LinearSystem(rows, rhs, ncols=len(columns))).consistent


def pair_identities_check(ctx: WilsonContext, f: Sequence, g: Sequence) -> PairIdentitiesReport:
    f, g = ComplexMap(f), ComplexMap(g)
    if not is_solution(ctx, f, g)[0]:
        raise ValueError("identity checks need a verified solution pair")
    S = ctx.S
    t = S.table
    E = list(S.elements)
    fs, fe, fo = star(f, ctx), even_part(f, ctx), odd_part(f, ctx)
    parts = []

    # (1) f_a satisfies the sine addition law with g
    w = None
    for a in E:
        fa = [f[t[a][x]] - f[a] * g[x] for x in E]
        w = next(((a, x, y) for x in E for y in E if fa[t[x][y]] != fa[x] * g[y] + fa[y] * g[x]), None)
        if w:
            break
    parts.append(IdentityPart(1, "fail" if w else "pass", w))

    # (2) f°(xy) = f(x)g(y) - f*(y)g(x)
    w = next(((x, y) for x in E for y in E if fo[t[x][y]] != f[x] * g[y] - fs[y] * g[x]), None)
    parts.append(IdentityPart(2, "fail" if w else "pass", w))

    # (3) f(xy) = 2f(x)g(y) + 2f(y)g(x) - 4f^e(y)g(x) + f*(xy)
    w = next(
        (
            (x, y)
            for x in E
            for y in E
            if f[t[x][y]] != 2 * f[x] * g[y] + 2 * f[y] * g[x] - 4 * fe[y] * g[x] + fs[t[x][y]]
        ),
        None,
    )
    parts.append(IdentityPart(3, "fail" if w else "pass", w))

    g_nonzero = not g.is_zero()
    central = all(f[t[x][y]] == f[t[y][x]] for x in E for y in E)
    dependent = rank([fe.values, g.values]) <= 1

    # (4) f central and g != 0 => f^e, g dependent
    if central and g_nonzero:
        parts.append(IdentityPart(4, "pass" if dependent else "fail"))
    else:
        parts.append(IdentityPart(4, "hypothesis-not-met"))

    # (5) f^e, g independent and g != 0 => g(xy) = f(x)h1(y) + g(x)h2(y)
    if not dependent and g_nonzero:
        bad = next(
            (y for y in E if not _solvable([list(f.values), list(g.values)], [g[t[x][y]] for x in E])),
            None,
        )
        parts.append(IdentityPart(5, "fail" if bad is not None else "pass", bad))
    else:
        parts.append(IdentityPart(5, "hypothesis-not-met"))

    # (6) g nonzero multiplicative => f(xy) = f(x)g(y) + g(x)h(y)
    if g_nonzero and is_multiplicative(S, g):
        bad = next(
            (y for y in E if not _solvable([list(g.values)], [f[t[x][y]] - f[x] * g[y] for x in E])),
            None,
        )
        parts.append(IdentityPart(6, "fail" if bad is not None else "pass", bad))
    else:
        parts.append(IdentityPart(6, "hypothesis-not-met"))

    return PairIdentitiesReport(tuple(parts))
