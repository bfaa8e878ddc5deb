"""Cross-validation of the theorem families against the linear oracle."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .characters import ComplexMap, WilsonContext, enumerate_multiplicative
from .cyclotomic import ZERO, Cyc, root_of_unity
from .linalg import in_span
from .semigroup import is_abelian
from .wilson import (
    CaseTag,
    SolutionFamily,
    is_solution,
    pair_identities_check,
    solve_f_given_g,
    theorem_families,
)


def probe_values() -> list[Cyc]:
    """Half-sums (a + b)/2 with a, b in {0} | fourth roots of unity."""
    base = [ZERO] + [root_of_unity(k, 4) for k in range(4)]
    out: list[Cyc] = []
    for a, b in itertools.combinations_with_replacement(base, 2):
        v = (a + b) * Fraction(1, 2)
        if v not in out:
            out.append(v)
    return out


@dataclass
class ConformanceEntry:
    chi: ComplexMap
    case_tag: CaseTag
    g: ComplexMap
    oracle_dim: int
    family_dim: int
    match: bool
    witnesses: list = field(default_factory=list)


@dataclass
class ProbeSummary:
    g_count: int = 0
    nontrivial: int = 0
    classified: int = 0
    unclassified: list = field(default_factory=list)
    space_mismatches: list = field(default_factory=list)
    note: str = "partial: g ranges over half-sums of {0} and fourth roots of unity"


@dataclass
class ConformanceReport:
    context_id: str
    entries: list[ConformanceEntry]
    probe: ProbeSummary | None = None
    identity_failures: list = field(default_factory=list)
    abelian_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        probe_ok = self.probe is None or not (self.probe.unclassified or self.probe.space_mismatches)
        return (
            all(e.match for e in self.entries)
            and probe_ok
            and not self.identity_failures
            and not self.abelian_failures
        )


def _audit_pair(ctx: WilsonContext, f: ComplexMap, g: ComplexMap, report: ConformanceReport) -> None:
    # pairs failing the equation already surface as family/oracle mismatches
    if not is_solution(ctx, f, g)[0]:
        return
    lem = pair_identities_check(ctx, f, g)
    for part in lem.parts:
        if part.status == "fail":
            report.identity_failures.append({"part": part.part, "f": f.to_json(), "g": g.to_json(), "witness": part.witness})
    if not f.is_zero() and not g.is_zero():
        if not (is_abelian(ctx.S, f.values) and is_abelian(ctx.S, g.values)):
            report.abelian_failures.append({"f": f.to_json(), "g": g.to_json()})


def compare_family(ctx: WilsonContext, family: SolutionFamily) -> ConformanceEntry:
    space = solve_f_given_g(ctx, family.g)
    oracle = [list(v) for v in space.basis]
    fam = [list(v.values) for v in family.spanning]
    witnesses = [("family_vector_not_in_oracle", v.to_json()) for v in family.spanning if not in_span(oracle, v.values)]
    witnesses += [("oracle_vector_not_in_family", [str(x) for x in v]) for v in oracle if not in_span(fam, v)]
    return ConformanceEntry(
        family.chi,
        family.case_tag,
        family.g,
        space.dimension,
        family.dimension,
        not witnesses and space.dimension == family.dimension,
        witnesses,
    )


def classify(families: Sequence[SolutionFamily], f: Sequence, g: ComplexMap) -> CaseTag:
    if not any(f):
        return CaseTag.CASE1 if not g.is_zero() else CaseTag.HOMOGENEOUS_G0
    if g.is_zero():
        return CaseTag.HOMOGENEOUS_G0
    for fam in families:
        if fam.g == g and fam.contains(f):
            return fam.case_tag
    return CaseTag.UNCLASSIFIED


def run_probe(
    ctx: WilsonContext,
    families: Sequence[SolutionFamily],
    report: ConformanceReport,
    values: Sequence[Cyc] | None = None,
) -> ProbeSummary:
    values = probe_values() if values is None else list(values)
    summary = ProbeSummary()
    by_g: dict[ComplexMap, list[SolutionFamily]] = {}
    for fam in families:
        by_g.setdefault(fam.g, []).append(fam)
    for gvals in itertools.product(values, repeat=ctx.n):
        if not any(gvals):
            continue
        g = ComplexMap(gvals)
        summary.g_count += 1
        space = solve_f_given_g(ctx, g)
        if not space.basis:
            continue
        summary.nontrivial += 1
        matching = by_g.get(g, [])
        for v in space.basis:
            tag = classify(matching, v, g)
            if tag is CaseTag.UNCLASSIFIED:
                summary.unclassified.append({"g": g.to_json(), "f": [str(x) for x in v]})
            else:
                summary.classified += 1
            _audit_pair(ctx, ComplexMap(v), g, report)
        oracle = [list(v) for v in space.basis]
        if not any(
            fam.dimension == space.dimension and all(in_span(oracle, s.values) for s in fam.spanning)
            for fam in matching
        ):
            summary.space_mismatches.append({"g": g.to_json(), "oracle_dim": space.dimension})
    return summary


def conformance_check(
    ctx: WilsonContext,
    probe: bool = False,
    characters: Sequence[ComplexMap] | None = None,
    audit: bool = True,
) -> ConformanceReport:
    chars = characters if characters is not None else enumerate_multiplicative(ctx.S)
    families = theorem_families(ctx, chars)
    report = ConformanceReport(ctx.context_id, [])
    for fam in families:
        entry = compare_family(ctx, fam)
        report.entries.append(entry)
        if audit:
            for v in fam.spanning:
                _audit_pair(ctx, v, fam.g, report)
    if probe:
        report.probe = run_probe(ctx, families, report)
    return report
