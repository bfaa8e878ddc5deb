"""Cayley-table input, JSON report documents, and the small-semigroup catalog."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from . import __version__
from .characters import WilsonContext, chi_decompose, enumerate_contexts, enumerate_multiplicative, invariant_sets_check
from .conformance import ConformanceReport, conformance_check
from .semigroup import MAX_ORDER, FiniteSemigroup, LimitExceeded, enumerate_automorphisms, enumerate_semigroups

SCHEMA_VERSION = 1


class ParseError(ValueError):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line, self.col, self.message = line, col, message


class SchemaMismatch(ValueError):
    def __init__(self, found, expected):
        super().__init__(f"schema version {found!r}, expected {expected!r}")
        self.found, self.expected = found, expected


class IoError(OSError):
    pass


# -- Cayley tables ----------------------------------------------------------------


def parse_cayley(text: str) -> FiniteSemigroup:
    """Parse the text format: n, then n rows of n 0-based indices; '#' starts a comment line."""
    lines = [
        (no, raw)
        for no, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError(1, 1, "empty input")
    no, raw = lines[0]
    try:
        n = int(raw.strip())
    except ValueError:
        raise ParseError(no, raw.index(raw.strip()[0]) + 1, f"expected the order, got {raw.strip()!r}") from None
    if n < 1:
        raise ParseError(no, 1, "order must be positive")
    rows = lines[1:]
    if len(rows) != n:
        last = rows[-1][0] if rows else no
        raise ParseError(last, 1, f"expected {n} table rows, found {len(rows)}")
    table = []
    for no, raw in rows:
        tokens = []
        pos = 0
        for tok in raw.split():
            col = raw.index(tok, pos) + 1
            pos = col - 1 + len(tok)
            tokens.append((col, tok))
        if len(tokens) != n:
            raise ParseError(no, 1, f"expected {n} entries, found {len(tokens)}")
        row = []
        for col, tok in tokens:
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(no, col, f"not an integer: {tok!r}") from None
            if not 0 <= v < n:
                raise ParseError(no, col, f"entry {v} out of range [0, {n})")
            row.append(v)
        table.append(row)
    return FiniteSemigroup(table)


def load_cayley(source: str | os.PathLike) -> FiniteSemigroup:
    """Load from a path, or parse ``source`` directly when it is multi-line text."""
    if isinstance(source, str) and "\n" in source:
        return parse_cayley(source)
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(str(exc)) from exc
    return parse_cayley(text)


def format_cayley(S: FiniteSemigroup) -> str:
    return "\n".join([str(S.order)] + [" ".join(map(str, row)) for row in S.table]) + "\n"


# -- report documents ----------------------------------------------------------------


@dataclass
class ReportDocument:
    schema_version: int = SCHEMA_VERSION
    tool_version: str = __version__
    input_digest: str = ""
    entries: list[dict] = field(default_factory=list)
    continuous: list[dict] | None = None
    summary: dict = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        out = {
            "schema_version": self.schema_version,
            "tool_version": self.tool_version,
            "input_digest": self.input_digest,
            "entries": self.entries,
            "summary": self.summary,
        }
        if self.continuous is not None:
            out["continuous"] = self.continuous
        return out

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> ReportDocument:
        found = data.get("schema_version")
        if found != SCHEMA_VERSION:
            raise SchemaMismatch(found, SCHEMA_VERSION)
        return cls(
            data["schema_version"],
            data["tool_version"],
            data["input_digest"],
            data["entries"],
            data.get("continuous"),
            data.get("summary", {}),
        )

    @property
    def falsifications(self) -> int:
        return int(self.summary.get("falsifications", 0))


def report_schema() -> dict:
    text = resources.files("semiwilson").joinpath("report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def validate_document(data: dict) -> None:
    import jsonschema

    jsonschema.validate(data, report_schema())


def dumps(doc: ReportDocument) -> str:
    return json.dumps(doc.to_json(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write via a temp file in the same directory and rename."""
    path = Path(path)
    data = text.encode("utf-8")
    try:
        fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except OSError as exc:
        raise IoError(str(exc)) from exc


def emit_report(doc: ReportDocument, path: str | os.PathLike) -> None:
    write_atomic(path, dumps(doc))


def parse_report(path: str | os.PathLike) -> ReportDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(str(exc)) from exc
    return ReportDocument.from_json(json.loads(text))


# -- catalog -------------------------------------------------------------------------


def conformance_to_json(report: ConformanceReport) -> dict:
    out = {
        "context_id": report.context_id,
        "ok": report.ok,
        "entries": [
            {
                "chi": e.chi.to_json(),
                "case": e.case_tag.value,
                "g": e.g.to_json(),
                "oracle_dim": e.oracle_dim,
                "family_dim": e.family_dim,
                "match": e.match,
                "witnesses": [list(w) for w in e.witnesses],
            }
            for e in report.entries
        ],
        "identity_failures": _jsonable(report.identity_failures),
        "abelian_failures": _jsonable(report.abelian_failures),
    }
    if report.probe is not None:
        p = report.probe
        out["probe"] = {
            "g_count": p.g_count,
            "nontrivial": p.nontrivial,
            "classified": p.classified,
            "unclassified": _jsonable(p.unclassified),
            "space_mismatches": _jsonable(p.space_mismatches),
            "note": p.note,
        }
    return out


def _jsonable(obj):
    return json.loads(json.dumps(obj, default=list))


def context_summary(ctx: WilsonContext, probe: bool = False) -> tuple[dict, bool]:
    chars = enumerate_multiplicative(ctx.S)
    report = conformance_check(ctx, probe=probe, characters=chars)
    by_chi = {tuple(e.chi.to_json()): e for e in report.entries}
    characters = []
    for chi in chars[1:]:
        e = by_chi[tuple(chi.to_json())]
        dec = chi_decompose(ctx.S, chi)
        lem = invariant_sets_check(ctx.S, chi, ctx.sigma)
        characters.append(
            {
                "values": chi.to_json(),
                "case": e.case_tag.value,
                "decomposition": dec.sizes(),
                "family_dim": e.family_dim,
                "oracle_dim": e.oracle_dim,
                "match": e.match,
                "invariant_sets": lem.status,
            }
        )
    ok = report.ok and all(c["invariant_sets"] != "fail" for c in characters)
    summary = {
        "context_id": ctx.context_id,
        "sigma": list(ctx.sigma.perm),
        "mu": ctx.mu.to_json(),
        "characters": characters,
        "conformant": ok,
    }
    if report.probe is not None:
        summary["probe"] = conformance_to_json(report)["probe"]
    return summary, ok


def catalog_entry(S: FiniteSemigroup, probe: bool = False) -> dict:
    contexts = []
    ok = True
    for ctx in enumerate_contexts(S):
        summary, good = context_summary(ctx, probe=probe)
        contexts.append(summary)
        ok = ok and good
    return {
        "order": S.order,
        "table": [list(r) for r in S.table],
        "automorphism_count": len(enumerate_automorphisms(S)),
        "contexts": contexts,
        "verdict": "conformant" if ok else "falsified",
    }


def _entry_job(args: tuple[tuple, bool]) -> dict:
    table, probe = args
    return catalog_entry(FiniteSemigroup(table), probe)


def build_catalog(max_order: int, order_cap: int = MAX_ORDER, jobs: int = 1, probe: bool = False) -> ReportDocument:
    if max_order > order_cap:
        raise LimitExceeded(f"max order {max_order} exceeds cap {order_cap}")
    semigroups = [S for n in range(1, max_order + 1) for S in enumerate_semigroups(n, collapse=True, max_order=order_cap)]
    work = [(S.table, probe) for S in semigroups]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_entry_job, work))
    else:
        entries = [_entry_job(w) for w in work]
    digest = hashlib.sha256(f"catalog:max_order={max_order}:probe={probe}".encode()).hexdigest()
    falsified = sum(e["verdict"] != "conformant" for e in entries)
    summary = {
        "semigroups": len(entries),
        "contexts": sum(len(e["contexts"]) for e in entries),
        "falsifications": falsified,
    }
    return ReportDocument(input_digest=digest, entries=entries, summary=summary)
