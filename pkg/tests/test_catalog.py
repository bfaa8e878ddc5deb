import json

import jsonschema
import pytest

from semiwilson.catalog import (
    IoError,
    ParseError,
    ReportDocument,
    SchemaMismatch,
    build_catalog,
    dumps,
    emit_report,
    format_cayley,
    load_cayley,
    parse_cayley,
    parse_report,
    validate_document,
    write_atomic,
)
from semiwilson.semigroup import LimitExceeded, NotAssociative

from conftest import ONE_PQ_ZERO


def test_parse_and_format():
    text = "# comment\n3\n0 1 2\n1 2 0\n\n2 0 1\n"
    S = parse_cayley(text)
    assert S.table == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    assert parse_cayley(format_cayley(S)) == S


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("2\n0 0\n1 9\n", 3, 3),
        ("2\n0 0\n1 x\n", 3, 3),
        ("two\n", 1, 1),
        ("2\n0 0\n", 2, 1),
        ("2\n0 0 0\n0 0\n", 2, 1),
        ("", 1, 1),
    ],
)
def test_parse_errors(text, line, col):
    with pytest.raises(ParseError) as exc:
        parse_cayley(text)
    assert (exc.value.line, exc.value.col) == (line, col)


def test_parse_rejects_nonassociative():
    with pytest.raises(NotAssociative):
        parse_cayley("2\n0 0\n1 0\n")


def test_load(tmp_path):
    p = tmp_path / "pq.txt"
    p.write_text("4\n" + "\n".join(" ".join(map(str, r)) for r in ONE_PQ_ZERO) + "\n")
    assert load_cayley(p).table == tuple(map(tuple, ONE_PQ_ZERO))
    assert load_cayley(str(p)) == load_cayley(p.read_text())
    with pytest.raises(IoError):
        load_cayley(tmp_path / "missing.txt")


def test_catalog_sizes():
    assert build_catalog(1).summary == {"semigroups": 1, "contexts": 1, "falsifications": 0}
    doc = build_catalog(2)
    assert doc.summary["semigroups"] == 1 + 5
    assert all(e["verdict"] == "conformant" for e in doc.entries)


def test_catalog_order_three_is_valid_and_conformant():
    doc = build_catalog(3)
    validate_document(doc.to_json())
    assert doc.summary["semigroups"] == 1 + 5 + 24
    assert doc.falsifications == 0


def test_schema_rejects_garbage():
    doc = build_catalog(1).to_json()
    doc["input_digest"] = "xyz"
    with pytest.raises(jsonschema.ValidationError):
        validate_document(doc)


def test_round_trip_and_byte_stability(tmp_path):
    doc = build_catalog(2)
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    emit_report(doc, a)
    emit_report(build_catalog(2), b)
    assert a.read_bytes() == b.read_bytes()
    back = parse_report(a)
    assert dumps(back) == a.read_text()


def test_parallel_matches_serial():
    assert dumps(build_catalog(2, jobs=2)) == dumps(build_catalog(2))


def test_schema_mismatch(tmp_path):
    data = build_catalog(1).to_json()
    data["schema_version"] = 2
    p = tmp_path / "r.json"
    p.write_text(json.dumps(data))
    with pytest.raises(SchemaMismatch) as exc:
        parse_report(p)
    assert exc.value.found == 2
    with pytest.raises(SchemaMismatch):
        ReportDocument.from_json({})


def test_limits():
    with pytest.raises(LimitExceeded):
        build_catalog(5)


def test_write_atomic_errors(tmp_path):
    with pytest.raises(IoError):
        write_atomic(tmp_path / "nope" / "x.json", "{}")
    target = tmp_path / "x.json"
    write_atomic(target, "{}\n")
    assert target.read_text() == "{}\n"
    assert [p.name for p in tmp_path.iterdir()] == ["x.json"]
