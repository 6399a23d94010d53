import json
import random
from fractions import Fraction

import jsonschema
import pytest
from hypothesis import given

from sidorenko.bounds import bound_grid_links, bound_sparse, bound_tight_cycle
from sidorenko.constructions import complete, cycle, lift, path, tight_cycle
from sidorenko.domination import random_kernel
from sidorenko.exponent import exponent_ratio
from sidorenko.io import (
    FormatError,
    certificate_json,
    kernel_from_json,
    kernel_to_json,
    load_schema,
    parse_hypergraph,
    read_hypergraph,
    read_kernel,
    serialize_hypergraph,
    witness_json,
    write_hypergraph,
)

from conftest import hypergraphs


def validator(name):
    return jsonschema.Draft202012Validator(load_schema(name))


@given(hypergraphs(r=3, max_n=6))
def test_roundtrip(H):
    assert parse_hypergraph(serialize_hypergraph(H, comment="x\ny")) == H


def test_partite_roundtrip(tmp_path):
    T = tight_cycle(3, 6)
    p = tmp_path / "t.hg"
    write_hypergraph(T, p)
    got = read_hypergraph(p)
    assert got == T and got.parts == T.parts


@pytest.mark.parametrize("text,line,match", [
    ("2 3 1\n0 1 2\n", 2, "expected 2"),
    ("2 3 1\n0 x\n", 2, "integer"),
    ("2 3 2\n0 1\n1 0\n", 3, "duplicate"),
    ("2 3 1\n0 3\n", 2, "range"),
    ("2 3 1\n1 1\n", 2, "repeats"),
    ("2 3\n", 1, "header"),
])
def test_errors_carry_position(text, line, match):
    with pytest.raises(FormatError, match=match) as info:
        parse_hypergraph(text)
    assert info.value.line == line


def test_column_reported():
    with pytest.raises(FormatError) as info:
        parse_hypergraph("2 3 1\n0  zz\n")
    assert info.value.col == 4


def test_edge_count_mismatch():
    with pytest.raises(FormatError, match="announces 2"):
        parse_hypergraph("# c\n2 3 2\n0 1\n")


def test_kernel_roundtrip(tmp_path):
    f = random_kernel(3, 3, random.Random(0), signed=True)
    doc = kernel_to_json(f)
    validator("kernel").validate(doc)
    assert kernel_from_json(doc) == f
    p = tmp_path / "k.json"
    p.write_text(json.dumps(doc))
    assert read_kernel(p) == f


def test_kernel_errors(tmp_path):
    with pytest.raises(FormatError, match="malformed"):
        kernel_from_json({"uniformity": 2})
    with pytest.raises(FormatError, match="bad kernel entry"):
        kernel_from_json({"uniformity": 2, "resolution": 2, "entries": {"0,1": "a/b"}})
    p = tmp_path / "bad.json"
    p.write_text('{"uniformity": 2,\n "resolution": }')
    with pytest.raises(FormatError) as info:
        read_kernel(p)
    assert info.value.line == 2


@pytest.mark.parametrize("cert", [
    bound_tight_cycle(2), bound_sparse(tight_cycle(3, 6)), bound_grid_links(lift(path(2), 2), 3),
])
def test_certificates_match_schema(cert):
    doc = json.loads(json.dumps(certificate_json(cert)))
    validator("certificate").validate(doc)
    assert Fraction(int(doc["bound"]["num"]), int(doc["bound"]["den"])) == cert.bound


def test_witness_matches_schema():
    w = exponent_ratio(cycle(4), complete(3))
    doc = witness_json(w, seed=3)
    validator("certificate").validate(doc)
    assert doc["s"] == {"num": "37", "den": "10"}
    assert doc["comparison"] == "t_F^10 <= t_K^37"


def test_schema_rejects_float_rationals():
    bad = {"kind": "bound", "theorem": "sparse", "bound": 72.0, "inputs": {}, "assumptions": [], "transcript": []}
    with pytest.raises(jsonschema.ValidationError):
        validator("certificate").validate(bad)
