import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from equidet import ForceSystem, VectorConfiguration, tensor_from_json, tensor_to_json
from equidet.tensorfile import dump_tensor, format_scalar, load_tensor, parse_scalar


def make_doc(**overrides):
    doc = {
        "r": 2,
        "d": 2,
        "q": 4,
        "kind": "forces",
        "entries": [
            {"idx": [1, 2], "vec": ["3", "-1/2"]},
            {"idx": [3, 4], "vec": ["0", "7"]},
        ],
    }
    doc.update(overrides)
    return doc


def test_parse_scalar_accepts_integers_and_fractions():
    assert parse_scalar("3") == 3
    assert parse_scalar("-12") == -12
    assert parse_scalar("-1/2") == Fraction(-1, 2)
    assert parse_scalar("10/4") == Fraction(5, 2)


@pytest.mark.parametrize("bad", ["1.5", "1/-2", "", "a", "1e3", " 2", "3/0", None, 3])
def test_parse_scalar_rejects_non_exact_forms(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


@given(st.fractions())
def test_scalar_roundtrip(x):
    assert parse_scalar(format_scalar(x)) == x


def test_parse_forces_document():
    f = tensor_from_json(make_doc())
    assert isinstance(f, ForceSystem)
    assert f.get((1, 2)) == (3, Fraction(-1, 2))
    assert f.get((2, 1)) == (-3, Fraction(1, 2))
    assert f.get((1, 3)) == (0, 0)  # missing tuple reads zero


def test_parse_configuration_document():
    v = tensor_from_json(make_doc(kind="configuration"))
    assert isinstance(v, VectorConfiguration)
    assert v.get((1, 2)) == (3, Fraction(-1, 2))


def test_roundtrip_is_canonical_idempotent():
    doc = make_doc()
    once = tensor_to_json(tensor_from_json(doc))
    twice = tensor_to_json(tensor_from_json(once))
    assert once == twice
    # canonical form sorts entries in colex order and keeps lowest terms
    f = ForceSystem(2, 2, 4, {(1, 4): (Fraction(2, 4), 0), (1, 2): (1, 1)})
    out = tensor_to_json(f)
    assert [e["idx"] for e in out["entries"]] == [[1, 2], [1, 4]]
    assert out["entries"][1]["vec"] == ["1/2", "0"]


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("r"),
        lambda d: d.update(r=0),
        lambda d: d.update(r=True),
        lambda d: d.update(kind="tensor"),
        lambda d: d.update(entries="nope"),
        lambda d: d["entries"].append({"idx": [1, 2], "vec": ["1", "1"]}),  # duplicate
        lambda d: d["entries"].append({"idx": [2, 1], "vec": ["1", "1"]}),  # not increasing
        lambda d: d["entries"].append({"idx": [1, 9], "vec": ["1", "1"]}),  # out of range
        lambda d: d["entries"].append({"idx": [1], "vec": ["1", "1"]}),  # wrong arity
        lambda d: d["entries"].append({"idx": [1, 3], "vec": ["1"]}),  # wrong length
        lambda d: d["entries"].append({"idx": [1, 3], "vec": ["1", "0.5"]}),  # float string
        lambda d: d["entries"].append({"idx": [1, 3], "vec": ["1", 2]}),  # bare number
    ],
)
def test_malformed_documents_rejected(mutate):
    doc = make_doc()
    mutate(doc)
    with pytest.raises(ValueError):
        tensor_from_json(doc)


def test_non_object_document_rejected():
    with pytest.raises(ValueError):
        tensor_from_json([1, 2, 3])


def test_zero_vectors_dropped_on_write():
    f = ForceSystem(2, 2, 4, {(1, 2): (0, 0), (1, 3): (1, 0)})
    out = tensor_to_json(f)
    assert [e["idx"] for e in out["entries"]] == [[1, 3]]


def test_file_roundtrip(tmp_path):
    f = ForceSystem(2, 2, 4, {(1, 2): (Fraction(1, 3), -2)})
    path = tmp_path / "forces.json"
    dump_tensor(f, path)
    g = load_tensor(path)
    assert g == f


def test_load_rejects_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ValueError):
        load_tensor(path)


def test_field_order_irrelevant(tmp_path):
    path = tmp_path / "reordered.json"
    path.write_text(
        json.dumps(
            {
                "entries": [{"vec": ["1", "2"], "idx": [1, 2]}],
                "kind": "configuration",
                "q": 4,
                "d": 2,
                "r": 2,
            }
        ),
        encoding="utf-8",
    )
    v = load_tensor(path)
    assert v.get((1, 2)) == (1, 2)
