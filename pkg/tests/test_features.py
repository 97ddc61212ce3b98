import math

import pytest
from hypothesis import given, strategies as st

from oracles import cosine as oracle_cosine, hamming as oracle_hamming
from phonovec import (
    FeatureInventory, FeatureVector, UnknownFeatureError, ZeroVectorError,
    cosine_similarity, hamming_distance, new_zero_vector, set_feature, signature,
)
from phonovec.errors import InventoryMismatchError
from phonovec.features import from_signature

INV = FeatureInventory.default()
ternary_vectors = st.lists(st.sampled_from((-1, 0, 1)), min_size=39, max_size=39).map(
    lambda xs: FeatureVector(tuple(xs), INV)
)
nonzero_vectors = ternary_vectors.filter(lambda v: any(v.values))


def test_default_inventory_has_39_unique_features():
    assert len(INV) == 39
    assert len(set(INV.features)) == 39
    assert sorted(INV.index.values()) == list(range(39))
    for name in ("hitone", "hireg", "loreg", "contour", "rising", "falling", "velaric",
                 "backshift", "frontshift", "opening", "closing", "centering",
                 "longdistance", "secondrounded"):
        assert name in INV


def test_duplicate_names_rejected():
    with pytest.raises(ValueError):
        FeatureInventory(("a", "a"))


def test_inventory_from_file(tmp_path):
    p = tmp_path / "inv.txt"
    p.write_text("# comment\nalpha\nbeta\n", encoding="utf-8")
    inv = FeatureInventory.from_file(p)
    assert inv.features == ("alpha", "beta")
    assert inv.position("beta") == 1


def test_zero_vector():
    v = new_zero_vector()
    assert v.values == (0,) * 39
    assert sum(abs(x) for x in v) == 0
    assert new_zero_vector(FeatureInventory(("x",))).values == (0,)


def test_set_feature_overwrites():
    v = set_feature(set_feature(new_zero_vector(), "voi", 1), "voi", -1)
    assert v["voi"] == -1
    only = set_feature(new_zero_vector(), "lab", 1)
    assert only.nonzero() == {"lab"}


def test_set_feature_unknown_name():
    with pytest.raises(UnknownFeatureError) as err:
        set_feature(new_zero_vector(), "xyz", 1)
    assert "xyz" in str(err.value)


@pytest.mark.parametrize("bad", [2, -2, 0.5])
def test_non_ternary_rejected(bad):
    with pytest.raises(ValueError):
        FeatureVector((bad,) + (0,) * 38, INV)


def test_wrong_length_rejected():
    with pytest.raises(ValueError):
        FeatureVector((0,) * 38, INV)


@given(st.lists(st.sampled_from((-1, 0, 1)), min_size=1, max_size=20))
def test_last_write_wins(writes):
    v = new_zero_vector()
    for w in writes:
        v = set_feature(v, "cor", w)
    assert v["cor"] == writes[-1]
    assert v.nonzero() <= {"cor"}


def test_cosine_examples(model):
    p, b, n = model("p"), model("b"), model("n")
    assert cosine_similarity(p, p) == 1.0
    assert cosine_similarity(p, b) > cosine_similarity(p, n)
    assert cosine_similarity(model("p"), model("k")) > cosine_similarity(model("p"), model("ŋ"))


@pytest.mark.parametrize("a, b, expected", [
    # frozen from hand-rolled dot products over the 39 slots
    ("p", "b", 16 / 18),
    ("p", "n", 8 / math.sqrt(18 * 20)),
    ("p", "k", 14 / math.sqrt(18 * 22)),
    ("p", "ŋ", 8 / math.sqrt(18 * 22)),
])
def test_cosine_frozen_values(model, a, b, expected):
    assert cosine_similarity(model(a), model(b)) == pytest.approx(expected, abs=1e-12)
    assert oracle_cosine(model(a).values, model(b).values) == pytest.approx(expected, abs=1e-12)


def test_cosine_zero_vector_error(model):
    with pytest.raises(ZeroVectorError):
        cosine_similarity(new_zero_vector(), model("p"))


@given(nonzero_vectors, nonzero_vectors)
def test_cosine_symmetric_bounded(a, b):
    c = cosine_similarity(a, b)
    assert c == cosine_similarity(b, a)
    assert -1.0 - 1e-12 <= c <= 1.0 + 1e-12
    assert c == pytest.approx(oracle_cosine(a.values, b.values), abs=1e-12)


@given(nonzero_vectors)
def test_cosine_self_is_one(v):
    assert cosine_similarity(v, v) == pytest.approx(1.0, abs=1e-15)


def test_hamming_frozen(model):
    assert hamming_distance(model("p"), model("b")) == 1
    assert hamming_distance(model("p"), model("m")) == 3
    assert hamming_distance(model("p"), model("b")) == oracle_hamming(model("p").values, model("b").values)


@given(ternary_vectors, ternary_vectors)
def test_hamming_properties(a, b):
    d = hamming_distance(a, b)
    assert d == hamming_distance(b, a) == oracle_hamming(a.values, b.values)
    assert 0 <= d <= 39
    assert (d == 0) == (a.values == b.values)


def test_hamming_inventory_mismatch():
    other = FeatureInventory(tuple(f"f{i}" for i in range(39)))
    with pytest.raises(InventoryMismatchError):
        hamming_distance(new_zero_vector(), new_zero_vector(other))


def test_signature_examples(model):
    assert signature(new_zero_vector()) == "0" * 39
    assert signature(model("p")) != signature(model("b"))
    assert signature(model("ə́")) == signature(model("ə"))


@given(ternary_vectors, ternary_vectors)
def test_signature_bijective(a, b):
    assert (signature(a) == signature(b)) == (a.values == b.values)
    assert from_signature(signature(a)).values == a.values
