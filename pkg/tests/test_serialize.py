import json

import numpy as np
import pytest

from steerbound import SchemaError, build_clifford_family, build_mub_family
from steerbound.functionals import (
    canonical_quantum_assemblage,
    clifford_functional,
    mub_functional,
    random_functional,
)
from steerbound.serialize import (
    assemblage_from_json,
    assemblage_to_json,
    canonical_dumps,
    clifford_family_from_json,
    clifford_family_to_json,
    functional_from_json,
    functional_to_json,
    mub_family_from_json,
    mub_family_to_json,
)


def test_canonical_dumps_sorted_and_fixed_format():
    text = canonical_dumps({"b": 1.5, "a": [True, None, -0.0]})
    assert text == '{"a":[true,null,0],"b":1.5}\n'


def test_canonical_dumps_rejects_non_finite():
    with pytest.raises(SchemaError):
        canonical_dumps({"x": float("nan")})


def test_functional_round_trip_is_byte_identical():
    for functional in (
        mub_functional(build_mub_family(3, 4)),
        clifford_functional(build_clifford_family(5)),
        random_functional(2, 7),
    ):
        text = functional_to_json(functional)
        reloaded = functional_from_json(text)
        assert functional_to_json(reloaded) == text
        assert np.array_equal(reloaded.coefficients, functional.coefficients)
        assert reloaded.kind == functional.kind
        assert reloaded.seed == functional.seed


def test_functional_json_layout():
    functional = mub_functional(build_mub_family(2, 3))
    doc = json.loads(functional_to_json(functional))
    assert set(doc) == {"meta", "matrices"}
    assert doc["meta"] == {
        "kind": "mub",
        "d": 2,
        "n": 3,
        "m": 2,
        "seed": None,
        "version": "0.1.0",
    }
    assert len(doc["matrices"]) == 6
    # setting-major order: matrix 2 is F for setting 1, outcome 0
    expected = functional.coefficients[1, 0]
    got = np.array([[complex(re, im) for re, im in row] for row in doc["matrices"][2]])
    assert np.allclose(got, expected, atol=1e-15)


def test_functional_schema_rejects_unknown_keys():
    functional = mub_functional(build_mub_family(2, 3))
    doc = json.loads(functional_to_json(functional))
    doc["extra"] = 1
    with pytest.raises(SchemaError, match="exactly the keys"):
        functional_from_json(json.dumps(doc))
    doc = json.loads(functional_to_json(functional))
    doc["meta"]["note"] = "hi"
    with pytest.raises(SchemaError, match="exactly the keys"):
        functional_from_json(json.dumps(doc))


def test_functional_schema_rejects_bad_shapes():
    functional = mub_functional(build_mub_family(2, 3))
    doc = json.loads(functional_to_json(functional))
    doc["matrices"] = doc["matrices"][:-1]
    with pytest.raises(SchemaError, match="expected 6 matrices"):
        functional_from_json(json.dumps(doc))
    doc = json.loads(functional_to_json(functional))
    doc["matrices"][0][0][0] = [1.0]
    with pytest.raises(SchemaError, match="re, im"):
        functional_from_json(json.dumps(doc))


def test_functional_schema_rejects_bad_kind_and_meta():
    functional = mub_functional(build_mub_family(2, 3))
    doc = json.loads(functional_to_json(functional))
    doc["meta"]["kind"] = "unknown"
    with pytest.raises(SchemaError, match="unknown functional kind"):
        functional_from_json(json.dumps(doc))
    doc["meta"]["kind"] = "mub"
    doc["meta"]["n"] = 0
    with pytest.raises(SchemaError, match="positive integer"):
        functional_from_json(json.dumps(doc))


def test_functional_rejects_invalid_json():
    with pytest.raises(SchemaError, match="invalid JSON"):
        functional_from_json('{"meta": {')


def test_assemblage_round_trip():
    assemblage = canonical_quantum_assemblage(mub_functional(build_mub_family(3, 4)))
    text = assemblage_to_json(assemblage)
    reloaded = assemblage_from_json(text)
    assert np.allclose(reloaded.members, assemblage.members, atol=1e-16)
    assert assemblage_to_json(reloaded) == text


def test_mub_family_round_trip_and_validation():
    family = build_mub_family(5, 6)
    text = mub_family_to_json(family)
    reloaded = mub_family_from_json(text)
    assert np.allclose(reloaded.bases, family.bases, atol=1e-16)
    assert mub_family_to_json(reloaded) == text
    doc = json.loads(text)
    doc["matrices"][0][0] = doc["matrices"][0][1]  # break orthonormality
    with pytest.raises(SchemaError, match="unbiased"):
        mub_family_from_json(json.dumps(doc))


def test_clifford_family_round_trip_and_validation():
    family = build_clifford_family(5)
    text = clifford_family_to_json(family)
    reloaded = clifford_family_from_json(text)
    assert np.array_equal(reloaded.observables, family.observables)
    assert clifford_family_to_json(reloaded) == text
    doc = json.loads(text)
    doc["matrices"][1] = doc["matrices"][0]  # repeated observable
    with pytest.raises(SchemaError, match="anticommuting"):
        clifford_family_from_json(json.dumps(doc))


def test_seventeen_digit_floats_survive_reload():
    functional = mub_functional(build_mub_family(7, 8))
    text = functional_to_json(functional)
    reloaded = functional_from_json(text)
    assert np.array_equal(reloaded.coefficients, functional.coefficients)
