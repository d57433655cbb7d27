import json
import os
import subprocess
from fractions import Fraction

import pytest

import nqh


def test_dimension_and_basis():
    assert nqh.dimension(3, 3) == 7
    assert nqh.dimension(6, 6) == 55
    assert len(nqh.basis(4, 3)) == nqh.dimension(4, 3)
    assert nqh.parameter_indices(2, 2) == ["a_1,1"]
    with pytest.raises(ValueError):
        nqh.dimension(1, 3)


def test_parameters_round_trip():
    p = nqh.sample_parameters(3, 3, 1)
    assert p["M"] == 3 and len(p["values"]) == 7
    assert all(isinstance(v, Fraction) for v in p["values"].values())
    assert nqh.normal_form(p) == nqh.normal_form(nqh._nqh.sample_parameters(3, 3, 1))


def test_normal_form_and_pullback():
    factors, expanded = nqh.normal_form(nqh.sample_parameters(3, 3, 1))
    assert len(factors) == 6
    assert expanded
    assert nqh.strict_transform(nqh.sample_parameters(3, 3, 1), "v4")[:2] == (6, 9)


def test_invalid_point_rejected():
    p = nqh.sample_parameters(3, 3, 1)
    p["values"]["a_1,2"] = p["values"]["a_1,1"]
    with pytest.raises(nqh.InvalidParameters):
        nqh.normal_form(p)


def test_bezout():
    b = nqh.bezout([0, 0, 1])  # x^2
    assert b["G"] == [0, 1]
    assert b["W"] == [Fraction(1, 2)]
    assert b["Z"] == []


def test_matrix():
    m = nqh.matrix(nqh.sample_parameters(3, 3, 1), seed=1)
    assert len(m["entries"]) == 7
    assert [b["rows"][1] - b["rows"][0] for b in m["blocks"]] == [3, 2, 1, 1]
    assert m["determinants"]["A"] != 0
    assert m["passed"]
    lvl = nqh.matrix(nqh.sample_parameters(3, 3, 1), level=1)
    assert lvl["entries"][2][:2] == [0, 0]


def test_verify():
    r = nqh.verify(3, 3, seed=1, trials=1)
    assert r["passed"] and r["seed"] == 1
    names = [c["name"] for c in r["checks"]]
    assert names == sorted(names)


CLI = os.environ.get("NQH_CLI")


@pytest.mark.skipif(not CLI, reason="NQH_CLI not set")
@pytest.mark.parametrize(
    "args, code",
    [
        (["dim", "3", "3"], 0),
        (["dim", "1", "3"], 2),
        (["verify", "3", "3", "--seed", "1", "--trials", "1"], 0),
        (["verify", "3", "3", "--trials", "1", "--inject-fault", "m4-sign"], 1),
        (["matrix", "3", "3", "--level", "9"], 2),
    ],
)
def test_cli_exit_codes(args, code):
    assert subprocess.run([CLI, *args], capture_output=True).returncode == code


@pytest.mark.skipif(not CLI, reason="NQH_CLI not set")
def test_cli_json_is_deterministic():
    run = lambda: subprocess.run([CLI, "matrix", "3", "4", "--seed", "2", "--format", "json"], capture_output=True, text=True).stdout
    a = run()
    assert a == run()
    doc = json.loads(a)
    assert doc["seed"] == 2 and len(doc["entries"]) == 11
