import json
import os
import subprocess

import pytest

import kreps


def test_knot_report():
    r = kreps.knot("1^3", 2, rmax=3)
    assert r["determinant"] == "3"
    assert r["alexander_poly"] == "1 - t + t^2"
    assert r["rep_count"] == "1"
    assert r["classes"][0]["modulus"] == 3
    assert r["colorings"][-1] == {"r": 3, "total": "9", "condition_o": "3"}
    assert r["ok"]


def test_figure_eight_and_scalars():
    assert kreps.determinant("1 -2 1 -2", 3) == 5
    assert kreps.alexander_polynomial("1 -2 1 -2", 3) == "1 - 3t + t^2"
    assert kreps.parse_braid("1^2 -2", 3) == [(1, 1), (1, 1), (2, -1)]


def test_surface_and_family():
    s = kreps.surface("1^3 2^3", n=3, fulltwist=2)
    assert s["determinant"] == "9"
    assert s["rep_count"] == "4"
    assert s["closure"]["determinant"] == "9"
    f = kreps.family(3, 3, 1)
    assert f["family"]["passed"]
    assert f["family"]["colorings"] == "27"


def test_linear_algebra():
    assert kreps.smith_invariants([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert kreps.solution_count_mod([[2, -1, -1], [-1, 2, -1]], 3) == 9


def test_errors():
    with pytest.raises(kreps.ParseError):
        kreps.knot("x", 2)
    with pytest.raises(kreps.NotAKnotError):
        kreps.knot("1 1", 2)
    with pytest.raises(kreps.NonCommutingError):
        kreps.surface("1 2", "1", n=3)
    assert issubclass(kreps.ParseError, kreps.KrepsError)


def test_verify_is_deterministic():
    a = kreps.verify(seed=3, trials=15, matrix_trials=15)
    b = kreps.verify(seed=3, trials=15, matrix_trials=15)
    assert a == b
    assert a["ok"]


@pytest.mark.skipif("KREPS_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_json_matches_binding():
    out = subprocess.run(
        [os.environ["KREPS_CLI"], "knot", "1^5", "-n", "2", "--json"],
        check=True, capture_output=True, text=True,
    ).stdout
    assert json.loads(out) == kreps.knot("1^5", 2)
