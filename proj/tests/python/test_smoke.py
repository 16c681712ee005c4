import json
import math
import os
import subprocess

import numpy as np
import pytest

import pqdeform as pq


def test_structure_function_values():
    params = pq.DeformationParams(p=2, q=3, alpha=1, beta=0, nu=1, gamma=0)
    assert [pq.f(params, n) for n in range(4)] == [0.0, 1.0, 5.0, 19.0]
    assert pq.f_recurrence(params, 10) == pytest.approx(pq.f(params, 10), rel=1e-12)
    assert pq.regime(params)[:2] == ("generic", "negative")


def test_invalid_parameters_raise():
    with pytest.raises(ValueError):
        pq.DeformationParams(p=-1.0)


def test_fock_matrices_and_relations():
    params = pq.DeformationParams(p=2, q=3, alpha=1, nu=1, gamma=0.3)
    ops = pq.build_fock(params, 8)
    assert ops.a.shape == (8, 8)
    assert np.allclose(ops.adag, ops.a.conj().T)
    report = pq.verify_relations(ops, params)
    assert report["pass"]
    assert set(report["residuals"]) == {"R1", "R2", "R3", "R4", "R5", "R6"}
    assert pq.verify_bracket_identity(ops, params, 3)["pass"]


def test_positivity_and_interval():
    params = pq.DeformationParams(p=2, q=3, alpha=1, nu=1, gamma=3.0)
    assert pq.admissible_gamma(params) == pytest.approx((-1.0, 5.0))
    assert pq.check_positivity(params)["verdict"] == "violation_at"
    with pytest.raises(ArithmeticError):
        pq.build_fock(params, 8)


def test_classification():
    params = pq.DeformationParams(p=2, q=3, alpha=1, nu=1, gamma=0.5)
    rep = pq.classify(params, B=-5.0)
    assert rep["class"] == "two_dimensional"
    assert rep["lambda"][1] == pytest.approx(2.0, abs=1e-12)
    with pytest.raises(ValueError):
        pq.classify(params, B=3.0)


def test_spectrum():
    params = pq.preset("undeformed")
    assert [pq.energy(params, n) for n in range(3)] == pytest.approx([0.5, 1.5, 2.5])
    deformed = pq.DeformationParams(p=2, q=3, alpha=1, nu=1, gamma=0.2)
    for n in range(10):
        assert pq.energy_parametrized(deformed, n) == pytest.approx(pq.energy(deformed, n), rel=1e-9)
    sp = pq.reparametrize(deformed)
    assert sp["mu"] == pytest.approx(0.5 * math.log(2 / 3))


def test_presets():
    cj = pq.preset("chakrabarty-jagannathan", p0=2.0, q0=3.0)
    for n in range(10):
        textbook = (2.0 ** -n - 3.0 ** n) / (0.5 - 3.0)
        assert pq.f(cj, n) == pytest.approx(textbook, rel=1e-10)


@pytest.mark.skipif("PQDEFORM_CLI" not in os.environ, reason="CLI binary not provided")
def test_cli_json_matches_module():
    result = subprocess.run(
        [os.environ["PQDEFORM_CLI"], "eval", "--p", "1.5", "--q", "0.7", "--alpha", "2",
         "--nu", "1", "--gamma", "0.1", "--format", "json"],
        capture_output=True, text=True, check=True)
    doc = json.loads(result.stdout)
    params = pq.DeformationParams(**doc["params"])
    for row in doc["rows"]:
        assert row["f"] == pq.f(params, row["n"])
