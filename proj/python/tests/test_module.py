# Copyright 2026 The pairq Authors.
# SPDX-License-Identifier: Apache-2.0

import json

import jsonschema
import numpy as np
import pytest

import pairq


def reference(path):
    return json.loads(path.with_suffix(".ref.json").read_text(encoding="utf-8"))


def test_spa_resources_n2(fixtures):
    system = pairq.load_system(str(fixtures / "n2_sto-3g" / "r1.10.fcidump")).active
    spa = pairq.build_ansatz(system, "SPA")
    assert pairq.resources(pairq.compile(spa, 2)) == {"n_params": 3, "n_cnot": 9, "depth": 3, "n_qubits": 12}
    assert pairq.resources(pairq.compile(spa, 0))["n_cnot"] == 144


def test_h2_spa_reaches_fci(fixtures):
    path = fixtures / "h2_sto-3g" / "r0.74.fcidump"
    system = pairq.load_system(str(path)).active
    h = pairq.qubit_hamiltonian(system)
    result = pairq.minimize(pairq.build_ansatz(system, "SPA"), h)
    assert result.converged
    assert abs(result.energy - reference(path)["e_fci"]) < 1e-8
    assert result.iterations <= 15


def test_state_is_normalized_and_matches_energy(fixtures):
    system = pairq.load_system(str(fixtures / "beh2_sto-3g" / "r1.30.fcidump")).active
    c = pairq.build_ansatz(system, "UpCCGSD")
    rng = np.random.default_rng(3)
    params = {name: float(v) for name, v in zip(c.parameters, rng.uniform(-1, 1, len(c.parameters)))}
    psi = pairq.simulate(c, params)
    assert psi.shape == (2**c.n_qubits,)
    assert abs(np.vdot(psi, psi).real - 1.0) < 1e-12
    g_shift = np.array(pairq.gradient(c, params, pairq.qubit_hamiltonian(system), mode="shift"))
    g_fd = np.array(pairq.gradient(c, params, pairq.qubit_hamiltonian(system), mode="fd"))
    assert np.max(np.abs(g_shift - g_fd)) < 1e-6


def test_hcb_and_jw_energies_agree(fixtures):
    system = pairq.load_system(str(fixtures / "beh2_sto-3g" / "r2.50.fcidump")).active
    jw = pairq.build_ansatz(system, "SPA")
    hcb = pairq.build_ansatz(system, "SPA", hcb=True)
    assert hcb.n_qubits == system.n_orbitals
    params = {name: 0.3 * (i + 1) for i, name in enumerate(jw.parameters)}
    e_jw = pairq.energy(jw, params, pairq.qubit_hamiltonian(system))
    e_hcb = pairq.energy(hcb, params, pairq.hcb_hamiltonian(system))
    assert abs(e_jw - e_hcb) < 1e-10


def test_grammar_errors():
    with pytest.raises(pairq.GrammarError):
        pairq.parse_ansatz("HCB-SPA-UpCCSD")
    assert pairq.parse_ansatz("2-UpCCGSD").k == 2


def test_missing_file_raises_input_error(tmp_path):
    with pytest.raises(pairq.InputError):
        pairq.load_system(str(tmp_path / "missing.fcidump"))


def test_report_validates_against_schema(fixtures, schema):
    report = pairq.optimize(fixtures / "h2_6-31g" / "r0.74.fcidump", "SPA", oo=True, variance=True, fci=True)
    jsonschema.Draft202012Validator(schema).validate(report)
    assert abs(report["fci"]["error"]) < 1e-6
    assert report["variance"]["optimized"] < report["variance"]["hf"]
    assert report["orbital_optimization"]["macro_iterations"] >= 1


def test_packaged_schema_matches_repository(schema):
    assert pairq.run_report_schema() == schema


def test_circuit_text_roundtrip(fixtures):
    system = pairq.load_system(str(fixtures / "lih_sto-3g" / "r1.60.fcidump")).active
    c = pairq.compile(pairq.build_ansatz(system, "SPA"), 2)
    back = pairq.Circuit.from_text(str(c))
    assert str(back) == str(c)
    assert pairq.resources(back) == {"n_params": 4, "n_cnot": 15, "depth": 18, "n_qubits": 10}
