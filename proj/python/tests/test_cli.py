# Copyright 2026 The pairq Authors.
# SPDX-License-Identifier: Apache-2.0

import csv
import io
import json
import subprocess

import jsonschema


def run(cli, *args):
    return subprocess.run([cli, *map(str, args)], capture_output=True, text=True, encoding="utf-8")


def test_resources_json(cli, fixtures):
    p = run(cli, "resources", fixtures / "n2_sto-3g" / "r1.10.fcidump", "SPA", "--level", "2", "--json")
    assert p.returncode == 0, p.stderr
    r = json.loads(p.stdout)
    assert (r["n_params"], r["n_cnot"], r["depth"]) == (3, 9, 3)


def test_exit_codes(cli, fixtures, tmp_path):
    h2 = fixtures / "h2_sto-3g" / "r0.74.fcidump"
    assert run(cli, "resources", h2, "HCB-SPA-UpCCSD").returncode == 2
    assert run(cli, "resources", h2, "SPA", "--level", "7").returncode == 2
    assert run(cli, "frobnicate").returncode == 2
    assert run(cli, "optimize", tmp_path / "missing.fcidump", "SPA").returncode == 3
    bad = tmp_path / "bad.fcidump"
    bad.write_text("not an fcidump\n", encoding="utf-8")
    p = run(cli, "optimize", bad, "SPA")
    assert p.returncode == 3
    assert json.loads(p.stdout)["error"]["exit_code"] == 3
    assert run(cli, "scan", str(tmp_path / "*.none")).returncode == 3


def test_optimizer_failure_exit_code(cli, tmp_path):
    # a NaN integral makes the energy non-finite
    dump = tmp_path / "nan.fcidump"
    dump.write_text(
        "&FCI NORB=2,NELEC=2,MS2=0,\n ORBSYM=1,1,\n ISYM=1,\n&END\n"
        "  nan 1 1 1 1\n  0.5 2 2 2 2\n  0.2 2 1 2 1\n  -1.2 1 1 0 0\n  -0.4 2 2 0 0\n  0.7 0 0 0 0\n",
        encoding="utf-8",
    )
    p = run(cli, "optimize", dump, "SPA")
    assert p.returncode == 4, p.stderr
    assert json.loads(p.stdout)["error"]["kind"] == "optimizer"


def test_optimize_report(cli, fixtures, schema, tmp_path):
    out = tmp_path / "report.json"
    p = run(cli, "optimize", fixtures / "beh2_sto-3g" / "r1.30.fcidump", "SPA", "--hcb", "--variance", "--fci",
            "--seed", "11", "--out", out)
    assert p.returncode == 0, p.stderr
    report = json.loads(out.read_text(encoding="utf-8"))
    jsonschema.Draft202012Validator(schema).validate(report)
    assert report["resources"]["n_qubits"] == 4
    assert report["optimizer"]["seed"] == 11
    assert report["result"]["energy"] >= report["fci"]["energy"]


def test_optimize_is_deterministic(cli, fixtures):
    args = ("optimize", fixtures / "lih_sto-3g" / "r2.40.fcidump", "UpCCSD", "--starts", "3", "--seed", "5")
    a, b = json.loads(run(cli, *args).stdout), json.loads(run(cli, *args).stdout)
    assert a["result"] == b["result"]


def test_scan_rows_and_bound(cli, fixtures):
    p = run(cli, "scan", fixtures / "lih_sto-3g" / "*.fcidump", "--ansatz", "SPA,SPA+GS", "--fci")
    assert p.returncode == 0, p.stderr
    rows = list(csv.DictReader(io.StringIO(p.stdout)))
    assert len(rows) == 9
    assert [r["geometry"] for r in rows[::3]] == ["r1.60", "r2.40", "r3.20"]
    for r in rows:
        assert float(r["energy"]) >= float(r["fci"]) - 1e-9


def test_scan_npe(cli, fixtures):
    p = run(cli, "scan", fixtures / "h2_sto-3g" / "*.fcidump", "--ansatz", "SPA", "--npe")
    assert p.returncode == 0, p.stderr
    npe = p.stdout.split("\n\n")[1]
    rows = list(csv.DictReader(io.StringIO(npe)))
    assert rows[0]["method"] == "SPA"
    assert abs(float(rows[0]["npe"])) < 1e-8  # SPA is exact for two electrons in two orbitals
