# Copyright 2026 The pairq Authors.
# SPDX-License-Identifier: Apache-2.0

import json
import os
import shutil
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def fixtures():
    return Path(os.environ.get("PAIRQ_FIXTURES", ROOT / "fixtures"))


@pytest.fixture(scope="session")
def schema():
    path = Path(os.environ.get("PAIRQ_SCHEMA", ROOT / "schema" / "run_report.schema.json"))
    return json.loads(path.read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def cli():
    exe = os.environ.get("PAIRQ_CLI") or shutil.which("pairq")
    if not exe:
        candidate = ROOT / "build" / "pairq"
        exe = str(candidate) if candidate.exists() else None
    if not exe:
        pytest.skip("pairq executable not found")
    return exe
