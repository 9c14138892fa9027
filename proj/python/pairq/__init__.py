# Copyright 2026 The pairq Authors.
# SPDX-License-Identifier: Apache-2.0
"""Separable-pair and pair-restricted coupled-cluster circuits."""

import json
from pathlib import Path

from ._core import *  # noqa: F401,F403
from ._core import __version__, optimize_report as _optimize_report

SCHEMA_PATH = Path(__file__).with_name("run_report.schema.json")


def optimize(fcidump, ansatz, **kwargs):
    """Run the optimize pipeline and return the run report as a dict."""
    return json.loads(_optimize_report(str(fcidump), ansatz, **kwargs))


def run_report_schema():
    return json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))
