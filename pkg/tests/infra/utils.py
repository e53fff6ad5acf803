"""Test utilities"""

import json
import os
import pathlib
import subprocess
import sys
from typing import Any

from ksymp.models.matrix import Matrix
from ksymp.models.two_form_span import TwoFormSpan

STANDARD_SYMPLECTIC_4 = [
    [0, 1, 0, 0],
    [-1, 0, 0, 0],
    [0, 0, 0, 1],
    [0, 0, -1, 0],
]


def run_ksymp(
    *args: str, stdin: str | None = None, log_file: pathlib.Path | None = None, timeout: float = 120
) -> subprocess.CompletedProcess[str]:
    """Run `python -m ksymp` and capture its output"""
    env = os.environ.copy()
    if log_file is not None:
        env["KSYMP_LOG_FILE"] = str(log_file)
    return subprocess.run(
        [sys.executable, "-m", "ksymp", *args],
        input=stdin,
        capture_output=True,
        text=True,
        timeout=timeout,
        env=env,
        check=False,
    )


def write_json(path: pathlib.Path, document: Any) -> pathlib.Path:
    """Write a JSON document and return its path"""
    path.write_text(json.dumps(document), encoding="utf-8")
    return path


def standard_form(size: int) -> Matrix:
    """Σ e_{2i} ∧ e_{2i+1} on a space of even dimension"""
    rows = [[0] * size for _ in range(size)]
    for i in range(0, size, 2):
        rows[i][i + 1], rows[i + 1][i] = 1, -1
    return Matrix.from_rows(rows)


def elementary_form(size: int, i: int, j: int) -> Matrix:
    """e_i ∧ e_j"""
    rows = [[0] * size for _ in range(size)]
    rows[i][j], rows[j][i] = 1, -1
    return Matrix.from_rows(rows)


def single_form_span(form: Matrix) -> TwoFormSpan:
    """A 1-dimensional real span"""
    return TwoFormSpan((form,), real_structure=True)
