"""Shared fixtures for command line tests"""

import pathlib

import pytest


@pytest.fixture(name="log_file")
def log_file_fixture(tmp_path: pathlib.Path) -> pathlib.Path:
    """Keep the log of each run out of the source checkout"""
    return tmp_path / "ksymp.log"
