"""Tests for output controllers"""

import io
import pathlib

import pytest

from ksymp.errors import InputError
from ksymp.output_controller import StreamOutputController, create_output_controller


def test_stream_output_controller() -> None:
    """Test that documents are written to the stream in order"""
    stream = io.StringIO()
    controller = StreamOutputController(stream, "buffer")

    controller.write("{}\n")
    controller.write("[]\n")

    assert stream.getvalue() == "{}\n[]\n"
    assert controller.name == "buffer"


def test_file_output(tmp_path: pathlib.Path) -> None:
    """Test writing to a path"""
    path = tmp_path / "result.json"

    with create_output_controller(str(path)) as controller:
        controller.write('{"k": 3}\n')

    assert path.read_text(encoding="utf-8") == '{"k": 3}\n'


def test_unwritable_output(tmp_path: pathlib.Path) -> None:
    """Test that a path in a missing directory is reported against --output"""
    with pytest.raises(InputError) as error:
        with create_output_controller(str(tmp_path / "missing" / "result.json")):
            pass

    assert error.value.field == "--output"


def test_default_is_stdout() -> None:
    """Test that no path selects stdout"""
    with create_output_controller(None) as controller:
        assert controller.name == "<stdout>"
