"""Tests for input controllers"""

import io
import pathlib

import pytest

from ksymp.errors import InputError
from ksymp.input_controller import FileInputController, StdinInputController, create_input_controller


class TestFileInputController:
    """Test reading documents from files"""

    def test_reads_file(self, tmp_path: pathlib.Path) -> None:
        """Test that the whole file is returned and the name is the basename"""
        path = tmp_path / "span.json"
        path.write_text('{"forms": []}', encoding="utf-8")

        with create_input_controller(str(path)) as controller:
            assert isinstance(controller, FileInputController)
            assert controller.name == "span.json"
            assert controller.read() == '{"forms": []}'

    def test_missing_file(self, tmp_path: pathlib.Path) -> None:
        """Test that an unreadable path is reported against --input"""
        with pytest.raises(InputError) as error:
            with create_input_controller(str(tmp_path / "missing.json")):
                pass

        assert error.value.field == "--input"


class TestStdinInputController:
    """Test reading documents from a stream"""

    def test_reads_once(self) -> None:
        """Test that a second read returns the cached text"""
        stream = io.StringIO("[1, 2]")
        controller = StdinInputController(stream)

        first = controller.read()
        second = controller.read()

        assert first == second == "[1, 2]"
        assert controller.name == "<stdin>"

    @pytest.mark.parametrize("file_name", [None, "-"])
    def test_default_is_stdin(self, file_name: str | None) -> None:
        """Test that no path and "-" both select stdin"""
        with create_input_controller(file_name) as controller:
            assert isinstance(controller, StdinInputController)
