"""Abstract input controller and implementations for reading JSON documents"""

import contextlib
import os
import sys
from abc import ABC, abstractmethod
from typing import Iterator, TextIO

from ksymp.errors import InputError


class InputController(ABC):
    """Abstract base class for input controllers"""

    @property
    @abstractmethod
    def name(self) -> str:
        """
        Get the name of the input source.

        Returns:
            The name of the input source
        """

    @abstractmethod
    def read(self) -> str:
        """
        Read the whole document.

        Returns:
            The document text
        """


class FileInputController(InputController):
    """Reads a document from an open file"""

    def __init__(self, file: TextIO) -> None:
        self._file = file

    @property
    def name(self) -> str:
        """Get the basename of the input source"""
        return os.path.basename(self._file.name)

    def read(self) -> str:
        """Read the file from its current position to the end"""
        return self._file.read()


class StdinInputController(InputController):
    """Reads a document piped on standard input"""

    def __init__(self, input_stream: TextIO) -> None:
        self._input_stream = input_stream
        self._text: str | None = None

    @property
    def name(self) -> str:
        """Get the name of the input source"""
        return "<stdin>"

    def read(self) -> str:
        """Read stdin once; later calls return the same text"""
        if self._text is None:
            self._text = self._input_stream.read()
        return self._text


@contextlib.contextmanager
def create_input_controller(file_name: str | None) -> Iterator[InputController]:
    """Create an InputController for a path, or for stdin when the path is None or "-" """
    if file_name and file_name != "-":
        try:
            file = open(file_name, "r", encoding="utf-8")  # pylint: disable=consider-using-with
        except OSError as error:
            raise InputError("--input", f"cannot open {file_name!r}: {error.strerror}") from error
        with file:
            yield FileInputController(file)
    else:
        yield StdinInputController(sys.stdin)
