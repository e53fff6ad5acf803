"""Output controller for writing results, so commands never touch stdout directly"""

import contextlib
import sys
from abc import ABC, abstractmethod
from typing import Iterator, TextIO

from ksymp.errors import InputError


class OutputController(ABC):
    """Abstract destination for result documents"""

    @property
    @abstractmethod
    def name(self) -> str:
        """Get the name of the destination"""

    @abstractmethod
    def write(self, text: str) -> None:
        """Write a complete document"""


class StreamOutputController(OutputController):
    """Writes to an already open text stream"""

    def __init__(self, stream: TextIO, name: str) -> None:
        self._stream = stream
        self._name = name

    @property
    def name(self) -> str:
        return self._name

    def write(self, text: str) -> None:
        self._stream.write(text)
        self._stream.flush()


@contextlib.contextmanager
def create_output_controller(file_name: str | None) -> Iterator[OutputController]:
    """Create an OutputController for a path, or for stdout when the path is None or "-" """
    if file_name and file_name != "-":
        try:
            file = open(file_name, "w", encoding="utf-8")  # pylint: disable=consider-using-with
        except OSError as error:
            raise InputError("--output", f"cannot open {file_name!r}: {error.strerror}") from error
        with file:
            yield StreamOutputController(file, file_name)
    else:
        yield StreamOutputController(sys.stdout, "<stdout>")
