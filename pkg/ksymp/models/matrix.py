"""Dense matrices over an exact or float64 backend"""

import dataclasses
from typing import Any, Iterable, Sequence

import numpy as np

from ksymp.models.scalar import (
    IDENTITY_RTOL,
    Backend,
    GaussianRational,
    Scalar,
    is_real_scalar,
)

Vector = np.ndarray


def _is_complex_value(value: Any) -> bool:
    return isinstance(value, (complex, GaussianRational)) or (
        isinstance(value, np.complexfloating)
    )


def make_array(values: Iterable[Any], backend: Backend, ndim: int = 2) -> np.ndarray:
    """Coerce a nested sequence into a numpy array of backend scalars"""
    raw = np.array(list(values) if not isinstance(values, np.ndarray) else values, dtype=object)
    if raw.ndim != ndim:
        raise ValueError(f"expected a {ndim}-dimensional array, got {raw.ndim}")
    coerced = np.empty(raw.shape, dtype=object)
    for index, value in np.ndenumerate(raw):
        coerced[index] = backend.coerce(value)
    if backend.is_exact:
        return coerced
    is_complex = any(_is_complex_value(value) for value in coerced.flat)
    return coerced.astype(backend.dtype(is_complex))


def make_vector(values: Iterable[Any], backend: Backend) -> Vector:
    """Coerce a sequence into a 1-dimensional backend array"""
    return make_array(values, backend, ndim=1)


@dataclasses.dataclass(frozen=True, eq=False)
class Matrix:
    """An immutable rows x cols matrix of backend scalars"""

    entries: np.ndarray
    backend: Backend = Backend.EXACT

    def __post_init__(self) -> None:
        entries = np.array(self.entries, copy=True)
        if entries.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], backend: Backend = Backend.EXACT) -> "Matrix":
        """Build a matrix from a row-major nested sequence"""
        if len(rows) == 0:
            return cls(np.empty((0, 0), dtype=backend.dtype()), backend)
        return cls(make_array(rows, backend), backend)

    @classmethod
    def identity(cls, size: int, backend: Backend = Backend.EXACT) -> "Matrix":
        """Identity matrix"""
        return cls.diagonal([1] * size, backend)

    @classmethod
    def zeros(cls, rows: int, cols: int, backend: Backend = Backend.EXACT) -> "Matrix":
        """Zero matrix"""
        entries = np.empty((rows, cols), dtype=backend.dtype())
        entries.fill(backend.zero())
        return cls(entries, backend)

    @classmethod
    def diagonal(cls, values: Sequence[Any], backend: Backend = Backend.EXACT) -> "Matrix":
        """Diagonal matrix with the given entries"""
        size = len(values)
        rows = [[values[i] if i == j else 0 for j in range(size)] for i in range(size)]
        if size == 0:
            return cls.zeros(0, 0, backend)
        return cls.from_rows(rows, backend)

    @classmethod
    def block_diagonal(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        """Direct sum of square or rectangular blocks"""
        backend = blocks[0].backend
        rows = sum(block.rows for block in blocks)
        cols = sum(block.cols for block in blocks)
        is_complex = any(not block.is_real() for block in blocks)
        entries = np.empty((rows, cols), dtype=backend.dtype(is_complex))
        entries.fill(backend.zero())
        row = col = 0
        for block in blocks:
            entries[row : row + block.rows, col : col + block.cols] = block.entries
            row += block.rows
            col += block.cols
        return cls(entries, backend)

    @classmethod
    def stack_columns(cls, columns: Sequence[Vector], backend: Backend) -> "Matrix":
        """Matrix whose columns are the given vectors"""
        return cls.from_rows([list(row) for row in zip(*columns)], backend)

    @property
    def rows(self) -> int:
        """Number of rows"""
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        """Number of columns"""
        return int(self.entries.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        """(rows, cols)"""
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        """Whether rows == cols"""
        return self.rows == self.cols

    @property
    def T(self) -> "Matrix":  # pylint: disable=invalid-name
        """Transpose"""
        return Matrix(self.entries.T, self.backend)

    def __getitem__(self, index: Any) -> Any:
        return self.entries[index]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.entries @ other.entries, self.backend)

    def apply(self, vector: Vector) -> Vector:
        """Matrix-vector product"""
        return self.entries @ vector

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.entries + other.entries, self.backend)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.entries - other.entries, self.backend)

    def __neg__(self) -> "Matrix":
        return Matrix(-self.entries, self.backend)

    def __mul__(self, scalar: Scalar) -> "Matrix":
        return Matrix(self.entries * self.backend.coerce(scalar), self.backend)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self.entries == other.entries))

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self.entries.flat)))

    def __repr__(self) -> str:
        return f"Matrix({self.to_rows()!r}, {self.backend.value})"

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product self ⊗ other"""
        entries = np.empty(
            (self.rows * other.rows, self.cols * other.cols),
            dtype=np.result_type(self.entries.dtype, other.entries.dtype),
        )
        for (i, j), value in np.ndenumerate(self.entries):
            entries[
                i * other.rows : (i + 1) * other.rows, j * other.cols : (j + 1) * other.cols
            ] = (other.entries * value)
        return Matrix(entries, self.backend)

    def conjugate(self) -> "Matrix":
        """Entrywise complex conjugate"""
        if self.backend.is_exact:
            return Matrix(np.vectorize(lambda x: x.conjugate(), otypes=[object])(self.entries), self.backend)
        return Matrix(np.conj(self.entries), self.backend)

    def max_abs(self) -> float:
        """Largest absolute value of an entry"""
        if self.entries.size == 0:
            return 0.0
        return float(max(abs(value) for value in self.entries.flat))

    def distance(self, other: "Matrix") -> float:
        """Largest absolute entrywise difference"""
        return (self - other).max_abs()

    def is_close(self, other: "Matrix", rtol: float = IDENTITY_RTOL) -> bool:
        """Equality for exact matrices, relative closeness for floats"""
        if self.shape != other.shape:
            return False
        if self.backend.is_exact and other.backend.is_exact:
            return self == other
        scale = max(1.0, self.max_abs(), other.max_abs())
        return self.distance(other) <= rtol * scale

    def is_zero(self) -> bool:
        """Whether every entry vanishes under the backend's zero test"""
        if self.backend.is_exact:
            return all(value == 0 for value in self.entries.flat)
        return self.max_abs() <= IDENTITY_RTOL

    def is_symmetric(self) -> bool:
        """Mᵀ = M exactly or within tolerance"""
        return self.is_square and self.is_close(self.T)

    def is_antisymmetric(self) -> bool:
        """Mᵀ = −M exactly or within tolerance"""
        return self.is_square and self.is_close(-self.T)

    def is_real(self) -> bool:
        """Whether all entries are real"""
        return all(is_real_scalar(value, self.backend) for value in self.entries.flat)

    def trace(self) -> Scalar:
        """Sum of diagonal entries"""
        total = self.backend.zero()
        for i in range(min(self.rows, self.cols)):
            total = total + self.entries[i, i]
        return total

    def astype(self, backend: Backend) -> "Matrix":
        """Convert entries to another backend"""
        if backend is self.backend:
            return self
        return Matrix.from_rows(self.to_rows(), backend)

    def to_rows(self) -> list[list[Scalar]]:
        """Row-major nested list of scalars"""
        return [list(row) for row in self.entries]

    def flatten(self) -> Vector:
        """Entries as a single vector (row-major)"""
        return self.entries.reshape(-1).copy()
