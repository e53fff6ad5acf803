"""Dense linear algebra over the exact and float64 backends

Exact matrices are reduced by fraction-preserving Gaussian elimination or handed
to sympy's DomainMatrix over QQ / QQ_I. Float matrices go through numpy's SVD and
LAPACK routines. Both share the relative tolerance policy of `ksymp.models.scalar`.
"""

import itertools
import logging
from typing import Any, NamedTuple, Sequence

import numpy as np
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from ksymp.errors import NonInvertible, NonSymmetric, NotAntisymmetric, NotReal, OddDimension
from ksymp.models.matrix import Matrix, Vector, make_vector
from ksymp.models.scalar import RANK_RTOL, Backend, Scalar, from_domain, sign_of, to_domain

logger = logging.getLogger(__name__)

EXPANSION_MAX_SIZE = 8


class RankKernel(NamedTuple):
    """Rank of a matrix together with a basis of its kernel"""

    rank: int
    kernel: list[Vector]


class Inertia(NamedTuple):
    """Counts of negative, positive and zero directions of a symmetric form"""

    minuses: int
    pluses: int
    zeros: int


class Congruence(NamedTuple):
    """T and d with T · S · Tᵀ = diag(d)"""

    transform: Matrix
    diagonal: list[Scalar]


def _is_pivot(value: Any, backend: Backend, scale: float) -> bool:
    return not backend.is_zero(value, scale)


def row_echelon(entries: np.ndarray, backend: Backend) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and its pivot columns

    Exact arrays pivot on the first nonzero entry, float arrays on the entry of
    largest magnitude; float entries below the rank tolerance count as zero.
    """
    work = np.array(entries, copy=True)
    rows, cols = work.shape
    scale = float(np.max(np.abs(work.astype(complex)))) if work.size and not backend.is_exact else 1.0
    pivots: list[int] = []
    pivot_row = 0
    for col in range(cols):
        if pivot_row == rows:
            break
        candidates = [r for r in range(pivot_row, rows) if _is_pivot(work[r, col], backend, scale)]
        if not candidates:
            continue
        if backend.is_exact:
            best = candidates[0]
        else:
            best = max(candidates, key=lambda r: abs(work[r, col]))
        if best != pivot_row:
            work[[pivot_row, best]] = work[[best, pivot_row]]
        work[pivot_row] = work[pivot_row] / work[pivot_row, col]
        for r in range(rows):
            if r != pivot_row and work[r, col] != 0:
                work[r] = work[r] - work[r, col] * work[pivot_row]
        pivots.append(col)
        pivot_row += 1
    return work, pivots


def rank_kernel(m: Matrix) -> RankKernel:
    """Rank and a kernel basis of a matrix"""
    backend = m.backend
    if m.entries.size == 0:
        return RankKernel(0, [make_vector([1 if i == j else 0 for i in range(m.cols)], backend) for j in range(m.cols)])
    if not backend.is_exact:
        _, singular, vh = np.linalg.svd(m.entries)
        threshold = RANK_RTOL * (singular[0] if singular.size else 0.0)
        rank = int(np.sum(singular > threshold))
        return RankKernel(rank, [np.conj(row) for row in vh[rank:]])
    reduced, pivots = row_echelon(m.entries, backend)
    kernel = []
    for free in (c for c in range(m.cols) if c not in pivots):
        vector = [backend.zero()] * m.cols
        vector[free] = backend.one()
        for row, pivot in enumerate(pivots):
            vector[pivot] = -reduced[row, free]
        kernel.append(make_vector(vector, backend))
    return RankKernel(len(pivots), kernel)


def rank(m: Matrix) -> int:
    """Rank of a matrix"""
    return rank_kernel(m).rank


def _require_symmetric(sym: Matrix) -> None:
    if not sym.is_square:
        raise NonSymmetric(f"expected a square matrix, got {sym.rows}x{sym.cols}")
    if not sym.is_symmetric():
        raise NonSymmetric(f"matrix is not symmetric (deviation {sym.distance(sym.T):g})")


def ldl_diagonalize(sym: Matrix) -> Congruence:
    """Congruence-diagonalize a symmetric matrix by symmetric-pivoting LDL

    Returns T with T · sym · Tᵀ diagonal. No conjugation is applied, so complex
    symmetric matrices are diagonalized as bilinear forms.
    """
    _require_symmetric(sym)
    backend = sym.backend
    size = sym.rows
    work = np.array(sym.entries, copy=True)
    transform = np.array(Matrix.identity(size, backend).entries, dtype=work.dtype)
    scale = sym.max_abs()
    diagonal: list[Scalar] = []
    for step in range(size):
        pivot = _diagonal_pivot(work, step, backend, scale)
        if pivot is None:
            pair = _off_diagonal_pivot(work, step, backend, scale)
            if pair is None:
                diagonal.extend([backend.zero()] * (size - step))
                break
            target, source = pair
            work[target, :] = work[target, :] + work[source, :]
            work[:, target] = work[:, target] + work[:, source]
            transform[target, :] = transform[target, :] + transform[source, :]
            pivot = target
        if pivot != step:
            work[[step, pivot]] = work[[pivot, step]]
            work[:, [step, pivot]] = work[:, [pivot, step]]
            transform[[step, pivot]] = transform[[pivot, step]]
        head = work[step, step]
        for row in range(step + 1, size):
            factor = work[row, step] / head
            if factor == 0:
                continue
            work[row, :] = work[row, :] - factor * work[step, :]
            work[:, row] = work[:, row] - factor * work[:, step]
            transform[row, :] = transform[row, :] - factor * transform[step, :]
        diagonal.append(head)
    return Congruence(Matrix(transform, backend), diagonal)


def _diagonal_pivot(work: np.ndarray, step: int, backend: Backend, scale: float) -> int | None:
    candidates = [i for i in range(step, work.shape[0]) if _is_pivot(work[i, i], backend, scale)]
    if not candidates:
        return None
    if backend.is_exact:
        return candidates[0]
    return max(candidates, key=lambda i: abs(work[i, i]))


def _off_diagonal_pivot(
    work: np.ndarray, step: int, backend: Backend, scale: float
) -> tuple[int, int] | None:
    best: tuple[int, int] | None = None
    best_value = 0.0
    for i, j in itertools.combinations(range(step, work.shape[0]), 2):
        if _is_pivot(work[i, j], backend, scale):
            if backend.is_exact:
                return i, j
            if abs(work[i, j]) > best_value:
                best, best_value = (i, j), abs(work[i, j])
    return best


def signature(sym: Matrix) -> Inertia:
    """Sylvester inertia (minuses, pluses, zeros) of a real symmetric matrix"""
    _require_symmetric(sym)
    if not sym.is_real():
        raise NotReal("signature is only defined for real symmetric matrices")
    _, diagonal = ldl_diagonalize(sym)
    scale = sym.max_abs()
    signs = [sign_of(value, sym.backend, scale) for value in diagonal]
    return Inertia(signs.count(-1), signs.count(1), signs.count(0))


def _require_antisymmetric(m: Matrix) -> None:
    if not m.is_square:
        raise NotAntisymmetric(f"expected a square matrix, got {m.rows}x{m.cols}")
    if m.rows % 2:
        raise OddDimension(f"pfaffian of a {m.rows}x{m.rows} matrix")
    if not m.is_antisymmetric():
        raise NotAntisymmetric(f"matrix is not antisymmetric (deviation {m.distance(-m.T):g})")


def pfaffian(m: Matrix) -> Scalar:
    """Pfaffian of an antisymmetric matrix of even size

    Sizes up to 8 use the expansion along the first row; larger matrices are
    reduced by skew-symmetric Parlett-Reid elimination.
    """
    _require_antisymmetric(m)
    if m.rows <= EXPANSION_MAX_SIZE:
        return _pfaffian_expansion(m.entries, tuple(range(m.rows)), m.backend)
    return _pfaffian_parlett_reid(m)


def _pfaffian_expansion(entries: np.ndarray, indices: tuple[int, ...], backend: Backend) -> Scalar:
    if not indices:
        return backend.one()
    first, rest = indices[0], indices[1:]
    total = backend.zero()
    for position, other in enumerate(rest):
        value = entries[first, other]
        if value == 0:
            continue
        minor = rest[:position] + rest[position + 1 :]
        term = value * _pfaffian_expansion(entries, minor, backend)
        total = total - term if position % 2 else total + term
    return total


def _pfaffian_parlett_reid(m: Matrix) -> Scalar:
    backend = m.backend
    work = np.array(m.entries, copy=True)
    size = m.rows
    result = backend.one()
    for k in range(0, size - 1, 2):
        column = work[k + 1 :, k]
        if backend.is_exact:
            nonzero = [i for i, value in enumerate(column) if value != 0]
            offset = nonzero[0] if nonzero else 0
        else:
            offset = int(np.argmax(np.abs(column)))
        pivot = k + 1 + offset
        if pivot != k + 1:
            work[[k + 1, pivot]] = work[[pivot, k + 1]]
            work[:, [k + 1, pivot]] = work[:, [pivot, k + 1]]
            result = -result
        head = work[k, k + 1]
        if head == 0:
            return backend.zero()
        result = result * head
        if k + 2 < size:
            tau = work[k, k + 2 :] / head
            below = work[k + 2 :, k + 1]
            work[k + 2 :, k + 2 :] = (
                work[k + 2 :, k + 2 :] + np.outer(tau, below) - np.outer(below, tau)
            )
    return result


def _domain_matrix(*matrices: Matrix) -> list[DomainMatrix]:
    """Exact matrices as DomainMatrix over QQ, or over QQ_I when any entry is Gaussian"""
    domain = QQ if all(m.is_real() for m in matrices) else QQ_I
    return [
        DomainMatrix(
            [[to_domain(value, domain) for value in row] for row in m.entries],
            m.shape,
            domain,
        )
        for m in matrices
    ]


def _from_domain_matrix(dm: DomainMatrix) -> Matrix:
    return Matrix.from_rows([[from_domain(value) for value in row] for row in dm.to_list()])


def determinant(m: Matrix) -> Scalar:
    """Determinant of a square matrix"""
    if not m.is_square:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    backend = m.backend
    if not backend.is_exact:
        return backend.coerce(np.linalg.det(m.entries))
    if m.rows == 0:
        return backend.one()
    (dm,) = _domain_matrix(m)
    return from_domain(dm.det())


def solve(m: Matrix, rhs: Matrix) -> Matrix:
    """X with m · X = rhs for a square invertible m"""
    if not m.is_square:
        raise NonInvertible(f"cannot solve with a non-square {m.rows}x{m.cols} matrix")
    backend = m.backend
    if not backend.is_exact:
        if rank(m) < m.rows:
            raise NonInvertible("matrix is numerically singular")
        return Matrix(np.linalg.solve(m.entries, rhs.astype(backend).entries), backend)
    dm, rhs_dm = _domain_matrix(m, rhs.astype(backend))
    if not dm.det():
        raise NonInvertible("matrix is singular")
    return _from_domain_matrix(dm.lu_solve(rhs_dm))


def inverse(m: Matrix) -> Matrix:
    """Matrix inverse"""
    if not m.backend.is_exact or not m.is_square:
        return solve(m, Matrix.identity(m.rows, m.backend))
    (dm,) = _domain_matrix(m)
    if not dm.det():
        raise NonInvertible("matrix is singular")
    return _from_domain_matrix(dm.inv())


def characteristic_polynomial(m: Matrix) -> list[Scalar]:
    """Coefficients of det(λ·I − m), highest power first"""
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    backend = m.backend
    if m.rows == 0:
        return [backend.one()]
    if not backend.is_exact:
        return [backend.coerce(value) for value in np.poly(m.entries)]
    (dm,) = _domain_matrix(m)
    return [from_domain(value) for value in dm.charpoly()]


def linear_combination(coefficients: Sequence[Any], matrices: Sequence[Matrix]) -> Matrix:
    """Σ c_i M_i"""
    backend = matrices[0].backend
    total = Matrix.zeros(matrices[0].rows, matrices[0].cols, backend)
    for coefficient, matrix in zip(coefficients, matrices):
        if coefficient != 0:
            total = total + matrix * coefficient
    return total
