"""JSON documents read and written by the command line

Exact scalars are written as "p/q" strings (integers without a denominator),
float64 scalars as JSON numbers, and complex values as [re, im] pairs.
"""

import json
import logging
import math
from fractions import Fraction
from typing import Any, Sequence

from ksymp import linalg
from ksymp.errors import InputError, KSympError
from ksymp.models.clifford import AlgebraDescription, Signature
from ksymp.models.intersection import IntersectionModel, ObstructionVerdict, PairingReport
from ksymp.models.matrix import Matrix, make_vector
from ksymp.models.polynomial import HomogeneousPoly
from ksymp.models.scalar import Backend, GaussianRational, Scalars, gaussian, parse_rational
from ksymp.models.two_form_span import KSymplecticReport, QuadraticFormOnSpan, TwoFormSpan, Witness

logger = logging.getLogger(__name__)


def load_document(text: str) -> Any:
    """Parse a JSON document, reporting truncation or syntax errors as input errors"""
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise InputError("<document>", f"invalid JSON at line {error.lineno} column {error.colno}: {error.msg}") from error


def dump_document(document: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline"""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def encode_scalar(value: Any) -> Any:
    """JSON value of a backend scalar"""
    if isinstance(value, GaussianRational):
        return [_fraction_text(value.re), _fraction_text(value.im)]
    if isinstance(value, Fraction):
        return _fraction_text(value)
    if isinstance(value, int):
        return str(value)
    value = complex(value)
    if value.imag != 0:
        return [float(value.real), float(value.imag)]
    return float(value.real)


def decode_scalar(value: Any, backend: Backend, field: str) -> Any:
    """Backend scalar from a JSON number, "p/q" string or [re, im] pair"""
    if isinstance(value, bool):
        raise InputError(field, "expected a number, got a boolean")
    try:
        if isinstance(value, list):
            if len(value) != 2:
                raise InputError(field, "a complex value must be a [re, im] pair")
            re, im = (decode_scalar(part, Backend.EXACT, field) for part in value)
            return backend.coerce(gaussian(re, im))
        if isinstance(value, str):
            return backend.coerce(parse_rational(value))
        if isinstance(value, (int, float)):
            if isinstance(value, float) and not math.isfinite(value):
                raise InputError(field, f"non-finite value {value!r}")
            return backend.coerce(value)
    except (ValueError, ZeroDivisionError) as error:
        raise InputError(field, str(error)) from error
    raise InputError(field, f"expected a number, a \"p/q\" string or a [re, im] pair, got {type(value).__name__}")


def _require(document: Any, key: str, field: str) -> Any:
    if not isinstance(document, dict):
        raise InputError(field or "<document>", "expected a JSON object")
    if key not in document:
        raise InputError(f"{field}.{key}" if field else key, "missing required field")
    return document[key]


def _require_int(value: Any, field: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(field, f"expected an integer, got {value!r}")
    if value < minimum:
        raise InputError(field, f"must be at least {minimum}, got {value}")
    return value


def encode_matrix(matrix: Matrix) -> list[list[Any]]:
    """Row-major nested lists of encoded scalars"""
    return [[encode_scalar(value) for value in row] for row in matrix.to_rows()]


def decode_matrix(rows: Any, backend: Backend, field: str) -> Matrix:
    """Matrix from row-major nested lists"""
    if not isinstance(rows, list) or not rows or not all(isinstance(row, list) for row in rows):
        raise InputError(field, "expected a non-empty list of rows")
    width = len(rows[0])
    values = []
    for i, row in enumerate(rows):
        if len(row) != width:
            raise InputError(f"{field}[{i}]", f"row has {len(row)} entries, expected {width}")
        values.append([decode_scalar(value, backend, f"{field}[{i}][{j}]") for j, value in enumerate(row)])
    return Matrix.from_rows(values, backend)


def decode_vector(values: Any, backend: Backend, field: str, length: int | None = None) -> Any:
    """1-dimensional backend array from a JSON list"""
    if not isinstance(values, list):
        raise InputError(field, "expected a list")
    if length is not None and len(values) != length:
        raise InputError(field, f"expected {length} entries, got {len(values)}")
    return make_vector([decode_scalar(value, backend, f"{field}[{i}]") for i, value in enumerate(values)], backend)


def _parse_scalars(value: Any) -> Scalars:
    try:
        return Scalars(value)
    except ValueError as error:
        raise InputError("scalars", f"expected \"real\" or \"complex\", got {value!r}") from error


def decode_span(document: Any, backend: Backend) -> TwoFormSpan:
    """{"forms": [...], "scalars": "real"|"complex", "real_structure": bool}"""
    forms_json = _require(document, "forms", "")
    if not isinstance(forms_json, list) or not forms_json:
        raise InputError("forms", "expected a non-empty list of matrices")
    forms = tuple(decode_matrix(rows, backend, f"forms[{i}]") for i, rows in enumerate(forms_json))
    scalars = _parse_scalars(document.get("scalars", Scalars.REAL.value))
    all_real = all(form.is_real() for form in forms)
    real_structure = document.get("real_structure", scalars is Scalars.REAL and all_real)
    if not isinstance(real_structure, bool):
        raise InputError("real_structure", "expected a boolean")
    if real_structure and not all_real:
        raise InputError("real_structure", "a span with a real structure must have real forms")
    notes = document.get("notes", [])
    if not isinstance(notes, list) or not all(isinstance(note, str) for note in notes):
        raise InputError("notes", "expected a list of strings")
    try:
        return TwoFormSpan(forms, scalars, real_structure, tuple(notes))
    except KSympError as error:
        raise InputError("forms", str(error)) from error


def encode_span(span: TwoFormSpan) -> dict[str, Any]:
    """Inverse of decode_span"""
    return {
        "forms": [encode_matrix(form) for form in span.forms],
        "scalars": span.scalars.value,
        "real_structure": span.real_structure,
        "notes": list(span.notes),
        "k": span.k,
        "dim_v": span.dim_v,
    }


def _exponent_key(key: str, num_vars: int, degree: int, field: str) -> tuple[int, ...]:
    parts = key.strip().strip("[]()").replace(" ", "").split(",")
    try:
        exponents = tuple(int(part) for part in parts)
    except ValueError as error:
        raise InputError(field, f"monomial key {key!r} is not a comma separated list of exponents") from error
    if len(exponents) != num_vars or any(exponent < 0 for exponent in exponents):
        raise InputError(field, f"monomial key {key!r} needs {num_vars} non-negative exponents")
    if sum(exponents) != degree:
        raise InputError(field, f"monomial key {key!r} has degree {sum(exponents)}, expected {degree}")
    return exponents


def decode_poly(document: Any, num_vars: int, degree: int, backend: Backend, field: str) -> HomogeneousPoly:
    """{"<e1>,<e2>,...": scalar} with exponent keys such as "2,0,1" """
    if not isinstance(document, dict):
        raise InputError(field, "expected an object mapping exponent keys to coefficients")
    coefficients = {}
    for key, value in document.items():
        exponents = _exponent_key(key, num_vars, degree, f"{field}.{key}")
        coefficients[exponents] = decode_scalar(value, backend, f"{field}.{key}")
    return HomogeneousPoly(num_vars, degree, coefficients, backend)


def encode_poly(poly: HomogeneousPoly) -> dict[str, Any]:
    """Inverse of decode_poly"""
    return {",".join(str(e) for e in exponents): encode_scalar(value) for exponents, value in poly.terms()}


def decode_model(document: Any, backend: Backend) -> IntersectionModel:
    """{"b2": k, "n": n, "top_poly": {...}, "kahler_class": [...]}"""
    b2 = _require_int(_require(document, "b2", ""), "b2", minimum=1)
    n = _require_int(_require(document, "n", ""), "n", minimum=1)
    top_poly = decode_poly(_require(document, "top_poly", ""), b2, 2 * n, backend, "top_poly")
    kahler = document.get("kahler_class")
    kahler_class = decode_vector(kahler, backend, "kahler_class", b2) if kahler is not None else None
    return IntersectionModel(b2, n, top_poly, kahler_class=kahler_class)


def encode_inertia(inertia: linalg.Inertia | None) -> dict[str, int] | None:
    """{"minuses", "pluses", "zeros"}"""
    if inertia is None:
        return None
    return {"minuses": inertia.minuses, "pluses": inertia.pluses, "zeros": inertia.zeros}


def encode_signature(signature: Signature) -> list[int]:
    """[r, s]"""
    return [signature.minuses, signature.pluses]


def encode_quadric(q: QuadraticFormOnSpan) -> dict[str, Any]:
    """Gram matrix, constant and normalization of q"""
    return {
        "gram": encode_matrix(q.gram),
        "c": encode_scalar(q.c),
        "power": q.power,
        "normalization": q.normalization,
    }


def _encode_optional(values: Sequence[Any] | None) -> list[Any] | None:
    return None if values is None else [encode_scalar(value) for value in values]


def encode_witness(witness: Witness) -> dict[str, Any]:
    """Witness fields, coefficients encoded as scalars"""
    return {
        "kind": witness.kind,
        "message": witness.message,
        "coefficients": _encode_optional(witness.coefficients),
        "kernel_dim": witness.kernel_dim,
        "monomial": list(witness.monomial) if witness.monomial is not None else None,
        "residual": encode_scalar(witness.residual) if witness.residual is not None else None,
    }


def encode_report(report: KSymplecticReport) -> dict[str, Any]:
    """KSymplecticReport as a JSON object"""
    return {
        "is_k_symplectic": report.is_k_symplectic,
        "q": encode_quadric(report.q) if report.q is not None else None,
        "q_nondegenerate": report.q_nondegenerate,
        "q_rank": report.q_rank,
        "signature": encode_inertia(report.signature),
        "witnesses": [encode_witness(witness) for witness in report.witnesses],
        "samples_checked": report.samples_checked,
        "null_lines": report.null_lines,
        "notes": list(report.notes),
    }


def encode_algebra(description: AlgebraDescription) -> dict[str, Any]:
    """Summands, dimension and minimal module dimension of an algebra"""
    return {
        "algebra": str(description),
        "scalars": description.scalars.value,
        "summands": [{"size": summand.size, "ring": summand.ring.value} for summand in description.summands],
        "dimension": description.dimension,
        "minimal_module_dim": description.minimal_module_dim,
        "simple": description.is_simple,
    }


def encode_verdict(verdict: ObstructionVerdict) -> dict[str, Any]:
    """ObstructionVerdict as a JSON object"""
    return {
        "b2": verdict.b2,
        "manifold_dim_c": verdict.manifold_dim_c,
        "bbf_signature": encode_signature(verdict.bbf_signature),
        "naive_torus_bound": verdict.naive_torus_bound,
        "clifford_signatures": [encode_signature(signature) for signature in verdict.clifford_signatures],
        "refined_b1_bound": verdict.refined_b1_bound,
        "refined_torus_dim_c_bound": verdict.refined_torus_dim_c_bound,
        "effective_torus_bound": verdict.effective_torus_bound,
        "max_proper_subvariety_dim_c": verdict.max_proper_subvariety_dim_c,
        "torus_possible": verdict.torus_possible,
        "narrative": verdict.narrative,
    }


def encode_pairing(report: PairingReport) -> dict[str, Any]:
    """PairingReport as a JSON object"""
    return {
        "passed": report.passed,
        "c_gamma": encode_scalar(report.c_gamma),
        "max_residual": report.max_residual,
        "pairs_checked": report.pairs_checked,
    }
