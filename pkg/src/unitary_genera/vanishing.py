# -*- coding: utf-8 -*-
"""
Created on Mon Oct 12 15:27:09 2026

The vanishing engine. For a 2n-manifold with c_1 = k0 x and |k0| >= n + 2 the
relations {exp(k x / 2) A-hat(TM)}[M] = 0, one per admissible k, form a system
whose matrix is (a multiple of) a Vandermonde matrix. Its invertibility forces every
x^(n-2s) A-hat_s[M] to vanish, and from these the Todd polynomials and the A_k
genera vanish too. The engine derives the conclusions symbolically, or evaluates
them on a table of characteristic numbers.
"""

import dataclasses
import logging
import typing

import numpy

from .errors import (
    DimensionTooSmall,
    InsufficientBound,
    NoDistinguishedClass,
    SingularMatrix,
)
from .genera import AK, Todd, ahat_in_chern
from .manifolds import (
    CharacteristicTable,
    all_monomials,
    consistent_table,
    evaluate_genus,
    evaluate_mixed,
)
from .series import Rational, format_rational, to_rational
from .symmetric import GradedPolynomial, factorial_power, graded_substitute, mixed_grading

DEFAULT_MAX_K = 5

DERIVED = "derived"
VERIFIED = "verified-zero"
VIOLATED = "violated"

ASSUMED_HYPOTHESES = "assumed, not verified"


@dataclasses.dataclass(frozen=True)
class HattoriInstance:
    """Half-dimension n and the multiple k0 in c_1 = k0 x"""

    n: int
    k0: int

    def __post_init__(self):
        if self.n < 2:
            message = f"The manifold must have dimension 2n > 2, got n = {self.n}."
            logging.error(message)
            raise DimensionTooSmall(message)

    @property
    def parity(self) -> int:
        return self.k0 % 2

    @property
    def unknown_count(self) -> int:
        return self.n // 2 + 1

    @property
    def bound(self) -> int:
        return self.n + 2

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k0": self.k0,
            "parity": self.parity,
            "unknown_count": self.unknown_count,
        }


@dataclasses.dataclass(frozen=True)
class HattoriMatrix:
    """The integer matrix with rows k^n, k^(n-2), ..., ending in 1 (n even) or k
    (n odd), and its determinant"""

    ks: typing.Tuple[int, ...]
    entries: typing.Tuple[typing.Tuple[int, ...], ...]
    determinant: int


@dataclasses.dataclass(frozen=True)
class Conclusion:
    """One vanishing statement. residual is the evaluated value in numeric mode"""

    statement: str
    status: str
    residual: typing.Optional[Rational] = None
    detail: typing.Optional[str] = None

    def to_dict(self) -> dict:
        payload = {
            "statement": self.statement,
            "status": self.status,
            "residual": None if self.residual is None else format_rational(self.residual),
        }
        if self.detail is not None:
            payload["detail"] = self.detail
        return payload

    @classmethod
    def from_dict(cls, payload: dict) -> "Conclusion":
        residual = payload.get("residual")
        return cls(
            payload["statement"],
            payload["status"],
            None if residual is None else to_rational(residual),
            payload.get("detail"),
        )


@dataclasses.dataclass(frozen=True)
class HattoriReport:
    """Output of the vanishing engine.

    mode is 'symbolic' (conclusions derived from the invertible matrix) or 'numeric'
    (every conclusion evaluated on a table). premise_checks holds, in numeric mode,
    the residual of the relation {exp(k x/2) A-hat}[M] = 0 on the table for every
    admissible k. The geometric hypotheses are echoed as assumed, not verified.
    """

    mode: str
    instance: HattoriInstance
    admissible_ks: typing.Tuple[int, ...]
    matrix: typing.Tuple[typing.Tuple[int, ...], ...]
    determinant: Rational
    conclusions: typing.Tuple[Conclusion, ...]
    premise_checks: typing.Tuple[typing.Tuple[int, Rational], ...] = ()
    hypotheses: typing.Dict[str, bool] = dataclasses.field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(conclusion.status != VIOLATED for conclusion in self.conclusions)

    @property
    def premise_holds(self) -> bool:
        return all(residual == 0 for _, residual in self.premise_checks)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "instance": self.instance.to_dict(),
            "admissible_ks": list(self.admissible_ks),
            "matrix": [list(row) for row in self.matrix],
            "determinant": format_rational(self.determinant),
            "premise_checks": [
                {"k": k, "residual": format_rational(residual)}
                for k, residual in self.premise_checks
            ],
            "hypotheses": {
                "status": ASSUMED_HYPOTHESES,
                "flags": {key: self.hypotheses[key] for key in sorted(self.hypotheses)},
            },
            "conclusions": [conclusion.to_dict() for conclusion in self.conclusions],
            "passed": self.passed,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "HattoriReport":
        instance = payload["instance"]
        return cls(
            payload["mode"],
            HattoriInstance(instance["n"], instance["k0"]),
            tuple(payload["admissible_ks"]),
            tuple(tuple(row) for row in payload["matrix"]),
            to_rational(payload["determinant"]),
            tuple(Conclusion.from_dict(item) for item in payload["conclusions"]),
            tuple(
                (item["k"], to_rational(item["residual"]))
                for item in payload.get("premise_checks", [])
            ),
            dict(payload.get("hypotheses", {}).get("flags", {})),
        )

    def render_text(self) -> str:
        lines = [
            f"{self.mode} report for n = {self.instance.n}, k0 = {self.instance.k0}",
            f"admissible k: {', '.join(str(k) for k in self.admissible_ks)}",
            "matrix:",
        ]
        lines.extend("  [" + ", ".join(str(v) for v in row) + "]" for row in self.matrix)
        lines.append(f"determinant: {format_rational(self.determinant)}")
        if self.premise_checks:
            lines.append("relation {exp(kx/2) Ahat}[M] = 0 on the data:")
            lines.extend(
                f"  k = {k}: residual {format_rational(residual)}"
                for k, residual in self.premise_checks
            )
        flags = ", ".join(f"{key}={self.hypotheses[key]}" for key in sorted(self.hypotheses))
        lines.append(f"hypotheses ({ASSUMED_HYPOTHESES}): {flags if flags else 'none recorded'}")
        lines.append("conclusions:")
        for conclusion in self.conclusions:
            line = f"  [{conclusion.status}] {conclusion.statement}"
            if conclusion.residual is not None:
                line += f"  residual {format_rational(conclusion.residual)}"
            if conclusion.detail is not None:
                line += f"  ({conclusion.detail})"
            lines.append(line)
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def expand_constraint(n: int, k: int) -> typing.List[Rational]:
    """Coefficients of x^(n-2s) A-hat_s, s = 0..n//2, in the degree 2n part of
    exp(k x / 2) A-hat: (k/2)^(n-2s) / (n-2s)!"""

    half = Rational(k, 2)
    return [factorial_power(half, n - 2 * s) for s in range(n // 2 + 1)]


def admissible_ks(n: int, k0: int) -> typing.List[int]:
    """The n//2 + 1 smallest non-negative integers k with k = k0 mod 2 and
    |k| < |k0|, leaving out 0 when n is odd"""

    instance = HattoriInstance(n, k0)
    if abs(k0) < instance.bound:
        message = f"need |k0| ≥ {instance.bound} for n = {n}, got k0 = {k0}"
        logging.error(message)
        raise InsufficientBound(message)
    start = instance.parity
    if start == 0 and n % 2 == 1:
        start = 2
    ks = [k for k in range(start, abs(k0), 2)][: instance.unknown_count]
    if len(ks) < instance.unknown_count:
        message = (
            f"need |k0| ≥ {instance.bound}: only {len(ks)} admissible values below "
            f"|k0| = {abs(k0)}, {instance.unknown_count} are needed"
        )
        logging.error(message)
        raise InsufficientBound(message)
    return ks


def bareiss_determinant(matrix: typing.Sequence[typing.Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination"""

    rows = [list(row) for row in matrix]
    size = len(rows)
    assert all(len(row) == size for row in rows), "The matrix must be square"
    if size == 0:
        return 1
    sign, previous = 1, 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]) // previous
        previous = rows[k][k]
    return sign * rows[-1][-1]


def hattori_matrix(n: int, ks: typing.Sequence[int]) -> HattoriMatrix:
    """The constraint rows rescaled to integers: entries k^(n-2s). Row s of
    expand_constraint equals this row times 1 / ((n-2s)! 2^(n-2s))."""

    assert len(ks) == n // 2 + 1, f"Need {n // 2 + 1} values of k for n = {n}, got {list(ks)}"
    entries = tuple(tuple(k ** (n - 2 * s) for s in range(n // 2 + 1)) for k in ks)
    determinant = bareiss_determinant(entries)
    if determinant == 0:
        message = f"The matrix for n = {n} and k in {list(ks)} is singular."
        logging.error(message)
        raise SingularMatrix(message)
    return HattoriMatrix(tuple(ks), entries, determinant)


def _mixed_statement(power: int, symbol: str) -> str:
    if power == 0:
        return f"{symbol}[M] = 0"
    x = "x" if power == 1 else f"x^{power}"
    return f"{x} {symbol}[M] = 0"


def _statements(n: int, max_k: int) -> typing.List[str]:
    statements = [_mixed_statement(n - 2 * s, f"Ahat_{s}") for s in range(n // 2 + 1)]
    statements.extend(_mixed_statement(n - i, f"T_{i}") for i in range(n + 1))
    statements.extend(f"A_{k}(M) = 0" for k in range(2, max_k + 1))
    statements.append("Td(M) = 0")
    return statements


def solve_vanishing(n: int, k0: int, max_k: int = DEFAULT_MAX_K) -> HattoriReport:
    """Symbolic mode: select admissible k, certify the matrix and list every
    conclusion it implies"""

    instance = HattoriInstance(n, k0)
    ks = admissible_ks(n, k0)
    matrix = hattori_matrix(n, ks)
    conclusions = tuple(Conclusion(statement, DERIVED) for statement in _statements(n, max_k))
    logging.info(
        f"n = {n}, k0 = {k0}: k in {ks}, determinant {matrix.determinant}, "
        f"{len(conclusions)} conclusions"
    )
    return HattoriReport(
        "symbolic", instance, tuple(ks), matrix.entries, Rational(matrix.determinant), conclusions
    )


def _ahat_numbers(table: CharacteristicTable) -> typing.List[Rational]:
    """x^(n-2s) A-hat_s[M] for s = 0..n//2"""

    n = table.half_dim
    return [evaluate_mixed(table, n - 2 * s, ahat) for s, ahat in enumerate(ahat_in_chern(n))]


def _check_x(table: CharacteristicTable):
    if not table.has_x:
        message = "The table has no distinguished class x."
        logging.error(message)
        raise NoDistinguishedClass(message)


def verify_hattori_relation(table: CharacteristicTable, k: int) -> Rational:
    """{exp(k x / 2) A-hat(TM)}[M] on the table; zero iff the relation holds"""

    _check_x(table)
    coefficients = expand_constraint(table.half_dim, k)
    return sum(
        (c * value for c, value in zip(coefficients, _ahat_numbers(table))), Rational(0)
    )


def _status(*values) -> str:
    return VERIFIED if all(value == 0 for value in values) else VIOLATED


def check_theorem(
    table: CharacteristicTable, max_k: int = DEFAULT_MAX_K, verbose: bool = False
) -> HattoriReport:
    """Numeric mode: evaluate every conclusion on the table, the Todd polynomials
    through their A-hat decomposition with c_1 = k0 x, and A_k both directly and as
    k^n A_{1/k} through the exponential factorization"""

    _check_x(table)
    if table.k0 is None:
        message = "The table does not record k0 with c_1 = k0 x."
        logging.error(message)
        raise NoDistinguishedClass(message)
    n, k0 = table.half_dim, table.k0
    instance = HattoriInstance(n, k0)
    ks = admissible_ks(n, k0)
    matrix = hattori_matrix(n, ks)

    premise_checks = tuple((k, verify_hattori_relation(table, k)) for k in ks)
    for k, residual in premise_checks:
        if residual != 0:
            logging.warning(
                f"The data violate the relation {{exp({k}x/2) Ahat}}[M] = 0: residual {residual}"
            )

    statements = iter(_statements(n, max_k))
    ahat_numbers = _ahat_numbers(table)
    conclusions = [
        Conclusion(next(statements), _status(value), value) for value in ahat_numbers
    ]

    todd_sequence = [GradedPolynomial.one(table.grading)] + Todd().sequence(n)
    for i in range(n + 1):
        decomposition = sum(
            (
                factorial_power(Rational(k0, 2), i - 2 * s) * ahat_numbers[s]
                for s in range(i // 2 + 1)
            ),
            Rational(0),
        )
        direct = evaluate_mixed(table, n - i, todd_sequence[i])
        conclusions.append(
            Conclusion(
                next(statements),
                _status(decomposition, direct),
                decomposition,
                f"direct {format_rational(direct)}",
            )
        )

    for k in range(2, max_k + 1):
        direct = evaluate_genus(table, AK(k))
        twist = (Rational(1, k) - Rational(1, 2)) * k0
        via_recip = k**n * sum(
            (factorial_power(twist, n - 2 * s) * value for s, value in enumerate(ahat_numbers)),
            Rational(0),
        )
        if direct != via_recip:
            logging.warning(f"A_{k}(M) disagrees between routes: {direct} != {via_recip}")
        conclusions.append(
            Conclusion(
                next(statements),
                _status(direct, via_recip),
                direct,
                f"k^n A_1/k route {format_rational(via_recip)}",
            )
        )
        if verbose:
            logging.info(f"A_{k}(M) = {direct}")

    todd_genus = evaluate_genus(table, Todd())
    conclusions.append(Conclusion(next(statements), _status(todd_genus), todd_genus))

    report = HattoriReport(
        "numeric",
        instance,
        tuple(ks),
        matrix.entries,
        Rational(matrix.determinant),
        tuple(conclusions),
        premise_checks,
        dict(table.hypotheses),
    )
    if verbose:
        logging.info(f"Checked {len(conclusions)} conclusions, passed: {report.passed}")
    return report


def _ahat_functionals(n: int, k0: int) -> typing.List[typing.Dict[tuple, Rational]]:
    """x^(n-2s) A-hat_s[M] as linear forms in the numbers of monomials without c_1"""

    grading = mixed_grading(n)
    x = GradedPolynomial.variable(grading, "x")
    functionals = []
    for s, ahat in enumerate(ahat_in_chern(n)):
        substituted = graded_substitute(ahat, {"c_1": k0 * x}, grading) * x ** (n - 2 * s)
        functionals.append(substituted.terms)
    return functionals


def _row_reduce(rows: typing.List[typing.List[Rational]]):
    """Reduced row echelon form over the rationals and the pivot columns"""

    rows = [list(row) for row in rows]
    columns = len(rows[0]) if rows else 0
    pivots = []
    rank = 0
    for column in range(columns):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][column] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][column]
        rows[rank] = [value / lead for value in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][column] != 0:
                factor = rows[i][column]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        pivots.append(column)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def _project(
    n: int, k0: int, columns: typing.List[tuple], seed: int
) -> typing.Dict[tuple, Rational]:
    """Random non-zero integers on the columns, with the pivot columns solved so
    every relation {exp(k x/2) A-hat}[M] = 0 for admissible k holds"""

    ks = admissible_ks(n, k0)
    functionals = _ahat_functionals(n, k0)
    rows = []
    for k in ks:
        coefficients = expand_constraint(n, k)
        rows.append(
            [
                sum((c * f.get(column, 0) for c, f in zip(coefficients, functionals)), Rational(0))
                for column in columns
            ]
        )
    reduced, pivots = _row_reduce(rows)

    rng = numpy.random.default_rng(seed)
    values = {}
    for column in columns:
        magnitude = int(rng.integers(1, 10))
        values[column] = Rational(magnitude if rng.integers(0, 2) else -magnitude)
    for row, pivot in zip(reduced, pivots):
        values[columns[pivot]] = -sum(
            (row[j] * values[columns[j]] for j in range(len(columns)) if j not in pivots),
            Rational(0),
        )
    return values


def synthesize_consistent_table(n: int, k0: int, seed: int) -> CharacteristicTable:
    """Deterministic pseudo-random table satisfying c_1 = k0 x and the relation for
    every admissible k. Such tables need not be realizable by any manifold."""

    instance = HattoriInstance(n, k0)
    admissible_ks(n, k0)
    columns = [m for m in all_monomials(n, True) if m[1] == 0]
    values = _project(instance.n, instance.k0, columns, seed)
    logging.info(f"Synthesized n = {n}, k0 = {k0} table from seed {seed}")
    return consistent_table(
        n, k0, values, {"connected": True, "H1_zero": True, "nontrivial_circle_action": True}
    )


def torsion_table(n: int, k0: int, seed: int) -> CharacteristicTable:
    """Data of a manifold whose c_1 is torsion: rationally x = c_1 = 0, so every number
    involving x or c_1 is zero. The remaining Chern numbers are random subject to the
    relation, which with x = 0 reduces to A-hat(M) = 0."""

    HattoriInstance(n, k0)
    admissible_ks(n, k0)
    columns = [m for m in all_monomials(n, True) if m[1] == 0 and m[0] == 0]
    values = _project(n, k0, columns, seed)
    values.update({m: Rational(0) for m in all_monomials(n, True) if m[1] == 0 and m[0] > 0})
    return consistent_table(n, k0, values, {"connected": True, "H1_zero": True})
