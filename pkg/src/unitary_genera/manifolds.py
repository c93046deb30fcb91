# -*- coding: utf-8 -*-
"""
Created on Thu Oct  8 11:06:38 2026

Manifolds described by their characteristic numbers: evaluations of every weight n
monomial in x, c_1, ..., c_n against the fundamental class of a 2n-manifold.
Includes builders for projective spaces, hypersurfaces and products, genus
evaluation, and the JSON descriptor format.
"""

import dataclasses
import json
import logging
import math
import pathlib
import re
import typing

from .errors import (
    BadDimension,
    InvariantViolation,
    MissingMonomial,
    NoDistinguishedClass,
    ParseError,
    WeightMismatch,
)
from .genera import GenusSpec, chern_to_pontrjagin, pontrjagin_to_chern
from .series import (
    PowerSeries,
    Rational,
    format_rational,
    series_inverse,
    series_mul,
    to_rational,
)
from .symmetric import (
    PONTRJAGIN,
    Grading,
    GradedPolynomial,
    Partition,
    chern_grading,
    format_monomial,
    graded_substitute,
    mixed_grading,
    partitions_of,
)

Exponents = typing.Tuple[int, ...]

HYPOTHESES = ("connected", "H1_zero", "nontrivial_circle_action")

FACTOR_PATTERN = re.compile(r"^(x|c_(\d+))(\^(\d+))?$")


def parse_monomial(text: str, half_dim: int) -> Exponents:
    """Exponent vector over (x, c_1, ..., c_n) of a monomial string such as
    'x^2 c_1 c_3'. '1' is the empty monomial."""

    exponents = [0] * (half_dim + 1)
    if text.strip() == "1":
        return tuple(exponents)
    seen = set()
    for token in text.split():
        match = FACTOR_PATTERN.match(token)
        if match is None:
            message = f"Cannot parse the factor {token!r} of the monomial {text!r}."
            logging.error(message)
            raise ParseError(message)
        index = 0 if match.group(1) == "x" else int(match.group(2))
        exponent = 1 if match.group(4) is None else int(match.group(4))
        if index > half_dim or (index == 0 and match.group(1) != "x") or exponent == 0:
            message = (
                f"The factor {token!r} of {text!r} is not a monomial in x, c_1, ..., "
                f"c_{half_dim}."
            )
            logging.error(message)
            raise ParseError(message)
        if index in seen:
            message = f"The variable of {token!r} repeats in the monomial {text!r}."
            logging.error(message)
            raise ParseError(message)
        seen.add(index)
        exponents[index] = exponent
    return tuple(exponents)


def all_monomials(half_dim: int, has_x: bool) -> typing.List[Exponents]:
    """Every weight n monomial in (x,) c_1..c_n, highest x power first"""

    powers = range(half_dim, -1, -1) if has_x else [0]
    return [
        (a,) + partition.multiplicities(half_dim)
        for a in powers
        for partition in partitions_of(half_dim - a)
    ]


@dataclasses.dataclass(frozen=True)
class CharacteristicTable:
    """Characteristic numbers of a 2n-dimensional unitary manifold.

    numbers maps exponent vectors over (x, c_1, ..., c_n) to the value of the
    monomial on the fundamental class. When k0 is set the distinguished class x
    satisfies c_1 = k0 x, so every number containing c_1 equals k0 times the number
    with one c_1 replaced by x. The hypotheses are carried as metadata only; they
    are reported as assumed, never verified.
    """

    half_dim: int
    has_x: bool
    k0: typing.Optional[int]
    numbers: typing.Dict[Exponents, Rational]
    hypotheses: typing.Dict[str, bool] = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self,
            "numbers",
            {tuple(key): to_rational(value) for key, value in self.numbers.items()},
        )
        object.__setattr__(self, "hypotheses", dict(self.hypotheses))
        self._set_up()

    def _violation(self, message: str):
        logging.error(message)
        raise InvariantViolation(message)

    def _set_up(self):
        """Check the weight of every monomial and the c_1 = k0 x relation"""

        if not isinstance(self.half_dim, int) or self.half_dim < 0:
            self._violation(f"half_dim must be a non-negative integer, not {self.half_dim}")
        if self.k0 is not None and not self.has_x:
            self._violation("k0 is set but the table has no distinguished class x.")
        grading = self.grading
        for exponents in self.numbers:
            if len(exponents) != self.half_dim + 1 or min(exponents) < 0:
                self._violation(f"The key {exponents} is not a monomial of {grading.variables}.")
            monomial = format_monomial(grading, exponents)
            weight = sum(e * w for e, w in zip(exponents, grading.weights))
            if weight != self.half_dim:
                self._violation(
                    f"The monomial {monomial} has weight {weight}, expected {self.half_dim}."
                )
            if exponents[0] > 0 and not self.has_x:
                self._violation(f"The monomial {monomial} uses x but has_x is false.")
        if self.k0 is None:
            return
        for exponents, value in self.numbers.items():
            if exponents[1] == 0:
                continue
            partner = (exponents[0] + 1, exponents[1] - 1) + exponents[2:]
            if partner not in self.numbers:
                self._violation(
                    f"The table has a number for {format_monomial(grading, exponents)} but "
                    f"none for {format_monomial(grading, partner)}, so c_1 = {self.k0} x "
                    "cannot be checked."
                )
            if value != self.k0 * self.numbers[partner]:
                self._violation(
                    f"The number of {format_monomial(grading, exponents)} is {value} but "
                    f"c_1 = {self.k0} x and {format_monomial(grading, partner)} is "
                    f"{self.numbers[partner]}."
                )

    @property
    def grading(self) -> Grading:
        return mixed_grading(self.half_dim)

    def key(self, exponents: Exponents) -> str:
        return format_monomial(self.grading, exponents)

    def number(self, monomial: typing.Union[str, Exponents]) -> Rational:
        """The characteristic number of a monomial given as a string or exponents"""

        if isinstance(monomial, str):
            monomial = parse_monomial(monomial, self.half_dim)
        monomial = tuple(monomial)
        if monomial not in self.numbers:
            message = (
                f"The table of the {2 * self.half_dim}-manifold has no number for "
                f"{self.key(monomial)}."
            )
            logging.error(message)
            raise MissingMonomial(message)
        return self.numbers[monomial]

    def chern_numbers(self) -> typing.Dict[Partition, Rational]:
        """The numbers of monomials in the Chern classes alone, by partition"""

        return {
            partition: self.numbers[(0,) + partition.multiplicities(self.half_dim)]
            for partition in partitions_of(self.half_dim)
            if (0,) + partition.multiplicities(self.half_dim) in self.numbers
        }

    def is_complete(self) -> bool:
        return all(m in self.numbers for m in all_monomials(self.half_dim, self.has_x))


def _table_from_line_classes(
    half_dim: int, gammas: typing.Sequence, top, k0: int
) -> CharacteristicTable:
    """Table of a manifold whose Chern classes are c_i = gammas[i] x^i and whose
    x^n number is top"""

    numbers = {}
    for exponents in all_monomials(half_dim, True):
        value = to_rational(top)
        for i, exponent in enumerate(exponents[1:], start=1):
            value *= to_rational(gammas[i]) ** exponent
        numbers[exponents] = value
    return CharacteristicTable(half_dim, True, k0, numbers)


def cp_table(n: int) -> CharacteristicTable:
    """Complex projective n-space: c = (1 + x)^(n+1), x^n = 1, c_1 = (n+1) x"""

    if not isinstance(n, int) or n < 1:
        message = f"Projective space needs n >= 1, not {n!r}."
        logging.error(message)
        raise BadDimension(message)
    gammas = [math.comb(n + 1, i) for i in range(n + 1)]
    return _table_from_line_classes(n, gammas, 1, n + 1)


def hypersurface_table(n: int, d: int) -> CharacteristicTable:
    """Degree d hypersurface in CP^(n+1): c = (1 + x)^(n+2) / (1 + d x), x^n = d"""

    if not isinstance(n, int) or not isinstance(d, int) or n < 1 or d < 1:
        message = f"A hypersurface needs n >= 1 and degree d >= 1, got n = {n!r}, d = {d!r}."
        logging.error(message)
        raise BadDimension(message)
    numerator = PowerSeries([math.comb(n + 2, i) for i in range(n + 1)], n)
    gammas = series_mul(numerator, series_inverse(PowerSeries([1, d], n)))
    return _table_from_line_classes(n, gammas.coefficients, d, n + 2 - d)


def point_table() -> CharacteristicTable:
    """The point, unit for products"""

    return CharacteristicTable(0, False, None, {(0,): 1})


def product_table(a: CharacteristicTable, b: CharacteristicTable) -> CharacteristicTable:
    """Chern numbers of a product from c(A x B) = c(A) c(B), evaluating a class of
    bidegree (dim A, dim B) as the product of its evaluations. No distinguished
    class is put on the product."""

    n_a, n_b = a.half_dim, b.half_dim
    n = n_a + n_b
    grading = Grading(
        "product",
        tuple(f"a_{i}" for i in range(1, n_a + 1)) + tuple(f"b_{j}" for j in range(1, n_b + 1)),
        tuple(range(1, n_a + 1)) + tuple(range(1, n_b + 1)),
    )

    def factor(prefix, i):
        if i == 0:
            return GradedPolynomial.one(grading)
        return GradedPolynomial.variable(grading, f"{prefix}_{i}")

    assignments = {}
    for m in range(1, n + 1):
        value = GradedPolynomial.zero(grading)
        for i in range(max(0, m - n_b), min(m, n_a) + 1):
            value = value + factor("a", i) * factor("b", m - i)
        assignments[f"c_{m}"] = value

    numbers = {}
    for partition in partitions_of(n):
        exponents = partition.multiplicities(n)
        monomial = GradedPolynomial(chern_grading(n), {exponents: 1})
        expanded = graded_substitute(monomial, assignments, grading)
        value = Rational(0)
        for term, coefficient in expanded.items():
            term_a, term_b = term[:n_a], term[n_a:]
            if sum(e * w for e, w in zip(term_a, range(1, n_a + 1))) != n_a:
                continue
            value += coefficient * a.number((0,) + term_a) * b.number((0,) + term_b)
        numbers[(0,) + exponents] = value

    hypotheses = {
        key: a.hypotheses[key] and b.hypotheses[key]
        for key in a.hypotheses
        if key in b.hypotheses
    }
    return CharacteristicTable(n, False, None, numbers, hypotheses)


def consistent_table(
    n: int,
    k0: int,
    free_numbers: typing.Mapping[typing.Union[str, Exponents], typing.Any],
    hypotheses: typing.Mapping[str, bool] = None,
) -> CharacteristicTable:
    """Full table with c_1 = k0 x from the numbers of the monomials without c_1"""

    free = {}
    for key, value in free_numbers.items():
        exponents = parse_monomial(key, n) if isinstance(key, str) else tuple(key)
        if exponents[1] != 0:
            message = f"Free numbers must not contain c_1, got {format_monomial(mixed_grading(n), exponents)}."
            logging.error(message)
            raise InvariantViolation(message)
        free[exponents] = to_rational(value)
    numbers = {}
    for exponents in all_monomials(n, True):
        reduced = (exponents[0] + exponents[1], 0) + exponents[2:]
        if reduced not in free:
            message = f"No free number given for {format_monomial(mixed_grading(n), reduced)}."
            logging.error(message)
            raise MissingMonomial(message)
        numbers[exponents] = Rational(k0) ** exponents[1] * free[reduced]
    return CharacteristicTable(n, True, k0, numbers, dict(hypotheses or {}))


def _table_exponents(
    table: CharacteristicTable, grading: Grading, exponents: Exponents, x_power: int = 0
) -> Exponents:
    """Exponents of a term of a Chern or mixed polynomial as a key of the table"""

    key = [0] * (table.half_dim + 1)
    key[0] = x_power
    for variable, exponent in zip(grading.variables, exponents):
        if exponent == 0:
            continue
        index = 0 if variable == "x" else int(variable.split("_")[1])
        if index > table.half_dim:
            message = f"The variable {variable} does not exist on a {2 * table.half_dim}-manifold."
            logging.error(message)
            raise WeightMismatch(message)
        key[index] += exponent
    return tuple(key)


def evaluate_polynomial(table: CharacteristicTable, poly: GradedPolynomial, x_power: int = 0) -> Rational:
    """Linear evaluation of x^x_power * poly against the table"""

    return sum(
        (
            value * table.number(_table_exponents(table, poly.grading, exponents, x_power))
            for exponents, value in poly.items()
        ),
        Rational(0),
    )


def evaluate_genus(table: CharacteristicTable, spec: GenusSpec) -> Rational:
    """The genus of spec on the manifold: its degree n class on the fundamental class"""

    return evaluate_polynomial(table, spec.chern_polynomial(table.half_dim))


def evaluate_mixed(table: CharacteristicTable, a: int, poly: GradedPolynomial) -> Rational:
    """(x^a * poly)[M] for a homogeneous polynomial in Chern, Pontrjagin or mixed
    variables"""

    if not table.has_x:
        message = "The table has no distinguished class x to evaluate mixed numbers."
        logging.error(message)
        raise NoDistinguishedClass(message)
    if poly.is_zero():
        return Rational(0)
    if poly.grading.name == PONTRJAGIN:
        poly = pontrjagin_to_chern(poly, table.half_dim)
    if not poly.is_homogeneous() or a + poly.weight * poly.grading.degree_factor != table.half_dim:
        message = (
            f"x^{a} * ({poly}) is not of weight {table.half_dim} and cannot be evaluated "
            f"on a {2 * table.half_dim}-manifold."
        )
        logging.error(message)
        raise WeightMismatch(message)
    return evaluate_polynomial(table, poly, a)


def pontrjagin_numbers(table: CharacteristicTable) -> typing.Dict[Partition, Rational]:
    """Pontrjagin numbers p_mu[M] derived from the Chern numbers; empty in odd
    complex dimension"""

    n = table.half_dim
    if n % 2 == 1:
        return {}
    pontrjagin = chern_to_pontrjagin(n, n // 2)
    numbers = {}
    for partition in partitions_of(n // 2):
        value = GradedPolynomial.one(chern_grading(n))
        for part in partition.parts:
            value = value * pontrjagin[part - 1]
        numbers[partition] = evaluate_polynomial(table, value)
    return numbers


def evaluate_pontrjagin(table: CharacteristicTable, poly: GradedPolynomial) -> Rational:
    """Evaluate a polynomial in Pontrjagin classes through the Pontrjagin numbers"""

    assert poly.grading.name == PONTRJAGIN, f"Expected a Pontrjagin polynomial, not {poly.grading.name}"
    numbers = pontrjagin_numbers(table)
    total = Rational(0)
    for exponents, value in poly.items():
        parts = []
        for j, exponent in enumerate(exponents, start=1):
            parts.extend([j] * exponent)
        partition = Partition(tuple(sorted(parts, reverse=True)))
        if partition not in numbers:
            message = f"No Pontrjagin number for p{partition} on a {2 * table.half_dim}-manifold."
            logging.error(message)
            raise MissingMonomial(message)
        total += value * numbers[partition]
    return total


def table_to_dict(table: CharacteristicTable) -> dict:
    """JSON-ready descriptor with exact rational strings and canonical keys"""

    return {
        "half_dim": table.half_dim,
        "has_x": table.has_x,
        "k0": table.k0,
        "hypotheses": {key: table.hypotheses[key] for key in sorted(table.hypotheses)},
        "numbers": {
            table.key(exponents): format_rational(table.numbers[exponents])
            for exponents in sorted(table.numbers, reverse=True)
        },
    }


def _parse_error(message: str):
    logging.error(message)
    raise ParseError(message)


def table_from_dict(payload: dict) -> CharacteristicTable:
    """Build a table from a parsed JSON descriptor, enforcing every invariant"""

    if not isinstance(payload, dict):
        _parse_error("A manifold descriptor must be a JSON object.")
    for field in ("half_dim", "has_x", "numbers"):
        if field not in payload:
            _parse_error(f"The manifold descriptor is missing the '{field}' field.")
    half_dim, has_x, k0 = payload["half_dim"], payload["has_x"], payload.get("k0")
    if not isinstance(half_dim, int) or isinstance(half_dim, bool):
        _parse_error(f"'half_dim' must be an integer, not {half_dim!r}.")
    if not isinstance(has_x, bool):
        _parse_error(f"'has_x' must be a boolean, not {has_x!r}.")
    if k0 is not None and (not isinstance(k0, int) or isinstance(k0, bool)):
        _parse_error(f"'k0' must be an integer or null, not {k0!r}.")
    hypotheses = payload.get("hypotheses", {})
    if not isinstance(hypotheses, dict) or not all(
        isinstance(value, bool) for value in hypotheses.values()
    ):
        _parse_error("'hypotheses' must be an object of booleans.")
    numbers = payload["numbers"]
    if not isinstance(numbers, dict):
        _parse_error("'numbers' must be an object of monomial: rational pairs.")
    parsed = {}
    for key, value in numbers.items():
        exponents = parse_monomial(key, half_dim)
        if exponents in parsed:
            _parse_error(f"The monomial {key!r} appears more than once.")
        if not isinstance(value, (str, int)) or isinstance(value, bool):
            _parse_error(f"The number of {key!r} must be a 'p/q' string, not {value!r}.")
        parsed[exponents] = to_rational(value)
    return CharacteristicTable(half_dim, has_x, k0, parsed, hypotheses)


def save_table(table: CharacteristicTable, path: typing.Union[str, pathlib.Path]):
    """Write the JSON descriptor of a table"""

    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as file_pointer:
        json.dump(table_to_dict(table), file_pointer, indent=2)
        file_pointer.write("\n")


def load_table(path: typing.Union[str, pathlib.Path]) -> CharacteristicTable:
    """Read a JSON descriptor and validate it"""

    path = pathlib.Path(path)
    try:
        with open(path, "r") as file_pointer:
            payload = json.load(file_pointer)
    except json.JSONDecodeError as e:
        _parse_error(f"The manifold descriptor {path} is not valid JSON: {e}")
    except OSError as e:
        _parse_error(f"Cannot read the manifold descriptor {path}: {e}")
    return table_from_dict(payload)
