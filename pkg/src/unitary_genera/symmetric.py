# -*- coding: utf-8 -*-
"""
Created on Tue Oct  6 10:02:55 2026

Partitions, weighted graded polynomials, Newton identities and the generator of
multiplicative sequences from a characteristic power series.
"""

import dataclasses
import fractions
import itertools
import logging
import math
import typing

from .errors import NotNormalized, OddSeriesInPontrjaginGrading, BadOrder, WeightMismatch
from .series import PowerSeries, Rational, format_rational, series_log, to_rational

CHERN = "chern"
PONTRJAGIN = "pontrjagin"
MIXED = "mixed"


@dataclasses.dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers"""

    parts: typing.Tuple[int, ...]

    def __post_init__(self):
        assert all(part > 0 for part in self.parts), (
            f"Partition parts must be positive, got {self.parts}"
        )
        assert list(self.parts) == sorted(self.parts, reverse=True), (
            f"Partition parts must be weakly decreasing, got {self.parts}"
        )

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def multiplicities(self, length: int) -> typing.Tuple[int, ...]:
        """Exponent vector (e_1, ..., e_length) with e_i the number of parts equal i"""

        return tuple(self.parts.count(i) for i in range(1, length + 1))

    def __str__(self):
        return "[" + ", ".join(str(part) for part in self.parts) + "]"


def partitions_of(n: int, largest: int = None) -> typing.List[Partition]:
    """All partitions of n, largest first part first: 4 -> [4], [3,1], [2,2], [2,1,1],
    [1,1,1,1]"""

    assert n >= 0, f"Can only partition non-negative integers, not {n}"
    if largest is None:
        largest = n
    if n == 0:
        return [Partition(())]
    partitions = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            partitions.append(Partition((first,) + rest.parts))
    return partitions


@dataclasses.dataclass(frozen=True)
class Grading:
    """The variables of a graded polynomial ring with their weights.

    degree_factor converts a weight into the x-grading, where x and c_i have weight
    1 and i. It is 2 for the Pontrjagin grading in which p_j has weight j."""

    name: str
    variables: typing.Tuple[str, ...]
    weights: typing.Tuple[int, ...]
    degree_factor: int = 1

    def index(self, variable: str) -> int:
        return self.variables.index(variable)

    def __len__(self):
        return len(self.variables)


def _indexed_grading(name: str, symbol: str, n: int, degree_factor: int = 1) -> Grading:
    return Grading(
        name,
        tuple(f"{symbol}_{i}" for i in range(1, n + 1)),
        tuple(range(1, n + 1)),
        degree_factor,
    )


def chern_grading(n: int) -> Grading:
    return _indexed_grading(CHERN, "c", n)


def pontrjagin_grading(n: int) -> Grading:
    return _indexed_grading(PONTRJAGIN, "p", n, degree_factor=2)


def mixed_grading(n: int) -> Grading:
    """x followed by c_1..c_n"""

    chern = chern_grading(n)
    return Grading(MIXED, ("x",) + chern.variables, (1,) + chern.weights)


def elementary_grading(n: int) -> Grading:
    return _indexed_grading("elementary", "e", n)


def power_sum_grading(n: int) -> Grading:
    return _indexed_grading("power_sum", "ps", n)


def _format_factor(variable: str, exponent: int) -> str:
    return variable if exponent == 1 else f"{variable}^{exponent}"


def format_monomial(grading: Grading, exponents: typing.Tuple[int, ...]) -> str:
    """Canonical monomial string, e.g. 'x^2 c_1 c_3'; the empty monomial is '1'"""

    factors = [
        _format_factor(variable, exponent)
        for variable, exponent in zip(grading.variables, exponents)
        if exponent != 0
    ]
    return " ".join(factors) if factors else "1"


class GradedPolynomial:
    """An exact polynomial with rational coefficients in weighted variables.

    Terms are stored as a map from exponent vectors (dense tuples, one entry per
    grading variable) to non-zero Fractions. Terms are ordered lexicographically by
    exponent vector, largest first, for printing and iteration.
    """

    __slots__ = ("_grading", "_terms")

    def __init__(self, grading: Grading, terms: typing.Mapping = None):
        self._grading = grading
        cleaned = {}
        for exponents, value in (terms or {}).items():
            exponents = tuple(exponents)
            assert len(exponents) == len(grading), (
                f"Exponent vector {exponents} does not match the {len(grading)} "
                f"variables of the {grading.name} grading"
            )
            value = to_rational(value)
            if value != 0:
                cleaned[exponents] = cleaned.get(exponents, Rational(0)) + value
        self._terms = {e: v for e, v in cleaned.items() if v != 0}

    @classmethod
    def zero(cls, grading: Grading) -> "GradedPolynomial":
        return cls(grading)

    @classmethod
    def constant(cls, grading: Grading, value) -> "GradedPolynomial":
        return cls(grading, {(0,) * len(grading): value})

    @classmethod
    def one(cls, grading: Grading) -> "GradedPolynomial":
        return cls.constant(grading, 1)

    @classmethod
    def variable(cls, grading: Grading, name: str) -> "GradedPolynomial":
        exponents = [0] * len(grading)
        exponents[grading.index(name)] = 1
        return cls(grading, {tuple(exponents): 1})

    @property
    def grading(self) -> Grading:
        return self._grading

    @property
    def terms(self) -> typing.Dict[typing.Tuple[int, ...], Rational]:
        return dict(self._terms)

    def items(self):
        """(exponents, coefficient) pairs in canonical order"""

        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exponents) -> Rational:
        return self._terms.get(tuple(exponents), Rational(0))

    def is_zero(self) -> bool:
        return not self._terms

    def term_weight(self, exponents) -> int:
        return sum(e * w for e, w in zip(exponents, self._grading.weights))

    def weights(self) -> typing.Set[int]:
        return {self.term_weight(exponents) for exponents in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    @property
    def weight(self) -> typing.Optional[int]:
        """The common weight of a homogeneous polynomial, None for zero"""

        weights = self.weights()
        if not weights:
            return None
        assert len(weights) == 1, f"The polynomial {self} is not homogeneous"
        return weights.pop()

    def homogeneous_part(self, weight: int) -> "GradedPolynomial":
        return GradedPolynomial(
            self._grading,
            {e: v for e, v in self._terms.items() if self.term_weight(e) == weight},
        )

    def truncate(self, max_weight: int) -> "GradedPolynomial":
        return GradedPolynomial(
            self._grading,
            {e: v for e, v in self._terms.items() if self.term_weight(e) <= max_weight},
        )

    def _check_grading(self, other: "GradedPolynomial"):
        if other.grading != self._grading:
            message = (
                f"Cannot combine polynomials in the {self._grading.name} grading with "
                f"{len(self._grading)} variables and the {other.grading.name} grading "
                f"with {len(other.grading)} variables."
            )
            logging.error(message)
            raise WeightMismatch(message)

    def _coerce(self, other) -> "GradedPolynomial":
        if isinstance(other, GradedPolynomial):
            self._check_grading(other)
            return other
        return GradedPolynomial.constant(self._grading, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for exponents, value in other._terms.items():
            terms[exponents] = terms.get(exponents, Rational(0)) + value
        return GradedPolynomial(self._grading, terms)

    __radd__ = __add__

    def __neg__(self):
        return GradedPolynomial(self._grading, {e: -v for e, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GradedPolynomial):
            scalar = to_rational(other)
            return GradedPolynomial(
                self._grading, {e: scalar * v for e, v in self._terms.items()}
            )
        return graded_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1 / to_rational(other))

    def __pow__(self, exponent: int):
        assert exponent >= 0, f"Only non-negative powers are supported, not {exponent}"
        result = GradedPolynomial.one(self._grading)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, GradedPolynomial):
            return self._grading == other._grading and self._terms == other._terms
        if isinstance(other, (int, fractions.Fraction)):
            return self == GradedPolynomial.constant(self._grading, other)
        return NotImplemented

    def __hash__(self):
        return hash((self._grading, frozenset(self._terms.items())))

    def __repr__(self):
        return f"GradedPolynomial({self._grading.name}, {str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        text = ""
        for position, (exponents, value) in enumerate(self.items()):
            monomial = format_monomial(self._grading, exponents)
            magnitude = abs(value)
            if monomial == "1":
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{format_rational(magnitude)} {monomial}"
            if position == 0:
                text = f"-{body}" if value < 0 else body
            else:
                text += f" - {body}" if value < 0 else f" + {body}"
        return text


def graded_mul(
    a: GradedPolynomial, b: GradedPolynomial, max_weight: int = None
) -> GradedPolynomial:
    """Exact product, optionally dropping terms above max_weight"""

    a._check_grading(b)
    terms = {}
    for (ea, va), (eb, vb) in itertools.product(a.terms.items(), b.terms.items()):
        exponents = tuple(x + y for x, y in zip(ea, eb))
        if max_weight is not None and a.term_weight(exponents) > max_weight:
            continue
        terms[exponents] = terms.get(exponents, Rational(0)) + va * vb
    return GradedPolynomial(a.grading, terms)


def graded_substitute(
    poly: GradedPolynomial,
    assignments: typing.Mapping[str, GradedPolynomial],
    target: Grading = None,
) -> GradedPolynomial:
    """Substitute polynomials in the target grading for variables of poly.

    Variables without an assignment are carried over by name and must exist in the
    target grading. Every non-zero assignment must be homogeneous of the x-weight of
    the variable it replaces, otherwise WeightMismatch is raised."""

    source = poly.grading
    target = source if target is None else target
    images = []
    for variable, weight in zip(source.variables, source.weights):
        if variable in assignments:
            image = assignments[variable]
            if image.grading != target:
                message = (
                    f"The value assigned to {variable} is in the {image.grading.name} "
                    f"grading, expected the {target.name} grading."
                )
                logging.error(message)
                raise WeightMismatch(message)
            expected = weight * source.degree_factor
            if not image.is_zero() and (
                not image.is_homogeneous()
                or image.weight * target.degree_factor != expected
            ):
                message = (
                    f"Cannot substitute {image} for {variable}: the value must be "
                    f"homogeneous of x-weight {expected}."
                )
                logging.error(message)
                raise WeightMismatch(message)
            images.append(image)
        elif variable in target.variables:
            target_weight = target.weights[target.index(variable)] * target.degree_factor
            if target_weight != weight * source.degree_factor:
                message = (
                    f"The variable {variable} has a different weight in the "
                    f"{target.name} grading."
                )
                logging.error(message)
                raise WeightMismatch(message)
            images.append(GradedPolynomial.variable(target, variable))
        else:
            images.append(None)

    result = GradedPolynomial.zero(target)
    for exponents, value in poly.terms.items():
        term = GradedPolynomial.constant(target, value)
        for variable, image, exponent in zip(source.variables, images, exponents):
            if exponent == 0:
                continue
            if image is None:
                message = (
                    f"No assignment for {variable} and the {target.name} grading has "
                    "no such variable."
                )
                logging.error(message)
                raise WeightMismatch(message)
            term = term * image**exponent
        result = result + term
    return result


def graded_exp(poly: GradedPolynomial, max_weight: int) -> GradedPolynomial:
    """exp(poly) up to max_weight for a polynomial without constant term"""

    assert poly.coefficient((0,) * len(poly.grading)) == 0, (
        "The graded exponential needs a polynomial without constant term"
    )
    result = GradedPolynomial.one(poly.grading)
    power = GradedPolynomial.one(poly.grading)
    for j in range(1, max_weight + 1):
        power = graded_mul(power, poly, max_weight) / j
        if power.is_zero():
            break
        result = result + power
    return result


def power_sums_to_elementary(n: int, grading: Grading = None) -> typing.List[GradedPolynomial]:
    """The power sums ps_1..ps_n of the roots expressed in the elementary symmetric
    functions, which are the variables of grading (e_1..e_n by default), from
    ps_m = sum_{i<m} (-1)^(i-1) e_i ps_(m-i) + (-1)^(m-1) m e_m."""

    assert n >= 1, f"Need at least one power sum, not {n}"
    grading = elementary_grading(n) if grading is None else grading
    assert len(grading) >= n, f"The {grading.name} grading has fewer than {n} variables"
    e = [None] + [GradedPolynomial.variable(grading, v) for v in grading.variables]
    power_sums = [None]
    for m in range(1, n + 1):
        value = (-1) ** (m - 1) * m * e[m]
        for i in range(1, m):
            value = value + (-1) ** (i - 1) * e[i] * power_sums[m - i]
        power_sums.append(value)
    return power_sums[1:]


def elementary_to_power_sums(n: int, grading: Grading = None) -> typing.List[GradedPolynomial]:
    """The elementary symmetric functions e_1..e_n expressed in the power sums
    ps_1..ps_n, from m e_m = sum_{i=1..m} (-1)^(i-1) e_(m-i) ps_i."""

    assert n >= 1, f"Need at least one elementary function, not {n}"
    grading = power_sum_grading(n) if grading is None else grading
    ps = [None] + [GradedPolynomial.variable(grading, v) for v in grading.variables]
    elementary = [GradedPolynomial.one(grading)]
    for m in range(1, n + 1):
        value = GradedPolynomial.zero(grading)
        for i in range(1, m + 1):
            value = value + (-1) ** (i - 1) * elementary[m - i] * ps[i]
        elementary.append(value / m)
    return elementary[1:]


def multiplicative_sequence(
    q: PowerSeries, n: int, grading: str = CHERN
) -> typing.List[GradedPolynomial]:
    """The multiplicative sequence K_1..K_n of a normalized power series q.

    In the Chern grading K_m is the weight m part of prod_i q(x_i) written in
    c_i = e_i(x_1, ...). In the Pontrjagin grading q must be even and K_m is written
    in p_j = e_j(x_1^2, ...). The product is formed as exp(sum_i log q(x_i)), with
    the sum of logarithms expanded in power sums and converted by Newton's
    identities."""

    if q[0] != 1:
        message = f"The characteristic series must start with 1, not {q[0]}."
        logging.error(message)
        raise NotNormalized(message)
    if grading == PONTRJAGIN:
        if not q.is_even():
            message = "Only even power series define a sequence in Pontrjagin classes."
            logging.error(message)
            raise OddSeriesInPontrjaginGrading(message)
        needed, ring, step = 2 * n, pontrjagin_grading(n), 2
    elif grading == CHERN:
        needed, ring, step = n, chern_grading(n), 1
    else:
        message = f"Unknown grading {grading!r}; use '{CHERN}' or '{PONTRJAGIN}'"
        logging.error(message)
        raise ValueError(message)
    if n < 1 or q.order < needed:
        message = (
            f"A sequence of length {n} in the {grading} grading needs a series of "
            f"order {needed}, the series has order {q.order}."
        )
        logging.error(message)
        raise BadOrder(message)

    log_q = series_log(q.truncate(needed))
    power_sums = power_sums_to_elementary(n, ring)
    log_total = GradedPolynomial.zero(ring)
    for m in range(1, n + 1):
        log_total = log_total + log_q[step * m] * power_sums[m - 1]
    total = graded_exp(log_total, n)
    return [total.homogeneous_part(m) for m in range(1, n + 1)]


def factorial_power(value, exponent: int) -> Rational:
    """value^exponent / exponent!"""

    return to_rational(value) ** exponent / math.factorial(exponent)
