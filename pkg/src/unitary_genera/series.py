# -*- coding: utf-8 -*-
"""
Created on Mon Oct  5 09:31:17 2026

Exact rational scalars and truncated formal power series in one variable,
including the characteristic power series of the Todd, A-hat, L and A_k genera.
"""

import fractions
import logging
import math
import re
import typing

from .errors import (
    BadK,
    BadOrder,
    NonzeroConstantTerm,
    NotNormalized,
    ParseError,
    ZeroConstantTerm,
)

Rational = fractions.Fraction

RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")


def to_rational(value: typing.Union[int, str, fractions.Fraction]) -> Rational:
    """Convert an int, Fraction or "p/q" string to a reduced Fraction. Floating
    point input is refused so values stay exact."""

    if isinstance(value, bool) or isinstance(value, float):
        message = f"Refusing non-exact value {value!r}; use an int or a 'p/q' string."
        logging.error(message)
        raise ParseError(message)
    if isinstance(value, (int, fractions.Fraction)):
        return Rational(value)
    if isinstance(value, str) and RATIONAL_PATTERN.match(value.strip()):
        try:
            return Rational(value.strip())
        except ZeroDivisionError:
            pass
    message = f"Cannot parse {value!r} as an exact rational 'p/q'."
    logging.error(message)
    raise ParseError(message)


def format_rational(value: Rational) -> str:
    """Reduced 'p/q' string, or an integer string when the denominator is one."""

    return str(Rational(value))


def _check_order(order: int):
    if not isinstance(order, int) or isinstance(order, bool) or order < 0:
        message = f"The truncation order must be a non-negative integer, not {order!r}."
        logging.error(message)
        raise BadOrder(message)


def _check_k(k: int):
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        message = f"k must be an integer >= 2, not {k!r}."
        logging.error(message)
        raise BadK(message)


class PowerSeries:
    """A univariate power series over the rationals truncated at an explicit order.

    The coefficients are stored for exponents 0..order inclusive. Binary operations
    between series of different orders truncate to the smaller order, and equality
    compares coefficients up to the common order.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: typing.Iterable, order: int = None):
        coefficients = [to_rational(value) for value in coefficients]
        if order is None:
            order = len(coefficients) - 1
        _check_order(order)
        coefficients = coefficients[: order + 1]
        coefficients.extend([Rational(0)] * (order + 1 - len(coefficients)))
        self._coefficients = tuple(coefficients)

    @classmethod
    def constant(cls, value, order: int) -> "PowerSeries":
        return cls([value], order)

    @classmethod
    def monomial(cls, value, exponent: int, order: int) -> "PowerSeries":
        """value * x**exponent, zero if exponent exceeds the order"""

        coefficients = [0] * (order + 1)
        if exponent <= order:
            coefficients[exponent] = value
        return cls(coefficients, order)

    @property
    def order(self) -> int:
        return len(self._coefficients) - 1

    @property
    def coefficients(self) -> typing.Tuple[Rational, ...]:
        return self._coefficients

    def __getitem__(self, exponent: int) -> Rational:
        return self._coefficients[exponent]

    def __len__(self):
        return len(self._coefficients)

    def __iter__(self):
        return iter(self._coefficients)

    def truncate(self, order: int) -> "PowerSeries":
        """Return the series truncated to an order no larger than the current one"""

        return PowerSeries(self._coefficients, min(order, self.order))

    def is_even(self) -> bool:
        return all(value == 0 for value in self._coefficients[1::2])

    def __add__(self, other):
        return series_add(self, _as_series(other, self.order))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-value for value in self._coefficients])

    def __sub__(self, other):
        return series_add(self, -_as_series(other, self.order))

    def __rsub__(self, other):
        return series_add(_as_series(other, self.order), -self)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return series_mul(self, other)
        scalar = to_rational(other)
        return PowerSeries([scalar * value for value in self._coefficients])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return self._coefficients[: order + 1] == other._coefficients[: order + 1]

    __hash__ = None

    def __repr__(self):
        return f"PowerSeries({[format_rational(c) for c in self]}, order={self.order})"

    def __str__(self):
        terms = []
        for exponent, value in enumerate(self._coefficients):
            if value == 0:
                continue
            if exponent == 0:
                terms.append(format_rational(value))
            elif exponent == 1:
                terms.append(f"{format_rational(value)} x")
            else:
                terms.append(f"{format_rational(value)} x^{exponent}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(x^{self.order + 1})"


def _as_series(value, order: int) -> PowerSeries:
    if isinstance(value, PowerSeries):
        return value
    return PowerSeries.constant(value, order)


def series_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Coefficientwise sum truncated to the smaller order"""

    order = min(a.order, b.order)
    return PowerSeries([a[m] + b[m] for m in range(order + 1)])


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the smaller order"""

    order = min(a.order, b.order)
    return PowerSeries(
        [sum((a[j] * b[m - j] for j in range(m + 1)), Rational(0)) for m in range(order + 1)]
    )


def series_inverse(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse of a series with a non-zero constant term"""

    if a[0] == 0:
        message = "Cannot invert a power series whose constant term is zero."
        logging.error(message)
        raise ZeroConstantTerm(message)
    inverse_constant = 1 / a[0]
    inverse = [inverse_constant]
    for m in range(1, a.order + 1):
        total = sum((a[j] * inverse[m - j] for j in range(1, m + 1)), Rational(0))
        inverse.append(-inverse_constant * total)
    return PowerSeries(inverse)


def series_derivative(a: PowerSeries) -> PowerSeries:
    """Formal derivative, the order drops by one (but never below zero)"""

    if a.order == 0:
        return PowerSeries([0])
    return PowerSeries([m * a[m] for m in range(1, a.order + 1)])


def series_exp(a: PowerSeries) -> PowerSeries:
    """exp(a) for a series without constant term, using e' = a' e"""

    if a[0] != 0:
        message = (
            f"The exponential needs a zero constant term, the series has {a[0]}."
        )
        logging.error(message)
        raise NonzeroConstantTerm(message)
    result = [Rational(1)]
    for m in range(1, a.order + 1):
        total = sum((j * a[j] * result[m - j] for j in range(1, m + 1)), Rational(0))
        result.append(total / m)
    return PowerSeries(result)


def series_log(a: PowerSeries) -> PowerSeries:
    """log(a) for a series with constant term one, using a l' = a'"""

    if a[0] != 1:
        message = f"The logarithm needs constant term 1, the series has {a[0]}."
        logging.error(message)
        raise NotNormalized(message)
    result = [Rational(0)]
    for m in range(1, a.order + 1):
        total = sum((j * result[j] * a[m - j] for j in range(1, m)), Rational(0))
        result.append(a[m] - total / m)
    return PowerSeries(result)


def series_scale_arg(a: PowerSeries, lam) -> PowerSeries:
    """Return a(lam * x), i.e. coefficient m multiplied by lam**m"""

    lam = to_rational(lam)
    return PowerSeries([value * lam**m for m, value in enumerate(a)])


def exp_series(order: int, lam=1) -> PowerSeries:
    """exp(lam * x) from the factorial series"""

    _check_order(order)
    lam = to_rational(lam)
    return PowerSeries([lam**m / math.factorial(m) for m in range(order + 1)])


def _one_minus_exp_minus_over_x(order: int) -> PowerSeries:
    """(1 - exp(-x)) / x"""

    return PowerSeries(
        [Rational((-1) ** m, math.factorial(m + 1)) for m in range(order + 1)]
    )


def _exp_minus_one_over_x(order: int, lam=1) -> PowerSeries:
    """(exp(lam * x) - 1) / x"""

    lam = to_rational(lam)
    return PowerSeries(
        [lam ** (m + 1) / math.factorial(m + 1) for m in range(order + 1)]
    )


def _sinh_over_x(order: int, lam=1) -> PowerSeries:
    """sinh(lam * x) / (lam * x), an even series"""

    lam = to_rational(lam)
    return PowerSeries(
        [
            lam**m / math.factorial(m + 1) if m % 2 == 0 else 0
            for m in range(order + 1)
        ]
    )


def _cosh(order: int) -> PowerSeries:
    return PowerSeries(
        [Rational(1, math.factorial(m)) if m % 2 == 0 else 0 for m in range(order + 1)]
    )


def todd_series(order: int) -> PowerSeries:
    """x / (1 - exp(-x))"""

    _check_order(order)
    return series_inverse(_one_minus_exp_minus_over_x(order))


def ahat_series(order: int) -> PowerSeries:
    """(x/2) / sinh(x/2)"""

    _check_order(order)
    return series_inverse(_sinh_over_x(order, Rational(1, 2)))


def l_series(order: int) -> PowerSeries:
    """x / tanh(x)"""

    _check_order(order)
    return series_mul(_cosh(order), series_inverse(_sinh_over_x(order)))


def a_lambda_series(lam, order: int) -> PowerSeries:
    """lam * x * exp(x) / (exp(lam * x) - 1) for a non-zero rational lam. Built as
    exp(x) * lam / ((exp(lam * x) - 1) / x) so no series without constant term is
    ever inverted. lam = 1 gives the Todd series."""

    _check_order(order)
    lam = to_rational(lam)
    if lam == 0:
        message = "The scaling parameter of the A-series must be non-zero."
        logging.error(message)
        raise BadK(message)
    return lam * series_mul(exp_series(order), series_inverse(_exp_minus_one_over_x(order, lam)))


def ak_series(k: int, order: int) -> PowerSeries:
    """k x exp(x) / (exp(k x) - 1), k >= 2"""

    _check_k(k)
    return a_lambda_series(k, order)


def a_recip_k_series(k: int, order: int) -> PowerSeries:
    """x exp(x / k) / (exp(x) - 1), k >= 2"""

    _check_k(k)
    _check_order(order)
    return series_mul(
        exp_series(order, Rational(1, k)), series_inverse(_exp_minus_one_over_x(order))
    )


def x_over_sinh_series(order: int) -> PowerSeries:
    """x / sinh(x), constructed directly"""

    _check_order(order)
    return series_inverse(_sinh_over_x(order))
