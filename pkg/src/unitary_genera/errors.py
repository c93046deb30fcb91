# -*- coding: utf-8 -*-
"""
Created on Mon Oct  5 09:20:03 2026

Named errors raised across the package. All derive from ValueError so callers
catching ValueError keep working.
"""


class GeneraError(ValueError):
    """Base class of all errors raised on invalid input data or parameters."""


class ZeroConstantTerm(GeneraError):
    pass


class NonzeroConstantTerm(GeneraError):
    pass


class BadOrder(GeneraError):
    pass


class BadK(GeneraError):
    pass


class NotNormalized(GeneraError):
    pass


class OddSeriesInPontrjaginGrading(GeneraError):
    pass


class WeightMismatch(GeneraError):
    pass


class MissingMonomial(GeneraError):
    pass


class ParseError(GeneraError):
    pass


class InvariantViolation(GeneraError):
    pass


class NoDistinguishedClass(GeneraError):
    pass


class InsufficientBound(GeneraError):
    pass


class DimensionTooSmall(GeneraError):
    pass


class SingularMatrix(GeneraError):
    pass


class BadDimension(GeneraError):
    pass
