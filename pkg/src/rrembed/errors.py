"""Exception hierarchy of rrembed.

All errors derive from :class:`Error`. Configuration problems are also
``ValueError`` instances, numerical failures are ``ArithmeticError``
instances, so callers can catch either the package or the builtin family.
"""
from __future__ import print_function, division, absolute_import


class Error(Exception):
    """Base of all rrembed errors."""
    #: short machine readable tag, written to ``error.json`` by the cli
    kind = 'error'

    def to_record(self):
        return {'kind': self.kind, 'type': type(self).__name__, 'message': str(self)}


class ConfigurationError(Error, ValueError):
    kind = 'configuration'


class ConfigParseError(ConfigurationError):
    """A config key is missing, unknown or has the wrong type."""
    kind = 'parse'

    def __init__(self, message, key=None, expected=None):
        super(ConfigParseError, self).__init__(message)
        self.key = key
        self.expected = expected

    def to_record(self):
        record = super(ConfigParseError, self).to_record()
        record.update(key=self.key, expected=self.expected)
        return record


class UnitError(ConfigurationError):
    kind = 'unit'


class SetupError(Error):
    """The physical setup does not satisfy the preconditions of an experiment."""
    kind = 'setup'


class NumericalError(Error, ArithmeticError):
    kind = 'numerical'


class ConvergenceError(NumericalError):
    """An eigensolve did not reach the residual bound."""

    def __init__(self, message, residuals=None):
        super(ConvergenceError, self).__init__(message)
        self.residuals = residuals

    def to_record(self):
        record = super(ConvergenceError, self).to_record()
        if self.residuals is not None:
            record['residuals'] = [float(r) for r in self.residuals]
        return record


class StabilityError(NumericalError):
    pass


class ResolutionError(NumericalError):
    pass


class PoleOnGridError(NumericalError):
    pass


class SingularDensityError(NumericalError):
    pass


class SymmetryError(NumericalError):
    pass
