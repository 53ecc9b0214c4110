"""Exception hierarchy shared by all colorsig modules."""


class ColorsigError(Exception):
    """Base class for every error raised by colorsig."""


class DimensionError(ColorsigError, ValueError):
    """Operands live in rings or spaces of different dimension."""


class DomainError(ColorsigError, ValueError):
    """An argument lies outside the domain of an operation."""


class ConfigurationError(ColorsigError):
    """Backend, precision or tolerance settings are incompatible with the request."""


class ValidationError(ColorsigError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid input")


class IndeterminateInertiaError(ColorsigError):
    """An eigenvalue sits too close to the zero tolerance to be classified."""


class InvalidCertificateError(ColorsigError):
    """A claimed concordance-root certificate does not verify."""


class InconsistencyError(ColorsigError):
    """Two results that cannot both hold were obtained."""


class ConsistencyError(ColorsigError, ValueError):
    """Redundant encodings of the same data disagree."""
