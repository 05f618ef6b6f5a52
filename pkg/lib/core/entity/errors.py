"""
Domain exceptions raised by the numerics packages.

Every exception carries the name reported in error responses (``error_name``), the module that raised it
(``error_type``) and the process exit code the CLI maps it to (``error_code``).
"""


SUCCESS_CODE = 0
CONSISTENCY_FAILURE_CODE = 1
CONFIG_PARSE_ERROR_CODE = 2
LAW_ERROR_CODE = 3
NUMERICS_ERROR_CODE = 4
IO_ERROR_CODE = 5


class QMBPError(Exception):
    """
    Base class for all domain errors.

    @cvar error_name: The name of the error as it appears in error responses
    @type error_name: str
    @cvar error_type: The module in which the error was raised
    @type error_type: str
    @cvar error_code: The exit code associated with the error
    @type error_code: int
    """

    error_name: str = "QMBPError"
    error_type: str = "qmbp"
    error_code: int = NUMERICS_ERROR_CODE

    def __init__(self, message: str, error_type: str | None = None) -> None:
        super().__init__(message)
        self.message = message
        if error_type is not None:
            self.error_type = error_type


class LawError(QMBPError):
    error_type = "law"
    error_code = LAW_ERROR_CODE


class TooFewRatesError(LawError):
    error_name = "TooFewRates"


class NonFiniteRateError(LawError):
    error_name = "NonFiniteRate"


class NegativeRateError(LawError):
    error_name = "NegativeRate"


class ZeroDeathRateError(LawError):
    error_name = "ZeroDeathRate"


class NoBirthMassError(LawError):
    error_name = "NoBirthMass"


class ConservationViolationError(LawError):
    error_name = "ConservationViolation"


class NotSubcriticalError(QMBPError):
    error_name = "NotSubcritical"
    error_type = "law"


class BadParametersError(QMBPError):
    error_name = "BadParameters"
    error_type = "hardy"


class ToleranceNotMetError(QMBPError):
    error_name = "ToleranceNotMet"
    error_type = "hardy"


class MaximizerAtBoundaryError(QMBPError):
    error_name = "MaximizerAtBoundary"
    error_type = "hardy"


class BadTruncationError(QMBPError):
    error_name = "BadTruncation"
    error_type = "sl_eigen"


class NoConvergenceError(QMBPError):
    error_name = "NoConvergence"
    error_type = "sl_eigen"


class InvalidSeedConfigError(QMBPError):
    error_name = "InvalidSeedConfig"
    error_type = "ctmc"


class ConfigParseError(QMBPError):
    error_name = "ConfigParse"
    error_type = "cli"
    error_code = CONFIG_PARSE_ERROR_CODE


class IoError(QMBPError):
    error_name = "IoError"
    error_type = "io_error"
    error_code = IO_ERROR_CODE
