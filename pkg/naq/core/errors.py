"""
Exception types for NAQ
"""


class NaqError(Exception):
    """Base class for every error raised by the workbench"""


class DimensionMismatchError(NaqError, ValueError):
    """Operands live over different ambient dimensions"""


class TruncationMismatchError(NaqError, ValueError):
    """Series or products use different truncation orders"""


class PreconditionError(NaqError, ValueError):
    """An operation or constructor precondition does not hold"""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ExpressionParseError(NaqError, ValueError):
    """Malformed polynomial or star expression"""

    def __init__(self, message, position=0):
        super().__init__(f"{message} (at position {position})")
        self.reason = message
        self.position = position


class ConfigError(NaqError):
    """Invalid session configuration"""
