"""Exception hierarchy shared by every module."""


class DataShareError(ValueError):
    """Base class for all domain errors raised by this package."""


class InvalidInstanceError(DataShareError):
    pass


class InfeasibleProfileError(DataShareError):
    pass


class DomainError(DataShareError):
    """An argument lies outside the domain of the operation."""


class UnsupportedParameterError(DataShareError):
    """The closed form exists only for a narrower parameter regime."""


class OracleConfigError(DataShareError):
    pass


class SweepSpecError(DataShareError):
    pass
