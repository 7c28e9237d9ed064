"""Exception hierarchy shared by the engine and the CLI.

Every error carries a human readable ``detail`` and the process ``exit_code`` the CLI
uses when the error escapes a command.
"""

EXIT_USAGE = 1
EXIT_ENGINE = 2
EXIT_VERIFICATION_FAILED = 3


class SpectraError(Exception):
    exit_code = EXIT_ENGINE

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class UnsupportedSeries(SpectraError):
    pass


class InvalidRank(SpectraError):
    pass


class NotARoot(SpectraError):
    pass


class DimensionMismatch(SpectraError):
    pass


class ZeroRoot(SpectraError):
    pass


class GroupTooLarge(SpectraError):
    pass


class NotASubsystem(SpectraError):
    pass


class NotDominant(SpectraError):
    pass


class NotIntegral(SpectraError):
    pass


class NotWInvariant(SpectraError):
    pass


class NonIntegralPeel(SpectraError):
    pass


class ClosureViolation(SpectraError):
    pass


class EmptyComplement(SpectraError):
    pass


class NotInTransversal(SpectraError):
    pass


class CutoffBeforeFirstLine(SpectraError):
    pass


class NonPositiveScale(SpectraError):
    pass


class ConfigError(SpectraError):
    """Malformed environment setting."""

    exit_code = EXIT_USAGE


class ParseError(SpectraError):
    """Malformed space query; ``position`` is the 0-based offset of the problem."""

    exit_code = EXIT_USAGE

    def __init__(self, detail: str, position: int):
        super().__init__(f"{detail} (at position {position})")
        self.position = position
