from typing import Optional, Tuple


def format_path(path: Tuple[int, ...]) -> str:
    """Node path as dot-separated child indices, `-` for the root."""
    return ".".join(str(i) for i in path) if path else "-"


class ShardkitError(Exception):
    """Base error; `exit_code` is the CLI exit status for this failure."""

    exit_code = 1

    def __init__(self, message: str, path: Optional[Tuple[int, ...]] = None):
        self.message = message
        self.path = path
        if path is not None:
            message = f"{message} at node {format_path(path)}"
        super().__init__(message)

    def at(self, path: Tuple[int, ...]) -> "ShardkitError":
        """Same error annotated with the node path where it happened."""
        return type(self)(self.message, path)


class SchemeParseError(ShardkitError):
    exit_code = 2


class SchemeMismatchError(ShardkitError):
    exit_code = 2


class ParameterError(ShardkitError, ValueError):
    exit_code = 3


class ModulusMismatchError(ParameterError):
    pass


class ZeroInverseError(ShardkitError, ZeroDivisionError):
    exit_code = 3

    def __init__(self, message: str = "no inverse of zero", path=None):
        super().__init__(message, path)


class ReconstructionError(ShardkitError):
    pass


class CrucialShareMissingError(ReconstructionError):
    exit_code = 4

    def __init__(self, message: str = "crucial share missing", path=None):
        super().__init__(message, path)


class InsufficientSharesError(ReconstructionError):
    exit_code = 5

    def __init__(self, message: str = "insufficient shares", path=None):
        super().__init__(message, path)


class InconsistentSharesError(ReconstructionError):
    exit_code = 6

    def __init__(self, message: str = "inconsistent shares", path=None):
        super().__init__(message, path)


class EnumerationLimitError(ShardkitError):
    exit_code = 7


class CompilerError(ShardkitError):
    exit_code = 8
