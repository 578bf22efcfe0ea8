"""Exception hierarchy.

Every library error derives from :class:`WignerError` and carries a short
``code`` string that the CLI copies into its reports, plus the process exit
status used when the error terminates a command.
"""


class WignerError(ValueError):
    code = "WignerError"
    exit_code = 3


class DegenerateMomentum(WignerError):
    code = "DegenerateMomentum"


class NotNull(WignerError):
    code = "NotNull"


class NotHermitian(WignerError):
    code = "NotHermitian"


class BadAxis(WignerError):
    code = "BadAxis"


class BadDeterminant(WignerError):
    code = "BadDeterminant"


class SuperluminalVelocity(WignerError):
    code = "SuperluminalVelocity"


class SouthPoleSingularity(WignerError):
    code = "SouthPoleSingularity"


class DegenerateBranch(WignerError):
    code = "DegenerateBranch"


class ZeroState(WignerError):
    code = "ZeroState"


class BadPhase(WignerError):
    code = "BadPhase"


class ShapeViolation(WignerError):
    """Decomposed little-group matrix is not upper triangular.

    Indicates a bug or a non-null momentum that slipped past validation;
    never a recoverable condition.
    """

    code = "ShapeViolation"
    exit_code = 1


class PipelineSyntaxError(WignerError):
    """Malformed pipeline text. ``position`` is the 1-based token index."""

    code = "PipelineSyntaxError"
    exit_code = 2

    def __init__(self, message, position=None, column=None):
        self.position = position
        self.column = column
        if position is not None:
            message = f"token {position}: {message}"
        super().__init__(message)
