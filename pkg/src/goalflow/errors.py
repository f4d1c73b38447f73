"""Exception hierarchy shared across the package.

Exit-code mapping used by the CLI: usage errors are handled by argparse
(exit 2), DataError and its subclasses map to exit 3, NumericError to 4.
"""


class GoalflowError(Exception):
    pass


class DimensionError(GoalflowError):
    """Tensor shapes are incompatible for the requested operation."""


class TapeError(GoalflowError):
    """Misuse of the autodiff tape (double backward, detached loss, ...)."""


class NumericError(GoalflowError):
    """Non-finite values encountered where finite math was required."""


class DataError(GoalflowError):
    """Bad or missing input data (files, shards, checkpoints, scenes)."""


class ParseError(DataError):
    """Instruction text does not match the closed grammar."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class GroundingError(DataError):
    """Referred object cannot be resolved in the scene."""


class GroundingAmbiguousError(GroundingError):
    """Multiple scene objects match the reference."""

    def __init__(self, message, candidates):
        super().__init__(message)
        self.candidates = list(candidates)


class InfeasibleTaskError(DataError):
    """Instruction has no valid goal configuration in this scene."""
