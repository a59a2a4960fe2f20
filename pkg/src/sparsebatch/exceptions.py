"""Exception types raised across the package.

Everything input-shaped derives from ValueError so callers that only care
about "bad input vs. broken state" can catch the base classes.
"""


class DimensionMismatch(ValueError):
    """Array lengths or shapes disagree with the problem dimensions."""


class DegenerateDirection(ValueError):
    """Exact line search has a vanishing denominator along this direction."""


class BudgetExceedsPool(ValueError):
    """Requested batch size is larger than the candidate pool."""


class ProblemTooLarge(ValueError):
    """Exhaustive search guard tripped; the support enumeration is infeasible."""


class EmptySampleSet(ValueError):
    """No model samples were provided to build a sample embedding."""


class InvalidDistribution(ValueError):
    """A probability row is negative or does not sum to one."""


class EmptyValidationSet(ValueError):
    """Temperature calibration needs at least one validation example."""


class EmptyTrainingSet(ValueError):
    """Training requires at least one labeled example."""


class LabelOutOfRange(ValueError):
    """A class label falls outside [0, n_classes)."""


class UntrainedModel(RuntimeError):
    """Prediction was requested from a model that has not been fit."""


class EmptyRecordList(ValueError):
    """A learning-curve summary needs at least one round record."""


class PoolExhausted(RuntimeError):
    """The unlabeled pool cannot supply the requested batch."""


class ConfigInvalid(ValueError):
    """A run configuration is semantically inconsistent."""


class FileFormatError(ValueError):
    """A problem/config/dataset file failed parsing or schema validation.

    ``location`` carries either a ``line:column`` pair (parse errors) or the
    offending key name (schema errors) so CLI diagnostics can anchor the
    message.
    """

    def __init__(self, message, path=None, location=None):
        self.path = path
        self.location = location
        prefix = ""
        if path is not None:
            prefix = f"{path}: "
        if location is not None:
            prefix = f"{prefix}{location}: "
        super().__init__(prefix + message)
