"""Exception hierarchy shared by every engine module.

All engine errors derive from :class:`DataPrepError` so callers (CLI, service)
can map them to exit codes / HTTP statuses in one place.
"""


class DataPrepError(Exception):
    """Base class for every error raised by the engine."""


# --- ingestion -----------------------------------------------------------


class MalformedCsv(DataPrepError):
    """CSV input is structurally broken (ragged row, undecodable bytes)."""

    def __init__(self, message: str, row: int | None = None):
        super().__init__(message)
        self.row = row


class EmptyInput(DataPrepError):
    """Input contains no data rows at all."""


class DuplicateHeader(DataPrepError):
    """Two columns in the header share a name."""


class UnknownColumn(DataPrepError):
    """A referenced column does not exist in the dataset."""


class IndexOutOfRange(DataPrepError):
    """A row index is outside the dataset's current row range."""


# --- profiling -----------------------------------------------------------


class EmptyColumn(DataPrepError):
    """Column has no observed (non-missing) cells."""


class LengthMismatch(DataPrepError):
    """Paired columns have different lengths."""


class TooFewNumericColumns(DataPrepError):
    """Correlation matrix needs at least two numeric columns."""


class SingleClass(DataPrepError):
    """Classifier training data contains fewer than two classes."""


class KTooLarge(DataPrepError):
    """k exceeds what the input size allows."""


class DimensionMismatch(DataPrepError):
    """Input vectors do not share one dimension."""


# --- mining --------------------------------------------------------------


class EmptyTransactions(DataPrepError):
    """Rule mining received no transactions."""


class NoCategoricalColumns(DataPrepError):
    """Transaction building requires at least one categorical column."""


class NoPredictors(DataPrepError):
    """Feature ranking requires at least one predictor column."""


class ConstantTarget(DataPrepError):
    """The ranking target never varies, so importances are undefined."""


# --- cleaning ------------------------------------------------------------


class AllMissing(DataPrepError):
    """Every cell of a column is missing; no statistic can be computed."""


class StrategyTypeMismatch(DataPrepError):
    """Imputation strategy does not apply to the column's variable type."""


class AllMissingColumn(DataPrepError):
    """Chained imputation requires at least one observed value per column."""


class TooFewValues(DataPrepError):
    """A detector needs more observed values than the column provides."""


class NonNumeric(DataPrepError):
    """Operation requires a numeric column."""


class NonFinite(DataPrepError):
    """Input points contain NaN or infinite coordinates."""


class TooFewPoints(DataPrepError):
    """A detector needs more input points than were given."""


class SingleClassPairs(DataPrepError):
    """Similarity learning needs both similar and dissimilar pairs."""


class UnknownAttribute(DataPrepError):
    """Similarity model references an attribute absent from the dataset."""


# --- transforms ----------------------------------------------------------


class NonCategorical(DataPrepError):
    """Operation requires a categorical column."""


class IncompleteOrder(DataPrepError):
    """Supplied category order does not cover every observed category."""


class CardinalityTooHigh(DataPrepError):
    """Distinct-category count exceeds the one-hot cap."""


class ZeroVariance(DataPrepError):
    """Standardization is undefined for a constant column."""


class ZeroRange(DataPrepError):
    """Min-max scaling is undefined when max equals min."""


class NonPositiveValues(DataPrepError):
    """Power transform requires strictly positive values."""


class UnsortedEdges(DataPrepError):
    """Discretization edges must be strictly ascending."""


class DegenerateLabels(DataPrepError):
    """Recommender training labels never vary."""


class EmptyName(DataPrepError):
    """Attribute embedding requires a non-empty name."""


class MixedProviders(DataPrepError):
    """Embeddings from different providers cannot be compared."""


# --- pipeline ------------------------------------------------------------


class IoError(DataPrepError):
    """Reading or writing an artifact failed."""


class FingerprintMismatch(DataPrepError):
    """Plan was built for a different input file."""


class ConstraintViolationAfterRepair(DataPrepError):
    """Constraints still violated after the plan finished."""

    def __init__(self, violations):
        super().__init__(f"{len(violations)} constraint violation(s) after repair")
        self.violations = list(violations)


class StepExecutionError(DataPrepError):
    """A plan step failed; carries the partial report built so far."""

    def __init__(self, step_id: str, cause: Exception, partial_report=None):
        super().__init__(f"step {step_id} failed: {cause}")
        self.step_id = step_id
        self.cause = cause
        self.partial_report = partial_report


# --- session service ------------------------------------------------------


class UnknownSession(DataPrepError):
    """No live session with that id."""


class SessionExpired(DataPrepError):
    """Session idle time exceeded its expiry."""


class StaleVersion(DataPrepError):
    """Mutation carried an outdated snapshot version; client must refetch."""

    def __init__(self, expected: int, got: int):
        super().__init__(f"stale snapshot version {got}, server is at {expected}")
        self.expected = expected
        self.got = got


class FileTooLarge(DataPrepError):
    """Upload exceeds the configured size cap."""


class NonNumericAxis(DataPrepError):
    """Outlier/plot axis must be a numeric column."""


class UnknownStep(DataPrepError):
    """Plan step id not present in the session's plan."""


class InvalidEdit(DataPrepError):
    """Step edit rejected; the message explains why."""
