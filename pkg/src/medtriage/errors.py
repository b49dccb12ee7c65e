"""Exception types shared across the package."""


class MedTriageError(Exception):
    """Base class for all package errors."""


class SchemaError(MedTriageError):
    """Input data is missing a required column or field."""


class EmptyDatasetError(MedTriageError):
    """An operation that needs at least one usable example received none."""


class ConfigError(MedTriageError):
    """A configuration value is outside its legal range."""


class ShapeError(MedTriageError):
    """Vector or matrix dimensions do not match the fitted model."""


class InputError(MedTriageError):
    """Malformed operation input (mismatched lengths, unknown labels)."""


class DivergenceError(MedTriageError):
    """Training produced a non-finite loss."""

    def __init__(self, epoch: int, message: str | None = None):
        self.epoch = epoch
        super().__init__(message or f"non-finite loss at epoch {epoch}")


class AuthenticationError(MedTriageError):
    """Login failed; the message never reveals which credential was wrong."""


class AuthorizationError(MedTriageError):
    """Missing, expired, or revoked token."""


class NotFoundError(MedTriageError):
    """Referenced record or model does not exist."""


class ValidationError(MedTriageError):
    """Request payload failed validation."""


class ExtractionError(MedTriageError):
    """The text extractor could not produce text from the payload."""


class UnclassifiableError(MedTriageError):
    """Preprocessing produced zero tokens, so no prediction is possible."""
