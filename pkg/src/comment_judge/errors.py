"""Exception types shared across the package.

The CLI maps these onto exit codes: DataError -> 2, EndpointError -> 3.
"""


class CommentJudgeError(Exception):
    pass


class DataError(CommentJudgeError):
    """Malformed or unusable input data (files, datasets, annotations)."""


class FingerprintMismatchError(DataError):
    """Model was trained against a different feature pipeline."""


class EndpointError(CommentJudgeError):
    """Generative endpoint failure."""


class AuthenticationError(EndpointError):
    """Endpoint rejected the credential (401/403); retrying will not help."""


class EndpointUnreachableError(EndpointError):
    """Transport failure that persisted through the retry budget."""


class ZeroAcceptedError(EndpointError):
    """A generation round produced no usable candidates."""


class InvalidLabelError(EndpointError):
    """Labeling reply could not be parsed even after the strict retry."""
