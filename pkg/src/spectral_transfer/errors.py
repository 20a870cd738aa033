"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class SpectralTransferError(Exception):
    """Base class for all library errors."""


class UnknownCaseError(SpectralTransferError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown case"


class ExternalDataError(SpectralTransferError):
    """The requested data lives in the companion classification and is not cataloged."""


class TransferError(SpectralTransferError, ValueError):
    """A transfer map could not be evaluated."""

    def __init__(self, message: str, label: str | None = None):
        super().__init__(message)
        self.label = label

    def __str__(self) -> str:
        msg = super().__str__()
        return f"{self.label}: {msg}" if self.label else msg


class NotInImageError(TransferError):
    """The infinitesimal character does not factor through the fiber type."""


class AmbiguousTransferError(TransferError):
    """Two admissible slot matchings produced inequivalent eigenvalue parameters."""


class SchemaError(SpectralTransferError, ValueError):
    """Malformed JSON input; ``path`` points at the offending field."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path
