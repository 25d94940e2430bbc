"""Exception types shared across the package."""


class LinefreeError(Exception):
    """Base class for all package-specific errors."""


class UnsupportedField(LinefreeError):
    """Raised when a coefficient field outside Q / Q(sqrt n) is requested."""


class IdenticalLines(LinefreeError):
    """Raised when two lines expected to be distinct normalize to the same line."""


class DuplicateLine(LinefreeError):
    """Raised at arrangement construction when two input lines coincide."""


class BadPrime(LinefreeError):
    """Raised when a rational entry cannot be reduced modulo the given prime."""


class NotStabilized(LinefreeError):
    """Raised when the Milnor algebra Hilbert function has not become constant
    at the two probe degrees; signals a bug or non-reduced input."""


class InternalInconsistency(LinefreeError):
    """Raised when two theoretically equivalent criteria disagree.

    This is never swallowed: it indicates a bug in the computation, not a
    property of the input.
    """


class CatalogueSyntaxError(LinefreeError):
    """Catalogue text that does not match the file grammar."""

    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class CatalogueConsistencyError(LinefreeError):
    """A syntactically valid entry whose declared data contradicts itself."""

    def __init__(self, entry: str, message: str):
        self.entry = entry
        super().__init__(f"entry {entry!r}: {message}")
