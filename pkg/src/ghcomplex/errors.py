"""Exception hierarchy shared by the whole toolkit."""


class GHComplexError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(GHComplexError):
    """Malformed input text (partial-map file, incidence grid, presentation)."""


class DegreeMismatch(GHComplexError):
    """Partial maps of different degrees cannot be composed."""


class CapExceeded(GHComplexError):
    """Closure generation grew past the requested element cap."""


class NotIdempotent(GHComplexError):
    """An operation that needs an idempotent was given something else."""


class NoIdempotents(GHComplexError):
    """The semigroup has no idempotents, so it carries no biorder."""


class NotRegularElement(GHComplexError):
    """The element is not regular, so its D-class has no Rees coordinates."""


class NotZeroSimple(GHComplexError):
    """Incidence system has an empty block or an uncovered point."""


class NotASquare(GHComplexError):
    """The four corners do not form a non-degenerate E-square."""


class NotAnEPath(GHComplexError):
    """Consecutive members of the sequence are neither R- nor L-related idempotents."""


class VertexNotFound(GHComplexError):
    """Requested base vertex is not a vertex of the complex."""


class VerificationMismatch(GHComplexError):
    """A reproduction run asserted a value that did not match the computation."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
