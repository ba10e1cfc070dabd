"""Exception types shared across the package."""


class GeolexError(Exception):
    """Base class for all geolex errors."""


class LexiconFormatError(GeolexError):
    """A lexicon file violates the .dic or theme-list format."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IndexBuildError(GeolexError):
    """A hard error while building or merging an index (e.g. duplicate user)."""


class CorruptIndexError(GeolexError):
    """Index file failed its checksum or structural validation."""


class UnsupportedVersionError(GeolexError):
    """Index file carries a format version this build cannot read."""


class NotFoundError(GeolexError):
    """Unknown category, lexicon, or facet value."""


class InsufficientDataError(GeolexError):
    """Too few paired observations to compute a statistic."""


class UndefinedCorrelationError(GeolexError):
    """Rank correlation is undefined (zero rank variance on one side)."""


class NoDataError(GeolexError):
    """An all-null vector cannot be binned into a choropleth."""


class ExternalVectorError(GeolexError):
    """A user-supplied usps,value CSV vector is malformed."""
