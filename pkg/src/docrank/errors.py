"""Exception types shared across the package."""


class DocrankError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DocrankError):
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class DuplicateEntryError(DocrankError):
    pass


class UnknownCountryError(DocrankError):
    pass


class ManifestEmptyError(DocrankError):
    pass


class NoHeadingsError(DocrankError):
    pass


class IngestError(DocrankError):
    pass


class FormatError(DocrankError):
    pass


class DuplicateWordError(DocrankError):
    pass


class DimensionError(DocrankError):
    pass


class DuplicateDocError(DocrankError):
    pass


class EmptyCorpusError(DocrankError):
    pass


class UnknownDocError(DocrankError):
    pass


class RankMismatchError(DocrankError):
    pass


class EmptyQueryError(DocrankError):
    """Query reduced to nothing after normalization and stopword removal."""


class EmptyEvalError(DocrankError):
    pass
