"""Exception hierarchy for cellrook."""


class CellRookError(Exception):
    """Base class for all library errors."""


class EmptyCollection(CellRookError, ValueError):
    pass


class BoardTooLarge(CellRookError, ValueError):
    pass


class NotGrid(CellRookError, ValueError):
    """A residue whose cells are not the full product of its columns and rows."""


class EmptyResidue(CellRookError, ValueError):
    pass


class CellNotInCollection(CellRookError, KeyError):
    pass


class KOutOfRange(CellRookError, ValueError):
    pass


class InvalidConfig(CellRookError, ValueError):
    pass


class NotCanonical(CellRookError, ValueError):
    pass


class NotSquareBoard(CellRookError, ValueError):
    pass


class NotDominoStable(CellRookError, ValueError):
    pass


class RankOutOfRange(CellRookError, ValueError):
    pass


class ParseError(CellRookError, ValueError):
    pass


class CounterexampleFound(CellRookError):
    """Raised by corpus verification; carries the offending shape and report."""

    def __init__(self, message, shape=None, report=None):
        super().__init__(message)
        self.shape = shape
        self.report = report
