"""Exception types shared across the package."""


class MonospanError(Exception):
    """Base class for all monospan errors."""


class DegenerateInput(MonospanError):
    """The point set violates the general-position assumptions."""


class TiedCoordinate(MonospanError):
    """Two points share a rotated coordinate in the requested frame."""


class TiedY(TiedCoordinate):
    """Two points share a y coordinate (rooted algorithms require distinct y)."""


class RootNotExtreme(MonospanError):
    """A 2-rooted construction requires its roots to be the lowest and highest points."""


class CursorExhausted(MonospanError):
    """advance() was called past the last sufficient system."""


class BudgetExceeded(MonospanError):
    """An oracle was asked to enumerate beyond its configured budget."""


class GenerationFailed(MonospanError):
    """Random instance generation exhausted its retry budget."""


class ParseError(MonospanError):
    """Input text or JSON could not be parsed as a point set or graph."""
