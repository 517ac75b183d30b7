"""Exception types shared across the package."""


class CapacityError(ValueError):
    """Graph or product exceeds the supported vertex capacity."""


class InvalidArcError(ValueError):
    """An arc is a self-loop or references a vertex out of range."""


class ArcListParseError(ValueError):
    """Arc-list text is malformed; carries the offending line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class SolveTimeout(Exception):
    """An exact solve exceeded its deadline (distinct from infeasibility)."""


class CliqueLimitExceeded(RuntimeError):
    """Clique or packing enumeration hit its explosion guard."""
