"""Exception hierarchy shared by the library and the CLI."""


class TdcritError(Exception):
    """Base class for all library errors."""


class GraphInputError(TdcritError, ValueError):
    """Bad vertex, edge, ranking or parameter passed to an operation."""


class Graph6ParseError(GraphInputError):
    """Malformed graph6 text.

    ``offset`` is the 0-based byte position of the first offending byte.
    """

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class CapacityError(TdcritError):
    """Input exceeds an order bound of the representation or of a solver path."""


class SpecValidationError(TdcritError):
    """A construction spec failed validation; ``problems`` lists each broken invariant."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class DomainError(TdcritError):
    """A mathematical precondition does not hold for the given graph."""


class InvariantViolation(TdcritError, AssertionError):
    """A post-check that the theory guarantees has failed."""
