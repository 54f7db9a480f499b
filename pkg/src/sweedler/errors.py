"""Exception hierarchy shared by all modules."""


class SweedlerError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(SweedlerError):
    pass


class FieldMismatch(SweedlerError):
    pass


class Singular(SweedlerError):
    """A square map is not invertible; carries the rank found."""

    def __init__(self, rank: int):
        super().__init__(f"map is singular (rank {rank})")
        self.rank = rank


class UnsupportedField(SweedlerError):
    pass


class BudgetExceeded(SweedlerError):
    """An enumeration would exceed the configured candidate budget."""

    def __init__(self, needed: int, budget: int):
        super().__init__(f"enumeration needs {needed} candidates, budget is {budget}")
        self.needed = needed
        self.budget = budget


class InvalidStructure(SweedlerError):
    """An operation received a structure that fails its axioms."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InvalidAlgebra(InvalidStructure):
    pass


class InvalidCoalgebra(InvalidStructure):
    pass


class InvalidBialgebra(InvalidStructure):
    pass


class InvalidHopf(InvalidStructure):
    pass


class NotAGroup(SweedlerError):
    pass


class NotAMorphism(SweedlerError):
    pass


class NotAComodule(SweedlerError):
    pass


class NotCommutative(SweedlerError):
    pass


class IncompatibleMeasurings(SweedlerError):
    pass


class PreconditionViolated(SweedlerError):
    pass


class NegativeDegree(SweedlerError):
    pass


class NotClosed(SweedlerError):
    pass


class InducedStructureIllDefined(SweedlerError):
    """Quotient structure failed a well-definedness check.

    With valid inputs this can never happen; seeing it means either a bug
    or that a caller-supplied morphism was not actually a morphism.
    """


class ParseError(SweedlerError):
    def __init__(self, message, line=None, column=None, path=None):
        loc = ""
        if line is not None:
            loc = f" at line {line}, column {column}"
        elif path:
            loc = f" at {path}"
        super().__init__(message + loc)
        self.line = line
        self.column = column
        self.path = path


class ValidationError(SweedlerError):
    """A parsed document fails its structure axioms."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
