"""Exception hierarchy.

Every error raised by the package derives from :class:`GHError`.  The three
direct subclasses map onto CLI exit codes: bad input (2), exhausted search
budget (3), violated operation precondition (4).
"""


class GHError(Exception):
    pass


# --- input errors -----------------------------------------------------------

class InputError(GHError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MetricAxiomError(InputError):
    """A distance matrix is not a finite metric.  ``where`` holds the offending indices."""

    def __init__(self, message, where):
        self.where = tuple(where)
        super().__init__(f"{message} at {self.where}")


class NotSquare(MetricAxiomError):
    pass


class NonzeroDiagonal(MetricAxiomError):
    pass


class NotSymmetric(MetricAxiomError):
    pass


class NegativeDistance(MetricAxiomError):
    pass


class ZeroOffDiagonal(MetricAxiomError):
    pass


class TriangleViolation(MetricAxiomError):
    pass


# --- search -----------------------------------------------------------------

class SearchBudgetExceeded(GHError):
    """Node budget ran out.  ``lower``/``upper`` bound twice the distance, i.e. dis R."""

    def __init__(self, nodes, lower, upper):
        self.nodes = nodes
        self.lower = lower
        self.upper = upper
        super().__init__(
            f"search budget exceeded after {nodes} nodes; "
            f"distortion bounds so far: [{lower}, {upper}]"
        )


# --- precondition errors ----------------------------------------------------

class PreconditionError(GHError, ValueError):
    pass


class EmptySubset(PreconditionError):
    pass


class EmptyRelation(PreconditionError):
    pass


class NotACorrespondence(PreconditionError):
    pass


class BadCardinal(PreconditionError):
    pass


class NonPositiveScale(PreconditionError):
    pass


class LambdaTooSmall(PreconditionError):
    pass


class AlphaNotZero(PreconditionError):
    pass


class SinglePoint(PreconditionError):
    pass


class NotDiametral(PreconditionError):
    pass


class NegativeRadius(PreconditionError):
    pass


class ParameterOutOfRange(PreconditionError):
    pass


class EpsilonOutOfRange(PreconditionError):
    pass


class ZeroDistance(PreconditionError):
    pass


class NotSubextreme(PreconditionError):
    pass
