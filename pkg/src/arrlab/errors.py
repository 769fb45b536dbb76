"""Exception hierarchy shared by all arrlab modules."""


class ArrlabError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(ArrlabError):
    """Operands live in different coefficient fields."""


class DivisionByZero(ArrlabError):
    """Exact division by a zero field element."""


class ReducibleMinimalPolynomial(ArrlabError):
    """t^2 - c1*t - c0 has a rational root, so Q(alpha) is not a field."""


class MalformedInput(ArrlabError):
    """Input file or literal does not conform to the documented format."""


class ZeroLine(ArrlabError):
    """A line with all three coefficients zero."""


class DuplicateLine(ArrlabError):
    """Two lines of an arrangement are projectively equal."""


class SingularTransform(ArrlabError):
    """A projective change of coordinates with determinant zero."""


class InvalidMatroid(ArrlabError):
    """Non-basis data violating rank-3 flat consistency or basis exchange."""


class PencilArrangement(InvalidMatroid):
    """All lines pass through a single point (rank below 3)."""


class CapExceeded(ArrlabError):
    """The syzygy scan hit its degree cap without a certified resolution."""


class InconsistentResolution(ArrlabError):
    """Internal identities of a computed resolution failed; hard error."""


class ConstraintViolated(ArrlabError):
    """Parameter point does not satisfy a realization family's equations."""


class ExcludedParameter(ArrlabError):
    """Parameter point lies in a family's excluded locus."""


class DenominatorZero(ArrlabError):
    """A parametrized expression was evaluated where a denominator vanishes."""


class DegenerateLines(ArrlabError):
    """An instantiated coordinate matrix has proportional or zero columns."""


class ComponentEmptyOverBaseField(ArrlabError):
    """Requested sampling from a component with no points over the base field."""


class SizeMismatch(ArrlabError):
    """Arrangement size differs from the matroid ground-set size."""
