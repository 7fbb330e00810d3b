"""Exception hierarchy shared by the library and the CLI."""


class CubicFreeError(Exception):
    """Base class for all library errors."""


class DegreeUnderflow(CubicFreeError):
    pass


class PartialsDependent(CubicFreeError):
    """The partial derivatives admit a constant relation (cone or non-reduced input)."""


class StabilizationFailure(CubicFreeError):
    """Hilbert function of the Jacobian algebra did not settle before the cap."""


class MdrOutOfRange(CubicFreeError):
    """du Plessis-Wall criterion requested with mdr > (m-1)/2."""


class HypothesisViolated(CubicFreeError):
    pass


class SharedComponent(CubicFreeError):
    pass


class ProjectionDegenerate(CubicFreeError):
    pass


class UnsupportedSingularity(CubicFreeError):
    pass


class CountMismatch(CubicFreeError):
    pass


class NotSmooth(CubicFreeError):
    pass


class SingularPoint(CubicFreeError):
    pass


class UnknownExample(CubicFreeError):
    pass


class ParseError(CubicFreeError):
    pass
