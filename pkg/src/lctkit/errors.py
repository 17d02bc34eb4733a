"""Exception types raised by the transform machinery."""


class TransformError(Exception):
    """Base class for all lctkit errors."""


class NonConvergent(TransformError):
    """A transform integral (or closed-form Gaussian integral) diverges."""


class NearDegenerate(TransformError):
    """Quadrature refused: the matrix entry b is too close to zero."""


class DegenerateMatrix(TransformError):
    """Kernel requested for a matrix with b == 0."""


class NotDegenerate(TransformError):
    """Degenerate (b == 0) action requested for a matrix with b != 0."""


class NodeBudgetExceeded(TransformError):
    """The quadrature would need more nodes than QuadratureConfig.max_nodes."""


class ComplexScaleOnSamples(TransformError):
    """Sampled data cannot be evaluated at complex arguments."""


class InadmissibleAuxiliary(TransformError):
    """An auxiliary chirp built by an identity check is not integrable."""
