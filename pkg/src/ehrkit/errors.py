"""Exception types raised by the geometry kernel and the checks built on it."""


class KernelError(Exception):
    """Base class for all geometry errors."""


class DegenerateInput(KernelError):
    """Input spans a lower-dimensional affine subspace."""


class Unbounded(KernelError):
    """Inequality system has an unbounded feasible region."""


class Empty(KernelError):
    """Inequality system is infeasible."""


class SingularMap(KernelError):
    """Affine map matrix is not invertible."""


class OriginNotInterior(KernelError):
    """Operation requires the origin strictly inside the polytope."""


class NotLatticePolytope(KernelError):
    """Operation requires all vertices to be integral."""


class DimensionUnsupported(KernelError):
    """Dimension exceeds the configured maximum for this operation."""


class NoSpanningSelection(KernelError):
    """No facet subset through the chosen vertex spans the space."""


class NotFano(KernelError):
    """Operation requires a Fano polytope (primitive vertices, origin interior)."""


class CertificationContradiction(KernelError):
    """Volume matches the extremal bound but no certificate exists.

    Signals either an input outside the theorem hypotheses or a kernel bug;
    never swallowed.
    """


class PreconditionError(KernelError):
    """A stated precondition of an operation does not hold."""


class ParseError(Exception):
    """Malformed polytope input; carries the offending line number."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
