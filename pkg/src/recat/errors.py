"""Exception types shared across the package."""


class RecatError(Exception):
    """Base class for all library errors."""


class ModeMismatchError(RecatError):
    """Exact and float values were mixed in a single operation."""


class ExactModeError(RecatError):
    """Exact arithmetic was requested where only float semantics are offered."""


class NotArchimedeanError(RecatError):
    """An additive generator was requested for a non-Archimedean t-norm."""


class NotClosedError(RecatError):
    """A value set is not closed under the quantale operations."""

    def __init__(self, x, y, op):
        super().__init__(f"not closed: {op}({x}, {y}) escapes the set")
        self.x = x
        self.y = y
        self.op = op


class CapExceededError(RecatError):
    """Grid saturation exceeded the element cap."""


class BoundExceededError(RecatError):
    """An enumeration exceeded its configured bound."""


class CarrierMismatchError(RecatError):
    """Carriers of the operands do not line up."""


class NotAFunctorError(RecatError):
    """A map between enriched categories is not hom-decreasing."""


class AxiomError(RecatError):
    """A structural axiom failed; carries the first offending witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
