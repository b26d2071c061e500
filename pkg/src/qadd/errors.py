"""Exception hierarchy shared across the package."""


class QaddError(Exception):
    """Base class for all qadd errors."""


class ValidationError(QaddError):
    """A circuit failed structural validation.

    ``gate_index`` points at the first offending gate, or is None for
    circuit-level violations (e.g. an And left unclosed is reported at the
    index of that And).
    """

    def __init__(self, message: str, gate_index: int | None = None):
        super().__init__(message)
        self.gate_index = gate_index


class ArityMismatch(ValidationError):
    pass


class DuplicateOperand(ValidationError):
    pass


class UnknownQubit(ValidationError):
    pass


class DanglingAnd(ValidationError):
    pass


class MismatchedAndDagger(ValidationError):
    pass


class OperandCollision(QaddError):
    """Gate construction was given overlapping qubits."""


class WidthZero(QaddError):
    """Register width must be at least 1."""


class WidthTooSmall(QaddError):
    """Constant's effective width is below the construction's minimum."""


class WidthMismatch(QaddError):
    """Register widths of the involved objects disagree."""


class SimulationError(QaddError):
    pass


class AndTargetNotZero(SimulationError):
    """And applied while its target qubit held 1."""


class AndDaggerMismatch(SimulationError):
    """AndDagger applied while its target differed from the control conjunction."""


class DirtyAncilla(SimulationError):
    """An ancilla was nonzero where a zero state is required."""


class CapExceeded(SimulationError):
    """Exhaustive sweep would exceed the configured basis-size cap."""


class UnknownPass(QaddError):
    """Pass name not present in the registry."""
