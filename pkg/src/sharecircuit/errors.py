"""Exception types shared across the package."""


class ShareCircuitError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArguments(ShareCircuitError):
    pass


class InverseOfZero(ShareCircuitError):
    pass


class SingularMatrix(ShareCircuitError):
    pass


class IndexOutOfRange(ShareCircuitError):
    pass


class NonDecreasingFunction(ShareCircuitError):
    pass


class CyclicGraph(ShareCircuitError):
    pass


class DanglingInputOutput(ShareCircuitError):
    pass


class DuplicateTerminal(ShareCircuitError):
    pass


class TerminalNotInNetwork(ShareCircuitError):
    pass


class ArityMismatch(ShareCircuitError):
    pass


class RetriesExhausted(ShareCircuitError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionViolation(ShareCircuitError):
    pass


class TooFewInputs(ShareCircuitError):
    pass


class SingularSubmatrix(ShareCircuitError):
    pass


class StateSpaceTooLarge(ShareCircuitError):
    pass
