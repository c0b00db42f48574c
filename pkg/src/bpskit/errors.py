"""Exception types shared across the package.

ValidationError subclasses mean the input data fails a mathematical
identity; PreconditionError subclasses mean the input does not carry
enough (or the right shape of) information for the operation to run.
The CLI maps the two families to distinct exit codes.
"""


class BpskitError(Exception):
    """Base class for all package errors."""


class ValidationError(BpskitError):
    """An exact identity the input was claimed to satisfy does not hold."""


class PreconditionError(BpskitError):
    """The input violates an operation's precondition."""


class InputError(BpskitError):
    """Malformed external input (bad JSON, wrong schema, unparsable flag)."""


class EmptyWindow(PreconditionError):
    """An arithmetic result determines no coefficient at all."""


class NonUnitLeading(PreconditionError):
    """Series inversion needs a lowest nonzero coefficient of +1 or -1."""


class InsufficientWindow(PreconditionError):
    """The exact window is too short for the requested computation."""


class MilnorMismatch(PreconditionError):
    """Local and global Euler-characteristic bookkeeping disagree."""


class AsymmetricInput(PreconditionError):
    """A coefficient violates the expected z <-> 1/z symmetry or support."""


class NotBpsForm(ValidationError):
    """The series is not an integer combination of the BPS basis elements."""

    def __init__(self, message, exponent=None):
        super().__init__(message)
        self.exponent = exponent


class NotKkvForm(ValidationError):
    """A coefficient is not an integer combination of the genus kernels."""

    def __init__(self, message, h=None):
        super().__init__(message)
        self.h = h
