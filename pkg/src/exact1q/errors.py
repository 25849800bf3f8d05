"""Exception hierarchy shared by all exact1q modules."""


class Exact1qError(Exception):
    """Base class for every error raised by this package."""


class SchemaError(Exact1qError):
    """Malformed input: bad JSON shape, bad bitstring, bad rational literal."""


class ConstantFunctionError(Exact1qError):
    """The operation needs a non-constant function (both a 0-input and a 1-input)."""


class InvalidPermutationError(Exact1qError):
    """The given mapping is not a bijection on {1..n}."""


class ArityTooLargeError(Exact1qError):
    """Arity exceeds the supported cap for this operation."""


class ArityMismatchError(Exact1qError):
    """An input mask or vector does not match the expected arity."""


class NotASubsetError(Exact1qError):
    """Subset reduction was asked for masks outside the difference set."""


class EmptySubsetError(Exact1qError):
    """Subset reduction was asked for an empty mask set."""


class NotFeasibleError(Exact1qError):
    """A representation was requested for a function with no weight assignment."""


class InvalidFormError(Exact1qError):
    """A polynomial violates the admissible-form conditions (sign or sum bound)."""


class EmptySupportError(Exact1qError):
    """A weight profile admits no level solutions, so it computes no function."""


class ProfileError(Exact1qError):
    """A grouped weight profile violates its structural constraints."""


class DegenerateSpanError(Exact1qError):
    """The simulator needs at least one 0-input to build the measurement."""


class InternalError(Exact1qError):
    """An internal invariant broke; this is a bug, never a user error."""
