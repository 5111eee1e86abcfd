"""Exception hierarchy shared by the whole package.

The CLI maps these onto exit codes: invalid input exits with 2, a violated
internal invariant (a mathematical identity that must hold) exits with 3.
"""


class InvalidInputError(ValueError):
    """Malformed or out-of-domain input: bad prime, mismatched primes,
    profile constraint violations, repeated branch points."""


class NotApplicableError(InvalidInputError):
    """The (p, g) pair is outside the theory's domain, e.g. (p-1) does not
    divide 2g, so no order-p automorphism of a g-dimensional ppav exists."""


class InternalInvariantError(RuntimeError):
    """A mathematical identity that the library guarantees has failed.

    Seeing this exception means a bug, never a property of the input.
    """
