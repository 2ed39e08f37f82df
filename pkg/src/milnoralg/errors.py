"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """A mathematical precondition failed.

    Raised when an input is syntactically fine but lies outside the locus
    an operation is defined on: a generator tuple that is not a complete
    intersection, a singular form passed to an operation requiring
    smoothness, a subspace whose dimension rules it out as a graded piece.
    The CLI maps this to exit code 3, plain input errors to exit code 2.
    """
