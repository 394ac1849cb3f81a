"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class InternalContradiction(RuntimeError):
    """A search that is guaranteed to succeed came back empty.

    Seeing this means the implementation is wrong (or a cap was set far too
    low); it is never a property of the input.
    """
