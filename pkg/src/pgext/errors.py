"""Exception types shared by all pgext modules."""


class PgextError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(PgextError):
    """Invalid input data. Carries a short machine-readable code.

    Codes in use: not_prime, bad_partition, shape_mismatch, bad_matrix,
    empty_matrix, zero_input, bad_order, infinite_group,
    invalid_automorphism, mismatched_context.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class BoundExceededError(PgextError):
    """A configurable resource bound (search space, group order) was exceeded."""

    code = "bound_exceeded"
