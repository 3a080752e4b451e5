"""
Error types for the stabilizer toolkit.

Bad input is a ValidationError (exit status 2 at the command line); a checked
identity that fails is an IdentityViolation (exit status 1).
"""

from django.core.exceptions import ValidationError


class InvalidProfileError(ValidationError):
    def __init__(self, message):
        super().__init__(message, code='invalid_profile')


class VertexRangeError(ValidationError):
    def __init__(self, message):
        super().__init__(message, code='vertex_range')


class ParameterRangeError(ValidationError):
    def __init__(self, message):
        super().__init__(message, code='out_of_range')


class CapExceededError(ValidationError):
    def __init__(self, what, value, limit):
        super().__init__(
            f'{what}={value} exceeds the cap of {limit}',
            code='cap_exceeded',
        )
        self.value = value
        self.limit = limit


class HypergraphFormatError(ValidationError):
    def __init__(self, message):
        super().__init__(message, code='hypergraph_format')


class OutputPathError(ValidationError):
    def __init__(self, message):
        super().__init__(message, code='output_path')


class IdentityViolation(AssertionError):
    """An identity that must hold exactly did not."""


def require_cap(what, value, limit):
    """Raise CapExceededError when value > limit."""
    if value > limit:
        raise CapExceededError(what, value, limit)
