"""Exception types shared across the package."""
from __future__ import annotations


class TilegateError(Exception):
    """Base class for all package-specific errors."""


class DomainError(TilegateError, ValueError):
    """An argument is outside the documented domain of an operation."""


class ModulusError(TilegateError, ValueError):
    """A cyclotomic modulus cannot represent the requested value."""


class NonRealError(TilegateError, ValueError):
    """A coefficient vector does not describe a real number."""


class ResourceLimitError(TilegateError, RuntimeError):
    """A computation would exceed the configured size limits."""


class StructuralError(TilegateError, ValueError):
    """A tiling object violates a structural invariant."""


class FormatError(TilegateError, ValueError):
    """A serialized document does not match the expected schema."""
