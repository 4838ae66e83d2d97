"""Exceptions shared across the package."""


class OrderMismatchError(ValueError):
    """Raised when a binary series operation mixes truncation orders."""


class SelfCheckError(RuntimeError):
    """Raised when a built-in cross-check between two routes disagrees.

    A few constructions compute the same object twice by independent
    methods and compare (for instance the partition generating function,
    which is expanded both as a reciprocal and as a product).  If the two
    ever differ the library is wrong, so this is not catchable-and-ignorable
    in normal use.
    """


class ResourceCapError(RuntimeError):
    """Raised when a request exceeds an enumeration or expansion cap."""
