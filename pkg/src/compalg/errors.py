"""Exception hierarchy shared by every module.

Each class carries a short machine-readable ``code`` so the CLI can emit
``ERR:<code>: message`` lines without string matching.
"""


class CompalgError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "domain"


class RingMismatchError(CompalgError):
    """Two operands belong to different rings (or monoids)."""

    code = "ring-mismatch"


class NotAUnitError(CompalgError):
    """Inverse requested for an element with no inverse."""

    code = "not-a-unit"


class MembershipError(CompalgError):
    """A coefficient or exponent falls outside its declared subset."""

    code = "membership"


class EmbeddingError(CompalgError):
    """No embedding is declared between the two given rings."""

    code = "no-embedding"


class CeilingError(CompalgError):
    """An exhaustive search was asked to exceed its documented size ceiling."""

    code = "ceiling"


class ParameterError(CompalgError):
    """A precondition on operation parameters is violated."""

    code = "parameter"


class FormatError(CompalgError):
    """A textual form (ring name, polynomial, key file) failed to parse."""

    code = "format"
