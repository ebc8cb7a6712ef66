"""Exception hierarchy shared by all modules.

Every error carries a ``kind`` string equal to the class name; the CLI
reports it verbatim and maps any :class:`DomainError` to exit code 2.
"""

from __future__ import annotations


class DomainError(Exception):
    """Base class for all domain-level failures."""

    @property
    def kind(self) -> str:
        return type(self).__name__


class NotPrime(DomainError):
    pass


class NotPrimePower(DomainError):
    pass


class DegreeMismatch(DomainError):
    pass


class LevelMismatch(DomainError):
    pass


class LevelGuardExceeded(DomainError):
    pass


class EnumerationTooLarge(DomainError):
    pass


class OutOfRange(DomainError):
    pass


class ZsigmondyException(DomainError):
    pass


class OrderViolation(DomainError):
    """Post-verification of a computed object failed; signals an internal bug."""


class NotNormInflated(DomainError):
    pass


class AmbiguousTwist(DomainError):
    pass


class NotEssentiallyTame(DomainError):
    pass


class ShapeError(DomainError):
    pass


class MismatchAgainstRectifier(DomainError):
    """The descent route and the rectifier route disagree; signals an internal bug."""


class NotRegularCharacter(DomainError):
    pass


class NotRegularElement(DomainError):
    pass


class NotInNormImage(DomainError):
    pass


class NotAdmissiblePair(DomainError):
    pass
