"""Exception hierarchy for mysticum.

Two families map onto CLI exit codes:
- PreconditionError (exit 2): the input cannot be used as given
- CheckFailure (exit 1): a mathematical check produced the wrong answer

Every error carries a ``detail`` dict that the CLI emits as JSON diagnostics.
"""

from __future__ import annotations

from typing import Any


class MysticumError(Exception):
    """Base class for all mysticum errors."""

    exit_code = 2
    status = "error"

    def __init__(self, message: str = "", detail: dict[str, Any] | None = None):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__
        self.detail = detail or {}

    def to_dict(self) -> dict[str, Any]:
        return {
            "status": self.status,
            "error": self.__class__.__name__,
            "message": self.message,
            "detail": self.detail,
        }


# === Precondition errors ===


class PreconditionError(MysticumError):
    """Input violates a construction precondition."""


class NotDivisible(PreconditionError):
    pass


class DegenerateJoin(PreconditionError):
    pass


class DegenerateMeet(PreconditionError):
    pass


class UnderdeterminedConic(PreconditionError):
    pass


class NotOnConic(PreconditionError):
    pass


class SingularPoint(PreconditionError):
    pass


class DegenerateConicDual(PreconditionError):
    pass


class SharedComponent(PreconditionError):
    pass


class DependentCurves(PreconditionError):
    pass


class AmbiguousIntersection(PreconditionError):
    pass


class EmptySpace(PreconditionError):
    pass


class ConvergenceFailure(PreconditionError):
    pass


class SceneFormatError(PreconditionError):
    pass


# === Check failures ===


class CheckFailure(MysticumError):
    """A verified statement did not hold."""

    exit_code = 1
    status = "fail"


class ConcurrencyFailure(CheckFailure):
    pass


class CollinearityFailure(CheckFailure):
    pass


class CensusMismatch(CheckFailure):
    pass


class PencilViolation(CheckFailure):
    pass


class ClassificationAnomaly(CheckFailure):
    pass


class NetViolation(CheckFailure):
    pass


class NoCommonMember(CheckFailure):
    pass
