from dataclasses import dataclass
from enum import Enum
from typing import Tuple


class GradedPIError(Exception):
    """Base class for every error raised by the library."""


class SpecError(GradedPIError):
    """Malformed input: bad JSON shape, unknown name, unknown degree label."""


class ValidationError(GradedPIError):
    """An invariant failed while building a group, cocycle, algebra or polynomial."""


class ScalarError(GradedPIError, ArithmeticError):
    """Inversion of zero, or arithmetic across different cyclotomic orders."""


class ConsistencyError(GradedPIError):
    """An internal verification failed on input that passed validation."""


class BudgetRefusal(GradedPIError):
    """A computation was refused up front because of its estimated size."""


class Relation(Enum):
    """Containment relation between two T-ideals at bounded degree."""

    EQUAL = "equal"
    A_IN_B = "A_in_B"
    B_IN_A = "B_in_A"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Violation:
    """First failing location reported by a validator."""

    kind: str
    location: Tuple[int, ...]
    detail: str = ""

    def get_snapshot(self):
        return {"kind": self.kind, "location": list(self.location), "detail": self.detail}
