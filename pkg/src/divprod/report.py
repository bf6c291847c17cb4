"""Pass/fail reports for coefficient and identity checks.

A failed check is data, not an exception: reports carry the first offending
index together with both side values, exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Value = Union[int, Fraction]


@dataclass(frozen=True)
class Failure:
    n: int
    lhs: Value
    rhs: Value


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    order_checked: int
    passed: bool
    first_failure: Optional[Failure] = None

    def __post_init__(self):
        if self.passed != (self.first_failure is None):
            raise ValueError("passed must mirror the absence of a first failure")

    @classmethod
    def success(cls, identity_id: str, order: int) -> "IdentityReport":
        return cls(identity_id, order, True)

    @classmethod
    def failure(
        cls, identity_id: str, order: int, n: int, lhs: Value, rhs: Value
    ) -> "IdentityReport":
        return cls(identity_id, order, False, Failure(n, lhs, rhs))

    def to_dict(self) -> dict:
        failure = None
        if self.first_failure is not None:
            failure = {
                "n": self.first_failure.n,
                "lhs": str(self.first_failure.lhs),
                "rhs": str(self.first_failure.rhs),
            }
        return {
            "identity": self.identity_id,
            "N": self.order_checked,
            "passed": self.passed,
            "first_failure": failure,
        }
