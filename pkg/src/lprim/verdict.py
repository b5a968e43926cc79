from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Union

from .words import format_word

ZERO, ONE, INFINITE = "zero", "one", "infinite"

# reasons attached to infinite verdicts
GCD_ONE = "gcd-one"
NO_DIVISOR_OF_D = "no-divisor-of-d"
NONCOMMUTATIVE = "noncommutative"
NO_POWER_OF_ROOT_IN_L = "no-power-of-root-in-L"

Witness = Union[int, str, None]


@dataclass(frozen=True)
class Classification:
    """Cardinality verdict: zero, exactly one element (``witness``) or infinitely many.

    ``case_trace`` lists the decisions that produced the verdict, in order.
    """

    verdict: str
    witness: Witness = None
    reason: str | None = None
    case_trace: tuple[str, ...] = field(default=(), compare=False)

    @classmethod
    def zero(cls, trace=()):
        return cls(ZERO, case_trace=tuple(trace))

    @classmethod
    def one(cls, witness, trace=()):
        return cls(ONE, witness, case_trace=tuple(trace))

    @classmethod
    def infinite(cls, reason, trace=()):
        return cls(INFINITE, reason=reason, case_trace=tuple(trace))

    def __str__(self):
        if self.verdict == ONE:
            w = self.witness
            return f"one {format_word(w) if isinstance(w, str) else w}"
        if self.verdict == INFINITE:
            return f"infinite ({self.reason})"
        return ZERO

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "witness": self.witness,
            "reason": self.reason,
            "case_trace": list(self.case_trace),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> Classification:
        return cls(d["verdict"], d.get("witness"), d.get("reason"), tuple(d.get("case_trace", ())))
