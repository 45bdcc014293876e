"""Records of checked inequalities and the Wilf certificate attached to a semigroup."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Union

Number = Union[int, Fraction]

HOLDS = "holds"
VIOLATED = "violated"
SKIPPED = "skipped"


class HypothesisNotSatisfied(ValueError):
    """An operation was called on a semigroup outside its hypotheses."""


class Certificate(str, enum.Enum):
    DIRECT_COUNT = "DirectCount"
    ELIAHOU_SMALL_C = "EliahouSmallC"
    MAX_EMBEDDING_DIM = "MaxEmbeddingDim"
    ELL_BOUND = "EllBound"
    WEAK_ELL = "WeakEll"
    NONE = "None"


@dataclass(frozen=True)
class BoundEntry:
    prop: str
    lhs: Optional[Number]
    rhs: Optional[Number]
    relation: str = ">="
    status: str = SKIPPED
    note: str = ""

    @classmethod
    def compare(cls, prop: str, lhs: Number, rhs: Number, relation: str = ">=", note: str = "") -> "BoundEntry":
        if relation == ">=":
            ok = lhs >= rhs
        elif relation == "<=":
            ok = lhs <= rhs
        else:
            raise ValueError(f"unknown relation {relation!r}")
        return cls(prop, lhs, rhs, relation, HOLDS if ok else VIOLATED, note)

    @classmethod
    def skipped(cls, prop: str, note: str = "") -> "BoundEntry":
        return cls(prop, None, None, ">=", SKIPPED, note)

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def violated(self) -> bool:
        return self.status == VIOLATED


@dataclass
class BoundLedger:
    entries: List[BoundEntry] = field(default_factory=list)
    certificate: Certificate = Certificate.NONE
    certificate_case: Optional[int] = None
    weak_lambda: Optional[Fraction] = None

    def add(self, entry: BoundEntry) -> BoundEntry:
        self.entries.append(entry)
        return entry

    def extend(self, entries) -> None:
        self.entries.extend(entries)

    def get(self, prop: str) -> Optional[BoundEntry]:
        for e in self.entries:
            if e.prop == prop:
                return e
        return None

    @property
    def tag(self) -> str:
        if self.certificate is Certificate.ELL_BOUND:
            return f"EllBound({self.certificate_case})"
        if self.certificate is Certificate.WEAK_ELL:
            return f"WeakEll({fmt_rational(self.weak_lambda)})"
        return self.certificate.value

    def violations(self) -> List[BoundEntry]:
        return [e for e in self.entries if e.violated]


def fmt_rational(x: Optional[Number]) -> Optional[str]:
    """Serialize an exact rational as ``num/den``."""
    if x is None:
        return None
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)
