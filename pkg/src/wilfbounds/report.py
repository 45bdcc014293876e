"""Per-semigroup report records and their CSV/JSON serialization."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .bounds import (
    ERRATA,
    analyze,
    prop45_check,
    prop46_check,
    prop47_check,
    theta_decompose,
    weak_wilf_check,
)
from .core import Semigroup, wilf_check
from .ledger import HOLDS, SKIPPED, VIOLATED, BoundEntry, Certificate, fmt_rational
from .partition import partition_generators

# Column order of the per-check flags; fixed so that outputs diff cleanly.
CHECK_IDS: Tuple[str, ...] = (
    "wilf",
    "prop21",
    "prop22a",
    "prop22b",
    "prop22c",
    "q1_zero",
    "omega",
    "prop41",
    "cor42",
    "prop32",
    "prop34",
    "prop34_dominates",
    "ell_chain",
    "prop45",
    "prop46",
    "prop47",
    "weak_wilf",
    "certificate",
)

DEFAULT_CHI = Fraction(1, 6)
DEFAULT_WEAK_LAMBDA = Fraction(79, 100)

CSV_COLUMNS: Tuple[str, ...] = (
    "generators", "multiplicity", "embedding_dim", "conductor", "frobenius", "genus",
    "left_count", "large_a2", "q1", "q2", "q3", "num_pairs", "sigma", "floor_theta",
    "ell_value", "certificate", "wilf_ratio",
) + CHECK_IDS


def parse_checks(spec: str) -> Tuple[str, ...]:
    """``all`` or a comma-separated subset of CHECK_IDS (kept in canonical order)."""
    if spec.strip() == "all":
        return CHECK_IDS
    wanted = {s.strip().replace("-", "_") for s in spec.split(",") if s.strip()}
    unknown = wanted - set(CHECK_IDS)
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
    return tuple(c for c in CHECK_IDS if c in wanted)


@dataclass
class ReportRecord:
    generators: Tuple[int, ...]
    multiplicity: int
    embedding_dim: int
    conductor: int
    frobenius: int
    genus: int
    left_count: int
    large_a2: bool
    q1: int
    q2: int
    q3: int
    num_pairs: Optional[int]
    sigma: Optional[int]
    floor_theta: Optional[int]
    ell_value: Optional[str]
    certificate: Optional[str]
    wilf_ratio: str
    checks: Dict[str, str] = field(default_factory=dict)
    # numbers used for sweep metrics; not serialized
    ell_slack: Optional[Fraction] = field(default=None, repr=False, compare=False)

    @property
    def key(self):
        return (self.genus, self.generators)

    @property
    def violated(self) -> List[str]:
        return [k for k, v in self.checks.items() if v == VIOLATED]

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "multiplicity": self.multiplicity,
            "embedding_dim": self.embedding_dim,
            "conductor": self.conductor,
            "frobenius": self.frobenius,
            "genus": self.genus,
            "left_count": self.left_count,
            "large_a2": self.large_a2,
            "q1": self.q1,
            "q2": self.q2,
            "q3": self.q3,
            "num_pairs": self.num_pairs,
            "sigma": self.sigma,
            "floor_theta": self.floor_theta,
            "ell_value": self.ell_value,
            "certificate": self.certificate,
            "wilf_ratio": self.wilf_ratio,
            "checks": dict(self.checks),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ReportRecord":
        d = dict(d)
        d["generators"] = tuple(d["generators"])
        return cls(**d)

    def csv_row(self) -> List[str]:
        d = self.to_dict()
        row = []
        for col in CSV_COLUMNS[: len(CSV_COLUMNS) - len(CHECK_IDS)]:
            v = d[col]
            if col == "generators":
                v = " ".join(map(str, v))
            elif v is None:
                v = ""
            elif isinstance(v, bool):
                v = "true" if v else "false"
            row.append(str(v))
        row.extend(self.checks.get(c, "") for c in CHECK_IDS)
        return row


def _ratio_str(S: Semigroup) -> str:
    ratio, _ = wilf_check(S)
    return "inf" if ratio is None else fmt_rational(ratio)


def evaluate(S: Semigroup, checks: Sequence[str] = CHECK_IDS, chi=DEFAULT_CHI,
             weak_lambda=DEFAULT_WEAK_LAMBDA) -> ReportRecord:
    """Run the requested checks on one semigroup."""
    checks = tuple(checks)
    if set(checks) <= {"wilf"}:
        return _evaluate_wilf_only(S, checks)
    a = analyze(S)
    pr, led = a.partition, a.ledger
    entries: Dict[str, BoundEntry] = {e.prop: e for e in led.entries}
    if "prop45" in checks:
        entries["prop45"] = prop45_check(S, pr)
    if "prop46" in checks:
        entries["prop46"] = prop46_check(S, pr)
    if "prop47" in checks:
        entries["prop47"] = prop47_check(S, chi, pr)
    if "weak_wilf" in checks:
        entries["weak_wilf"] = weak_wilf_check(S, weak_lambda).entry

    flags = {}
    for c in checks:
        if c == "certificate":
            sound = led.certificate is Certificate.DIRECT_COUNT or entries["wilf"].holds
            flags[c] = HOLDS if led.certificate is not Certificate.NONE and sound else VIOLATED
        else:
            flags[c] = entries[c].status

    chain = entries.get("ell_chain")
    slack = chain.lhs - chain.rhs if chain is not None and chain.status != SKIPPED else None
    return ReportRecord(
        generators=S.min_generators,
        multiplicity=S.multiplicity,
        embedding_dim=S.embedding_dim,
        conductor=S.conductor,
        frobenius=S.frobenius,
        genus=S.genus,
        left_count=S.left_count,
        large_a2=pr.large_a2,
        q1=pr.q1,
        q2=pr.q2,
        q3=pr.q3,
        num_pairs=a.graph.num_edges if a.graph else None,
        sigma=a.graph.sigma if a.graph else None,
        floor_theta=a.theta.floor_theta if a.theta else None,
        ell_value=fmt_rational(a.ell),
        certificate=led.tag,
        wilf_ratio=_ratio_str(S),
        checks=flags,
        ell_slack=slack,
    )


def _evaluate_wilf_only(S: Semigroup, checks) -> ReportRecord:
    pr = partition_generators(S)
    _, ok = wilf_check(S)
    theta = theta_decompose(S.conductor, S.multiplicity).floor_theta if S.conductor else None
    return ReportRecord(
        generators=S.min_generators, multiplicity=S.multiplicity, embedding_dim=S.embedding_dim,
        conductor=S.conductor, frobenius=S.frobenius, genus=S.genus, left_count=S.left_count,
        large_a2=pr.large_a2, q1=pr.q1, q2=pr.q2, q3=pr.q3, num_pairs=None, sigma=None,
        floor_theta=theta, ell_value=None, certificate=None, wilf_ratio=_ratio_str(S),
        checks={c: (HOLDS if ok else VIOLATED) for c in checks},
    )


def analysis_notes() -> Dict[str, str]:
    return dict(ERRATA)


# --------------------------------------------------------------------------
# serialization


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def records_to_json(records: Iterable[ReportRecord]) -> str:
    return dumps_json([r.to_dict() for r in records])


def records_from_json(text: str) -> List[ReportRecord]:
    return [ReportRecord.from_dict(d) for d in json.loads(text)]


def records_to_csv(records: Iterable[ReportRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow(r.csv_row())
    return buf.getvalue()


def record_text(r: ReportRecord) -> str:
    lines = [
        f"semigroup    <{','.join(map(str, r.generators))}>",
        f"mu={r.multiplicity} nu={r.embedding_dim} c={r.conductor} F={r.frobenius} "
        f"genus={r.genus} |L|={r.left_count}",
        f"large_a2={r.large_a2} q=({r.q1},{r.q2},{r.q3}) |Sigma|={r.num_pairs} sigma={r.sigma}",
        f"floor_theta={r.floor_theta} ell={r.ell_value} wilf_ratio={r.wilf_ratio}",
        f"certificate  {r.certificate}",
    ]
    for c, v in r.checks.items():
        lines.append(f"  {c:<18}{v}")
    return "\n".join(lines) + "\n"
