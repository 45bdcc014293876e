"""Exhaustive genus-tree enumeration, random generator sets and sweeps over both.

The tree walk runs in the compiled kernel when it is importable and in
:mod:`wilfbounds._walk` otherwise; set ``WILFBOUNDS_PURE=1`` to force the
fallback.
"""

from __future__ import annotations

import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from . import _walk
from .core import Semigroup, build_semigroup, semigroup_from_membership
from .report import (
    CHECK_IDS,
    DEFAULT_CHI,
    DEFAULT_WEAK_LAMBDA,
    ReportRecord,
    analysis_notes,
    dumps_json,
    evaluate,
)

try:
    if os.environ.get("WILFBOUNDS_PURE"):
        raise ImportError("pure-Python walker requested")
    from ._kernel import walk as _fast_walk
except ImportError:  # pragma: no cover - depends on the build
    _fast_walk = None

walk = _fast_walk or _walk.walk
BACKEND = "compiled" if _fast_walk is not None else "python"

Visitor = Callable[[int, int, Tuple[int, ...], bytes], None]

FILTERS = ("all", "large_a2")


def enumerate_by_genus(max_genus: int, visitor: Callable[[Semigroup], None]) -> None:
    """Visit every numerical semigroup of genus <= max_genus exactly once."""
    if not 0 <= max_genus <= _walk.MAX_GENUS:
        raise ValueError(f"max_genus must lie in [0, {_walk.MAX_GENUS}]")

    def visit(genus, conductor, gens, members):
        visitor(semigroup_from_membership(gens, conductor, members))

    walk(max_genus, visit)


def genus_counts(max_genus: int, walker=None) -> List[int]:
    counts = [0] * (max_genus + 1)

    def visit(genus, conductor, gens, members):
        counts[genus] += 1

    (walker or walk)(max_genus, visit)
    return counts


# --------------------------------------------------------------------------
# independent oracle


ORACLE_MAX_GENUS = 15


def oracle_enumerate_gapsets(max_genus: int) -> List[Semigroup]:
    """All semigroups of genus <= max_genus, by deciding membership of 1, 2, ..., 2g-1 in turn.

    An integer is forced into S when it is a sum of two smaller non-zero
    elements; otherwise both choices are explored while the gap budget lasts.
    """
    if not 0 <= max_genus <= ORACLE_MAX_GENUS:
        raise ValueError(f"oracle limited to genus <= {ORACLE_MAX_GENUS}")
    top = 2 * max_genus  # Frobenius number <= 2g - 1
    out: List[Semigroup] = []
    member = [True] + [False] * top

    def forced(x):
        return any(member[y] and member[x - y] for y in range(1, x // 2 + 1))

    def rec(x, gaps):
        if x > top or gaps == max_genus:
            for y in range(x, top + 1):
                member[y] = True
            gens = [y for y in range(1, 3 * max_genus + 2)
                    if (y > top or member[y]) and not _sum_of_two(member, top, y)]
            out.append(build_semigroup(gens))
            for y in range(x, top + 1):
                member[y] = False
            return
        if forced(x):
            member[x] = True
            rec(x + 1, gaps)
            member[x] = False
            return
        member[x] = True
        rec(x + 1, gaps)
        member[x] = False
        rec(x + 1, gaps + 1)

    rec(1, 0)
    return out


def _sum_of_two(member, top, x) -> bool:
    def m(z):
        return z > top or member[z]

    return any(m(y) and m(x - y) for y in range(1, x // 2 + 1))


# --------------------------------------------------------------------------
# sweeps


@dataclass
class SweepConfig:
    max_genus: int = 12
    filter: str = "large_a2"
    checks: Tuple[str, ...] = CHECK_IDS
    worker_count: int = 1
    split_depth: int = 10
    verbose: bool = False
    chi: Fraction = DEFAULT_CHI
    weak_lambda: Fraction = DEFAULT_WEAK_LAMBDA
    # fuzz mode
    seed: int = 0
    count: int = 0
    max_mult: int = 40
    spread: int = 2
    require: Optional[str] = None
    max_attempts: int = 10 ** 6

    def __post_init__(self):
        self.filter = self.filter.replace("-", "_")
        if self.filter not in FILTERS:
            raise ValueError(f"filter must be one of {FILTERS}")
        if self.max_genus < 0:
            raise ValueError("max_genus must be >= 0")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")
        if self.max_mult < 2:
            raise ValueError("max_mult must be >= 2")
        if self.require not in (None, "nu10_large_a2"):
            raise ValueError(f"unknown requirement {self.require!r}")
        self.checks = tuple(self.checks)


@dataclass
class SweepReport:
    genus_counts: Dict[int, int] = field(default_factory=dict)
    filtered_counts: Dict[int, int] = field(default_factory=dict)
    violations: Dict[str, int] = field(default_factory=dict)
    violators: List[Tuple[Tuple[int, ...], Tuple[str, ...]]] = field(default_factory=list)
    certificates: Counter = field(default_factory=Counter)
    min_wilf_ratio: Optional[Fraction] = None
    min_ell_chain_slack: Optional[Fraction] = None
    min_nu_ell_certified: Optional[int] = None
    records: List[ReportRecord] = field(default_factory=list)
    total: int = 0
    filtered: int = 0

    @property
    def total_violations(self) -> int:
        return sum(self.violations.values())

    def add(self, rec: ReportRecord, verbose: bool) -> None:
        self.filtered += 1
        self.filtered_counts[rec.genus] = self.filtered_counts.get(rec.genus, 0) + 1
        bad = rec.violated
        for c in rec.checks:
            self.violations.setdefault(c, 0)
        for c in bad:
            self.violations[c] += 1
        if rec.certificate is not None:
            self.certificates[rec.certificate] += 1
            if rec.certificate.startswith("EllBound"):
                self.min_nu_ell_certified = _min(self.min_nu_ell_certified, rec.embedding_dim)
        if rec.wilf_ratio != "inf":
            self.min_wilf_ratio = _min(self.min_wilf_ratio, Fraction(rec.wilf_ratio))
        if rec.ell_slack is not None:
            self.min_ell_chain_slack = _min(self.min_ell_chain_slack, rec.ell_slack)
        if bad or verbose:
            self.records.append(rec)

    def merge(self, other: "SweepReport") -> None:
        for g, n in other.genus_counts.items():
            self.genus_counts[g] = self.genus_counts.get(g, 0) + n
        for g, n in other.filtered_counts.items():
            self.filtered_counts[g] = self.filtered_counts.get(g, 0) + n
        for c, n in other.violations.items():
            self.violations[c] = self.violations.get(c, 0) + n
        self.certificates.update(other.certificates)
        self.min_wilf_ratio = _min(self.min_wilf_ratio, other.min_wilf_ratio)
        self.min_ell_chain_slack = _min(self.min_ell_chain_slack, other.min_ell_chain_slack)
        self.min_nu_ell_certified = _min(self.min_nu_ell_certified, other.min_nu_ell_certified)
        self.records.extend(other.records)
        self.total += other.total
        self.filtered += other.filtered

    def finalize(self, sort: bool = True) -> "SweepReport":
        if sort:
            self.records.sort(key=lambda r: r.key)
        self.violators = [(r.generators, tuple(r.violated)) for r in self.records if r.violated]
        return self

    def summary(self) -> dict:
        def q(x):
            return None if x is None else f"{x.numerator}/{x.denominator}"

        return {
            "semigroups": self.total,
            "filtered": self.filtered,
            "genus_counts": {str(g): self.genus_counts[g] for g in sorted(self.genus_counts)},
            "filtered_counts": {str(g): self.filtered_counts[g] for g in sorted(self.filtered_counts)},
            "violations": {c: self.violations[c] for c in CHECK_IDS if c in self.violations},
            "total_violations": self.total_violations,
            "violators": [{"generators": list(g), "checks": list(c)} for g, c in self.violators],
            "certificates": {k: self.certificates[k] for k in sorted(self.certificates)},
            "min_wilf_ratio": q(self.min_wilf_ratio),
            "min_ell_chain_slack": q(self.min_ell_chain_slack),
            "min_nu_ell_certified": self.min_nu_ell_certified,
            "notes": analysis_notes(),
        }

    def summary_json(self) -> str:
        return dumps_json(self.summary())


def _min(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a if a <= b else b


def _passes(config: SweepConfig, gens: Sequence[int], conductor: int) -> bool:
    if config.filter == "all":
        return True
    return len(gens) >= 2 and 3 * gens[1] > conductor + gens[0]


def _make_visitor(config: SweepConfig, report: SweepReport) -> Visitor:
    def visit(genus, conductor, gens, members):
        report.total += 1
        report.genus_counts[genus] = report.genus_counts.get(genus, 0) + 1
        if not _passes(config, gens, conductor):
            return
        S = semigroup_from_membership(gens, conductor, members)
        report.add(evaluate(S, config.checks, config.chi, config.weak_lambda), config.verbose)

    return visit


def _sweep_roots(config: SweepConfig, roots: List[_walk.State]) -> SweepReport:
    report = SweepReport()
    visit = _make_visitor(config, report)
    for root in roots:
        walk(config.max_genus, visit, root)
    return report


def sweep(config: SweepConfig) -> SweepReport:
    """Run the configured checks over every semigroup of genus <= max_genus.

    The result does not depend on ``worker_count``: subtrees below a fixed
    depth are distributed and the partial reports are merged and sorted.
    """
    if config.max_genus > _walk.MAX_GENUS:
        raise ValueError(f"max_genus must be <= {_walk.MAX_GENUS}")
    report = SweepReport()
    if config.worker_count == 1:
        walk(config.max_genus, _make_visitor(config, report))
        return report.finalize()
    depth = min(config.split_depth, config.max_genus)
    roots = _walk.frontier(depth, config.max_genus, _make_visitor(config, report))
    chunks = [roots[i::config.worker_count * 4] for i in range(config.worker_count * 4)]
    with ProcessPoolExecutor(max_workers=config.worker_count) as pool:
        for part in pool.map(_sweep_roots, [config] * len(chunks), chunks):
            report.merge(part)
    return report.finalize()


# --------------------------------------------------------------------------
# random generator sets


def _requirement(config: SweepConfig) -> Callable[[Semigroup], bool]:
    if config.require == "nu10_large_a2":
        return lambda S: S.embedding_dim >= 10 and 3 * S.min_generators[1] > S.conductor + S.multiplicity
    return lambda S: True


def _draw(rng: random.Random, config: SweepConfig, min_extra: int) -> List[int]:
    lo_mu = max(2, min_extra + 1)
    mu = rng.randint(lo_mu, max(lo_mu, config.max_mult))
    hi = 3 * mu * rng.randint(1, config.spread)
    n = rng.randint(min_extra, mu - 1)
    cands = rng.sample(range(mu + 1, hi + 1), n)
    d = mu
    for x in cands:
        d = gcd(d, x)
    if d != 1:
        cands.append(rng.choice([x for x in range(mu + 1, hi + 1) if gcd(x, d) == 1]))
    return [mu] + cands


def fuzz_generators(config: SweepConfig) -> Iterator[Semigroup]:
    """Reproducible stream of ``config.count`` random semigroups.

    With ``require`` set, draws are repeated (at most ``max_attempts`` in
    total) until each yielded semigroup satisfies the requirement.
    """
    rng = random.Random(config.seed)
    keep = _requirement(config)
    min_extra = 9 if config.require == "nu10_large_a2" else 1
    attempts = 0
    produced = 0
    while produced < config.count:
        if attempts >= config.max_attempts:
            return
        attempts += 1
        S = build_semigroup(_draw(rng, config, min_extra))
        if keep(S):
            produced += 1
            yield S


def fuzz_sweep(config: SweepConfig) -> SweepReport:
    """Run the configured checks over the fuzz stream (records kept in stream order)."""
    report = SweepReport()
    for S in fuzz_generators(config):
        report.total += 1
        report.genus_counts[S.genus] = report.genus_counts.get(S.genus, 0) + 1
        if not _passes(config, S.min_generators, S.conductor):
            continue
        report.add(evaluate(S, config.checks, config.chi, config.weak_lambda), config.verbose)
    return report.finalize(sort=False)
