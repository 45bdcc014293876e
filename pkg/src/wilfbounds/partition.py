"""Splitting the non-multiplicity generators by size, residue sumsets and the region of feasible (q1, q2)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from .core import Semigroup
from .ledger import BoundEntry, HypothesisNotSatisfied, VIOLATED

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class PartitionReport:
    large_a2: bool
    p1: Tuple[int, ...]
    p2: Tuple[int, ...]
    p3: Tuple[int, ...]
    # generators <= (c+mu)/3; empty whenever large_a2 holds
    small: Tuple[int, ...] = ()

    @property
    def q1(self) -> int:
        return len(self.p1)

    @property
    def q2(self) -> int:
        return len(self.p2)

    @property
    def q3(self) -> int:
        return len(self.p3)


def is_large_a2(S: Semigroup) -> bool:
    if S.embedding_dim < 2:
        return False
    return 3 * S.min_generators[1] > S.conductor + S.multiplicity


def partition_generators(S: Semigroup) -> PartitionReport:
    s = S.conductor + S.multiplicity
    p1, p2, p3, small = [], [], [], []
    for a in S.min_generators[1:]:
        if 3 * a <= s:
            small.append(a)
        elif 2 * a < s:
            p1.append(a)
        elif 3 * a < 2 * s:
            p2.append(a)
        elif a < s:
            p3.append(a)
        else:  # pragma: no cover - minimal generators lie in the Apéry set
            raise AssertionError(f"generator {a} >= c + mu in {S}")
    return PartitionReport(is_large_a2(S), tuple(p1), tuple(p2), tuple(p3), tuple(small))


def require_large_a2(pr: PartitionReport) -> None:
    if not pr.large_a2:
        raise HypothesisNotSatisfied("hypothesis not satisfied: 3*a2 > c + mu is required")


class ResidueSet:
    """A subset of Z/mZ stored as an int bitmask (bit t set iff t is a member)."""

    __slots__ = ("modulus", "bits")

    def __init__(self, modulus: int, members: Iterable[int] = (), bits: int = None):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        self.modulus = modulus
        if bits is None:
            bits = 0
            for x in members:
                bits |= 1 << (x % modulus)
        self.bits = bits

    @classmethod
    def full(cls, modulus: int) -> "ResidueSet":
        return cls(modulus, bits=(1 << modulus) - 1)

    def __iter__(self):
        b, t = self.bits, 0
        while b:
            if b & 1:
                yield t
            b >>= 1
            t += 1

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> (x % self.modulus) & 1)

    def __eq__(self, other) -> bool:
        if isinstance(other, ResidueSet):
            return self.modulus == other.modulus and self.bits == other.bits
        return NotImplemented

    def __hash__(self):
        return hash((self.modulus, self.bits))

    def __or__(self, other: "ResidueSet") -> "ResidueSet":
        _same_modulus(self, other)
        return ResidueSet(self.modulus, bits=self.bits | other.bits)

    def __le__(self, other: "ResidueSet") -> bool:
        _same_modulus(self, other)
        return self.bits & ~other.bits == 0

    def complement(self) -> "ResidueSet":
        return ResidueSet(self.modulus, bits=((1 << self.modulus) - 1) & ~self.bits)

    def __repr__(self) -> str:
        return f"ResidueSet({self.modulus}, {sorted(self)})"


def _same_modulus(X: ResidueSet, Y: ResidueSet) -> None:
    if X.modulus != Y.modulus:
        raise ValueError(f"modulus mismatch: {X.modulus} != {Y.modulus}")


def sumset(X: ResidueSet, Y: ResidueSet) -> ResidueSet:
    _same_modulus(X, Y)
    m = X.modulus
    mask = (1 << m) - 1
    out = 0
    for x in X:
        # rotate Y by x inside Z/mZ
        out |= ((Y.bits << x) | (Y.bits >> (m - x))) & mask
    return ResidueSet(m, bits=out)


def coverage_check(S: Semigroup, pr: PartitionReport) -> Tuple[bool, ResidueSet]:
    """Check that pi(P), pi(P1)+pi(P1) and pi(P1)+pi(P2) together cover Z/mu."""
    require_large_a2(pr)
    m = S.multiplicity
    A = ResidueSet(m, S.min_generators)
    A1 = ResidueSet(m, pr.p1)
    A2 = ResidueSet(m, pr.p2)
    covered = A | sumset(A1, A1) | sumset(A1, A2)
    uncovered = covered.complement()
    return not uncovered.bits, uncovered


def coverage_entry(S: Semigroup, pr: PartitionReport) -> BoundEntry:
    ok, uncovered = coverage_check(S, pr)
    m = S.multiplicity
    return BoundEntry.compare("prop21", m - len(uncovered), m, ">=",
                              note="" if ok else f"uncovered residues {sorted(uncovered)}")


def bound_prop22(S: Semigroup, pr: PartitionReport) -> List[BoundEntry]:
    """Entries for mu <= nu + q1(q1+1)/2 + q1*q2, mu <= nu(nu+1)/2 and the q1 lower bound."""
    require_large_a2(pr)
    mu, nu, q1, q2 = S.multiplicity, S.embedding_dim, pr.q1, pr.q2
    a = BoundEntry.compare("prop22a", mu, nu + q1 * (q1 + 1) // 2 + q1 * q2, "<=")
    b = BoundEntry.compare("prop22b", 2 * mu, nu * (nu + 1), "<=")
    # q1 >= (2nu - 1 - sqrt(D))/2 with D = (2nu+1)^2 - 8mu, decided as D >= t^2, t = max(0, 2nu-1-2q1)
    disc = (2 * nu + 1) ** 2 - 8 * mu
    t = max(0, 2 * nu - 1 - 2 * q1)
    if disc < 0:
        c = BoundEntry("prop22c", disc, t * t, ">=", VIOLATED, "(b) violated: negative discriminant")
    else:
        c = BoundEntry.compare("prop22c", disc, t * t, ">=", note="squared form")
    return [a, b, c]


def omega_contains(mu: int, nu: int, x: Rational, y: Rational) -> bool:
    """Membership in the region cut out by x, y >= 0, x + y <= nu - 1 and x(x/2 + 1/2 + y) >= mu - nu."""
    if x < 0 or y < 0 or x + y > nu - 1:
        return False
    # denominators cleared: x(x + 1 + 2y) >= 2(mu - nu)
    return x * (x + 1 + 2 * y) >= 2 * (mu - nu)


def omega_lattice_points(mu: int, nu: int) -> List[Tuple[int, int]]:
    return [(x, y) for x in range(nu) for y in range(nu - x) if omega_contains(mu, nu, x, y)]


def omega_boundary(mu: int, nu: int, q1: int) -> Fraction:
    """q2 on the hyperbola x(x/2 + 1/2 + y) = mu - nu at x = q1 > 0."""
    return Fraction(mu - nu, q1) - Fraction(q1 + 1, 2)
