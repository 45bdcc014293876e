"""Lower bounds on |L(S)|, the six case functionals and the quadratic multiplicity thresholds.

Everything is exact: integers and ``Fraction`` only.  Irrational quantities
are either decided by squaring (with sign guards) or over-approximated by a
rational upper bound.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .core import Semigroup, wilf_check
from .ledger import (
    HOLDS,
    SKIPPED,
    VIOLATED,
    BoundEntry,
    BoundLedger,
    Certificate,
    HypothesisNotSatisfied,
)
from .matching import AperyPairGraph, apery_pairs, check_cor42, check_sigma_bound
from .partition import (
    PartitionReport,
    bound_prop22,
    coverage_entry,
    omega_contains,
    omega_lattice_points,
    partition_generators,
    require_large_a2,
)

F = Fraction

# Upper bound for sqrt(2); keeps remainder estimates conservative.
SQRT2_UPPER = F(70711, 50000)

# Known inconsistencies between published worked values and the displayed formulas.
ERRATA: Dict[str, str] = {
    "prop47": (
        "published worked value 26050 for (mu, nu, chi) = (50, 10, 1/6) disagrees with the "
        "displayed bound c >= mu/(chi nu) (mu + chi nu + nu(nu-1)/3), which evaluates to 2450; "
        "the displayed formula is implemented"
    ),
    "ell_chain_factor": (
        "the chain nu|L|/c >= factor * ell is implemented with factor nu/mu as derived for the six "
        "case functionals; one published display prints mu/nu"
    ),
    "ell_case5_gamma": (
        "for floor(theta) = 5 the published functional uses q2 coefficient 4/15, while the stated "
        "estimate gamma >= 1/3 - 2/(3(l+1+floor(theta))) gives 1/5 (also the exact infimum over c > 3mu); "
        "the published table is kept and chain checks are validated against direct counts"
    ),
}


class SmallConductor(HypothesisNotSatisfied):
    """c <= 3*mu: the case functionals do not apply; use the small-conductor certificate."""


class LemmaInapplicable(ValueError):
    pass


# --------------------------------------------------------------------------
# interval counting


def _check_interval(x, y, p) -> None:
    if not p > 0:
        raise ValueError("period must be positive")
    if not x < y:
        raise ValueError("need x < y")


def ap_count_lower(x, y, b, p) -> int:
    """Lower bound floor((y - x)/p) on |(b + pZ) ∩ [x, y)|."""
    _check_interval(x, y, p)
    return int((F(y) - F(x)) // F(p))


def ap_count_exact(x, y, b, p) -> int:
    """|(b + pZ) ∩ [x, y)| when x lies in b + pZ and y does not."""
    _check_interval(x, y, p)
    x, y, b, p = F(x), F(y), F(b), F(p)
    if ((x - b) / p).denominator != 1:
        raise ValueError("x must lie in b + pZ")
    if ((y - b) / p).denominator == 1:
        raise ValueError("y must not lie in b + pZ")
    return int((y - x) // p) + 1


# --------------------------------------------------------------------------
# lower bounds on |L|


def _floor_terms(c: int, mu: int) -> Tuple[int, int, int]:
    # floor(c/mu), floor(c/(2mu) - 1/2) + 1, floor(c/(3mu) - 2/3) + 1
    return c // mu, (c - mu) // (2 * mu) + 1, (c - 2 * mu) // (3 * mu) + 1


def lbound_basic_rhs(S: Semigroup, pr: PartitionReport) -> int:
    f0, f1, f2 = _floor_terms(S.conductor, S.multiplicity)
    return f0 + f1 * pr.q1 + f2 * pr.q2


def lbound_pairs_rhs(S: Semigroup, pr: PartitionReport, sigma: int) -> int:
    f0, f1, f2 = _floor_terms(S.conductor, S.multiplicity)
    return f0 * (1 + sigma) + f1 * (pr.q1 - sigma) + f2 * (pr.q2 - sigma)


def lbound_basic(S: Semigroup, pr: PartitionReport) -> BoundEntry:
    require_large_a2(pr)
    return BoundEntry.compare("prop32", S.left_count, lbound_basic_rhs(S, pr), ">=")


def lbound_pairs(S: Semigroup, pr: PartitionReport, sigma: int) -> List[BoundEntry]:
    """The paired bound and, when c > 3mu, the check that it dominates the basic bound."""
    require_large_a2(pr)
    rhs = lbound_pairs_rhs(S, pr, sigma)
    out = [BoundEntry.compare("prop34", S.left_count, rhs, ">=")]
    if S.conductor > 3 * S.multiplicity:
        out.append(BoundEntry.compare("prop34_dominates", rhs, lbound_basic_rhs(S, pr), ">="))
    else:
        out.append(BoundEntry.skipped("prop34_dominates", "c <= 3mu"))
    return out


# --------------------------------------------------------------------------
# theta decomposition and case functionals


@dataclass(frozen=True)
class ThetaDecomposition:
    k: int
    theta: Fraction
    floor_theta: int


def theta_decompose(c: int, mu: int) -> ThetaDecomposition:
    """Write c = (6k - 1)mu + theta*mu with theta in [0, 6)."""
    if mu < 1 or c < 0:
        raise ValueError("need mu >= 1 and c >= 0")
    k = (c + mu) // (6 * mu)
    return ThetaDecomposition(k, F(c + mu, mu) - 6 * k, (c + mu) // mu - 6 * k)


def theta_coefficients(c: int, mu: int) -> Tuple[Fraction, Fraction, Fraction]:
    """Exact (alpha, beta, gamma) with nu|L|/c >= (nu/mu)[alpha(1+s) + beta(q1-s) + gamma(q2-s)]."""
    f0, f1, f2 = _floor_terms(c, mu)
    return F(f0 * mu, c), F(f1 * mu, c), F(f2 * mu, c)


def case_coefficient_bounds(case_index: int) -> Tuple[Fraction, Fraction, Fraction]:
    """Lower bounds for alpha, beta, gamma on a case, valid whenever c > 3mu.

    Uses c >= (l + theta)mu with l = 5 on theta < 4 and l = -1 otherwise.
    """
    _check_case(case_index)
    l = 5 if case_index < 4 else -1
    d = l + 1 + case_index
    alpha = 1 - F(1, d)
    beta = F(1, 2) if case_index % 2 == 0 else F(1, 2) - F(1, 2 * d)
    gamma = F(1, 3) - F(case_index % 3, 3 * d)
    return alpha, beta, gamma


@dataclass(frozen=True)
class EllCoefficients:
    case_index: int
    const_term: Fraction
    q1_coeff: Fraction
    q2_coeff: Fraction
    sigma_coeff: Fraction

    @property
    def grouped(self) -> Tuple[Fraction, Fraction, Fraction]:
        """(alpha, beta, gamma) of alpha(1+s) + beta(q1-s) + gamma(q2-s)."""
        return self.const_term, self.q1_coeff, self.q2_coeff

    def __call__(self, q1, q2, sigma) -> Fraction:
        return self.const_term + self.q1_coeff * q1 + self.q2_coeff * q2 + self.sigma_coeff * sigma


ELL_TABLE: Dict[int, Tuple[Fraction, Fraction, Fraction, Fraction]] = {
    0: (F(5, 6), F(1, 2), F(1, 3), F(0)),
    1: (F(6, 7), F(3, 7), F(2, 7), F(1, 7)),
    2: (F(7, 8), F(1, 2), F(1, 4), F(1, 8)),
    3: (F(8, 9), F(4, 9), F(1, 3), F(1, 9)),
    4: (F(3, 4), F(1, 2), F(1, 4), F(0)),
    5: (F(4, 5), F(2, 5), F(4, 15), F(2, 15)),
}


def _check_case(case_index: int) -> None:
    if case_index not in ELL_TABLE:
        raise ValueError(f"case index must be in 0..5, got {case_index!r}")


def ell_coefficients(case_index: int) -> EllCoefficients:
    _check_case(case_index)
    return EllCoefficients(case_index, *ELL_TABLE[case_index])


def ell_value(S: Semigroup, pr: PartitionReport, sigma: int) -> Tuple[Fraction, int]:
    require_large_a2(pr)
    if S.conductor <= 3 * S.multiplicity:
        raise SmallConductor("c <= 3mu: use EliahouSmallC certificate")
    case = theta_decompose(S.conductor, S.multiplicity).floor_theta
    return ell_coefficients(case)(pr.q1, pr.q2, sigma), case


def ell_chain_check(S: Semigroup, pr: Optional[PartitionReport] = None,
                    graph: Optional[AperyPairGraph] = None) -> BoundEntry:
    """nu|L|/c >= (nu/mu) * ell_case(q1, q2, sigma)."""
    pr = pr or partition_generators(S)
    require_large_a2(pr)
    if S.conductor <= 3 * S.multiplicity:
        return BoundEntry.skipped("ell_chain", "c <= 3mu")
    graph = graph or apery_pairs(S, pr)
    value, _ = ell_value(S, pr, graph.sigma)
    nu = S.embedding_dim
    return BoundEntry.compare("ell_chain", F(nu * S.left_count, S.conductor),
                              F(nu, S.multiplicity) * value, ">=")


# --------------------------------------------------------------------------
# reduced two-variable functionals and the quadratic threshold


class Branch(str, enum.Enum):
    Q2_EQUALS_SIGMA = "q2_equals_sigma"
    Q1_EQUALS_SIGMA = "q1_equals_sigma"


@dataclass(frozen=True)
class ReducedCoefficients:
    case_index: int
    branch: Branch
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    A: Fraction
    B: Fraction
    C: Fraction

    @property
    def zeta(self) -> Fraction:
        return self.alpha - self.gamma / 2

    @property
    def xi_sq(self) -> Fraction:
        return self.A

    @property
    def lam(self) -> Fraction:
        return 4 * (1 - self.zeta) / self.xi_sq

    def f(self, x, y) -> Fraction:
        return self.alpha + self.beta * x + self.gamma * y


def lemma_coefficients(alpha, beta, gamma, case_index: int = -1,
                       branch: Branch = Branch.Q2_EQUALS_SIGMA) -> ReducedCoefficients:
    """A, B, C of mu < A nu^2 + B nu + C for f = alpha + beta x + gamma y."""
    alpha, beta, gamma = F(alpha), F(beta), F(gamma)
    if gamma <= 0 or 2 * beta < gamma or alpha > 1:
        raise LemmaInapplicable(f"lemma inapplicable: alpha={alpha}, beta={beta}, gamma={gamma}")
    A = 2 * gamma * (2 * beta - gamma)
    B = 2 * alpha - gamma - 1
    C = -(2 - 2 * alpha + gamma) ** 2 / (8 * gamma * (2 * beta - gamma))
    return ReducedCoefficients(case_index, Branch(branch), alpha, beta, gamma, A, B, C)


def reduced_coefficients(case_index: int, branch) -> ReducedCoefficients:
    """Substitute q2 = sigma (x = q1, y = sigma) or q1 = sigma (x = sigma, y = q2) and regroup."""
    e = ell_coefficients(case_index)
    branch = Branch(branch)
    if branch is Branch.Q2_EQUALS_SIGMA:
        beta, gamma = e.q1_coeff, e.q2_coeff + e.sigma_coeff
    else:
        beta, gamma = e.q1_coeff + e.sigma_coeff, e.q2_coeff
    return lemma_coefficients(e.const_term, beta, gamma, case_index, branch)


def remainder_bound(rc: ReducedCoefficients, nu: int) -> Fraction:
    """Rational upper bound for sqrt(2) lam^3 xi^2 / (8 nu), valid for nu >= 2 lam."""
    lam = rc.lam
    if nu < 2 * lam:
        raise LemmaInapplicable(f"remainder estimate needs nu >= 2*lambda = {2 * lam}")
    return SQRT2_UPPER * lam ** 3 * rc.xi_sq / (8 * nu)


def mu_threshold(rc: ReducedCoefficients, nu: int, eps=0) -> Fraction:
    eps = F(eps)
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    return rc.A * nu * nu + rc.B * nu + rc.C - eps


def admissible_mu_range(rc: ReducedCoefficients, nu: int, eps=0) -> range:
    """Integers mu with 2nu <= mu < threshold; empty when the threshold is at most 2nu."""
    t = mu_threshold(rc, nu, eps)
    top = -((-t.numerator) // t.denominator)  # ceil
    return range(2 * nu, max(2 * nu, top))


def omega_minimum(rc: ReducedCoefficients, mu: int, nu: int) -> Optional[Fraction]:
    pts = omega_lattice_points(mu, nu)
    if not pts:
        return None
    return min(rc.f(x, y) for x, y in pts)


def lemma43_numeric_check(rc: ReducedCoefficients, mu: int, nu: int, strict: bool = True) -> bool:
    """min of alpha + beta x + gamma y over the lattice points of Omega(mu, nu) is >= mu/nu.

    With ``strict`` the lemma's hypotheses (nu >= 10 and 2nu <= mu <= threshold
    with the remainder estimate as eps) are enforced.
    """
    if strict:
        if nu < 10:
            raise LemmaInapplicable("numeric check requires nu >= 10")
        top = mu_threshold(rc, nu, remainder_bound(rc, nu))
        if not 2 * nu <= mu <= top:
            raise LemmaInapplicable(f"mu={mu} outside [2nu, {top}]")
    m = omega_minimum(rc, mu, nu)
    return m is None or m >= F(mu, nu)


# --------------------------------------------------------------------------
# explicit corollaries


def prop45_threshold(nu: int) -> Fraction:
    return F(8, 25) * nu * nu + F(nu, 5) - F(5, 4)


def prop45_check(S: Semigroup, pr: PartitionReport) -> BoundEntry:
    """nu >= 10, large a2 and mu <= 8/25 nu^2 + nu/5 - 5/4 must give Wilf."""
    nu = S.embedding_dim
    if not pr.large_a2 or nu < 10 or S.multiplicity > prop45_threshold(nu):
        return BoundEntry.skipped("prop45", "hypotheses not met")
    return BoundEntry.compare("prop45", nu * S.left_count, S.conductor, ">=")


def prop46_check(S: Semigroup, pr: Optional[PartitionReport] = None) -> BoundEntry:
    """Certificate 1 + q1/2 + q2/2 >= mu/nu when c = 0 mod mu, cross-checked by direct count."""
    pr = pr or partition_generators(S)
    mu, nu, c = S.multiplicity, S.embedding_dim, S.conductor
    if not pr.large_a2 or nu < 10 or c == 0 or c % mu:
        return BoundEntry.skipped("prop46", "hypotheses not met")
    value = 1 + F(pr.q1, 2) + F(pr.q2, 2)
    boundary = 2 * mu == nu * (nu + 1) and pr.q1 == nu - 1 and pr.q2 == 0
    certified = value >= F(mu, nu) or boundary
    _, wilf = wilf_check(S)
    note = "boundary case mu = nu(nu+1)/2" if boundary else ""
    if certified and not wilf:
        note = "certificate holds but direct count fails"
    status = HOLDS if certified and wilf else VIOLATED
    return BoundEntry("prop46", value, F(mu, nu), ">=", status, note)


def prop47_rhs(mu: int, nu: int, chi) -> Fraction:
    """Conductor threshold mu/(chi nu) * (mu + chi nu + nu(nu-1)/3)."""
    chi = F(chi)
    if not 0 < chi < F(1, 3):
        raise ValueError("chi must lie in (0, 1/3)")
    return F(mu) / (chi * nu) * (mu + chi * nu + F(nu * (nu - 1), 3))


def prop47_check(S: Semigroup, chi=F(1, 6), pr: Optional[PartitionReport] = None) -> BoundEntry:
    """If c reaches the threshold then Wilf must hold (checked against the direct count)."""
    rhs = prop47_rhs(S.multiplicity, S.embedding_dim, chi)
    pr = pr or partition_generators(S)
    mu, nu = S.multiplicity, S.embedding_dim
    if not pr.large_a2 or 9 * mu > 4 * nu * nu:
        return BoundEntry.skipped("prop47", ERRATA["prop47"])
    if S.conductor < rhs:
        return BoundEntry("prop47", S.conductor, rhs, ">=", HOLDS, "vacuous: c below threshold; " + ERRATA["prop47"])
    _, wilf = wilf_check(S)
    return BoundEntry("prop47", S.conductor, rhs, ">=", HOLDS if wilf else VIOLATED, ERRATA["prop47"])


@dataclass(frozen=True)
class WeakWilfCheck:
    entry: BoundEntry
    mu_bound: BoundEntry
    coefficient: Optional[Fraction]


def weak_wilf_coefficient(case_index: int, lam) -> Fraction:
    """2 gamma (2 beta - gamma) / lambda^2 for the q2 = sigma reduction of a case."""
    return reduced_coefficients(case_index, Branch.Q2_EQUALS_SIGMA).A / F(lam) ** 2


def weak_wilf_check(S: Semigroup, lam) -> WeakWilfCheck:
    lam = F(lam)
    if not 0 < lam < F(4, 5):
        raise ValueError("lambda must lie in (0, 4/5)")
    nu, mu = S.embedding_dim, S.multiplicity
    entry = BoundEntry.compare("weak_wilf", nu * S.left_count, lam * S.conductor, ">=")
    mu_bound = BoundEntry.compare("weak_wilf_mu", 2 * mu, nu * (nu + 1), "<=")
    coef = None
    if S.conductor > 0:
        coef = weak_wilf_coefficient(theta_decompose(S.conductor, mu).floor_theta, lam)
    return WeakWilfCheck(entry, mu_bound, coef)


# --------------------------------------------------------------------------
# certificates


@dataclass
class Analysis:
    """Everything computed for one semigroup; shared by ``certify`` and the sweep."""

    S: Semigroup
    partition: PartitionReport
    graph: Optional[AperyPairGraph]
    theta: Optional[ThetaDecomposition]
    ell: Optional[Fraction]
    ledger: BoundLedger


def analyze(S: Semigroup) -> Analysis:
    pr = partition_generators(S)
    ledger = BoundLedger()
    mu, nu, c = S.multiplicity, S.embedding_dim, S.conductor
    graph = None
    ell = None
    theta = theta_decompose(c, mu) if c > 0 else None

    ratio, wilf = wilf_check(S)
    ledger.add(BoundEntry.compare("wilf", nu * S.left_count, c, ">="))

    if pr.large_a2:
        ledger.add(coverage_entry(S, pr))
        ledger.extend(bound_prop22(S, pr))
        ledger.add(BoundEntry.compare("q1_zero", 0 if pr.q1 == 0 and mu != nu else 1, 1, ">=",
                                      note="q1 = 0 forces mu = nu"))
        ledger.add(BoundEntry.compare("omega", 1 if omega_contains(mu, nu, pr.q1, pr.q2) else 0, 1, ">="))
        graph = apery_pairs(S, pr)
        ledger.add(check_sigma_bound(graph, pr))
        ledger.add(check_cor42(S, pr, graph))
        ledger.add(lbound_basic(S, pr))
        ledger.extend(lbound_pairs(S, pr, graph.sigma))
        if c > 3 * mu:
            ell, _ = ell_value(S, pr, graph.sigma)
            # informational: a value below 1 only means the certificate does not apply
            cert = F(nu, mu) * ell
            ledger.add(BoundEntry("ell_value", cert, 1, ">=", HOLDS if cert >= 1 else SKIPPED,
                                  "" if cert >= 1 else "certificate not applicable"))
            ledger.add(ell_chain_check(S, pr, graph))
        else:
            ledger.add(BoundEntry.skipped("ell_value", "c <= 3mu"))
            ledger.add(BoundEntry.skipped("ell_chain", "c <= 3mu"))
    else:
        for prop in PROPS_LARGE_A2:
            ledger.add(BoundEntry.skipped(prop, "3*a2 <= c + mu"))

    if c <= 3 * mu:
        ledger.certificate = Certificate.ELIAHOU_SMALL_C
    elif pr.large_a2 and pr.q1 == 0:
        ledger.certificate = Certificate.MAX_EMBEDDING_DIM
    elif ell is not None and F(nu, mu) * ell >= 1:
        ledger.certificate = Certificate.ELL_BOUND
        ledger.certificate_case = theta.floor_theta
    elif wilf:
        ledger.certificate = Certificate.DIRECT_COUNT
    return Analysis(S, pr, graph, theta, ell, ledger)


PROPS_LARGE_A2 = (
    "prop21", "prop22a", "prop22b", "prop22c", "q1_zero", "omega", "prop41", "cor42",
    "prop32", "prop34", "prop34_dominates", "ell_value", "ell_chain",
)


def certify(S: Semigroup) -> BoundLedger:
    """Strongest applicable Wilf certificate together with every intermediate inequality."""
    return analyze(S).ledger
