from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import count_progression, sieve_invariants
from wilfbounds.bounds import analyze, ap_count_exact, ap_count_lower
from wilfbounds.core import NotANumericalSemigroup, build_semigroup, contains
from wilfbounds.matching import min_vertex_cover_bruteforce, pair_graph
from wilfbounds.partition import ResidueSet, sumset

gen_sets = st.lists(st.integers(2, 40), min_size=1, max_size=6)


def _build(gens):
    try:
        return build_semigroup(gens)
    except NotANumericalSemigroup:
        return None


@given(gen_sets, st.randoms())
def test_generator_order_irrelevant(gens, rnd):
    S = _build(gens)
    shuffled = gens[:]
    rnd.shuffle(shuffled)
    assert S == _build(shuffled)


@given(gen_sets, st.integers(0, 200))
def test_adding_member_keeps_semigroup(gens, x):
    S = _build(gens)
    if S is None or x == 0 or not contains(S, x):
        return
    assert build_semigroup(list(gens) + [x]) == S


@settings(max_examples=60)
@given(gen_sets)
def test_matches_sieve(gens):
    S = _build(gens)
    if S is None:
        return
    o = sieve_invariants(gens)
    assert (S.apery, S.frobenius, S.genus, S.left_count, S.min_generators) == (
        o["apery"], o["frobenius"], o["genus"], o["left_count"], o["min_generators"])


@settings(max_examples=60)
@given(gen_sets)
def test_no_violations(gens):
    S = _build(gens)
    if S is not None:
        assert analyze(S).ledger.violations() == []


@given(st.integers(1, 25), st.sets(st.integers(0, 60)), st.sets(st.integers(0, 60)))
def test_sumset_commutes(m, X, Y):
    A, B = ResidueSet(m, X), ResidueSet(m, Y)
    s = sumset(A, B)
    assert s == sumset(B, A)
    if len(A) and len(B):
        assert len(s) >= max(len(A), len(B))


@given(st.sets(st.tuples(st.integers(0, 6), st.integers(10, 16)), max_size=25))
def test_konig(edges):
    g = pair_graph(range(7), range(10, 17), edges)
    assert g.sigma == min_vertex_cover_bruteforce(g)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@given(rationals, st.fractions(min_value=Fraction(1, 12), max_value=20, max_denominator=12),
       st.fractions(min_value=Fraction(1, 12), max_value=10, max_denominator=12),
       rationals, st.integers(-5, 5))
def test_interval_counts(x, length, p, b, shift):
    y = x + length
    n = count_progression(x, y, b, p)
    assert ap_count_lower(x, y, b, p) <= n
    x2 = b + shift * p
    y2 = x2 + length
    if ((y2 - b) / p).denominator != 1:
        assert ap_count_exact(x2, y2, b, p) == count_progression(x2, y2, b, p)
