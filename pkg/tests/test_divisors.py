import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from primesums.divisors import (ArithmeticFunction, CommutationBatch, catalog,
                                check_divisor_commutation_hyperbola,
                                check_divisor_commutation_nested, divisor_sum,
                                divisor_sum_table, hyperbola_commutation_sides,
                                mobius_invert, nested_commutation_sides,
                                selberg_lhs, selberg_lhs_direct)
from primesums.errors import DomainError

L2, L3 = math.log(2), math.log(3)


@pytest.fixture(scope="module")
def fns(sieve4):
    return catalog(sieve4)


def test_divisor_sum_examples(sieve4, fns):
    assert divisor_sum(sieve4, fns["mu"], 1) == 1
    assert divisor_sum(sieve4, fns["mu"], 12) == 0
    assert divisor_sum(sieve4, fns["identity"], 6) == sum(oracles.divisors(6)) == 12


def test_divisor_sum_out_of_range(sieve4, fns):
    with pytest.raises(DomainError):
        divisor_sum(sieve4, fns["one"], 10**4 + 1)


def test_arithmetic_function_domain(fns):
    with pytest.raises(DomainError):
        fns["log"](0)


def test_mobius_invert_examples(sieve4, fns):
    brute12 = math.fsum(oracles.mobius(d) * math.log(12 / d) for d in oracles.divisors(12))
    assert mobius_invert(sieve4, fns["log"], 12) == pytest.approx(brute12, abs=1e-12)
    assert mobius_invert(sieve4, fns["log"], 12) == pytest.approx(sieve4.mangoldt[12], abs=1e-12)
    assert mobius_invert(sieve4, fns["log"], 8) == pytest.approx(L2, abs=1e-12)
    assert mobius_invert(sieve4, fns["one"], 1) == 1


def test_literal_inversion_reading_fails(sieve4, fns):
    # sum_{d|n} mu(d) f(d) in place of f(n/d) yields -Lambda(n), not Lambda(n)
    for n in (2, 8, 97):
        lit = math.fsum(sieve4.mu[d] * math.log(d) for d in sieve4.divisors(n))
        assert lit == pytest.approx(-sieve4.mangoldt[n], abs=1e-12)
        assert abs(lit - mobius_invert(sieve4, fns["log"], n)) > 1


@pytest.mark.parametrize("name", ["one", "log", "mu", "mangoldt"])
def test_inversion_round_trip(sieve4, fns, name):
    g = fns[name]
    vals = np.concatenate(([0.0], g(np.arange(1, 2001))))
    f_table = divisor_sum_table(vals, 2000)
    f = ArithmeticFunction("f", lambda n: f_table[n], 2000)
    for n in range(1, 2001):
        assert abs(mobius_invert(sieve4, f, n) - vals[n]) <= 1e-9 * len(sieve4.divisors(n))


def test_divisor_sum_table_matches_pointwise(sieve4, fns):
    vals = np.concatenate(([0.0], fns["log"](np.arange(1, 501))))
    table = divisor_sum_table(vals, 500)
    for n in (1, 7, 60, 360, 500):
        assert table[n] == pytest.approx(divisor_sum(sieve4, fns["log"], n), abs=1e-12)


def brute_nested(A, n):
    lhs = math.fsum(A(k, d) for k in oracles.divisors(n) for d in oracles.divisors(k))
    rhs = math.fsum(A(d * m, d) for d in oracles.divisors(n) for m in oracles.divisors(n // d))
    return lhs, rhs


def brute_hyperbola(A, x):
    X = int(x)
    lhs = math.fsum(A(n, d) for n in range(1, X + 1) for d in oracles.divisors(n))
    rhs = math.fsum(A(d * m, d) for d in range(1, X + 1) for m in range(1, X // d + 1))
    return lhs, rhs


def one(k, d):
    return np.ones(np.shape(k))


def test_nested_examples(sieve4):
    lhs, rhs, terms = nested_commutation_sides(sieve4, one, 4)
    assert lhs == rhs == terms == 6
    A = lambda k, d: np.asarray(k) * 10.0 + np.asarray(d)
    lhs, rhs, _ = nested_commutation_sides(sieve4, A, 1)
    assert lhs == rhs == 11.0

    mu = sieve4.mu.astype(float)
    A = lambda k, d: np.log(np.asarray(k, dtype=float)) * mu[d]
    lhs, rhs, _ = nested_commutation_sides(sieve4, A, 30)
    blhs, brhs = brute_nested(lambda k, d: math.log(k) * oracles.mobius(d), 30)
    assert lhs == pytest.approx(blhs, abs=1e-12)
    assert rhs == pytest.approx(brhs, abs=1e-12)
    assert check_divisor_commutation_nested(sieve4, A, 30)


def test_hyperbola_examples(sieve4):
    lhs, rhs, terms = hyperbola_commutation_sides(sieve4, one, 4)
    assert lhs == rhs == terms == 8
    A = lambda n, d: np.asarray(n) * 10.0 + np.asarray(d)
    assert hyperbola_commutation_sides(sieve4, A, 1.7)[:2] == (11.0, 11.0)

    lam = sieve4.mangoldt
    A = lambda n, d: lam[d] * lam[np.asarray(n) // np.asarray(d)]
    lhs, rhs, _ = hyperbola_commutation_sides(sieve4, A, 20)
    blhs, brhs = brute_hyperbola(lambda n, d: oracles.mangoldt(d) * oracles.mangoldt(n // d), 20)
    assert lhs == pytest.approx(blhs, abs=1e-12)
    assert rhs == pytest.approx(brhs, abs=1e-12)
    assert check_divisor_commutation_hyperbola(sieve4, A, 20)


def test_hyperbola_domain(sieve4):
    with pytest.raises(DomainError):
        hyperbola_commutation_sides(sieve4, one, 0.5)


@st.composite
def weight_tables(draw, size=60):
    seed = draw(st.integers(0, 2**32 - 1))
    table = np.random.default_rng(seed).uniform(-1, 1, (size + 1, size + 1))
    return lambda k, d: table[k, d]


@given(weight_tables(), st.integers(1, 60))
@settings(max_examples=60, deadline=None)
def test_commutations_random_weights(sieve4, A, n):
    assert check_divisor_commutation_nested(sieve4, A, n)
    assert check_divisor_commutation_hyperbola(sieve4, A, n + 0.5)


def test_batch_agrees_with_single_calls(sieve4):
    rng = np.random.default_rng(7)
    table = rng.uniform(-1, 1, (301, 301))
    A = lambda k, d: table[k, d]
    batch = CommutationBatch(sieve4, 300)
    nl, nr, nt = batch.nested(A)
    hl, hr, ht = batch.hyperbola(A)
    for n in (1, 2, 12, 97, 210, 300):
        lhs, rhs, terms = nested_commutation_sides(sieve4, A, n)
        assert (nl[n], nr[n], nt[n]) == (pytest.approx(lhs, abs=1e-11), pytest.approx(rhs, abs=1e-11), terms)
        lhs, rhs, terms = hyperbola_commutation_sides(sieve4, A, n)
        assert (hl[n], hr[n], ht[n]) == (pytest.approx(lhs, abs=1e-10), pytest.approx(rhs, abs=1e-10), terms)
    assert batch.check(A)


def test_batch_with_nontrivial_weights(sieve4):
    batch = CommutationBatch(sieve4, 50)
    assert batch.check(lambda k, d: np.sin(k * 1.0 + d))
    lhs, rhs, _ = batch.nested(lambda k, d: np.sin(k * 1.0 + d))
    assert not np.allclose(lhs[2:], 0)


def test_selberg_lhs_small(sieve4, tables4):
    assert selberg_lhs(tables4, sieve4, 1) == 0
    hand = L2**2 + L3**2 + 2 * L2**2 + L2**2
    assert selberg_lhs(tables4, sieve4, 4) == pytest.approx(hand, rel=1e-14)
    assert selberg_lhs(tables4, sieve4, 4.99) == selberg_lhs(tables4, sieve4, 4)


@pytest.mark.parametrize("x", [2, 10, 100, 500])
def test_selberg_lhs_against_double_loop(sieve4, tables4, x):
    assert abs(selberg_lhs(tables4, sieve4, x) - oracles.selberg_lhs(x)) <= 1e-9 * x


def test_selberg_lhs_1e4(sieve4, tables4):
    assert abs(selberg_lhs(tables4, sieve4, 1e4) - selberg_lhs_direct(sieve4, 1e4)) <= 1e-9 * 1e4


def test_selberg_lhs_domain(sieve4, tables4):
    with pytest.raises(DomainError):
        selberg_lhs(tables4, sieve4, 0.5)
    with pytest.raises(DomainError):
        selberg_lhs(tables4, sieve4, 10**4 + 1)
