import cmath
import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from primesums.characters import (all_characters, column_orthogonality_check,
                                  equidistribution_report, multiplicativity_check,
                                  orthogonality_check, pi_progression, progression_counts,
                                  totient, unit_group, write_character_csv)
from primesums.errors import DomainError
from primesums.fixtures import load_envelopes


def test_trivial_modulus():
    G = unit_group(1)
    assert G.order == 1
    chars = all_characters(G)
    assert len(chars) == 1
    assert chars[0](0) == 1
    assert chars[0](17) == 1


def test_mod_8_is_klein():
    G = unit_group(8)
    assert G.units == (1, 3, 5, 7)
    assert sorted(o for _, o in G.generators) == [2, 2]
    assert all(pow(u, 2, 8) == 1 for u in G.units)


def test_mod_7_cyclic():
    G = unit_group(7)
    assert G.generators == ((3, 6),)
    assert sorted(pow(3, k, 7) for k in range(6)) == list(G.units)


@pytest.mark.parametrize("N", list(range(1, 60)) + [64, 105, 200, 360])
def test_unit_group_invariants(N):
    G = unit_group(N)
    assert G.order == totient(N) == sum(1 for a in range(N) if math.gcd(a, N) == 1)
    assert math.prod(o for _, o in G.generators) == G.order
    for u, exps in G.discrete_log.items():
        r = 1 % N
        for (g, _), e in zip(G.generators, exps):
            r = r * pow(g, e, N) % N
        assert r == u


def test_mod_4_characters():
    chars = all_characters(unit_group(4))
    assert len(chars) == 2
    assert chars[0].is_principal
    assert chars[1](3) == -1
    assert chars[1](1) == 1
    assert chars[1](2) == 0


def test_mod_5_fourth_roots():
    chars = all_characters(unit_group(5))
    assert len(chars) == 4
    for chi in chars:
        for n in range(1, 5):
            assert abs(chi(n) ** 4 - 1) < 1e-12
    assert chars[1](2) in (1j, -1j)


def test_orthogonality_examples():
    chars = all_characters(unit_group(4))
    gram = [[sum(a(n) * b(n).conjugate() for n in range(4)) for b in chars] for a in chars]
    assert gram[0][0] == 2
    assert gram[0][1] == 0
    assert orthogonality_check(chars)
    assert orthogonality_check(all_characters(unit_group(1)))


def test_incomplete_list_rejected():
    chars = all_characters(unit_group(12))
    with pytest.raises(DomainError):
        orthogonality_check(chars[:-1])
    with pytest.raises(DomainError):
        orthogonality_check(chars + chars[:1])
    with pytest.raises(DomainError):
        orthogonality_check(chars[:1] + all_characters(unit_group(5))[:3])


@pytest.mark.parametrize("N", range(1, 51))
def test_character_algebra(N):
    chars = all_characters(unit_group(N))
    assert len({c.exponents for c in chars}) == totient(N)
    assert chars[0].is_principal
    assert all(multiplicativity_check(c) for c in chars)
    assert orthogonality_check(chars)
    assert column_orthogonality_check(chars)
    for chi in chars:
        for n in range(N):
            expected = 1 if math.gcd(n, N) == 1 else 0
            assert abs(abs(chi(n)) - expected) < 1e-15


@given(st.integers(2, 200), st.data())
@settings(max_examples=50, deadline=None)
def test_values_match_angles(N, data):
    chars = all_characters(unit_group(N))
    chi = data.draw(st.sampled_from(chars))
    n = data.draw(st.integers(-10**6, 10**6))
    a = chi.angle(n)
    if math.gcd(n, N) != 1:
        assert a is None and chi(n) == 0
    else:
        num, den = a
        assert abs(chi(n) - cmath.exp(2j * math.pi * num / den)) < 1e-12


def test_pi_progression_examples(sieve4, tables4):
    assert pi_progression(tables4, sieve4, 20, 4, 1) == 3
    assert pi_progression(tables4, sieve4, 20, 4, 3) == 4
    assert pi_progression(tables4, sieve4, 2, 2, 1) == 0
    assert pi_progression(tables4, sieve4, 20, 4, -1) == 4
    with pytest.raises(DomainError):
        pi_progression(tables4, sieve4, 20, 4, 2)


def test_pi_progression_brute_force(sieve4, tables4):
    primes = [p for p in range(2, 3001) if oracles.is_prime(p)]
    for N in (3, 7, 10, 12):
        for A in range(N):
            if math.gcd(A, N) == 1:
                assert pi_progression(tables4, sieve4, 3000, N, A) == sum(p % N == A for p in primes)


def test_partition_identity(sieve6, tables6):
    for x in (2, 10, 1000, 123456.7, 10**6):
        total = tables6.pi(x)
        for N in range(1, 51):
            counts = progression_counts(tables6, sieve6, x, N)
            small = sum(1 for p in sieve6.primes[:total] if N % p == 0)
            assert sum(counts.values()) + small == total


def test_equidistribution(sieve6, tables6):
    rep = equidistribution_report(tables6, sieve6, 1e6, 1)
    assert rep.values == [0.0]
    frozen = load_envelopes()["dirichlet_d_max"]["value"]
    rep4 = equidistribution_report(tables6, sieve6, 1e6, 4)
    assert rep4.envelope <= 0.01
    assert rep4.envelope == pytest.approx(frozen["4"], abs=1e-15)
    assert equidistribution_report(tables6, sieve6, 1e6, 12).envelope <= 0.02


@pytest.mark.parametrize("N", range(1, 31))
def test_counts_grow_on_powers_of_two(sieve6, tables6, N):
    for A in range(N):
        if math.gcd(A, N) != 1:
            continue
        counts = [pi_progression(tables6, sieve6, 2**k, N, A) for k in range(10, 20)]
        assert all(b > a for a, b in zip(counts, counts[1:])), (N, A, counts)


def test_character_csv():
    buf = io.StringIO()
    write_character_csv(all_characters(unit_group(4)), buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "N,char_index,n,re,im,angle_num,angle_den"
    assert lines[1:] == [
        "4,0,0,0,0,0,0", "4,0,1,1,0,0,2", "4,0,2,0,0,0,0", "4,0,3,1,0,0,2",
        "4,1,0,0,0,0,0", "4,1,1,1,0,0,2", "4,1,2,0,0,0,0", "4,1,3,-1,0,1,2",
    ]
