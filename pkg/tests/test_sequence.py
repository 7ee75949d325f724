import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicrec.modmath import is_probable_prime
from cubicrec.oracle import irreducible_by_root_scan, seq_iterative
from cubicrec.sequence import (
    Generator,
    InvalidPrime,
    SeqPair,
    companion_power,
    det3,
    is_irreducible_cubic,
    reciprocal_pair,
    seq_pair,
    seq_value,
)

SMALL_PRIMES = [x for x in range(3, 200) if is_probable_prime(x)]


@st.composite
def generators(draw, max_modulus=1 << 80):
    m = draw(st.integers(2, max_modulus))
    return Generator(draw(st.integers(0, m - 1)), draw(st.integers(0, m - 1)), m)


def test_generator_validation():
    with pytest.raises(ValueError):
        Generator(0, 0, 1)
    with pytest.raises(ValueError):
        Generator(5, 0, 5)
    assert Generator.reduced(-1, 1230, 1225) == Generator(1224, 5, 1225)


def test_seq_pair_zero(g01):
    assert seq_pair(g01, 0) == SeqPair(0, 3, 3)


def test_seq_pair_frozen_k5(g01):
    # hand-iterated: forward 3, 0, -2, 3, 2, -5; backward 1, 1, 4, 5, 6
    assert seq_pair(g01, 5) == SeqPair(5, 1220, 6)
    assert seq_pair(g01, -5) == SeqPair(-5, 6, 1220)


@given(generators())
def test_seq_pair_k1_k2(g):
    m = g.modulus
    assert seq_pair(g, 1) == SeqPair(1, g.a, g.b)
    assert seq_pair(g, 2) == SeqPair(2, (g.a * g.a - 2 * g.b) % m, (g.b * g.b - 2 * g.a) % m)


def test_constant_sequence():
    g = Generator(3, 3, 1225)
    for k in (0, 1, -1, 17, -(10**40), 10**40):
        assert (seq_pair(g, k).s_k, seq_pair(g, k).s_neg_k) == (3, 3)


def test_huge_exponent_is_fine(g01):
    k = 1 << 4000
    pair = seq_pair(g01, k)
    assert 0 <= pair.s_k < 1225 and pair.k == k


@given(generators(), st.integers(-(10**6), 10**6))
def test_recurrence_window(g, k):
    s = [seq_value(g, k + i) for i in range(4)]
    assert s[3] == (g.a * s[2] - g.b * s[1] + s[0]) % g.modulus


@given(generators(), st.integers(-(1 << 200), 1 << 200))
def test_negation_swaps_components(g, k):
    pos, neg = seq_pair(g, k), seq_pair(g, -k)
    assert (pos.s_k, pos.s_neg_k) == (neg.s_neg_k, neg.s_k)


@given(generators(), st.integers(-(1 << 100), 1 << 100))
def test_reciprocal_symmetry(g, k):
    assert seq_pair(g, k).s_neg_k == seq_pair(reciprocal_pair(g), k).s_k


def test_reciprocal_pair_examples(g01):
    assert reciprocal_pair(g01) == Generator(1, 0, 1225)
    assert seq_pair(Generator(1, 0, 1225), 5).s_k == 6
    assert reciprocal_pair(reciprocal_pair(g01)) == g01


@settings(max_examples=200)
@given(generators(max_modulus=1 << 40), st.integers(-3000, 3000))
def test_matches_iterative_oracle(g, k):
    assert seq_pair(g, k) == seq_iterative(g, k)


@given(generators(), st.integers(0, 1 << 300))
def test_determinant_invariant(g, k):
    assert det3(companion_power(g, k), g.modulus) == 1


def test_composition_mod_n2():
    p, q = 1000003, 1000033
    n2 = (p * q) ** 2
    rng = random.Random(4)
    g = Generator(rng.randrange(n2), rng.randrange(n2), n2)
    for _ in range(30):
        k, e = rng.randrange(1 << 64), rng.randrange(1 << 64)
        u = seq_pair(g, k)
        assert seq_value(Generator(u.s_k, u.s_neg_k, n2), e) == seq_value(g, k * e)


@pytest.mark.parametrize("p", SMALL_PRIMES[:30])
def test_period_small_primes(p):
    rng = random.Random(p)
    for _ in range(5):
        a, b = rng.randrange(p), rng.randrange(p)
        if not is_irreducible_cubic(a, b, p):
            continue
        g = Generator(a, b, p)
        T = p * p + p + 1
        at = seq_pair(g, T)
        assert (at.s_k, at.s_neg_k) == (3 % p, 3 % p)
        after = seq_pair(g, T + 1)
        assert (after.s_k, after.s_neg_k) == (a, b)


@pytest.mark.parametrize("a, b, p, expected", [(0, 1, 5, True), (0, 1, 7, True), (4, 4, 7, False), (0, 0, 7, False)])
def test_irreducible_examples(a, b, p, expected):
    assert is_irreducible_cubic(a, b, p) is expected


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 31, 97])
def test_irreducible_matches_root_scan(p):
    for a in range(p):
        for b in range(p):
            assert is_irreducible_cubic(a, b, p) == irreducible_by_root_scan(a, b, p), (a, b, p)


@pytest.mark.parametrize("p", [101, 103])
def test_irreducible_count(p):
    # roots are the norm-1 elements of GF(p^3) outside GF(p), three per cubic
    cube_roots_of_unity = 3 if p % 3 == 1 else 1
    count = sum(is_irreducible_cubic(a, b, p) for a in range(p) for b in range(p))
    assert count == (p * p + p + 1 - cube_roots_of_unity) // 3


def test_reducible_by_construction_large_prime():
    # (X - r)(X^2 + uX + 1/r) has constant term -1 and the root r
    p = 2**61 - 1
    rng = random.Random(9)
    for _ in range(50):
        r, u = rng.randrange(1, p), rng.randrange(p)
        v = pow(r, -1, p)
        a, b = (r - u) % p, (v - r * u) % p
        assert not is_irreducible_cubic(a, b, p)
    hits = sum(is_irreducible_cubic(rng.randrange(p), rng.randrange(p), p) for _ in range(300))
    assert 60 < hits < 140


def test_irreducible_rejects_composite():
    with pytest.raises(InvalidPrime):
        is_irreducible_cubic(0, 1, 35)


@pytest.mark.parametrize("a", range(7))
def test_a_equals_b_is_reducible(a):
    assert not is_irreducible_cubic(a, a, 7)
