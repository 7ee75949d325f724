import random

import pytest

from cubicrec.modmath import is_probable_prime
from cubicrec.oracle import (
    ExponentTooLarge,
    ProbeReport,
    irreducible_by_root_scan,
    period_scan,
    seq_iterative,
    shift_probe,
)
from cubicrec.scheme import irreducible_generators, trapdoor_exponent
from cubicrec.sequence import Generator, SeqPair, is_irreducible_cubic, seq_pair


def test_iterative_examples(g01):
    assert seq_iterative(g01, 5) == SeqPair(5, 1220, 6)
    assert seq_iterative(g01, 0) == SeqPair(0, 3, 3)
    assert seq_iterative(g01, -5) == SeqPair(-5, 6, 1220)


def test_iterative_guard(g01):
    with pytest.raises(ExponentTooLarge):
        seq_iterative(g01, 10**7 + 1)


def test_iterative_vs_engine_exhaustive_small_k():
    rng = random.Random(21)
    gens = [Generator.reduced(rng.randrange(1 << 50), rng.randrange(1 << 50), rng.randrange(2, 1 << 50)) for _ in range(50)]
    for g in gens:
        for k in range(-64, 65):
            assert seq_iterative(g, k) == seq_pair(g, k)


def test_root_scan_examples():
    assert irreducible_by_root_scan(0, 1, 5)
    assert not irreducible_by_root_scan(3, 3, 11)
    with pytest.raises(ValueError):
        irreducible_by_root_scan(0, 1, 10007)


def test_period_scan_example():
    assert period_scan(0, 1, 5) == 31


def test_period_divides_for_random_irreducible():
    rng = random.Random(8)
    primes = [x for x in range(3, 200) if is_probable_prime(x)]
    done = 0
    while done < 20:
        p = rng.choice(primes)
        a, b = rng.randrange(p), rng.randrange(p)
        if not is_irreducible_cubic(a, b, p):
            continue
        assert (p * p + p + 1) % period_scan(a, b, p) == 0
        done += 1


def test_period_scan_limits():
    with pytest.raises(ValueError):
        period_scan(0, 1, 307)


def test_reducible_cubics_break_divisibility():
    # the divisibility is specific to irreducible cubics
    p = 7
    periods = {period_scan(a, b, p) for a in range(p) for b in range(p) if not is_irreducible_cubic(a, b, p)}
    assert any((p * p + p + 1) % t for t in periods)


def test_probe_report_verdict():
    assert ProbeReport("x", {}, 3, 3).verdict == "match"
    assert ProbeReport("x", {}, 3, 4).verdict == "mismatch"
    assert "mismatch" in ProbeReport("x", {"k": 1}, 3, 4).line()


@pytest.mark.parametrize("k", [0, 1])
def test_shift_probe_always_matches_small_k(k):
    for _, a, b in list(irreducible_generators(5, 7))[:10]:
        assert shift_probe(5, 7, a, b, k).verdict == "match"


def test_shift_probe_k2_forced_algebra():
    n = 35
    for _, a, b in irreducible_generators(5, 7):
        rep = shift_probe(5, 7, a, b, 2)
        assert rep.observed == 2 * a * n % (n * n)
        assert rep.claimed == 2 * n
        assert (rep.verdict == "match") == (a % n == 1)


def test_shift_probe_lambda_stable():
    lam = trapdoor_exponent(5, 7)
    first = shift_probe(5, 7, 0, 1, lam)
    second = shift_probe(5, 7, 0, 1, lam)
    assert first == second and first.verdict == second.verdict
    assert first.inputs == {"n": 35, "a": 0, "b": 1, "k": lam}
