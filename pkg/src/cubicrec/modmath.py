"""Integer and modular arithmetic helpers: inverses, lcm, primality, prime sampling."""
import math
import random

# Deterministic Miller-Rabin witnesses, exact for every n < 3.3e24 (so all of 2**64).
_DET_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)

DEFAULT_ROUNDS = 40


class NotInvertible(ArithmeticError):
    def __init__(self, x, m):
        super().__init__(f"{x} has no inverse modulo {m} (gcd = {math.gcd(x, m)})")
        self.x = x
        self.m = m


def mod_inverse(x, m):
    """Return y in [0, m) with x*y = 1 (mod m); raise NotInvertible otherwise."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    try:
        return pow(x, -1, m)
    except ValueError:
        raise NotInvertible(x, m) from None


def lcm(x, y):
    if x < 1 or y < 1:
        raise ValueError("lcm arguments must be positive")
    return math.lcm(x, y)


def _mr_round(n, d, s, base):
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(x, rounds=DEFAULT_ROUNDS, rng=None):
    """Miller-Rabin test.

    Exact for ``x < 2**64`` (fixed witness set). Above that, ``rounds`` random
    bases drawn from ``rng`` bound the false-positive rate by ``4**-rounds``.
    A ``False`` answer is always a proof of compositeness.
    """
    if x < 2:
        return False
    for p in _SMALL_PRIMES:
        if x == p:
            return True
        if x % p == 0:
            return False
    d, s = x - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if x < 1 << 64:
        return all(_mr_round(x, d, s, w) for w in _DET_WITNESSES)
    if rng is None:
        rng = random.SystemRandom()
    for _ in range(rounds):
        if not _mr_round(x, d, s, rng.randrange(2, x - 1)):
            return False
    return True


def random_prime(bits, rng=None):
    """Return an odd prime with exactly ``bits`` bits."""
    if bits < 3:
        raise ValueError("bits must be >= 3")
    if rng is None:
        rng = random.SystemRandom()
    while True:
        # top bit forces the exact length, low bit forces oddness
        candidate = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_probable_prime(candidate, rng=rng):
            return candidate


def make_rng(seed=None):
    """Seeded ``random.Random`` for reproducible runs, system entropy otherwise."""
    if seed is None:
        return random.SystemRandom()
    return random.Random(seed)
