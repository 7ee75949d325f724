"""Public-key encryption over third-order sequences modulo n^2.

A message m < n is hidden in the exponent: the ciphertext is (s_k, s_-k)
with k = m (deterministic) or k = r*n + m (probabilistic). The key holder
knows lambda = lcm(p^2+p+1, q^2+q+1), a period of every such sequence mod n,
and recovers k mod n through

    L(x, y) = (s_lambda(x, y) - 3) / n  mod n,    m = L(c1, c2) / L(a, b).
"""
import math
from dataclasses import dataclass

from .modmath import NotInvertible, is_probable_prime, lcm, make_rng, mod_inverse, random_prime
from .sequence import Generator, is_irreducible_cubic, seq_pair, seq_value

ATTEMPTS_PER_GENERATOR = 9
MAX_GENERATOR_ATTEMPTS = 100 * ATTEMPTS_PER_GENERATOR


class KeygenExhausted(RuntimeError):
    pass


class NotInGamma(ValueError):
    """s_lambda(x, y) is not 3 mod n, so L(x, y) is undefined."""


class InvalidCiphertext(ValueError):
    pass


class MessageOutOfRange(ValueError):
    pass


class InvalidKey(ValueError):
    pass


@dataclass(frozen=True)
class PublicKey:
    n: int
    a: int
    b: int

    @property
    def n2(self):
        return self.n * self.n

    @property
    def generator(self):
        return Generator(self.a, self.b, self.n2)

    def validate(self):
        if self.n < 15 or self.n % 2 == 0:
            raise InvalidKey("n must be odd and >= 15")
        if not (0 <= self.a < self.n2 and 0 <= self.b < self.n2):
            raise InvalidKey("a, b must be reduced modulo n^2")


@dataclass(frozen=True)
class PrivateKey:
    p: int
    q: int
    n: int
    a: int
    b: int
    lam: int
    l_ab_inv: int

    @property
    def n2(self):
        return self.n * self.n

    @property
    def public_key(self):
        return PublicKey(self.n, self.a, self.b)

    def validate(self, check_trapdoor=True):
        """Check every key invariant; raises InvalidKey on the first failure."""
        p, q = self.p, self.q
        if p == q or p % 2 == 0 or q % 2 == 0:
            raise InvalidKey("p and q must be distinct odd primes")
        if not (is_probable_prime(p) and is_probable_prime(q)):
            raise InvalidKey("p and q must be prime")
        if self.n != p * q:
            raise InvalidKey("n != p*q")
        self.public_key.validate()
        if self.lam != trapdoor_exponent(p, q):
            raise InvalidKey("lambda != lcm(p^2+p+1, q^2+q+1)")
        if not (is_irreducible_cubic(self.a, self.b, p) and is_irreducible_cubic(self.a, self.b, q)):
            raise InvalidKey("X^3 - aX^2 + bX - 1 must be irreducible mod p and mod q")
        if not check_trapdoor:
            return
        try:
            ell = L_map(self.a, self.b, self.n, self.lam)
        except NotInGamma as exc:
            raise InvalidKey(str(exc)) from None
        if ell * self.l_ab_inv % self.n != 1:
            raise InvalidKey("l_ab_inv is not the inverse of L(a, b) mod n")


@dataclass(frozen=True)
class Ciphertext:
    c1: int
    c2: int


@dataclass(frozen=True)
class Normalization:
    """Outcome of normalize_generator: branch is "accept", "shift" or "reject"."""

    a: int
    branch: str
    ell: int
    ell_shifted: int | None = None

    @property
    def ok(self):
        return self.branch != "reject"


def trapdoor_exponent(p, q):
    return lcm(p * p + p + 1, q * q + q + 1)


def L_map(x, y, n, lam):
    """(s_lambda(x, y) mod n^2 - 3) / n, reduced mod n."""
    n2 = n * n
    s = seq_value(Generator.reduced(x, y, n2), lam)
    if s % n != 3 % n:
        raise NotInGamma(f"s_lambda({x}, {y}) = {s} is not 3 mod {n}")
    return ((s - 3) // n) % n


def normalize_generator(p, q, n, a, b):
    """Make L(a, b) a unit mod n, shifting a -> a + n once if needed.

    If the shifted generator still fails the caller should draw a new (a, b).
    """
    lam = trapdoor_exponent(p, q)
    ell = L_map(a, b, n, lam)
    if math.gcd(ell, n) == 1:
        return Normalization(a, "accept", ell)
    shifted = (a + n) % (n * n)
    ell2 = L_map(shifted, b, n, lam)
    if math.gcd(ell2, n) == 1:
        return Normalization(shifted, "shift", ell, ell2)
    return Normalization(a, "reject", ell, ell2)


def _scan_candidates(n):
    for a in range(n):
        for b in range(n):
            yield a, b


def _random_candidates(n, rng):
    while True:
        yield rng.randrange(n), rng.randrange(n)


def irreducible_generators(p, q, rng=None):
    """Yield (drawn, a, b) for (a, b) in [0, n)^2 with the cubic irreducible mod p and mod q.

    ``drawn`` counts candidates examined so far. With ``rng`` candidates are
    sampled uniformly; without it they are scanned in order (0,0), (0,1), ...
    which makes small test keys reproducible.
    """
    n = p * q
    candidates = _scan_candidates(n) if rng is None else _random_candidates(n, rng)
    for drawn, (a, b) in enumerate(candidates, 1):
        if (is_irreducible_cubic(a, b, p, check_prime=False)
                and is_irreducible_cubic(a, b, q, check_prime=False)):
            yield drawn, a, b


def keypair_from_primes(p, q, rng=None, max_attempts=MAX_GENERATOR_ATTEMPTS):
    """Build a key pair on fixed primes; generator drawn as in irreducible_generators."""
    if p == q:
        raise ValueError("p and q must be distinct")
    n = p * q
    lam = trapdoor_exponent(p, q)
    for drawn, a, b in irreducible_generators(p, q, rng):
        if drawn > max_attempts:
            break
        norm = normalize_generator(p, q, n, a, b)
        if not norm.ok:
            continue
        ell = norm.ell if norm.branch == "accept" else norm.ell_shifted
        sk = PrivateKey(p, q, n, norm.a, b, lam, mod_inverse(ell, n))
        return sk.public_key, sk
    raise KeygenExhausted(f"no usable generator for n={n} after {max_attempts} attempts")


def keygen(bits_per_prime, rng=None):
    if bits_per_prime < 3:
        raise ValueError("bits_per_prime must be >= 3")
    if rng is None:
        rng = make_rng()
    p = random_prime(bits_per_prime, rng)
    q = random_prime(bits_per_prime, rng)
    while q == p:
        q = random_prime(bits_per_prime, rng)
    return keypair_from_primes(p, q, rng)


def _check_message(pk, m):
    if not 0 <= m < pk.n:
        raise MessageOutOfRange(f"message {m} not in [0, {pk.n})")


def encrypt_det(pk, m):
    _check_message(pk, m)
    pair = seq_pair(pk.generator, m)
    return Ciphertext(pair.s_k, pair.s_neg_k)


def encrypt_prob(pk, m, rng=None, r=None):
    """Encrypt with exponent r*n + m, r uniform in [0, n) unless given."""
    _check_message(pk, m)
    if r is None:
        if rng is None:
            rng = make_rng()
        r = rng.randrange(pk.n)
    pair = seq_pair(pk.generator, r * pk.n + m)
    return Ciphertext(pair.s_k, pair.s_neg_k)


def decrypt(sk, ct):
    n2 = sk.n2
    if not (0 <= ct.c1 < n2 and 0 <= ct.c2 < n2):
        raise InvalidCiphertext("ciphertext components must be reduced modulo n^2")
    try:
        ell = L_map(ct.c1, ct.c2, sk.n, sk.lam)
    except NotInGamma as exc:
        raise InvalidCiphertext(str(exc)) from None
    return ell * sk.l_ab_inv % sk.n


__all__ = [
    "Ciphertext", "InvalidCiphertext", "InvalidKey", "KeygenExhausted", "L_map",
    "MessageOutOfRange", "Normalization", "NotInGamma", "NotInvertible", "PrivateKey",
    "PublicKey", "decrypt", "encrypt_det", "encrypt_prob", "irreducible_generators", "keygen",
    "keypair_from_primes",
    "normalize_generator", "trapdoor_exponent",
]
