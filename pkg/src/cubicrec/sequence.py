"""Third-order characteristic sequences s_k(a, b) and cubic irreducibility.

The sequence obeys s_{k+3} = a s_{k+2} - b s_{k+1} + s_k with s_0 = 3,
s_1 = a, s_-1 = b, i.e. s_k is the k-th power sum of the roots of
f(X) = X^3 - aX^2 + bX - 1.
"""
from dataclasses import dataclass

from . import kernel
from .modmath import is_probable_prime


class InvalidPrime(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    """Coefficient pair (a, b) reduced modulo the working modulus."""

    a: int
    b: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        if not (0 <= self.a < self.modulus and 0 <= self.b < self.modulus):
            raise ValueError("generator components must be reduced modulo the modulus")

    @classmethod
    def reduced(cls, a, b, modulus):
        return cls(a % modulus, b % modulus, modulus)


@dataclass(frozen=True)
class SeqPair:
    """(s_k, s_-k) modulo some M; also the coefficients of the cubic f_k."""

    k: int
    s_k: int
    s_neg_k: int


def reciprocal_pair(g):
    """Swap (a, b). The reciprocal cubic has the inverse roots, so s_k(b, a) = s_-k(a, b)."""
    return Generator(g.b, g.a, g.modulus)


def seq_pair(g, k):
    """Evaluate (s_k mod M, s_-k mod M) in O(log |k|) matrix steps.

    Negative exponents reuse the reciprocal generator, so only non-negative
    matrix powers are ever formed.
    """
    e = abs(k)
    fwd = kernel.seq_forward(g.a, g.b, e, g.modulus)
    back = kernel.seq_forward(g.b, g.a, e, g.modulus)
    if k < 0:
        fwd, back = back, fwd
    return SeqPair(k, fwd, back)


def seq_value(g, k):
    """Just s_k mod M."""
    if k >= 0:
        return kernel.seq_forward(g.a, g.b, k, g.modulus)
    return kernel.seq_forward(g.b, g.a, -k, g.modulus)


def companion_power(g, k):
    """The 3x3 companion matrix of g raised to k >= 0, as a row-major 9-tuple."""
    return kernel.companion_power(g.a, g.b, k, g.modulus)


def det3(r, m):
    r0, r1, r2, r3, r4, r5, r6, r7, r8 = r
    return (r0 * (r4 * r8 - r5 * r7) - r1 * (r3 * r8 - r5 * r6) + r2 * (r3 * r7 - r4 * r6)) % m


# Polynomials over F_p below are coefficient lists, lowest degree first.

def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _polymod(f, g, p):
    f = _trim([c % p for c in f])
    inv = pow(g[-1], -1, p)
    while len(f) >= len(g):
        c = f[-1] * inv % p
        shift = len(f) - len(g)
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
        _trim(f)
    return f


def _polygcd(f, g, p):
    f = _trim([c % p for c in f])
    g = _trim([c % p for c in g])
    while g:
        f, g = g, _polymod(f, g, p)
    return f


def _mulmod_cubic(u, v, a, b, p):
    # product of two residues mod X^3 - aX^2 + bX - 1, using X^3 = aX^2 - bX + 1
    w = [0] * 5
    for i, ui in enumerate(u):
        for j, vj in enumerate(v):
            w[i + j] += ui * vj
    for d in (4, 3):
        c = w[d]
        w[d] = 0
        w[d - 1] += a * c
        w[d - 2] -= b * c
        w[d - 3] += c
    return [w[0] % p, w[1] % p, w[2] % p]


def is_irreducible_cubic(a, b, p, check_prime=True):
    """True iff X^3 - aX^2 + bX - 1 is irreducible over F_p.

    A cubic is reducible exactly when it has a root in F_p, i.e. when
    gcd(X^p - X, f) is non-constant. X^p mod f is found by square-and-multiply.
    """
    if check_prime and not is_probable_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    a %= p
    b %= p
    result = [1, 0, 0]
    base = [0, 1, 0]
    e = p
    while e:
        if e & 1:
            result = _mulmod_cubic(result, base, a, b, p)
        base = _mulmod_cubic(base, base, a, b, p)
        e >>= 1
    result[1] -= 1
    f = [-1, b, -a, 1]
    return len(_polygcd(f, result, p)) == 1
