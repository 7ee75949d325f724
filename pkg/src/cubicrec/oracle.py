"""Deliberately naive reference paths for cross-checking the fast code.

These ship with the library so ``cubicrec selftest`` can rerun them anywhere.
"""
from dataclasses import dataclass, field

from .sequence import Generator, SeqPair, seq_value

ITERATIVE_LIMIT = 10**7
ROOT_SCAN_LIMIT = 10**4
PERIOD_SCAN_LIMIT = 300


class ExponentTooLarge(ValueError):
    pass


class NoPeriodFound(RuntimeError):
    pass


@dataclass(frozen=True)
class ProbeReport:
    name: str
    inputs: dict = field(compare=False)
    claimed: int
    observed: int

    @property
    def verdict(self):
        return "match" if self.claimed == self.observed else "mismatch"

    def line(self):
        args = ", ".join(f"{k}={v}" for k, v in self.inputs.items())
        return f"{self.name}({args}): claimed={self.claimed} observed={self.observed} -> {self.verdict}"


def seq_iterative(g, k):
    """(s_k, s_-k) by |k| single recurrence steps in each direction."""
    if abs(k) > ITERATIVE_LIMIT:
        raise ExponentTooLarge(f"|k| = {abs(k)} exceeds {ITERATIVE_LIMIT}")
    a, b, m = g.a, g.b, g.modulus
    e = abs(k)
    # forward: (s_{j-1}, s_j, s_{j+1}) -> (s_j, s_{j+1}, s_{j+2})
    lo, mid, hi = b, 3 % m, a
    for _ in range(e):
        lo, mid, hi = mid, hi, (a * hi - b * mid + lo) % m
    fwd = mid
    # backward: s_{j-3} = s_j - a s_{j-1} + b s_{j-2}
    hi, mid, lo = a, 3 % m, b
    for _ in range(e):
        hi, mid, lo = mid, lo, (hi - a * mid + b * lo) % m
    back = mid
    if k < 0:
        fwd, back = back, fwd
    return SeqPair(k, fwd, back)


def cubic_at(a, b, x, p):
    return (x * x * x - a * x * x + b * x - 1) % p


def irreducible_by_root_scan(a, b, p):
    if p >= ROOT_SCAN_LIMIT:
        raise ValueError(f"root scan limited to p < {ROOT_SCAN_LIMIT}")
    return all(cubic_at(a, b, x, p) != 0 for x in range(p))


def period_scan(a, b, p):
    """Smallest T > 0 at which the state (s_T, s_{T-1}, s_{T-2}) returns to (s_0, s_-1, s_-2)."""
    if p >= PERIOD_SCAN_LIMIT:
        raise ValueError(f"period scan limited to p < {PERIOD_SCAN_LIMIT}")
    a %= p
    b %= p
    # backward step at j = 1: s_-2 = s_1 - a s_0 + b s_-1
    s_m2 = (b * b - 2 * a) % p
    start = (3 % p, b, s_m2)
    bound = p * p + p + 1
    lo, mid, hi = s_m2, b, 3 % p  # (s_{j-2}, s_{j-1}, s_j) at j = 0
    for t in range(1, bound + 1):
        lo, mid, hi = mid, hi, (a * hi - b * mid + lo) % p
        if (hi, mid, lo) == start:
            return t
    raise NoPeriodFound(f"no period <= {bound} for ({a}, {b}) mod {p}")


def shift_probe(p, q, a, b, k):
    """Compare s_k(a + n, b) - s_k(a, b) mod n^2 against the claimed n*k.

    Uses the fast engine and, when |k| is small enough, re-derives the
    observation with the iterative oracle; the two must agree.
    """
    n = p * q
    n2 = n * n
    g = Generator.reduced(a, b, n2)
    shifted = Generator.reduced(a + n, b, n2)
    observed = (seq_value(shifted, k) - seq_value(g, k)) % n2
    if abs(k) <= 10**5:
        slow = (seq_iterative(shifted, k).s_k - seq_iterative(g, k).s_k) % n2
        if slow != observed:
            raise RuntimeError("fast and iterative paths disagree in shift probe")
    return ProbeReport(
        "shift_probe",
        {"n": n, "a": a, "b": b, "k": k},
        claimed=(n * k) % n2,
        observed=observed,
    )
