"""Pure-Python companion-matrix kernel (fallback when the compiled one is absent).

Matrices are flat row-major 9-tuples of ints reduced mod ``m``. The companion
matrix of X^3 - aX^2 + bX - 1 is [[a, -b, 1], [1, 0, 0], [0, 1, 0]]; it maps
the state (s_{k+1}, s_k, s_{k-1}) to (s_{k+2}, s_{k+1}, s_k).
"""


def _square(r, m):
    r0, r1, r2, r3, r4, r5, r6, r7, r8 = r
    return (
        (r0 * r0 + r1 * r3 + r2 * r6) % m,
        (r0 * r1 + r1 * r4 + r2 * r7) % m,
        (r0 * r2 + r1 * r5 + r2 * r8) % m,
        (r3 * r0 + r4 * r3 + r5 * r6) % m,
        (r3 * r1 + r4 * r4 + r5 * r7) % m,
        (r3 * r2 + r4 * r5 + r5 * r8) % m,
        (r6 * r0 + r7 * r3 + r8 * r6) % m,
        (r6 * r1 + r7 * r4 + r8 * r7) % m,
        (r6 * r2 + r7 * r5 + r8 * r8) % m,
    )


def _times_companion(r, a, b, m):
    # R*C only shuffles columns and needs two products per row
    r0, r1, r2, r3, r4, r5, r6, r7, r8 = r
    return (
        (r0 * a + r1) % m, (r2 - r0 * b) % m, r0,
        (r3 * a + r4) % m, (r5 - r3 * b) % m, r3,
        (r6 * a + r7) % m, (r8 - r6 * b) % m, r6,
    )


def companion_power(a, b, k, m):
    """C**k mod m for k >= 0, left-to-right square-and-multiply."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    a %= m
    b %= m
    r = (1 % m, 0, 0, 0, 1 % m, 0, 0, 0, 1 % m)
    for bit in bin(k)[2:]:
        r = _square(r, m)
        if bit == "1":
            r = _times_companion(r, a, b, m)
    return r


def seq_forward(a, b, k, m):
    """s_k(a, b) mod m for k >= 0, seeded by s_1 = a, s_0 = 3, s_-1 = b."""
    a %= m
    b %= m
    r = companion_power(a, b, k, m)
    return (r[3] * a + r[4] * 3 + r[5] * b) % m
