"""Compare the GMP and pure-Python kernels on decrypt-sized exponentiations.

    python benchmarks/bench_kernel.py [--repeat N]

Each row evaluates s_k(a, b) mod n^2 with k about the size of the trapdoor
exponent lcm(p^2+p+1, q^2+q+1), i.e. one L-map evaluation.
"""
import argparse
import random
import timeit

from cubicrec import _pykernel

try:
    from cubicrec import _ckernel
except ImportError:
    _ckernel = None


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = random.Random(1)
    backends = [("python", _pykernel)]
    if _ckernel is not None:
        backends.append(("gmp", _ckernel))
    else:
        print("compiled kernel not available; timing the fallback only")

    print(f"{'prime bits':>10} {'backend':>8} {'ms/call':>10} {'speedup':>8}")
    for bits in (16, 32, 128, 512, 1024):
        n = (rng.getrandbits(bits) | 1) * (rng.getrandbits(bits) | 1)
        m = n * n
        a, b = rng.randrange(m), rng.randrange(m)
        k = rng.getrandbits(4 * bits)
        number = max(1, 2000 // bits)
        base = None
        results = {}
        for name, mod in backends:
            results[name] = mod.seq_forward(a, b, k, m)
            t = min(timeit.repeat(lambda: mod.seq_forward(a, b, k, m), number=number, repeat=args.repeat))
            per = 1000 * t / number
            base = base or per
            print(f"{bits:>10} {name:>8} {per:>10.3f} {base / per:>7.1f}x")
        assert len(set(results.values())) == 1, "backends disagree"


if __name__ == "__main__":
    main()
