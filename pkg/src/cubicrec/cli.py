"""cubicrec command line.

    cubicrec keygen --bits N --pub PATH --priv PATH [--seed S]
    cubicrec encrypt --pub PATH --in PATH --out PATH --mode det|prob [--seed S]
    cubicrec decrypt --priv PATH --in PATH
    cubicrec selftest [--full]
    cubicrec probe --priv PATH --k K

Exit codes: 0 ok, 1 I/O or parse failure, 2 keygen exhausted, 3 selftest
failure, 64 usage, 65 message out of range, 66 invalid ciphertext.
"""
import argparse
import sys

from . import files, selftest
from .modmath import make_rng
from .oracle import shift_probe
from .scheme import (
    InvalidCiphertext,
    KeygenExhausted,
    MessageOutOfRange,
    decrypt,
    encrypt_det,
    encrypt_prob,
    keygen,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_KEYGEN = 2
EXIT_SELFTEST = 3
EXIT_USAGE = 64
EXIT_RANGE = 65
EXIT_CIPHERTEXT = 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _seed(text):
    value = int(text)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def _exponent(text):
    if text == "lambda":
        return text
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer or 'lambda'") from None


def _read_text(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write_text(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def bytes_to_int(data):
    return int.from_bytes(data, "big")


def int_to_bytes(m):
    return m.to_bytes((m.bit_length() + 7) // 8, "big")


def cmd_keygen(args):
    if args.bits < 3:
        raise UsageError("--bits must be >= 3")
    pk, sk = keygen(args.bits, make_rng(args.seed))
    _write_text(args.pub, files.dumps_public(pk))
    _write_text(args.priv, files.dumps_private(sk))
    return EXIT_OK


def cmd_encrypt(args):
    pk = files.loads_public(_read_text(args.pub))
    with open(args.infile, "rb") as fh:
        m = bytes_to_int(fh.read())
    if args.mode == "det":
        ct = encrypt_det(pk, m)
    else:
        ct = encrypt_prob(pk, m, make_rng(args.seed))
    _write_text(args.out, files.dumps_ciphertext(ct, pk.n))
    return EXIT_OK


def cmd_decrypt(args):
    ct, n = files.loads_ciphertext(_read_text(args.infile))
    sk = load_private(args.priv)
    if n != sk.n:
        raise files.FormatError("ciphertext was produced for a different modulus")
    m = decrypt(sk, ct)
    sys.stdout.buffer.write(int_to_bytes(m))
    sys.stdout.buffer.flush()
    return EXIT_OK


def load_private(path, check_trapdoor=True):
    return files.loads_private(_read_text(path), check_trapdoor=check_trapdoor)


def cmd_selftest(args):
    lines = selftest.run("full" if args.full else "small")
    for line in lines:
        print(line)
    ok = selftest.passed(lines)
    print("selftest: " + ("PASS" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_SELFTEST


def cmd_probe(args):
    sk = load_private(args.priv, check_trapdoor=False)
    k = sk.lam if args.k == "lambda" else args.k
    print(shift_probe(sk.p, sk.q, sk.a, sk.b, k).line())
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="cubicrec", description="Third-order sequence public-key encryption mod n^2.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("keygen", help="generate a key pair")
    p.add_argument("--bits", type=int, required=True, help="bits per prime (>= 3)")
    p.add_argument("--pub", required=True)
    p.add_argument("--priv", required=True)
    p.add_argument("--seed", type=_seed)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("encrypt", help="encrypt a file's bytes as one block")
    p.add_argument("--pub", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--mode", choices=("det", "prob"), default="prob")
    p.add_argument("--seed", type=_seed)
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt to standard output")
    p.add_argument("--priv", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_decrypt)

    p = sub.add_parser("selftest", help="run the oracle cross-checks")
    p.add_argument("--full", action="store_true")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("probe", help="compare s_k(a+n, b) - s_k(a, b) with n*k")
    p.add_argument("--priv", required=True)
    p.add_argument("--k", type=_exponent, required=True, help="integer exponent or 'lambda'")
    p.set_defaults(func=cmd_probe)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cubicrec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeygenExhausted as exc:
        print(f"cubicrec: keygen failed: {exc}", file=sys.stderr)
        return EXIT_KEYGEN
    except MessageOutOfRange as exc:
        print(f"cubicrec: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except InvalidCiphertext as exc:
        print(f"cubicrec: invalid ciphertext: {exc}", file=sys.stderr)
        return EXIT_CIPHERTEXT
    except (OSError, files.FormatError) as exc:
        print(f"cubicrec: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
