"""On-disk formats (v1): UTF-8 JSON, integers as decimal strings, keys sorted.

Public key:  {"a","b","n","role":"public","version":"v1"}
Private key: public fields + "l_ab_inv","lambda","p","q", role "private"
Ciphertext:  {"c1","c2","n","version":"v1"}
"""
import json

from .scheme import Ciphertext, InvalidKey, PrivateKey, PublicKey

VERSION = "v1"


class FormatError(ValueError):
    pass


def _dump(obj):
    return json.dumps({k: str(v) for k, v in obj.items()}, sort_keys=True, separators=(",", ":")) + "\n"


def _load(text, required):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not JSON: {exc}") from None
    if not isinstance(data, dict):
        raise FormatError("top level must be an object")
    if data.get("version") != VERSION:
        raise FormatError(f"unsupported version {data.get('version')!r}")
    missing = [k for k in required if k not in data]
    if missing:
        raise FormatError(f"missing fields: {', '.join(missing)}")
    out = {}
    for k in required:
        v = data[k]
        if not isinstance(v, str) or not v.isdigit() or not v.isascii():
            raise FormatError(f"field {k!r} must be a decimal string")
        out[k] = int(v)
    return data, out


def dumps_public(pk):
    return _dump({"a": pk.a, "b": pk.b, "n": pk.n, "role": "public", "version": VERSION})


def dumps_private(sk):
    return _dump({
        "a": sk.a, "b": sk.b, "l_ab_inv": sk.l_ab_inv, "lambda": sk.lam, "n": sk.n,
        "p": sk.p, "q": sk.q, "role": "private", "version": VERSION,
    })


def dumps_ciphertext(ct, n):
    return _dump({"c1": ct.c1, "c2": ct.c2, "n": n, "version": VERSION})


def loads_public(text):
    """Accepts a public or a private key file; returns the PublicKey."""
    data, f = _load(text, ("a", "b", "n"))
    if data.get("role") not in ("public", "private"):
        raise FormatError("role must be 'public' or 'private'")
    pk = PublicKey(f["n"], f["a"], f["b"])
    try:
        pk.validate()
    except InvalidKey as exc:
        raise FormatError(str(exc)) from None
    return pk


def loads_private(text, check_trapdoor=True):
    """Parse and validate a private key.

    With ``check_trapdoor=False`` the l_ab_inv * L(a, b) = 1 check is skipped,
    which is enough for diagnostics that only need p, q, a, b.
    """
    data, f = _load(text, ("a", "b", "l_ab_inv", "lambda", "n", "p", "q"))
    if data.get("role") != "private":
        raise FormatError("role must be 'private'")
    sk = PrivateKey(f["p"], f["q"], f["n"], f["a"], f["b"], f["lambda"], f["l_ab_inv"])
    try:
        sk.validate(check_trapdoor=check_trapdoor)
    except InvalidKey as exc:
        raise FormatError(str(exc)) from None
    return sk


def loads_ciphertext(text):
    """Returns (Ciphertext, n)."""
    _, f = _load(text, ("c1", "c2", "n"))
    n2 = f["n"] * f["n"]
    if not (f["c1"] < n2 and f["c2"] < n2):
        raise FormatError("ciphertext components must be < n^2")
    return Ciphertext(f["c1"], f["c2"]), f["n"]
