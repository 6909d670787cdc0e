"""Command-line driver.  Exit codes: 0 success, 1 bad input, 2 failed verification."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import norms, quasi
from .braid import BraidError
from .certificates import CertificateError, certificate_from_dict
from .closure import seifert_matrix
from .signature import link_signature_value
from .textio import parse_braid_word
from .wordproblem import BudgetExhausted

OK, DOMAIN_ERROR, VERIFY_FAILED = 0, 1, 2


class VerificationFailed(Exception):
    pass


def _frac(x: Fraction) -> str:
    return quasi.fraction_text(Fraction(x))


def _write_atomic(path: str, text: str) -> None:
    p = Path(path)
    tmp = p.with_name(p.name + ".tmp")
    tmp.write_text(text)
    tmp.replace(p)


def _bundle(*certs) -> dict[str, Any]:
    return {"type": "bundle", "certificates": [c.to_dict() for c in certs]}


def _verify_dict(d: Any) -> list[str]:
    """Problems found in a certificate (or bundle) dictionary; empty means valid."""
    if not isinstance(d, dict):
        return ["certificate must be a JSON object"]
    if d.get("type") == "bundle":
        items = d.get("certificates")
        if not isinstance(items, list):
            return ["bundle without a certificate list"]
        return [f"[{i}] {p}" for i, item in enumerate(items) for p in _verify_dict(item)]
    try:
        cert = certificate_from_dict(d)
    except (CertificateError, BraidError) as exc:
        return [str(exc)]
    problems = list(getattr(cert, "witness_problems", lambda: [])())
    if not problems and not cert.is_valid():
        problems.append(f"{d.get('type')} certificate: product does not equal target")
    return problems


# ---------------------------------------------------------------------------
# subcommands

def cmd_signature(a: argparse.Namespace) -> int:
    w = parse_braid_word(a.word)
    val = link_signature_value(w, a.strands)
    print(val.sigma)
    if a.emit_matrix:
        V = seifert_matrix(w, a.strands)
        print(f"# Seifert matrix ({V.size}x{V.size}), nullity of V+V^T = {val.nullity}")
        if V.size:
            print(V.to_text())
    return OK


def cmd_norm(a: argparse.Namespace) -> int:
    w = parse_braid_word(a.word)
    word_cert = norms.biinvariant_upper(w)
    nu_cert = norms.nu_upper(w, a.n)
    print(f"word_norm_lower {norms.biinvariant_lower(w)}")
    print(f"word_norm_upper {len(word_cert)}")
    print(f"nu_lower {norms.nu_lower(w)}")
    print(f"nu_upper {len(nu_cert)}")
    print(f"n {a.n}")
    if a.cert:
        _write_atomic(a.cert, json.dumps(_bundle(word_cert, nu_cert), indent=2))
    return OK


def cmd_cl(a: argparse.Namespace) -> int:
    w = parse_braid_word(a.word)
    low = norms.cl_lower(w, a.n, a.p, a.q)
    cert = norms.cl_upper(w, a.n, a.p, a.q)
    print(f"cl_lower {low.bound}")
    print(f"K {low.K}")
    print(f"sigma {low.sigma}")
    print(f"cl_upper {len(cert)}")
    if a.cert:
        _write_atomic(a.cert, json.dumps(cert.to_dict(), indent=2))
    return OK


def cmd_verify(a: argparse.Namespace) -> int:
    try:
        text = Path(a.certificate).read_text()
    except OSError as exc:
        raise BraidError(f"cannot read certificate: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise VerificationFailed(f"not a certificate file: {exc}") from exc
    problems = _verify_dict(data)
    if problems:
        raise VerificationFailed("; ".join(problems))
    print("valid")
    return OK


def cmd_defects(a: argparse.Namespace) -> int:
    rep = quasi.defect_experiment(a.n, a.m, a.samples, a.len, a.seed, strict=False)
    if a.csv:
        quasi.write_defects_csv(rep, a.csv)
    print(f"n {rep.n}")
    print(f"samples {rep.samples}")
    print(f"max_defect {rep.max_defect}")
    print(f"bound {rep.bound}")
    print(f"violations {len(rep.violations)}")
    if rep.violations:
        raise VerificationFailed(f"defect bound violated in {len(rep.violations)} sample(s)")
    return OK


def cmd_growth(a: argparse.Namespace) -> int:
    rep = quasi.stable_growth(parse_braid_word(a.word), a.kmax)
    if a.csv:
        quasi.write_growth_csv(rep, a.csv)
    for k, s in rep.values:
        print(f"{k} {s} {_frac(Fraction(s, k))}")
    print(f"rate_tail {_frac(rep.rate_tail)}")
    print(f"rate_slope {_frac(rep.rate_slope)}")
    return OK


def cmd_search(a: argparse.Namespace) -> int:
    res = quasi.witness_search(a.len, a.strands, a.kmax)
    if a.csv:
        quasi.write_search_csv(res, a.csv)
    print(f"candidates {res.candidates}")
    print(f"h {res.h}")
    print(f"rate {_frac(res.rate)}")
    if res.report is not None:
        print(f"rate_slope {_frac(res.report.rate_slope)}")
        print(f"accepted {str(res.report.accepted).lower()}")
    return OK


# ---------------------------------------------------------------------------

def _positive(kind):
    def conv(text: str):
        v = kind(text)
        if v < 1:
            raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
        return v

    return conv


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="braidnorm", description="Braid signatures and conjugation-invariant norm bounds.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("signature", help="signature of the closure of a braid word")
    s.add_argument("word")
    s.add_argument("--strands", type=int, default=None)
    s.add_argument("--emit-matrix", action="store_true")
    s.set_defaults(func=cmd_signature)

    s = sub.add_parser("norm", help="bounds for the word norm and nu_n")
    s.add_argument("word")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--cert")
    s.set_defaults(func=cmd_norm)

    s = sub.add_parser("cl", help="bounds for cl_{nu_n,p,q}")
    s.add_argument("word")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--p", type=Fraction, default=Fraction(1))
    s.add_argument("--q", type=Fraction, default=Fraction(1))
    s.add_argument("--cert")
    s.set_defaults(func=cmd_cl)

    s = sub.add_parser("verify", help="re-validate a certificate file")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("defects", help="sample the signature defect")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--m", type=int, default=5)
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--len", type=int, default=8)
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--csv")
    s.set_defaults(func=cmd_defects)

    s = sub.add_parser("growth", help="sigma(h^k) for k = 1..kmax")
    s.add_argument("word")
    s.add_argument("--kmax", type=_positive(int), default=12)
    s.add_argument("--csv")
    s.set_defaults(func=cmd_growth)

    s = sub.add_parser("search", help="search short words for linear signature growth")
    s.add_argument("--len", type=int, default=6)
    s.add_argument("--strands", type=int, default=4)
    s.add_argument("--kmax", type=_positive(int), default=8)
    s.add_argument("--csv")
    s.set_defaults(func=cmd_search)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else DOMAIN_ERROR
    try:
        return a.func(a)
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return VERIFY_FAILED
    except (quasi.DefectViolation, CertificateError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return VERIFY_FAILED
    except (BraidError, BudgetExhausted, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
