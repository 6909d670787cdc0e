"""
Machine-checkable certificates for upper bounds on conjugation-invariant norms.

Every certificate states that some product equals a target braid; validation
is an exact word-problem check.  Certificates round-trip through plain JSON
dictionaries with braid words written in the whitespace-separated text format.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .braid import BraidWord, as_word, commutator, free_reduce
from .wordproblem import equals


class CertificateError(ValueError):
    """A certificate failed validation or could not be parsed."""


def _w(text: str) -> BraidWord:
    from .textio import parse_braid_word

    return parse_braid_word(text, reduce=False)


def _product(words) -> BraidWord:
    letters: list[int] = []
    for w in words:
        letters.extend(as_word(w).letters)
    return free_reduce(letters)


def conjugate_raw(w: BraidWord, g: BraidWord) -> BraidWord:
    return free_reduce(g * w * g.inverse())


SIGMA1 = BraidWord((1,))


@dataclass(frozen=True)
class ConjugatedLetterCertificate:
    """target = prod_i (sigma_1^{e_i})^{a_i}; witnesses ||target|| <= len(factors)."""

    target: BraidWord
    factors: tuple[tuple[int, BraidWord], ...]

    def __len__(self):
        return len(self.factors)

    def pieces(self) -> list[BraidWord]:
        return [conjugate_raw(SIGMA1 if e > 0 else SIGMA1.inverse(), a) for e, a in self.factors]

    def product(self) -> BraidWord:
        return _product(self.pieces())

    def is_valid(self) -> bool:
        if any(e not in (1, -1) for e, _ in self.factors):
            return False
        return equals(self.product(), self.target)

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": "conjugated_letter",
            "target": str(self.target),
            "factors": [{"sign": e, "conjugator": str(a)} for e, a in self.factors],
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> ConjugatedLetterCertificate:
        return cls(_w(d["target"]), tuple((int(f["sign"]), _w(f["conjugator"])) for f in d["factors"]))


@dataclass(frozen=True)
class NuWitness:
    """element = prod_i k_i^{g_i} with every k_i in B_n; witnesses nu_n(element) <= len."""

    element: BraidWord
    factors: tuple[tuple[BraidWord, BraidWord], ...]
    n: int

    def __len__(self):
        return len(self.factors)

    def product(self) -> BraidWord:
        return _product(conjugate_raw(k, g) for k, g in self.factors)

    def is_valid(self) -> bool:
        if self.n < 2:
            return False
        if any(k.width > self.n for k, _ in self.factors):
            return False
        return equals(self.product(), self.element)

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": "nu",
            "n": self.n,
            "target": str(self.element),
            "factors": [{"element": str(k), "conjugator": str(g)} for k, g in self.factors],
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> NuWitness:
        return cls(
            _w(d["target"]),
            tuple((_w(f["element"]), _w(f["conjugator"])) for f in d["factors"]),
            int(d["n"]),
        )


def _num(x) -> int | str:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class NormBounds:
    n: int
    p: float
    q: float


@dataclass(frozen=True)
class CommutatorCertificate:
    """target = prod_i [f_i, g_i].

    When ``bounds`` is set every f_i carries a nu_n witness of length <= p and
    every g_i one of length <= q, so the certificate bounds cl_{nu_n,p,q}.
    """

    target: BraidWord
    factors: tuple[tuple[BraidWord, BraidWord], ...]
    bounds: NormBounds | None = None
    witnesses: tuple[tuple[NuWitness, NuWitness], ...] | None = field(default=None)

    def __len__(self):
        return len(self.factors)

    def product(self) -> BraidWord:
        return _product(commutator(f, g) for f, g in self.factors)

    def witness_problems(self) -> list[str]:
        if self.bounds is None:
            return []
        b = self.bounds
        if self.witnesses is None or len(self.witnesses) != len(self.factors):
            return ["constrained certificate without a witness per factor"]
        problems = []
        for i, ((f, g), (wf, wg)) in enumerate(zip(self.factors, self.witnesses)):
            for name, x, wit, cap in (("f", f, wf, b.p), ("g", g, wg, b.q)):
                if wit.n != b.n:
                    problems.append(f"factor {i}: {name}-witness is for nu_{wit.n}, not nu_{b.n}")
                elif len(wit) > cap:
                    problems.append(f"factor {i}: {name}-witness has length {len(wit)} > {cap}")
                elif wit.element != free_reduce(x) or not wit.is_valid():
                    problems.append(f"factor {i}: {name}-witness does not certify {name}")
        return problems

    def is_valid(self) -> bool:
        if self.witness_problems():
            return False
        return equals(self.product(), self.target)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "type": "commutator",
            "target": str(self.target),
            "bounds": None if self.bounds is None else {"n": self.bounds.n, "p": _num(self.bounds.p), "q": _num(self.bounds.q)},
        }
        factors = []
        for i, (f, g) in enumerate(self.factors):
            item: dict[str, Any] = {"f": str(f), "g": str(g)}
            if self.witnesses is not None:
                wf, wg = self.witnesses[i]
                item["f_witness"] = [{"element": str(k), "conjugator": str(c)} for k, c in wf.factors]
                item["g_witness"] = [{"element": str(k), "conjugator": str(c)} for k, c in wg.factors]
            factors.append(item)
        out["factors"] = factors
        return out

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> CommutatorCertificate:
        b = d.get("bounds")
        bounds = None if b is None else NormBounds(int(b["n"]), Fraction(str(b["p"])), Fraction(str(b["q"])))
        factors = tuple((_w(f["f"]), _w(f["g"])) for f in d["factors"])
        witnesses = None
        if bounds is not None:
            ws = []
            for (f, g), item in zip(factors, d["factors"]):
                pair = []
                for x, key in ((f, "f_witness"), (g, "g_witness")):
                    parts = tuple((_w(p["element"]), _w(p["conjugator"])) for p in item.get(key, []))
                    pair.append(NuWitness(free_reduce(x), parts, bounds.n))
                ws.append(tuple(pair))
            witnesses = tuple(ws)
        return cls(_w(d["target"]), factors, bounds, witnesses)


@dataclass(frozen=True)
class DisplacementCertificate:
    """target = prod_i (delta^{e_i})^{c_i} for a fixed displacement braid delta."""

    target: BraidWord
    delta: BraidWord
    factors: tuple[tuple[int, BraidWord], ...]
    n: int = 0
    m: int = 0

    def __len__(self):
        return len(self.factors)

    def product(self) -> BraidWord:
        return _product(conjugate_raw(self.delta if e > 0 else self.delta.inverse(), c) for e, c in self.factors)

    def is_valid(self) -> bool:
        if any(e not in (1, -1) for e, _ in self.factors):
            return False
        return equals(self.product(), self.target)

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": "displacement",
            "target": str(self.target),
            "base": str(self.delta),
            "n": self.n,
            "m": self.m,
            "factors": [{"sign": e, "conjugator": str(c)} for e, c in self.factors],
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> DisplacementCertificate:
        return cls(
            _w(d["target"]),
            _w(d["base"]),
            tuple((int(f["sign"]), _w(f["conjugator"])) for f in d["factors"]),
            int(d.get("n", 0)),
            int(d.get("m", 0)),
        )


Certificate = ConjugatedLetterCertificate | NuWitness | CommutatorCertificate | DisplacementCertificate

_TYPES = {
    "conjugated_letter": ConjugatedLetterCertificate,
    "nu": NuWitness,
    "commutator": CommutatorCertificate,
    "displacement": DisplacementCertificate,
}


def certificate_from_dict(d: dict[str, Any]):
    try:
        cls = _TYPES[d["type"]]
        return cls.from_dict(d)
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"malformed certificate: {exc}") from exc


def dumps(cert) -> str:
    return json.dumps(cert.to_dict(), indent=2)


def loads(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"not JSON: {exc}") from exc
    return certificate_from_dict(data)


def require_valid(cert):
    if not cert.is_valid():
        raise CertificateError(f"{type(cert).__name__} failed validation")
    return cert
