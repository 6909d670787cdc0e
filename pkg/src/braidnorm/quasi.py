"""
Experiments with the signature as a quasimorphism.

Randomness comes from numpy's PCG64 bit generator seeded with the user's
integer seed (``numpy.random.Generator(numpy.random.PCG64(seed))``); letters are
drawn with ``Generator.integers`` so runs are bit-reproducible for a fixed numpy
major version.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from .braid import BraidError, BraidWord, WordLike, as_word, conjugate, free_reduce
from .signature import link_signature


class DefectViolation(AssertionError):
    """The measured defect exceeded the proven bound."""

    def __init__(self, report: "DefectReport"):
        self.report = report
        super().__init__(
            f"{len(report.violations)} defect violation(s) for n={report.n}: max {report.max_defect} > {report.bound}"
        )


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _draw(rng: np.random.Generator, length: int, strands: int) -> BraidWord:
    # values 0..2(s-1)-1 map to +1..+(s-1), -1..-(s-1)
    k = strands - 1
    raw = rng.integers(0, 2 * k, size=length)
    letters = [int(v) + 1 if v < k else -(int(v) - k + 1) for v in raw]
    return free_reduce(letters)


def random_braid(length: int, strands: int, seed: int) -> BraidWord:
    if length < 0 or strands < 2:
        raise BraidError(f"invalid sizes: length={length}, strands={strands}")
    return _draw(_rng(seed), length, strands)


def defect(alpha: WordLike, beta: WordLike) -> int:
    a, b = as_word(alpha), as_word(beta)
    return abs(link_signature(a * b) - link_signature(a) - link_signature(b))


@dataclass(frozen=True)
class DefectSample:
    index: int
    defect: int
    sigma_alpha: int
    sigma_beta: int
    sigma_product: int


@dataclass
class DefectReport:
    n: int
    m: int
    samples: int
    length: int
    seed: int
    max_defect: int = 0
    violations: list[DefectSample] = field(default_factory=list)
    records: list[DefectSample] = field(default_factory=list)

    @property
    def bound(self) -> int:
        return self.n

    @property
    def ok(self) -> bool:
        return not self.violations


def defect_experiment(n: int, m: int, samples: int, len: int, seed: int, strict: bool = True) -> DefectReport:
    """Sample alpha in B_m and beta = b^gamma with b in B_n; record |sigma defect|.

    With ``strict`` (the default) any defect above n raises DefectViolation
    after the whole run, carrying the full report.
    """
    if not 2 <= n < m:
        raise BraidError(f"need 2 <= n < m, got n={n}, m={m}")
    if samples < 0 or len < 0:
        raise BraidError("samples and len must be non-negative")
    rng = _rng(seed)
    report = DefectReport(n, m, samples, len, seed)
    for i in range(samples):
        b = _draw(rng, len, n)
        gamma = _draw(rng, len, m)
        alpha = _draw(rng, len, m)
        beta = conjugate(b, gamma)
        sa, sb, sab = link_signature(alpha), link_signature(beta), link_signature(alpha * beta)
        rec = DefectSample(i, abs(sab - sa - sb), sa, sb, sab)
        report.records.append(rec)
        report.max_defect = max(report.max_defect, rec.defect)
        if rec.defect > n:
            report.violations.append(rec)
    if strict and report.violations:
        raise DefectViolation(report)
    return report


# ---------------------------------------------------------------------------
# growth of sigma along powers

@dataclass(frozen=True)
class GrowthReport:
    h: BraidWord
    values: tuple[tuple[int, int], ...]
    rate_tail: Fraction
    rate_slope: Fraction
    k_max: int

    @property
    def rate_estimate(self) -> Fraction:
        return self.rate_tail

    @property
    def accepted(self) -> bool:
        """Both estimators agree within one unit, and the rate is nonzero."""
        return self.rate_tail != 0 and abs(self.rate_tail - self.rate_slope) <= 1


def _slope(points: list[tuple[int, int]]) -> Fraction:
    if len(points) < 2:
        k, s = points[-1]
        return Fraction(s, k)
    N = len(points)
    sx = sum(k for k, _ in points)
    sy = sum(s for _, s in points)
    sxx = sum(k * k for k, _ in points)
    sxy = sum(k * s for k, s in points)
    return Fraction(N * sxy - sx * sy, N * sxx - sx * sx)


def stable_growth(h: WordLike, k_max: int) -> GrowthReport:
    """Exact sigma(h^k) for k = 1..k_max with two rate estimates.

    rate_tail is sigma(h^K)/K; rate_slope is the least-squares slope over the
    last half of the sequence (at least two points when k_max >= 2).
    """
    if k_max < 1:
        raise BraidError("k_max must be at least 1")
    h = as_word(h)
    values = []
    power = BraidWord()
    for k in range(1, k_max + 1):
        power = power * h
        values.append((k, link_signature(power)))
    tail = Fraction(values[-1][1], k_max)
    half = values[(k_max - 1) // 2 :] if k_max >= 2 else values
    if k_max >= 2 and len(half) < 2:
        half = values[-2:]
    return GrowthReport(h, tuple(values), tail, _slope(half), k_max)


# ---------------------------------------------------------------------------
# witness search

def _is_cyclically_reduced(w: tuple[int, ...]) -> bool:
    return len(w) < 2 or w[0] != -w[-1]


def _orbit_key(w: tuple[int, ...]) -> tuple[int, ...]:
    """Smallest representative under rotation, mirror, inverse, index flip, shift down.

    Each of these preserves |sigma(h^k)| for every k.
    """
    lo = min(abs(x) for x in w)
    hi = max(abs(x) for x in w)
    base = tuple((abs(x) - lo + 1) * (1 if x > 0 else -1) for x in w)
    top = hi - lo + 2
    flipped = tuple((top - abs(x)) * (1 if x > 0 else -1) for x in base)
    best = None
    for v in (base, flipped):
        for u in (v, tuple(-x for x in v)):
            for t in (u, tuple(-x for x in reversed(u))):
                for r in range(len(t)):
                    c = t[r:] + t[:r]
                    if best is None or c < best:
                        best = c
    return best


def enumerate_candidates(max_len: int, strands: int):
    """Canonical cyclically reduced zero-exponent-sum words up to max_len, shortest first."""
    if strands < 2:
        raise BraidError("need at least 2 strands")
    alphabet = [i for j in range(1, strands) for i in (j, -j)]
    for L in range(2, max_len + 1, 2):
        seen: set[tuple[int, ...]] = set()
        for w in _reduced_words(alphabet, L):
            if sum(1 if x > 0 else -1 for x in w) != 0 or not _is_cyclically_reduced(w):
                continue
            key = _orbit_key(w)
            if key not in seen:
                seen.add(key)
        yield from sorted(seen, key=lambda t: (tuple(abs(x) for x in t), t))


def _reduced_words(alphabet: list[int], L: int):
    def rec(prefix: list[int], bal: int):
        rem = L - len(prefix)
        if abs(bal) > rem:
            return
        if rem == 0:
            yield tuple(prefix)
            return
        last = prefix[-1] if prefix else 0
        for x in alphabet:
            if x == -last:
                continue
            prefix.append(x)
            yield from rec(prefix, bal + (1 if x > 0 else -1))
            prefix.pop()

    yield from rec([], 0)


@dataclass(frozen=True)
class SearchResult:
    h: BraidWord
    rate: Fraction
    report: GrowthReport | None
    candidates: int
    ranking: tuple[tuple[BraidWord, Fraction], ...] = ()


def witness_search(max_len: int, strands: int, k_max: int, keep: int = 10) -> SearchResult:
    """Best zero-exponent-sum h (up to max_len letters) by |sigma(h^k_max)| / k_max.

    Ties go to the shorter word, then to the canonical ordering.  The full
    growth report is computed for the winner only; ``ranking`` keeps the
    ``keep`` best candidates for inspection.
    """
    if max_len < 0 or k_max < 1:
        raise BraidError("invalid search bounds")
    scored = []
    count = 0
    for c in enumerate_candidates(max_len, strands):
        count += 1
        w = BraidWord(c)
        s = link_signature(w ** k_max)
        scored.append((-abs(s), len(c), count, w, Fraction(s, k_max)))
    if not scored or min(scored)[0] == 0:
        return SearchResult(BraidWord(), Fraction(0), None, count)
    scored.sort(key=lambda t: t[:3])
    _, _, _, best, _ = scored[0]
    report = stable_growth(best, k_max)
    ranking = tuple((w, r) for *_, w, r in scored[:keep])
    return SearchResult(best, report.rate_estimate, report, count, ranking)


# ---------------------------------------------------------------------------
# CSV output

def _write_csv(path: str | Path, header: list[str], rows) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with tmp.open("w", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow(header)
        wr.writerows(rows)
    tmp.replace(path)


def fraction_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def write_growth_csv(report: GrowthReport, path: str | Path) -> None:
    _write_csv(path, ["k", "sigma", "ratio"], ((k, s, fraction_text(Fraction(s, k))) for k, s in report.values))


def write_defects_csv(report: DefectReport, path: str | Path) -> None:
    _write_csv(
        path,
        ["sample", "defect", "sigma_alpha", "sigma_beta", "sigma_product"],
        ((r.index, r.defect, r.sigma_alpha, r.sigma_beta, r.sigma_product) for r in report.records),
    )


def write_search_csv(result: SearchResult, path: str | Path) -> None:
    rows = []
    if result.report is not None:
        rows.append((str(result.h), fraction_text(result.report.rate_tail), fraction_text(result.report.rate_slope)))
    _write_csv(path, ["h", "rate_tail", "rate_slope"], rows)


__all__ = [
    "DefectReport",
    "DefectSample",
    "DefectViolation",
    "GrowthReport",
    "SearchResult",
    "defect",
    "defect_experiment",
    "enumerate_candidates",
    "random_braid",
    "stable_growth",
    "witness_search",
    "write_defects_csv",
    "write_growth_csv",
    "write_search_csv",
]
