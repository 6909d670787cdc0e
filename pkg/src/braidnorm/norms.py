"""
Upper and lower bounds for the biinvariant word norm, nu_n and cl_{nu_n,p,q}.

Notation: ||.|| counts conjugates of sigma_1^{+-1}, nu_n counts conjugates of
elements of B_n, and cl_{nu_n,p,q} counts commutators [f, g] with
nu_n(f) <= p and nu_n(g) <= q.  Exact values are out of reach; every upper
bound here is a certificate that is validated by the word-problem solver
before it is returned, and every lower bound comes from the signature
(a nu_n-quasimorphism) or the abelianization.

Lower-bound constants.  The signature satisfies

    |sigma(a b) - sigma(a) - sigma(b)| <= n    whenever nu_n(b) = 1,

and sigma(x^{-1}) = -sigma(x), sigma(x^g) = sigma(x).

* biinvariant_lower: a product of k conjugates of sigma_1^{+-1} (each of
  signature 0 and nu_2 = 1) has |sigma| <= 2(k - 1), so
  ||w|| >= ceil(|sigma(w)| / 2).  Together with ||w|| >= |e(w)|.

* cl_lower: if w = prod_{i<=c} [f_i, g_i] with nu_n(f_i) <= p, write
  [f, g] = f (f^{-1})^g and expand f into at most P = floor(p) conjugates of
  B_n-elements h_j; (f^{-1})^g is the product of the conjugates of h_j^{-1}
  in reverse order.  So w is a product of N <= 2cP pieces, each with nu_n = 1,
  whose signatures cancel in pairs.  Adding the pieces one at a time,
  |sigma(w)| <= (N - 1) n < 2cPn.  Running the same argument on
  [f, g] = g^f g^{-1} gives the bound with Q = floor(q).  Hence
  cl_{nu_n,p,q}(w) >= ceil(|sigma(w)| / K) with K = 2 n min(P, Q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .braid import (
    BraidError,
    BraidWord,
    WordLike,
    as_word,
    commutator,
    conjugate,
    exponent_sum,
    free_reduce,
    shift,
    sigma,
    translator,
    underlying_permutation,
)
from .certificates import (
    SIGMA1,
    CertificateError,
    CommutatorCertificate,
    ConjugatedLetterCertificate,
    DisplacementCertificate,
    NormBounds,
    NuWitness,
    conjugate_raw,
    require_valid,
)
from .signature import link_signature
from .wordproblem import equals, is_trivial


class NotInCommutatorSubgroup(BraidError):
    pass


class HypothesisViolated(BraidError):
    pass


# ---------------------------------------------------------------------------
# conjugators carrying sigma_1 to sigma_j

def letter_conjugator(j: int) -> BraidWord:
    """a_j with a_j sigma_1 a_j^{-1} = sigma_j.

    a_j = b_{j-1} ... b_1 with b_l = s_l s_{l+1} s_l^{-1}; each b_l is itself a
    conjugate of sigma_1, which keeps the later commutator expansion short.
    """
    letters: list[int] = []
    for l in range(j - 1, 0, -1):
        letters += [l, l + 1, -l]
    return BraidWord(tuple(letters))


def letter_conjugator_expansion(j: int) -> list[tuple[int, BraidWord]]:
    """Factors (1, c_l) with prod (sigma_1)^{c_l} = letter_conjugator(j)."""
    # b_l = (sigma_{l+1})^{s_l} = (sigma_1)^{s_l d_{l+1}}, d = translator for one letter
    return [(1, BraidWord((l,)) * translator(2, l)) for l in range(j - 1, 0, -1)]


# ---------------------------------------------------------------------------
# nu_n and the biinvariant word norm

def nu_upper(w: WordLike, n: int) -> NuWitness:
    """Greedy block cover: maximal runs of letters spanning at most n strands.

    Each run is translated down into B_n by a block translator, so a word whose
    support fits in n strands gets a single factor.
    """
    if n < 2:
        raise BraidError("nu_n needs n >= 2")
    w = free_reduce(w)
    runs: list[list[int]] = []
    lo = hi = 0
    for x in w.letters:
        a = abs(x)
        if runs and max(hi, a) - min(lo, a) + 2 <= n:
            runs[-1].append(x)
            lo, hi = min(lo, a), max(hi, a)
        else:
            runs.append([x])
            lo = hi = a
    factors = []
    for run in runs:
        r_lo = min(abs(x) for x in run)
        r_hi = max(abs(x) for x in run)
        k = shift(run, -(r_lo - 1))
        g = translator(r_hi - r_lo + 2, r_lo - 1)
        factors.append((k, g))
    return require_valid(NuWitness(w, tuple(factors), n))


def nu_lower(w: WordLike) -> int:
    return 0 if is_trivial(w) else 1


def biinvariant_upper(w: WordLike) -> ConjugatedLetterCertificate:
    w = free_reduce(w)
    factors = tuple((1 if x > 0 else -1, letter_conjugator(abs(x))) for x in w.letters)
    return require_valid(ConjugatedLetterCertificate(w, factors))


def biinvariant_lower(w: WordLike) -> int:
    w = as_word(w)
    return max(abs(exponent_sum(w)), math.ceil(abs(link_signature(w)) / 2))


# ---------------------------------------------------------------------------
# displacement braids and the four-conjugate identity

@dataclass(frozen=True)
class DisplacementBraid:
    """delta = T T'^{-1}: conjugation by delta moves B_n onto strands m+1..m+n.

    T is the positive block-transposition braid carrying strands 1..n past the
    next m strands; T' is T translated beyond strand m+n, so delta has exponent
    sum 0 and lies in the commutator subgroup.
    """

    word: BraidWord
    n: int
    m: int


def build_displacement_braid(n: int, m: int) -> DisplacementBraid:
    if n < 1 or m < n:
        raise BraidError(f"invalid displacement sizes n={n}, m={m}")
    T = translator(n, m)
    T2 = shift(T, m + n)
    delta = DisplacementBraid(free_reduce(T * T2.inverse()), n, m)
    _check_displacement(delta)
    return delta


def _check_displacement(d: DisplacementBraid) -> None:
    if exponent_sum(d.word) != 0:
        raise BraidError("displacement braid must have exponent sum 0")
    perm = underlying_permutation(d.word, max(d.word.width, d.m + d.n))
    if any(perm(i) != d.m + i for i in range(1, d.n + 1)):
        raise BraidError("displacement braid has the wrong permutation")
    for i in range(1, d.n):
        if not equals(conjugate(sigma(i), d.word), sigma(i + d.m)):
            raise BraidError(f"conjugation by the displacement braid does not move sigma_{i}")


def lemma_conj_factorization(x: WordLike, y: WordLike, z: WordLike) -> list[BraidWord]:
    """[x, y] = z^{xy} (z^{-1})^x z (z^{-1})^y, valid when x commutes with y^z."""
    x, y, z = as_word(x), as_word(y), as_word(z)
    if not is_trivial(commutator(x, conjugate(y, z))):
        raise HypothesisViolated("hypothesis violated: x does not commute with y^z")
    zi = z.inverse()
    pieces = [conjugate(z, x * y), conjugate(zi, x), free_reduce(z), conjugate(zi, y)]
    prod = free_reduce([c for p in pieces for c in p.letters])
    if not equals(prod, commutator(x, y)):
        raise CertificateError("four-conjugate product differs from [x, y]")
    return pieces


# ---------------------------------------------------------------------------
# commutator certificates

def extrC_decompose(cert: ConjugatedLetterCertificate) -> tuple[CommutatorCertificate, int]:
    """(s^{a_1}) ... (s^{a_k}) = prod_i [s^{E_{i-1}} a_i s^{-E_{i-1}}, s^{e_i}] * s^{E_k}.

    Here s = sigma_1 and E_i = e_1 + ... + e_i.  Uses s^a = [a, s] s and the fact
    that powers of s commute with s.  Returns the k commutators and the
    residual exponent E_k; the certificate's target is cert.target * s^{-E_k}.
    """
    if not cert.is_valid():
        raise CertificateError("input certificate is invalid")
    factors = []
    E = 0
    for e, a in cert.factors:
        c = SIGMA1 ** E
        factors.append((conjugate_raw(a, c), SIGMA1 ** e))
        E += e
    target = free_reduce(cert.target * SIGMA1 ** (-E))
    return require_valid(CommutatorCertificate(target, tuple(factors))), E


Expansion = ConjugatedLetterCertificate


def _letter_witness(e: int, c: BraidWord, n: int) -> tuple[BraidWord, NuWitness]:
    elem = conjugate_raw(SIGMA1 ** e, c)
    return elem, NuWitness(elem, ((SIGMA1 ** e, c),), n)


def welldef_rewrite(
    cert: CommutatorCertificate,
    expansions: list[tuple[Expansion, Expansion]],
    n: int = 2,
    p: float = 1,
    q: float = 1,
) -> CommutatorCertificate:
    """Rewrite every [f, g] into commutators of single conjugated letters.

    With f = a_1 ... a_P and g = b_1 ... b_Q (each a conjugate of sigma_1^{+-1})
    the identities [ar, b] = [r, b]^a [a, b] (applied first) and
    [a, bs] = [a, b] [a, s]^b give

        [f, g] = prod_{r = P..1} prod_{s = 1..Q} [a_r, b_s]^{a_1..a_{r-1} b_1..b_{s-1}},

    P * Q factors whose entries have nu_n = 1.
    """
    if n < 2 or p < 1 or q < 1:
        raise BraidError("welldef_rewrite needs n >= 2 and p, q >= 1")
    if len(expansions) != len(cert.factors):
        raise CertificateError("need one expansion pair per factor")
    if not cert.is_valid():
        raise CertificateError("input certificate is invalid")
    factors = []
    witnesses = []
    for (f, g), (ef, eg) in zip(cert.factors, expansions):
        if not (equals(ef.target, f) and equals(eg.target, g) and ef.is_valid() and eg.is_valid()):
            raise CertificateError("expansion does not match its commutator entry")
        a_words = ef.pieces()
        b_words = eg.pieces()
        for r in range(len(ef.factors) - 1, -1, -1):
            A = free_reduce([x for wd in a_words[:r] for x in wd.letters])
            for s in range(len(eg.factors)):
                B = free_reduce([x for wd in b_words[:s] for x in wd.letters])
                X = A * B
                ea, ca = ef.factors[r]
                eb, cb = eg.factors[s]
                fa, wa = _letter_witness(ea, free_reduce(X * ca), n)
                gb, wb = _letter_witness(eb, free_reduce(X * cb), n)
                factors.append((fa, gb))
                witnesses.append((wa, wb))
    out = CommutatorCertificate(cert.target, tuple(factors), NormBounds(n, p, q), tuple(witnesses))
    return require_valid(out)


def cl_upper(w: WordLike, n: int = 2, p: float = 1, q: float = 1) -> CommutatorCertificate:
    """biinvariant_upper -> extrC_decompose -> welldef_rewrite.

    The letter sigma_j^e contributes j - 1 commutators (the length of the
    expansion of its conjugator); letters sigma_1^{+-1} contribute none.
    """
    w = free_reduce(w)
    if exponent_sum(w) != 0:
        raise NotInCommutatorSubgroup("not in commutator subgroup: exponent sum is nonzero")
    if n < 2:
        raise BraidError("nu_n needs n >= 2")
    letters = biinvariant_upper(w)
    comm, residual = extrC_decompose(letters)
    assert residual == 0
    expansions = []
    E = 0
    for x, (e, _) in zip(w.letters, letters.factors):
        c = SIGMA1 ** E
        f, g = comm.factors[len(expansions)]
        ef = ConjugatedLetterCertificate(f, tuple((s, c * cc) for s, cc in letter_conjugator_expansion(abs(x))))
        eg = ConjugatedLetterCertificate(g, ((e, BraidWord()),))
        expansions.append((ef, eg))
        E += e
    return welldef_rewrite(comm, expansions, n, p, q)


@dataclass(frozen=True)
class ClLowerBound:
    """ceil(|sigma| / K); K is reported so the bound can be audited."""

    bound: int
    K: int
    sigma: int


def cl_lower(w: WordLike, n: int = 2, p: float = 1, q: float = 1) -> ClLowerBound:
    w = as_word(w)
    if exponent_sum(w) != 0:
        raise NotInCommutatorSubgroup("not in commutator subgroup: exponent sum is nonzero")
    if n < 2 or p < 1 or q < 1:
        raise BraidError("cl_lower needs n >= 2 and p, q >= 1")
    K = 2 * n * min(math.floor(p), math.floor(q))
    s = link_signature(w)
    return ClLowerBound(-(-abs(s) // K), K, s)


def extrB_transform(cert: CommutatorCertificate) -> DisplacementCertificate:
    """Turn each [f, g] with nu_n(f), nu_n(g) <= 1 into 4 conjugates of delta^{+-1}.

    With g = c l c^{-1} (l in B_n) and x = c^{-1} f c, [f, g] = ([x, l])^c.  A
    displacement braid delta moving B_n past the support of x makes x commute
    with l^delta, and the four-conjugate identity applies with z = delta.  One
    delta (m large enough for every factor) serves the whole certificate.
    """
    if cert.bounds is None or cert.witnesses is None:
        raise CertificateError("missing witnesses: extrB_transform needs a constrained certificate")
    if not cert.is_valid():
        raise CertificateError("input certificate is invalid")
    n = cert.bounds.n
    prepared = []
    m = n
    for (f, g), (wf, wg) in zip(cert.factors, cert.witnesses):
        if len(wf) > 1 or len(wg) > 1:
            raise CertificateError("missing witnesses: every entry needs nu_n <= 1")
        if len(wg) == 1:
            l, c = wg.factors[0]
        else:
            l, c = BraidWord(), BraidWord()
        x = conjugate(f, c.inverse())
        m = max(m, x.width)
        prepared.append((x, l, c))
    delta = build_displacement_braid(n, m)
    z = delta.word
    factors = []
    for x, l, c in prepared:
        lemma_conj_factorization(x, l, z)
        factors += [
            (1, free_reduce(c * x * l)),
            (-1, free_reduce(c * x)),
            (1, c),
            (-1, free_reduce(c * l)),
        ]
    out = DisplacementCertificate(cert.target, z, tuple(factors), n, m)
    return require_valid(out)
