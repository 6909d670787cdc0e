"""
Exact word problem in B_inf by Dehornoy handle reduction.

A sigma_i-handle is a subword s_i^e u s_i^{-e} where u has no letter of index
<= i.  Reducing it replaces every s_{i+1}^d in u by s_{i+1}^{-e} s_i^d s_{i+1}^e
and drops the two ends.  Reducing the handle that closes first is always
permitted (it contains no nested s_{i+1}-handle), and any sequence of such
reductions terminates in a word with no handle.  A handle-free word is either
empty or sigma-definite, so it is trivial iff it is empty.

Before reducing we run cheap negative filters: the exponent sum, the
permutation, and the Burau matrix at a fixed point of F_p.  Each is a
homomorphism, so a nonidentity image proves the braid nontrivial.
"""

from __future__ import annotations

from .braid import BraidError, BraidWord, WordLike, as_word, free_reduce

DEFAULT_BUDGET = 5_000_000

_BURAU_P = 2_147_483_647
_BURAU_T = 3
_BURAU_TINV = pow(_BURAU_T, -1, _BURAU_P)


class BudgetExhausted(RuntimeError):
    """Handle reduction ran past its step budget; no verdict was reached."""


def _first_handle(w: list[int]) -> tuple[int, int] | None:
    # stack of (index, position of its latest letter), indices strictly increasing;
    # a letter of index i invalidates every open index above i
    stack: list[tuple[int, int]] = []
    for j, x in enumerate(w):
        i = x if x > 0 else -x
        while stack and stack[-1][0] > i:
            stack.pop()
        if stack and stack[-1][0] == i:
            s = stack[-1][1]
            if w[s] == -x:
                return s, j
            stack[-1] = (i, j)
        else:
            stack.append((i, j))
    return None


def _reduce_once(w: list[int], s: int, e: int) -> list[int]:
    i = abs(w[s])
    sgn = 1 if w[s] > 0 else -1
    up = i + 1
    mid: list[int] = []
    for x in w[s + 1:e]:
        if x == up or x == -up:
            d = 1 if x > 0 else -1
            block = (-sgn * up, d * i, sgn * up)
            for y in block:
                if mid and mid[-1] == -y:
                    mid.pop()
                else:
                    mid.append(y)
        else:
            if mid and mid[-1] == -x:
                mid.pop()
            else:
                mid.append(x)
    # glue with the untouched left and right parts, cancelling across the seams
    left = w[:s]
    right = w[e + 1:]
    while left and mid and left[-1] == -mid[0]:
        left.pop()
        mid.pop(0)
    out = left + mid
    k = 0
    while out and k < len(right) and out[-1] == -right[k]:
        out.pop()
        k += 1
    out.extend(right[k:])
    return out


def handle_reduce(w: WordLike, budget: int = DEFAULT_BUDGET) -> BraidWord:
    """Fully handle-reduce w; the result is empty or sigma-definite."""
    cur = list(free_reduce(w).letters)
    steps = 0
    while True:
        h = _first_handle(cur)
        if h is None:
            return BraidWord(tuple(cur))
        steps += 1
        if steps > budget:
            raise BudgetExhausted(f"handle reduction exceeded {budget} steps")
        cur = _reduce_once(cur, *h)


def burau_is_identity(w: WordLike, n: int | None = None) -> bool:
    """Unreduced Burau image at t = 3 over F_p is the identity."""
    w = as_word(w)
    n = n or w.width
    p, t, ti = _BURAU_P, _BURAU_T, _BURAU_TINV
    one_minus_t = (1 - t) % p
    one_minus_ti = (1 - ti) % p
    # columns of the matrix; right multiplication only touches two columns
    cols = [[1 if r == c else 0 for r in range(n)] for c in range(n)]
    for x in w.letters:
        a = abs(x) - 1
        ca, cb = cols[a], cols[a + 1]
        if x > 0:
            cols[a] = [(u * one_minus_t + v) % p for u, v in zip(ca, cb)]
            cols[a + 1] = [(u * t) % p for u in ca]
        else:
            cols[a] = [(v * ti) % p for v in cb]
            cols[a + 1] = [(u + v * one_minus_ti) % p for u, v in zip(ca, cb)]
    return all(cols[c][r] == (1 if r == c else 0) for c in range(n) for r in range(n))


def _permutation_is_identity(w: BraidWord) -> bool:
    images = list(range(w.width))
    for x in w.letters:
        a = abs(x)
        images[a - 1], images[a] = images[a], images[a - 1]
    return all(i == j for i, j in enumerate(images))


def is_trivial(w: WordLike, budget: int = DEFAULT_BUDGET) -> bool:
    w = free_reduce(w)
    if not w:
        return True
    if sum(1 if x > 0 else -1 for x in w.letters) != 0:
        return False
    if not _permutation_is_identity(w):
        return False
    if not burau_is_identity(w):
        return False
    return not handle_reduce(w, budget)


def equals(u: WordLike, v: WordLike, budget: int = DEFAULT_BUDGET) -> bool:
    return is_trivial(as_word(u) * as_word(v).inverse(), budget)


def sigma_sign(w: WordLike, budget: int = DEFAULT_BUDGET) -> int:
    """Sign of w in the Dehornoy order: +1 sigma-positive, -1 negative, 0 trivial."""
    r = handle_reduce(w, budget)
    if not r:
        return 0
    i = min(abs(x) for x in r.letters)
    signs = {x > 0 for x in r.letters if abs(x) == i}
    if len(signs) != 1:
        raise BraidError("handle reduction returned a non sigma-definite word")
    return 1 if signs.pop() else -1
