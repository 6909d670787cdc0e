"""
Combinatorics of the closure of a braid and its Seifert matrix.

Seifert's algorithm on a closed braid diagram on n strands gives one disk per
strand and one half-twisted band per letter; band t joins disks |w_t| and
|w_t| + 1.  For every gap i the loops through consecutive bands on that gap
form a basis of H_1 of the surface, so a connected block with c letters on s
strands has rank c - s + 1.  Split blocks are handled independently and
direct-summed; strands that no letter touches contribute nothing.

Entries of V, with V[a][b] the linking number of loop a with the positive
push-off of loop b, normalised so that the positive trefoil has signature -2:

  * a loop through bands of signs (e1, e2): -1 if both are positive, +1 if
    both are negative, 0 otherwise;
  * consecutive loops a, b on one gap sharing a band: V[a][b] = 1 when the
    shared band is positive, V[b][a] = -1 when it is negative;
  * a on gap i and b on gap i+1 with interleaved bands: V[a][b] = -1 when a
    starts first, +1 when b starts first;
  * everything else is 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braid import BraidError, BraidWord, WordLike, as_word, underlying_permutation

# (V[a][b], V[b][a]) for loops a = (.., t), b = (t, ..) sharing band t of sign +1 / -1
_SHARED = {1: (1, 0), -1: (0, -1)}
# (V[a][b], V[b][a]) for a on gap i, b on gap i+1, with a starting first / b starting first
_INTERLEAVED = {"lower_first": (-1, 0), "upper_first": (1, 0)}


def _check_strands(w: BraidWord, n: int | None) -> int:
    if n is None:
        return w.width
    if n < w.width:
        raise BraidError(f"strand count too small: word needs {w.width}, got {n}")
    return n


def closure_components(w: WordLike, n: int | None = None) -> int:
    w = as_word(w)
    n = _check_strands(w, n)
    return len(underlying_permutation(w, n).cycles())


def split_blocks(w: WordLike, n: int | None = None) -> list[tuple[int, ...]]:
    """Maximal runs of consecutive strands joined by letters of w."""
    w = as_word(w)
    n = _check_strands(w, n)
    used = {abs(x) for x in w.letters}
    blocks: list[tuple[int, ...]] = []
    cur = [1]
    for s in range(2, n + 1):
        if s - 1 in used:
            cur.append(s)
        else:
            blocks.append(tuple(cur))
            cur = [s]
    blocks.append(tuple(cur))
    return blocks


@dataclass(frozen=True)
class Loop:
    """H_1 generator through bands ``first`` and ``second`` on gap ``gap``."""

    gap: int
    first: int
    second: int


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...]
    basis: tuple[Loop, ...] = field(default=())

    @property
    def size(self) -> int:
        return len(self.entries)

    def symmetrized(self) -> list[list[int]]:
        V = self.entries
        r = len(V)
        return [[V[i][j] + V[j][i] for j in range(r)] for i in range(r)]

    def antisymmetrized(self) -> list[list[int]]:
        V = self.entries
        r = len(V)
        return [[V[i][j] - V[j][i] for j in range(r)] for i in range(r)]

    def to_text(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)


def homology_basis(w: BraidWord) -> list[Loop]:
    positions: dict[int, list[int]] = {}
    for t, x in enumerate(w.letters):
        positions.setdefault(abs(x), []).append(t)
    basis = []
    for gap in sorted(positions):
        P = positions[gap]
        basis.extend(Loop(gap, a, b) for a, b in zip(P, P[1:]))
    return basis


def seifert_matrix(w: WordLike, n: int | None = None) -> SeifertMatrix:
    w = as_word(w)
    _check_strands(w, n)
    # ordering loops by gap then position keeps split blocks contiguous, so the
    # result is already the direct sum over blocks
    basis = homology_basis(w)
    sign = [1 if x > 0 else -1 for x in w.letters]
    r = len(basis)
    V = [[0] * r for _ in range(r)]
    for a, la in enumerate(basis):
        e1, e2 = sign[la.first], sign[la.second]
        if e1 == e2:
            V[a][a] = -e1
        for b in range(a + 1, r):
            lb = basis[b]
            if lb.gap == la.gap:
                if lb.first == la.second:
                    V[a][b], V[b][a] = _SHARED[sign[lb.first]]
            elif lb.gap == la.gap + 1:
                if la.first < lb.first < la.second < lb.second:
                    V[a][b], V[b][a] = _INTERLEAVED["lower_first"]
                elif lb.first < la.first < lb.second < la.second:
                    V[a][b], V[b][a] = _INTERLEAVED["upper_first"]
            elif lb.gap > la.gap + 1:
                break
    return SeifertMatrix(tuple(tuple(row) for row in V), tuple(basis))
