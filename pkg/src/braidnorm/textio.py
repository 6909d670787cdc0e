"""Text format for braid words: whitespace-separated nonzero integers."""

from __future__ import annotations

from .braid import BraidError, BraidWord, free_reduce


class ParseError(BraidError):
    def __init__(self, token: str, position: int, reason: str):
        self.token = token
        self.position = position
        super().__init__(f"bad token {token!r} at position {position}: {reason}")


def parse_braid_word(text: str, reduce: bool = True) -> BraidWord:
    """Parse "1 -2 3"; the empty string is the identity.  Positions count from 1."""
    letters = []
    for pos, tok in enumerate(text.split(), start=1):
        try:
            x = int(tok)
        except ValueError:
            raise ParseError(tok, pos, "not an integer") from None
        if x == 0:
            raise ParseError(tok, pos, "0 is not an Artin generator")
        letters.append(x)
    try:
        w = BraidWord(tuple(letters))
    except BraidError as exc:
        raise ParseError(text, 0, str(exc)) from None
    return free_reduce(w) if reduce else w


def format_braid_word(w) -> str:
    return " ".join(str(x) for x in w)
