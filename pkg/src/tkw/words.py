"""Letter assignment on chord endpoints.

Two schemes produce a word with one letter per endpoint, read along the
orientation:

* :func:`letters_phi2` takes the exponent from the position of the endpoint
  (negative at odd positions) and feeds the group ``G''``;
* :func:`letters_phibar` takes the exponent from the crossing sign and feeds
  the group ``Gbar``.

Words are returned unreduced.
"""

from __future__ import annotations

import re
from enum import Enum
from typing import NamedTuple, Sequence

from .gauss import ChordType, LinearGaussDiagram, Parity

__all__ = [
    "Symbol",
    "Letter",
    "Word",
    "letters_phi2",
    "letters_phibar",
    "render_word",
    "parse_word",
]


class Symbol(str, Enum):
    A = "a"
    B = "b"
    BP = "b'"
    C = "c"
    CP = "c'"


class Letter(NamedTuple):
    symbol: Symbol
    exponent: int = 1

    def inverse(self) -> Letter:
        return Letter(self.symbol, -self.exponent)

    def __str__(self):
        return self.symbol.value if self.exponent == 1 else f"{self.symbol.value}^-1"


Word = tuple[Letter, ...]

# (role, chord type) -> symbol, for odd chords
_ODD_SYMBOL = {
    ("O", ChordType.FIRST): Symbol.B,
    ("O", ChordType.SECOND): Symbol.BP,
    ("U", ChordType.FIRST): Symbol.C,
    ("U", ChordType.SECOND): Symbol.CP,
}


def letters_phi2(diagram: LinearGaussDiagram) -> Word:
    """Position-based letters.

    Even chords give ``a`` (always exponent +1, as ``a`` is an involution in
    ``G''``).  Odd chords give ``b``/``b'`` at over endpoints and ``c``/``c'``
    at under endpoints, primed for second-type chords, with exponent -1 at
    odd positions.
    """
    cls = diagram.classification
    word = []
    for k, (cid, role) in enumerate(diagram.endpoints, start=1):
        c = cls[cid - 1]
        if c.parity is Parity.EVEN:
            word.append(Letter(Symbol.A, 1))
        else:
            word.append(Letter(_ODD_SYMBOL[role, c.type], -1 if k % 2 else 1))
    return tuple(word)


def letters_phibar(diagram: LinearGaussDiagram) -> Word:
    """Sign-based letters: over endpoints get ``sign``, under ones ``-sign``."""
    cls = diagram.classification
    word = []
    for cid, role in diagram.endpoints:
        c = cls[cid - 1]
        sign = diagram.signs[cid - 1]
        exp = sign if role == "O" else -sign
        if c.parity is Parity.EVEN:
            word.append(Letter(Symbol.A, exp))
        else:
            word.append(Letter(_ODD_SYMBOL[role, c.type], exp))
    return tuple(word)


def render_word(word: Sequence[Letter]) -> str:
    """ASCII rendering, e.g. ``a b' c^-1 c'^-1``; the empty word renders as ``1``."""
    if not word:
        return "1"
    return " ".join(str(letter) for letter in word)


_LETTER = re.compile(r"(a|b'|b|c'|c)(?:\^(-?1))?")


def parse_word(text: str) -> Word:
    """Inverse of :func:`render_word`.  Accepts ``1`` or ``""`` for the empty word."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for tok in text.split():
        match = _LETTER.fullmatch(tok)
        if match is None:
            raise ValueError(f"bad letter {tok!r}")
        out.append(Letter(Symbol(match.group(1)), int(match.group(2) or 1)))
    return tuple(out)
