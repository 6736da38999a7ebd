"""The group ``G'' = <a, d, e | a^2 = 1, de = ed>``, i.e. ``Z2 * (Z + Z)``.

Elements are kept in free-product normal form

    (p0, q0) a (p1, q1) a ... a (pk, qk)

where ``(p, q)`` stands for ``d^p e^q`` and every interior block is nonzero.
The head and the last block may be ``(0, 0)``.  The letters of the knot
words translate as ``b = ea``, ``b' = e^-1 a``, ``c = d^-1 e a`` and
``c' = e^-1 d a``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .gauss import LinearGaussDiagram
from .words import Letter, Symbol, letters_phi2

__all__ = [
    "ADEWord",
    "G2Element",
    "IDENTITY",
    "to_ade",
    "normalize",
    "phi2",
    "multiply",
    "inverse",
    "conjugate_equal",
    "ade_inverse",
]

# a letter of an ADE word: ("a", 1), ("d", +-1) or ("e", +-1)
ADEWord = tuple[tuple[str, int], ...]

_SUBST: dict[Symbol, ADEWord] = {
    Symbol.A: (("a", 1),),
    Symbol.B: (("e", 1), ("a", 1)),
    Symbol.BP: (("e", -1), ("a", 1)),
    Symbol.C: (("d", -1), ("e", 1), ("a", 1)),
    Symbol.CP: (("e", -1), ("d", 1), ("a", 1)),
}


def ade_inverse(word: Sequence[tuple[str, int]]) -> ADEWord:
    return tuple((g, 1 if g == "a" else -x) for g, x in reversed(word))


def to_ade(word: Iterable[Letter]) -> ADEWord:
    """Rewrite a knot word over ``a, b, b', c, c'`` in the generators ``a, d, e``."""
    out: list[tuple[str, int]] = []
    for letter in word:
        sub = _SUBST[letter.symbol]
        out.extend(sub if letter.exponent > 0 else ade_inverse(sub))
    return tuple(out)


Block = tuple[int, int]


@dataclass(frozen=True)
class G2Element:
    head: Block = (0, 0)
    tail: tuple[Block, ...] = ()

    def __post_init__(self):
        for v in self.tail[:-1]:
            if v == (0, 0):
                raise ValueError(f"interior block (0, 0) in {self.head}, {self.tail}")

    @property
    def blocks(self) -> tuple[Block, ...]:
        return (self.head,) + self.tail

    def is_identity(self) -> bool:
        return self.head == (0, 0) and not self.tail

    def __mul__(self, other: G2Element) -> G2Element:
        return multiply(self, other)

    def __str__(self):
        if self.is_identity():
            return "1"
        return " | a | ".join(f"d^{p} e^{q}" for p, q in self.blocks)

    def to_json(self) -> dict:
        return {"head": list(self.head), "tail": [list(v) for v in self.tail]}

    @classmethod
    def from_json(cls, data) -> G2Element:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["head"]), tuple(tuple(v) for v in data["tail"]))

    def to_ade(self) -> ADEWord:
        """A word spelling this element, used for round trips."""
        out: list[tuple[str, int]] = []
        for i, (p, q) in enumerate(self.blocks):
            if i:
                out.append(("a", 1))
            out.extend([("d", 1 if p > 0 else -1)] * abs(p))
            out.extend([("e", 1 if q > 0 else -1)] * abs(q))
        return tuple(out)


IDENTITY = G2Element()


def _push_a(blocks: list[list[int]]) -> None:
    # a trailing zero block preceded by an a means "...a a": cancel
    if len(blocks) > 1 and blocks[-1] == [0, 0]:
        blocks.pop()
    else:
        blocks.append([0, 0])


def _freeze(blocks: list[list[int]]) -> G2Element:
    return G2Element(tuple(blocks[0]), tuple(tuple(v) for v in blocks[1:]))


def normalize(word: Iterable[tuple[str, int]]) -> G2Element:
    """Free-product normal form of an ADE word."""
    blocks = [[0, 0]]
    for g, x in word:
        if g == "a":
            _push_a(blocks)
        elif g == "d":
            blocks[-1][0] += x
        elif g == "e":
            blocks[-1][1] += x
        else:
            raise ValueError(f"unknown generator {g!r}")
    return _freeze(blocks)


def phi2(diagram: LinearGaussDiagram) -> G2Element:
    """The ``G''``-valued invariant of a long knot diagram."""
    return normalize(to_ade(letters_phi2(diagram)))


def multiply(x: G2Element, y: G2Element) -> G2Element:
    blocks = [list(v) for v in x.blocks]
    first, *rest = y.blocks
    blocks[-1][0] += first[0]
    blocks[-1][1] += first[1]
    for v in rest:
        _push_a(blocks)
        blocks[-1][0] += v[0]
        blocks[-1][1] += v[1]
    return _freeze(blocks)


def inverse(x: G2Element) -> G2Element:
    rev = [(-p, -q) for p, q in reversed(x.blocks)]
    return G2Element(rev[0], tuple(rev[1:]))


def _cyclic_blocks(x: G2Element) -> tuple[int, tuple[Block, ...]]:
    """Cyclically reduce ``x``.

    Returns ``(k, blocks)``: for ``k == 0`` a single lattice block, else the
    ``k`` blocks ``C1..Ck`` of a conjugate ``a C1 a C2 ... a Ck``.
    """
    blocks = [list(v) for v in x.blocks]
    if len(blocks) == 1:
        return 0, (tuple(blocks[0]),)
    # conjugate the head around to the end
    head = blocks.pop(0)
    blocks[-1][0] += head[0]
    blocks[-1][1] += head[1]
    cyc = [tuple(v) for v in blocks]
    # cancel a.0.a cyclically: a C a 0 a D -> a (C + D)
    while len(cyc) >= 2 and (0, 0) in cyc:
        i = cyc.index((0, 0))
        j = (i + 1) % len(cyc)
        merged = (cyc[i - 1][0] + cyc[j][0], cyc[i - 1][1] + cyc[j][1])
        if len(cyc) == 2:
            # a C a 0 is conjugate to the lattice element C
            return 0, (cyc[i - 1],)
        prev = (i - 1) % len(cyc)
        # walk on from j so the merged block keeps its cyclic place
        order = [t for t in range(j + 1, j + len(cyc)) if t % len(cyc) not in (prev, i, j)]
        keep = [cyc[t % len(cyc)] for t in order]
        cyc = keep + [merged]
    return len(cyc), tuple(cyc)


def _min_rotation(seq: tuple) -> tuple:
    return min(seq[i:] + seq[:i] for i in range(len(seq))) if seq else seq


def conjugate_equal(x: G2Element, y: G2Element) -> bool:
    """True when ``x`` and ``y`` are conjugate in ``Z2 * (Z + Z)``."""
    kx, bx = _cyclic_blocks(x)
    ky, by = _cyclic_blocks(y)
    if kx != ky:
        return False
    if kx == 0:
        return bx == by
    return _min_rotation(bx) == _min_rotation(by)
