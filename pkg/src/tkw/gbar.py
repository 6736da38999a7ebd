"""Words in ``Gbar = <a, b, c | a^2b = ba^2, a^2c = ca^2, b^2a = ab^2,
c^2a = ac^2, abc = cba, cab = bac>`` and the invariant ``phibar``.

Equality in ``Gbar`` is only semi-decided.  :func:`compare` answers with a
:class:`GBarVerdict`: ``distinct`` when the abelian images differ (a proof of
inequality), ``equal`` when a bidirectional breadth-first search over
relator rewrites joins the two words (the path is kept as a certificate),
and ``unknown`` when the search budget runs out.

Letters are encoded as integers: ``1, 2, 3`` for ``a, b, c`` and negatives
for inverses.
"""

from __future__ import annotations

import os
import re
from difflib import SequenceMatcher
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .gauss import LinearGaussDiagram
from .words import Letter, Symbol, letters_phibar

__all__ = [
    "GBarWord",
    "AbelianImage",
    "GBarVerdict",
    "RELATORS",
    "DEFAULT_BUDGET",
    "LENGTH_SLACK",
    "free_reduce",
    "ingest",
    "abelianize",
    "compare",
    "phibar",
    "rewrite_neighbors",
    "replay",
    "default_budget",
]

A, B, C = 1, 2, 3
_NAMES = {A: "a", B: "b", C: "c"}
_CODES = {v: k for k, v in _NAMES.items()}

DEFAULT_BUDGET = 200_000
LENGTH_SLACK = 8


def default_budget() -> int:
    """Default search budget; the ``TKW_BUDGET`` environment variable overrides it."""
    value = os.environ.get("TKW_BUDGET")
    return int(value) if value else DEFAULT_BUDGET


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _inv(word: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(word))


@dataclass(frozen=True)
class GBarWord:
    """A freely reduced word over ``a, b, c``."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if free_reduce(self.letters) != self.letters:
            raise ValueError(f"word is not freely reduced: {self.letters}")
        if any(abs(x) not in _NAMES for x in self.letters):
            raise ValueError(f"unknown letter in {self.letters}")

    @classmethod
    def of(cls, letters: Iterable[int]) -> GBarWord:
        return cls(free_reduce(letters))

    @classmethod
    def parse(cls, text: str) -> GBarWord:
        """Parse ``"a b a^-1"``; ``"1"`` or ``""`` is the empty word."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        out = []
        for tok in text.split():
            match = re.fullmatch(r"([abc])(?:\^(-?\d+))?", tok)
            if match is None:
                raise ValueError(f"bad letter {tok!r}")
            code, power = _CODES[match.group(1)], int(match.group(2) or 1)
            out.extend([code if power > 0 else -code] * abs(power))
        return cls.of(out)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: GBarWord) -> GBarWord:
        return GBarWord.of(self.letters + other.letters)

    def inverse(self) -> GBarWord:
        return GBarWord(_inv(self.letters))

    def to_letters(self) -> tuple[Letter, ...]:
        return tuple(
            Letter(Symbol(_NAMES[abs(x)]), 1 if x > 0 else -1) for x in self.letters
        )

    def __str__(self):
        return _render(self.letters)


def _render(letters: Sequence[int]) -> str:
    if not letters:
        return "1"
    return " ".join(_NAMES[x] if x > 0 else f"{_NAMES[-x]}^-1" for x in letters)


class AbelianImage(NamedTuple):
    a: int
    b: int
    c: int


@dataclass(frozen=True)
class GBarVerdict:
    verdict: str  # "equal" | "distinct" | "unknown"
    witness: tuple[AbelianImage, AbelianImage] | None = None
    budget_spent: int = 0
    path: tuple[tuple[int, ...], ...] = field(default=(), repr=False)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness": None if self.witness is None else [list(w) for w in self.witness],
            "budget_spent": self.budget_spent,
        }

    @property
    def exit_code(self) -> int:
        return {"equal": 0, "distinct": 1, "unknown": 2}[self.verdict]


_INGEST = {
    Symbol.A: (A,),
    Symbol.B: (B,),
    Symbol.C: (C,),
    Symbol.BP: (A, B, -A),
    Symbol.CP: (A, C, -A),
}


def ingest(word: Iterable[Letter]) -> GBarWord:
    """Eliminate ``b' = a b a^-1`` and ``c' = a c a^-1``, then freely reduce."""
    out: list[int] = []
    for letter in word:
        sub = _INGEST[letter.symbol]
        out.extend(sub if letter.exponent > 0 else _inv(sub))
    return GBarWord.of(out)


def abelianize(word: GBarWord | Iterable[int]) -> AbelianImage:
    letters = word.letters if isinstance(word, GBarWord) else tuple(word)
    sums = [0, 0, 0]
    for x in letters:
        sums[abs(x) - 1] += 1 if x > 0 else -1
    return AbelianImage(*sums)


def phibar(diagram: LinearGaussDiagram) -> GBarWord:
    """The ``Gbar``-valued invariant, as a freely reduced word."""
    return ingest(letters_phibar(diagram))


def _relator(text: str) -> tuple[int, ...]:
    return GBarWord.parse(text).letters


RELATORS: tuple[tuple[int, ...], ...] = (
    _relator("a a b a^-1 a^-1 b^-1"),  # a^2 b = b a^2
    _relator("a a c a^-1 a^-1 c^-1"),  # a^2 c = c a^2
    _relator("b b a b^-1 b^-1 a^-1"),  # b^2 a = a b^2
    _relator("c c a c^-1 c^-1 a^-1"),  # c^2 a = a c^2
    _relator("a b c a^-1 b^-1 c^-1"),  # abc = cba
    _relator("c a b c^-1 a^-1 b^-1"),  # cab = bac
)


def _rewrite_rules(relators, min_piece: int) -> dict[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    # every cyclic conjugate r = u v of a relator or its inverse gives u -> v^-1
    rules: dict[tuple[int, ...], set[tuple[int, ...]]] = {}
    for rel in relators:
        for r in (rel, _inv(rel)):
            for i in range(len(r)):
                rot = r[i:] + r[:i]
                for k in range(min_piece, len(rot) + 1):
                    rules.setdefault(rot[:k], set()).add(_inv(rot[k:]))
    return {u: tuple(sorted(vs)) for u, vs in rules.items()}


_RULES = _rewrite_rules(RELATORS, 1)
_MAX_PIECE = max(len(u) for u in _RULES)


def _raw_neighbors(word: Sequence[int]):
    n = len(word)
    for i in range(n):
        for k in range(1, min(_MAX_PIECE, n - i) + 1):
            reps = _RULES.get(tuple(word[i:i + k]))
            if reps is None:
                continue
            for rep in reps:
                yield tuple(word[:i]) + rep + tuple(word[i + k:])


def rewrite_neighbors(word: Sequence[int], max_len: int | None = None):
    """Words one relator rewrite (plus free reduction) away from ``word``."""
    for raw in _raw_neighbors(word):
        new = free_reduce(raw)
        if max_len is None or len(new) <= max_len:
            yield new


def _one_step(u: Sequence[int], v: Sequence[int]) -> bool:
    target = free_reduce(v)
    return any(free_reduce(n) == target for n in _raw_neighbors(u))


def replay(path: Sequence[Sequence[int]], start: GBarWord, end: GBarWord) -> bool:
    """Check a certificate: ``path`` leads from ``start`` to ``end``.

    Path words need not be freely reduced; consecutive words must be one
    relator rewrite apart (in either direction) up to free reduction.
    """
    if not path:
        return False
    if free_reduce(path[0]) != start.letters or free_reduce(path[-1]) != end.letters:
        return False
    return all(
        free_reduce(u) == free_reduce(v) or _one_step(u, v) or _one_step(v, u)
        for u, v in zip(path, path[1:])
    )


class _Budget:
    def __init__(self, total: int):
        self.total = total
        self.spent = 0

    @property
    def left(self) -> int:
        return self.total - self.spent


def _bfs(x: tuple[int, ...], y: tuple[int, ...], budget: _Budget, cap: int):
    """Bidirectional BFS; returns a path or ``None`` once ``cap`` nodes are used."""
    if x == y:
        return [x]
    max_len = max(len(x), len(y)) + LENGTH_SLACK
    parents: list[dict] = [{x: None}, {y: None}]
    frontiers = [[x], [y]]
    used = 0
    while frontiers[0] or frontiers[1]:
        if not frontiers[0]:
            side = 1
        elif not frontiers[1]:
            side = 0
        else:
            side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, theirs = parents[side], parents[1 - side]
        nxt = []
        for word in frontiers[side]:
            for new in rewrite_neighbors(word, max_len):
                if new in mine:
                    continue
                mine[new] = word
                used += 1
                budget.spent += 1
                if new in theirs:
                    return _join(parents, new)
                if used >= cap or budget.left <= 0:
                    return None
                nxt.append(new)
        frontiers[side] = nxt
    return None


def _join(parents, meet) -> list[tuple[int, ...]]:
    def trace(par, w):
        out = []
        while w is not None:
            out.append(w)
            w = par[w]
        return out

    return trace(parents[0], meet)[::-1] + trace(parents[1], meet)[1:]


def _strip(x, y):
    p = 0
    while p < min(len(x), len(y)) and x[p] == y[p]:
        p += 1
    s = 0
    while s < min(len(x), len(y)) - p and x[-1 - s] == y[-1 - s]:
        s += 1
    return x[:p], x[p:len(x) - s], y[p:len(y) - s], x[len(x) - s:]


def _split_points(x, y) -> list[tuple[int, int]]:
    """Cut points ``(i, j)`` with ``x[:i]`` and ``y[:j]`` of equal abelian image.

    Candidates are the middles of common blocks, plus cuts that leave one
    side of a part empty; balanced cuts come first.
    """
    matcher = SequenceMatcher(None, x, y, autojunk=False)
    cands = [
        (blk.a + blk.size // 2, blk.b + blk.size // 2)
        for blk in matcher.get_matching_blocks()
        if blk.size
    ]
    ab_x = [abelianize(x[:i]) for i in range(len(x) + 1)]
    ab_y = [abelianize(y[:j]) for j in range(len(y) + 1)]
    for i in range(1, len(x)):
        cands += [(i, 0), (i, len(y))]
    for j in range(1, len(y)):
        cands += [(0, j), (len(x), j)]
    seen = set()
    out = []
    for i, j in cands:
        if (i, j) in seen or (i, j) in ((0, 0), (len(x), len(y))):
            continue
        seen.add((i, j))
        if ab_x[i] == ab_y[j]:
            out.append((i, j))
    total = len(x) + len(y)
    out.sort(key=lambda ij: abs(2 * (ij[0] + ij[1]) - total))
    return out


# nodes tried on a whole core before splitting it
_DIRECT_CAP = 5_000


def _search(x, y, budget: _Budget):
    """Path from ``x`` to ``y`` (both freely reduced), or ``None``."""
    if x == y:
        return [x]
    if budget.left <= 0:
        return None
    pre, cx, cy, suf = _strip(x, y)
    if pre or suf:
        core = _search(cx, cy, budget)
        return None if core is None else [pre + w + suf for w in core]
    path = _bfs(x, y, budget, min(_DIRECT_CAP, budget.left))
    if path is not None:
        return path
    # x = x1 x2 and y = y1 y2 with x1 = y1 and x2 = y2 proves x = y
    for i, j in _split_points(x, y):
        left = _search(free_reduce(x[:i]), free_reduce(y[:j]), budget)
        if left is None:
            continue
        right = _search(free_reduce(x[i:]), free_reduce(y[j:]), budget)
        if right is None:
            continue
        return [w + x[i:] for w in left] + [y[:j] + w for w in right]
    if budget.left <= 0:
        return None
    return _bfs(x, y, budget, budget.left)


def compare(w1: GBarWord, w2: GBarWord, budget: int | None = None) -> GBarVerdict:
    """Three-valued equality test in ``Gbar``.

    ``budget`` bounds the number of words visited by the search (default
    :data:`DEFAULT_BUDGET`, or ``TKW_BUDGET`` from the environment).  Words
    longer than the longer input plus :data:`LENGTH_SLACK` are not visited.
    """
    if budget is None:
        budget = default_budget()
    x, y = w1.letters, w2.letters
    ab1, ab2 = abelianize(x), abelianize(y)
    if ab1 != ab2:
        return GBarVerdict("distinct", (ab1, ab2), 0)
    counter = _Budget(budget)
    path = _search(x, y, counter)
    if path is None:
        return GBarVerdict("unknown", None, counter.spent)
    return GBarVerdict("equal", None, counter.spent, tuple(path))
