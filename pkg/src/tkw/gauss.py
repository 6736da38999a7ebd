"""Linear Gauss diagrams: data model, text format and chord combinatorics.

A diagram is the sequence of chord endpoints met along the long knot, left
to right.  Each endpoint is ``(chord_id, role)`` with role ``"O"`` (over) or
``"U"`` (under); every chord also carries a crossing sign.

The text format is a whitespace separated list of tokens ``O<id><sign>`` and
``U<id><sign>``, e.g. ``O1+ U2- U1+ O2-``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple

__all__ = [
    "GaussCodeError",
    "MalformedToken",
    "ChordRoleViolation",
    "SignMismatch",
    "UnknownChordId",
    "IndexOutOfRange",
    "Chord",
    "Parity",
    "ChordType",
    "ChordClassification",
    "PositionParity",
    "LinearGaussDiagram",
    "parse_gauss_code",
    "serialize",
    "linked",
    "classify_chord",
    "position_parity",
    "reverse_diagram",
    "rotate_basepoint",
    "read_corpus",
]


class GaussCodeError(ValueError):
    """Base class for invalid Gauss codes and invalid queries on diagrams."""


class MalformedToken(GaussCodeError):
    pass


class ChordRoleViolation(GaussCodeError):
    pass


class SignMismatch(GaussCodeError):
    pass


class UnknownChordId(GaussCodeError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class IndexOutOfRange(GaussCodeError, IndexError):
    pass


class Chord(NamedTuple):
    id: int
    over_pos: int
    under_pos: int
    sign: int

    @property
    def ends(self) -> tuple[int, int]:
        return (min(self.over_pos, self.under_pos), max(self.over_pos, self.under_pos))


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


class ChordType(Enum):
    FIRST = "first"
    SECOND = "second"


class ChordClassification(NamedTuple):
    parity: Parity
    type: ChordType | None

    def __str__(self):
        if self.type is None:
            return self.parity.value
        return f"{self.parity.value}/{self.type.value}"


class PositionParity(Enum):
    ODD = "odd"
    EVEN = "even"


_TOKEN = re.compile(r"([OU])(\d+)([+-])")


@dataclass(frozen=True)
class LinearGaussDiagram:
    """Immutable linear Gauss diagram with chord ids ``1..m``.

    ``endpoints`` holds ``(chord_id, role)`` pairs in order along the knot and
    ``signs[i - 1]`` is the sign of chord ``i``.  Use :meth:`from_endpoints`
    to build a diagram from arbitrary chord labels; it validates and
    renumbers chords in order of first appearance.
    """

    endpoints: tuple[tuple[int, str], ...] = ()
    signs: tuple[int, ...] = ()

    def __post_init__(self):
        m = len(self.signs)
        if len(self.endpoints) != 2 * m:
            raise ChordRoleViolation(
                f"{len(self.endpoints)} endpoints for {m} chords"
            )
        seen = set()
        next_id = 1
        for cid, role in self.endpoints:
            if role not in ("O", "U"):
                raise MalformedToken(f"bad role {role!r}")
            if (cid, role) in seen:
                raise ChordRoleViolation(f"chord {cid} has two {role} endpoints")
            if (cid, "O") not in seen and (cid, "U") not in seen:
                if cid != next_id:
                    raise ChordRoleViolation(
                        f"chord ids must be 1..m in first-appearance order, got {cid}"
                    )
                next_id += 1
            seen.add((cid, role))
        if len(seen) != 2 * m or next_id != m + 1:
            raise ChordRoleViolation("every chord needs one O and one U endpoint")
        if any(s not in (1, -1) for s in self.signs):
            raise GaussCodeError(f"signs must be +1 or -1: {self.signs}")

    @classmethod
    def from_endpoints(cls, endpoints: Iterable[tuple[object, str]], signs) -> LinearGaussDiagram:
        """Build a diagram from arbitrary chord labels.

        ``signs`` maps each label to its sign.  Labels are renumbered 1..m in
        order of first appearance.
        """
        endpoints = list(endpoints)
        relabel: dict[object, int] = {}
        roles: dict[object, list[str]] = {}
        for label, role in endpoints:
            if label not in relabel:
                relabel[label] = len(relabel) + 1
            roles.setdefault(label, []).append(role)
        for label, rs in roles.items():
            if sorted(rs) != ["O", "U"]:
                raise ChordRoleViolation(
                    f"chord {label} needs exactly one O and one U endpoint, got {rs}"
                )
        new_signs = [0] * len(relabel)
        for label, cid in relabel.items():
            new_signs[cid - 1] = signs[label]
        return cls(
            tuple((relabel[label], role) for label, role in endpoints),
            tuple(new_signs),
        )

    @property
    def m(self) -> int:
        return len(self.signs)

    def __len__(self):
        return len(self.endpoints)

    @cached_property
    def chords(self) -> tuple[Chord, ...]:
        over = [0] * self.m
        under = [0] * self.m
        for k, (cid, role) in enumerate(self.endpoints, start=1):
            if role == "O":
                over[cid - 1] = k
            else:
                under[cid - 1] = k
        return tuple(
            Chord(i + 1, over[i], under[i], self.signs[i]) for i in range(self.m)
        )

    def chord(self, cid: int) -> Chord:
        if not 1 <= cid <= self.m:
            raise UnknownChordId(f"no chord {cid} in a diagram with {self.m} chords")
        return self.chords[cid - 1]

    @cached_property
    def link_sets(self) -> tuple[frozenset[int], ...]:
        """``link_sets[i - 1]`` is the set of chords linked with chord ``i``."""
        out: list[set[int]] = [set() for _ in range(self.m)]
        chords = self.chords
        for x in chords:
            lo, hi = x.ends
            for y in chords[x.id:]:
                if (lo < y.over_pos < hi) != (lo < y.under_pos < hi):
                    out[x.id - 1].add(y.id)
                    out[y.id - 1].add(x.id)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def classification(self) -> tuple[ChordClassification, ...]:
        # parity needs linking counts only; type needs the parities
        odd = [len(s) % 2 == 1 for s in self.link_sets]
        out = []
        for i, others in enumerate(self.link_sets):
            if not odd[i]:
                out.append(ChordClassification(Parity.EVEN, None))
                continue
            n_even = sum(1 for j in others if not odd[j - 1])
            kind = ChordType.FIRST if n_even % 2 == 0 else ChordType.SECOND
            out.append(ChordClassification(Parity.ODD, kind))
        return tuple(out)

    def __str__(self):
        return serialize(self)


def parse_gauss_code(text: str) -> LinearGaussDiagram:
    """Parse a Gauss code such as ``"O1+ U2- U1+ O2-"``.

    Raises :class:`MalformedToken`, :class:`ChordRoleViolation` or
    :class:`SignMismatch`.
    """
    endpoints = []
    signs: dict[int, int] = {}
    for tok in text.split():
        match = _TOKEN.fullmatch(tok)
        if match is None:
            raise MalformedToken(f"malformed token {tok!r}")
        role, cid, sign = match.group(1), int(match.group(2)), match.group(3)
        s = 1 if sign == "+" else -1
        if cid in signs and signs[cid] != s:
            raise SignMismatch(f"chord {cid} has tokens with different signs")
        signs[cid] = s
        endpoints.append((cid, role))
    return LinearGaussDiagram.from_endpoints(endpoints, signs)


def serialize(diagram: LinearGaussDiagram) -> str:
    return " ".join(
        f"{role}{cid}{'+' if diagram.signs[cid - 1] > 0 else '-'}"
        for cid, role in diagram.endpoints
    )


def linked(diagram: LinearGaussDiagram, x: int, y: int) -> bool:
    """True when the endpoints of chords ``x`` and ``y`` alternate."""
    cx, cy = diagram.chord(x), diagram.chord(y)
    if x == y:
        raise GaussCodeError("a chord is not compared with itself")
    lo, hi = cx.ends
    return (lo < cy.over_pos < hi) != (lo < cy.under_pos < hi)


def classify_chord(diagram: LinearGaussDiagram, cid: int) -> ChordClassification:
    diagram.chord(cid)
    return diagram.classification[cid - 1]


def position_parity(diagram: LinearGaussDiagram, index: int) -> PositionParity:
    """Parity of the 1-based endpoint index (the endpoint counts itself)."""
    if not 1 <= index <= len(diagram):
        raise IndexOutOfRange(f"endpoint index {index} outside 1..{len(diagram)}")
    return PositionParity.ODD if index % 2 else PositionParity.EVEN


def reverse_diagram(diagram: LinearGaussDiagram) -> LinearGaussDiagram:
    """Reverse the orientation: endpoint order flips, roles and signs stay."""
    return LinearGaussDiagram.from_endpoints(
        reversed(diagram.endpoints), dict(enumerate(diagram.signs, start=1))
    )


def rotate_basepoint(diagram: LinearGaussDiagram, k: int) -> LinearGaussDiagram:
    """Move the base point: rotate the endpoint sequence left by ``k``.

    ``k`` ranges over ``0..2m``; both ends give back the diagram itself.
    """
    n = len(diagram)
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"rotation {k} outside 0..{n}")
    if n == 0:
        return diagram
    eps = diagram.endpoints[k:] + diagram.endpoints[:k]
    return LinearGaussDiagram.from_endpoints(eps, dict(enumerate(diagram.signs, start=1)))


def read_corpus(text: str) -> list[tuple[str, LinearGaussDiagram]]:
    """Parse a corpus file: one Gauss code per line, ``#`` lines are comments.

    Returns ``(label, diagram)`` pairs.  A line may carry a label as
    ``label: code``; unlabelled lines are numbered from 1.
    """
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#"):
            continue
        if ":" in line:
            label, _, code = line.partition(":")
            label = label.strip()
        elif line:
            label, code = str(len(out) + 1), line
        else:
            continue
        out.append((label, parse_gauss_code(code)))
    return out
