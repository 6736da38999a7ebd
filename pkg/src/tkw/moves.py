"""Polyak's generating Reidemeister moves on linear Gauss diagrams.

The four oriented moves R1a, R1b, R2a and R3a are described by the tables
below rather than by code, so that a different reading of the oriented
pictures only means editing data.

R1 inserts a chord whose two endpoints are adjacent.  R2 inserts two chords
``x, y`` of opposite signs whose over endpoints form one adjacent block and
whose under endpoints form another one.  R3 acts on three chords ``tm, tb,
mb`` (top/middle, top/bottom and middle/bottom crossing of a braid-like
triangle): each of the three strands carries an adjacent pair of their
endpoints, and the move swaps the two endpoints of every pair.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Sequence

from .gauss import GaussCodeError, LinearGaussDiagram

__all__ = [
    "InvalidSite",
    "MoveSchema",
    "MoveApplication",
    "SCHEMAS",
    "enumerate_moves",
    "apply_move",
    "random_walk",
    "random_diagram",
    "walk_with_moves",
    "parse_move",
]


class InvalidSite(GaussCodeError):
    """The move does not match the diagram at the requested site."""


@dataclass(frozen=True)
class MoveSchema:
    kind: str
    direction: str
    # R1: (first role, second role, sign)
    # R2: ((over-block chord labels), (under-block chord labels), {label: sign})
    # R3: three endpoint pairs, each a pair of (label, role); all chords carry ``sign``
    pattern: tuple
    sign: int = 1

    @property
    def name(self) -> str:
        return f"{self.kind}:{self.direction}"

    @property
    def chord_delta(self) -> int:
        n = {"R1a": 1, "R1b": 1, "R2a": 2}.get(self.kind, 0)
        return -n if self.direction == "delete" else n


# Kinks with the same rotation sense; meeting the over endpoint first gives a
# positive crossing, meeting the under endpoint first a negative one.
_R1 = {
    "R1a": ("O", "U", 1),
    "R1b": ("U", "O", -1),
}

# Co-oriented strands: the over strand meets x then y, so does the under strand.
_R2 = {
    "R2a": (("x", "y"), ("x", "y"), {"x": 1, "y": -1}),
}

# Positive braid triangle s1 s2 s1: strand T passes over M then over B,
# strand M passes under T then over B, strand B passes under T then under M.
_R3_FORWARD = (
    (("tm", "O"), ("tb", "O")),
    (("tm", "U"), ("mb", "O")),
    (("tb", "U"), ("mb", "U")),
)
_R3 = {
    "R3a": (_R3_FORWARD, 1),
}


def _build_schemas() -> dict[str, MoveSchema]:
    out = {}
    for kind, pat in _R1.items():
        for direction in ("insert", "delete"):
            out[f"{kind}:{direction}"] = MoveSchema(kind, direction, pat, pat[2])
    for kind, pat in _R2.items():
        for direction in ("insert", "delete"):
            out[f"{kind}:{direction}"] = MoveSchema(kind, direction, pat)
    for kind, (pat, sign) in _R3.items():
        backward = tuple(tuple(reversed(pair)) for pair in pat)
        out[f"{kind}:forward"] = MoveSchema(kind, "forward", pat, sign)
        out[f"{kind}:backward"] = MoveSchema(kind, "backward", backward, sign)
    return out


SCHEMAS: dict[str, MoveSchema] = _build_schemas()


@dataclass(frozen=True)
class MoveApplication:
    """A schema bound to a site.

    ``site`` is, per kind: R1 insert ``(p,)`` (the new chord takes positions
    ``p, p+1``); R1 delete ``(chord,)``; R2 insert ``(p, q)`` (over block at
    ``p, p+1``, under block at ``q, q+1`` in the result); R2 delete
    ``(x, y)``; R3 ``(tm, tb, mb)`` chord ids.
    """

    schema: MoveSchema
    site: tuple[int, ...]

    def __str__(self):
        if self.schema.kind.startswith("R3"):
            return f"{self.schema.kind}:{self.schema.direction}@" + ",".join(
                f"c{c}" for c in self.site
            )
        return f"{self.schema.name}@" + ",".join(str(s) for s in self.site)


_MOVE = re.compile(r"(R[123][ab]):?(insert|delete|forward|backward)?@(.*)")


def parse_move(text: str) -> MoveApplication:
    """Parse ``R1a:insert@3``, ``R2a:delete@2,5`` or ``R3a@c1,c2,c3``.

    An R3 move without direction is resolved against the diagram by
    :func:`apply_move`; it is stored here as ``forward``.
    """
    match = _MOVE.fullmatch(text.strip())
    if match is None:
        raise InvalidSite(f"cannot parse move {text!r}")
    kind, direction, rest = match.groups()
    if direction is None:
        direction = "forward" if kind.startswith("R3") else "insert"
    key = f"{kind}:{direction}"
    if key not in SCHEMAS:
        raise InvalidSite(f"unknown move {key}")
    site = tuple(int(t.strip().lstrip("c")) for t in rest.split(",") if t.strip())
    return MoveApplication(SCHEMAS[key], site)


def _r1_inserts(n: int) -> list[MoveApplication]:
    return [
        MoveApplication(SCHEMAS[f"{kind}:insert"], (p,))
        for kind in _R1
        for p in range(1, n + 2)
    ]


def _r2_inserts(n: int) -> list[MoveApplication]:
    out = []
    size = n + 4
    for kind in _R2:
        for p in range(1, size):
            for q in range(1, size):
                if abs(p - q) >= 2:
                    out.append(MoveApplication(SCHEMAS[f"{kind}:insert"], (p, q)))
    return out


def _match_r1_delete(d: LinearGaussDiagram, schema: MoveSchema, cid: int) -> bool:
    first, second, sign = schema.pattern
    ch = d.chord(cid)
    pos = {"O": ch.over_pos, "U": ch.under_pos}
    return ch.sign == sign and pos[second] == pos[first] + 1


def _match_r2_delete(d: LinearGaussDiagram, schema: MoveSchema, x: int, y: int) -> bool:
    over_labels, under_labels, signs = schema.pattern
    chords = {"x": d.chord(x), "y": d.chord(y)}
    if x == y or any(chords[k].sign != s for k, s in signs.items()):
        return False
    o = [chords[k].over_pos for k in over_labels]
    u = [chords[k].under_pos for k in under_labels]
    return o[1] == o[0] + 1 and u[1] == u[0] + 1


def _match_r3(d: LinearGaussDiagram, schema: MoveSchema, site: Sequence[int]) -> bool:
    if len(set(site)) != 3:
        return False
    chords = dict(zip(("tm", "tb", "mb"), (d.chord(c) for c in site)))
    if any(ch.sign != schema.sign for ch in chords.values()):
        return False
    for (l1, r1), (l2, r2) in schema.pattern:
        p1 = chords[l1].over_pos if r1 == "O" else chords[l1].under_pos
        p2 = chords[l2].over_pos if r2 == "O" else chords[l2].under_pos
        if p2 != p1 + 1:
            return False
    return True


def _adjacent_pairs(d: LinearGaussDiagram) -> set[tuple[int, int]]:
    eps = d.endpoints
    return {(eps[k][0], eps[k + 1][0]) for k in range(len(eps) - 1)}


def _local_moves(diagram: LinearGaussDiagram) -> list[MoveApplication]:
    """Deletions and R3 moves (everything but insertions)."""
    out = []
    for kind in _R1:
        schema = SCHEMAS[f"{kind}:delete"]
        out.extend(
            MoveApplication(schema, (c.id,))
            for c in diagram.chords
            if _match_r1_delete(diagram, schema, c.id)
        )
    adjacent = sorted(_adjacent_pairs(diagram))
    for kind in _R2:
        schema = SCHEMAS[f"{kind}:delete"]
        for x, y in adjacent:
            if x != y and _match_r2_delete(diagram, schema, x, y):
                out.append(MoveApplication(schema, (x, y)))
    for kind in _R3:
        for direction in ("forward", "backward"):
            schema = SCHEMAS[f"{kind}:{direction}"]
            # the top strand pair binds tm and tb; mb is then searched for
            (l1, _), (l2, _) = schema.pattern[0]
            for x, y in adjacent:
                if x == y:
                    continue
                bound = {l1: x, l2: y}
                for mb in range(1, diagram.m + 1):
                    site = (bound["tm"], bound["tb"], mb)
                    if _match_r3(diagram, schema, site):
                        out.append(MoveApplication(schema, site))
    return out


def enumerate_moves(diagram: LinearGaussDiagram) -> list[MoveApplication]:
    """All applicable moves, in a fixed deterministic order."""
    n = len(diagram)
    return _r1_inserts(n) + _r2_inserts(n) + _local_moves(diagram)


def _rebuild(endpoints, signs) -> LinearGaussDiagram:
    return LinearGaussDiagram.from_endpoints(endpoints, signs)


def apply_move(diagram: LinearGaussDiagram, move: MoveApplication) -> LinearGaussDiagram:
    """Apply ``move``; raises :class:`InvalidSite` if it does not match."""
    schema, site = move.schema, move.site
    eps = list(diagram.endpoints)
    signs: dict[object, int] = dict(enumerate(diagram.signs, start=1))
    n = len(eps)
    try:
        if schema.kind in _R1:
            first, second, sign = schema.pattern
            if schema.direction == "insert":
                (p,) = site
                if not 1 <= p <= n + 1:
                    raise InvalidSite(f"R1 position {p} outside 1..{n + 1}")
                signs["new"] = sign
                eps[p - 1:p - 1] = [("new", first), ("new", second)]
                return _rebuild(eps, signs)
            (cid,) = site
            if not _match_r1_delete(diagram, schema, cid):
                raise InvalidSite(f"chord {cid} is not a {schema.kind} kink")
            return _rebuild([e for e in eps if e[0] != cid], signs)

        if schema.kind in _R2:
            over_labels, under_labels, new_signs = schema.pattern
            if schema.direction == "insert":
                p, q = site
                if abs(p - q) < 2 or not (1 <= p <= n + 3 and 1 <= q <= n + 3):
                    raise InvalidSite(f"bad R2 site {site} for {n} endpoints")
                blocks = {p: [(("new", lab), "O") for lab in over_labels],
                          q: [(("new", lab), "U") for lab in under_labels]}
                out = []
                k = 1
                rest = iter(eps)
                while k <= n + 4:
                    if k in blocks:
                        out.extend(blocks[k])
                        k += 2
                    else:
                        out.append(next(rest))
                        k += 1
                for lab, s in new_signs.items():
                    signs[("new", lab)] = s
                return _rebuild(out, signs)
            x, y = site
            if not _match_r2_delete(diagram, schema, x, y):
                raise InvalidSite(f"chords {x}, {y} are not an {schema.kind} bigon")
            return _rebuild([e for e in eps if e[0] not in (x, y)], signs)

        if not _match_r3(diagram, schema, site):
            raise InvalidSite(f"chords {site} do not match {schema.name}")
        chords = dict(zip(("tm", "tb", "mb"), (diagram.chord(c) for c in site)))
        for (l1, r1), _ in schema.pattern:
            k = chords[l1].over_pos if r1 == "O" else chords[l1].under_pos
            eps[k - 1], eps[k] = eps[k], eps[k - 1]
        return _rebuild(eps, signs)
    except (IndexError, KeyError) as exc:
        raise InvalidSite(str(exc)) from exc


def _resolve_r3(diagram: LinearGaussDiagram, move: MoveApplication) -> MoveApplication:
    # "R3a@c1,c2,c3" without direction: use whichever direction matches
    if move.schema.kind in _R3 and not _match_r3(diagram, move.schema, move.site):
        other = "backward" if move.schema.direction == "forward" else "forward"
        alt = MoveApplication(SCHEMAS[f"{move.schema.kind}:{other}"], move.site)
        if _match_r3(diagram, alt.schema, alt.site):
            return alt
    return move


def _random_insert(n: int, rng: random.Random) -> MoveApplication:
    # uniform over _r1_inserts(n) + _r2_inserts(n) without listing the R2 sites
    n_r1 = len(_R1) * (n + 1)
    size = n + 3
    n_r2 = len(_R2) * (size * size - size - 2 * (size - 1))
    u = rng.randrange(n_r1 + n_r2)
    if u < n_r1:
        kind = list(_R1)[u // (n + 1)]
        return MoveApplication(SCHEMAS[f"{kind}:insert"], (u % (n + 1) + 1,))
    kind = rng.choice(list(_R2))
    while True:
        p, q = rng.randint(1, size), rng.randint(1, size)
        if abs(p - q) >= 2:
            return MoveApplication(SCHEMAS[f"{kind}:insert"], (p, q))


def random_walk(
    diagram: LinearGaussDiagram,
    steps: int,
    seed: int,
    insert_bias: float = 0.7,
) -> list[LinearGaussDiagram]:
    """Seeded random walk of ``steps`` moves; returns all visited diagrams.

    With probability ``insert_bias`` the move is drawn uniformly from the
    insertions, otherwise uniformly from the deletions and R3 moves (falling
    back to an insertion when there are none).
    """
    return walk_with_moves(diagram, steps, seed, insert_bias)[0]


def walk_with_moves(diagram, steps, seed, insert_bias=0.7):
    """Like :func:`random_walk`, also returning the applied moves."""
    rng = random.Random(seed)
    out = [diagram]
    applied = []
    for _ in range(steps):
        other = [] if rng.random() < insert_bias else _local_moves(diagram)
        mv = rng.choice(other) if other else _random_insert(len(diagram), rng)
        diagram = apply_move(diagram, mv)
        out.append(diagram)
        applied.append(mv)
    return out, applied


def random_diagram(
    rng: random.Random, max_chords: int = 8, plant_r3: bool = False
) -> LinearGaussDiagram:
    """Random chord interleaving with random signs.

    With ``plant_r3`` three of the chords form an R3a triangle (in a random
    direction) so that at least one R3 move applies.
    """
    extra = 3 if plant_r3 else 0
    if max_chords < extra:
        raise ValueError("not enough chords to plant an R3 triangle")
    m = rng.randint(0, max_chords - extra)
    eps: list = [(i, r) for i in range(m) for r in "OU"]
    rng.shuffle(eps)
    signs: dict = {i: rng.choice((1, -1)) for i in range(m)}
    if plant_r3:
        kind = rng.choice(list(_R3))
        schema = SCHEMAS[f"{kind}:{rng.choice(('forward', 'backward'))}"]
        pairs = [[(("t", lab), role) for lab, role in pair] for pair in schema.pattern]
        rng.shuffle(pairs)
        gaps = sorted(rng.randint(0, len(eps)) for _ in pairs)
        for gap, pair in sorted(zip(gaps, pairs), key=lambda t: t[0], reverse=True):
            eps[gap:gap] = pair
        for lab in ("tm", "tb", "mb"):
            signs[("t", lab)] = schema.sign
    return LinearGaussDiagram.from_endpoints(eps, signs)
