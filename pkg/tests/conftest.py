import random

import pytest
from hypothesis import strategies as st

from tkw.gauss import LinearGaussDiagram


def diagram_from_rng(rng: random.Random, max_chords: int = 8) -> LinearGaussDiagram:
    m = rng.randint(0, max_chords)
    eps = [(i, r) for i in range(m) for r in "OU"]
    rng.shuffle(eps)
    return LinearGaussDiagram.from_endpoints(eps, {i: rng.choice((1, -1)) for i in range(m)})


@st.composite
def diagrams(draw, max_chords=6):
    m = draw(st.integers(0, max_chords))
    eps = draw(st.permutations([(i, r) for i in range(m) for r in "OU"]))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=m, max_size=m))
    return LinearGaussDiagram.from_endpoints(eps, dict(enumerate(signs)))


@pytest.fixture
def rng():
    return random.Random(20240611)


def r3_swapped_positions(d, move):
    """1-based positions of the six endpoints an R3 move swaps."""
    chords = dict(zip(("tm", "tb", "mb"), (d.chord(c) for c in move.site)))
    out = []
    for (label, role), _ in move.schema.pattern:
        k = chords[label].over_pos if role == "O" else chords[label].under_pos
        out += [k, k + 1]
    return out


def r3_new_ids(d, d2, move):
    """Map chord ids of ``d`` to ids of ``d2 = apply_move(d, move)``."""
    perm = list(range(len(d)))
    for k in r3_swapped_positions(d, move)[::2]:
        perm[k - 1], perm[k] = perm[k], perm[k - 1]
    return {d.endpoints[old][0]: d2.endpoints[new][0] for new, old in enumerate(perm)}
