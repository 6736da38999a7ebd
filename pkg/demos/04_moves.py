"""Reidemeister moves on Gauss diagrams, and invariance along a random walk."""

# %%
from tkw.gauss import parse_gauss_code, serialize
from tkw.g2 import phi2
from tkw.gbar import abelianize, compare, phibar
from tkw.moves import apply_move, enumerate_moves, parse_move, random_diagram, walk_with_moves

d = parse_gauss_code("")
for spec in ["R1a:insert@1", "R2a:insert@1,4", "R1b:insert@3"]:
    d = apply_move(d, parse_move(spec))
    print(f"{spec:16} -> {serialize(d)}")

# %%
# A braid-like triangle admits a third move, which swaps three adjacent pairs.
t = parse_gauss_code("O1+ O2+ U1+ O3+ U2+ U3+")
print([str(mv) for mv in enumerate_moves(t) if mv.schema.kind == "R3a"])
print(serialize(apply_move(t, parse_move("R3a:forward@c1,c2,c3"))))

# %%
# Walk at random and watch both invariants stay put.
import random

start = random_diagram(random.Random(6), 6, plant_r3=True)
diagrams, moves = walk_with_moves(start, 8, seed=4, insert_bias=0.5)
ref2, refbar = phi2(start), phibar(start)
print("start", serialize(start), "phi2", ref2, "abelian", tuple(abelianize(refbar)))
for mv, d in zip(moves, diagrams[1:]):
    same = compare(refbar, phibar(d)).verdict
    print(f"  {str(mv):24} phi2 same: {phi2(d) == ref2}  phibar: {same}")
