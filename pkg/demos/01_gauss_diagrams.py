"""Linear Gauss diagrams: parsing, linking and chord classification."""

# %%
# A diagram is written as a sequence of endpoints.  Each token is O or U
# (over or under), a chord id, and the crossing sign.
from tkw import corpus
from tkw.gauss import linked, parse_gauss_code, position_parity, reverse_diagram, serialize

d = parse_gauss_code("O1+ U2- U1+ O2-")
print(serialize(d), "has", d.m, "chords")
for ch in d.chords:
    print(f"  chord {ch.id}: over at {ch.over_pos}, under at {ch.under_pos}, sign {ch.sign:+d}")
print("chords 1 and 2 linked:", linked(d, 1, 2))

# %%
# Ids are renumbered by first appearance, so equal diagrams serialize alike.
print(serialize(parse_gauss_code("U7- O3+ O7- U3+")))

# %%
# Parity counts linked chords; odd chords get a type from their even neighbours.
k = corpus.get("L7a1").diagram
print("L7a1:", serialize(k))
for ch, cls in zip(k.chords, k.classification):
    print(f"  chord {ch.id}: {cls}, linked with {sorted(k.link_sets[ch.id - 1])}")

# %%
# Reversing the orientation moves endpoint k to 2m+1-k, so every endpoint
# changes position parity while linking and types stay the same.
r = reverse_diagram(k)
print("reversed:", serialize(r))
n = len(k)
for i in (1, 2, 3):
    print(f"  endpoint {i} ({position_parity(k, i).value}) -> {n + 1 - i} ({position_parity(r, n + 1 - i).value})")
print("odd chords after reversal:", sum(c.parity.value == "odd" for c in r.classification))
