"""The position-based invariant with values in Z2 * (Z + Z)."""

# %%
from tkw import corpus
from tkw.g2 import conjugate_equal, normalize, phi2, to_ade
from tkw.words import letters_phi2, render_word

d = corpus.get("L7a1").diagram
word = letters_phi2(d)
print("letters:", render_word(word))

# %%
# Substitute b = e a, b' = e^-1 a, c = d^-1 e a, c' = e^-1 d a and reduce.
ade = to_ade(word)
print("in a, d, e:", " ".join(g if x == 1 else f"{g}^-1" for g, x in ade))
print("normal form:", normalize(ade))

# %%
# Normal forms alternate blocks d^p e^q with the involution a.
x = normalize([("d", 1), ("a", 1), ("e", 1), ("a", 1), ("d", 1)])
print(x, x.to_json())

# %%
# For closed knots the base point is forgotten and only the conjugacy class counts.
y = normalize([("e", 1), ("a", 1), ("d", 2), ("a", 1)])
print(y, "conjugate to", x, ":", conjugate_equal(x, y))
print("phi2 of the trivial diagram:", phi2(corpus.get("L2a1").diagram))
