"""The sign-based invariant and why the L6a1 long knots are nontrivial."""

# %%
from tkw import corpus
from tkw.gbar import GBarWord, abelianize, compare, phibar
from tkw.words import letters_phibar, render_word

for ref in ("L6a1/K1", "L6a1/K2"):
    d = corpus.get(ref).diagram
    w = phibar(d)
    print(ref)
    print("  letters:", render_word(letters_phibar(d)))
    print("  reduced:", w)
    print("  abelian image (a, b, c):", tuple(abelianize(w)))

# %%
# A nonzero abelian image already separates the word from the identity.
k1 = phibar(corpus.get("L6a1/K1").diagram)
print(compare(k1, GBarWord()).to_json())
