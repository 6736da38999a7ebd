"""Deciding equality in Gbar by search, with a checkable certificate."""

# %%
from tkw.gbar import GBarWord, compare, replay

x = GBarWord.parse("c a b a a")
y = GBarWord.parse("a a b a c")
v = compare(x, y)
print(v.verdict, "after visiting", v.budget_spent, "words")

# %%
# An "equal" verdict carries the rewriting path it found; anyone can replay it.
for w in v.path:
    print("  ", GBarWord.of(w))
print("path checks out:", replay(v.path, x, y))

# %%
# Equal abelian images but no proof within the budget gives "unknown".
print(compare(GBarWord.parse("a b"), GBarWord.parse("b a"), budget=2_000).to_json())
