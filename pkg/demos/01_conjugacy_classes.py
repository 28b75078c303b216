# %% [markdown]
# # Conjugacy classes of PGL2(p)
#
# Elements are 2x2 matrices mod p up to scalars. Away from a few special
# classes, the class of g is fixed by j = trace(g)^2 / det(g).

# %%
from beauville import class_census, classify, element_order, group, in_psl, make_element

p = 19
G = group(p)
print(f"|PGL2({p})| = {G.order}, {len(G.classes)} classes")

# %%
for c in class_census(p):
    print(f"{str(c.key):6s} {c.kind:10s} order {c.order:3d} size {c.size:4d}  rep {c.representative}")

# %% [markdown]
# The diagonal matrix diag(2, 1) has order 18 since 2 is a primitive root
# mod 19; it is hyperbolic and lies outside PSL2(19).

# %%
c = make_element(p, 2, 0, 0, 1)
print(c, element_order(c), classify(c), "in PSL:", in_psl(c))

# %% [markdown]
# Two involution classes: one inside PSL2(p), one outside.

# %%
for c in G.classes:
    if c.order == 2:
        print(c.key, c.size, "in PSL:", in_psl(c.representative))
