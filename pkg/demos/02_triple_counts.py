# %% [markdown]
# # Counting generating triples two ways
#
# Triples (a, b, c) with abc = 1 and orders (2, 3, 18) in PGL2(19). The
# brute-force search walks all pairs (a, b); the parametric route fixes
# a = diag(1, -1) and solves for b, then conjugates.

# %%
import time

from beauville import group
from beauville.triples import (
    count_second_triples,
    count_triples_brute,
    enumerate_triples_brute,
    enumerate_triples_parametric,
    parametric_local_triples,
)

p, k = 19, 18
G = group(p)

# %%
for key in G.keys_of_order(k):
    t0 = time.perf_counter()
    n = count_triples_brute(p, (2, 3, k), key)
    print(f"c in class {key}: {n} triples ({time.perf_counter() - t0:.2f}s)")

# %% [markdown]
# Each count equals |G|: conjugation acts freely, so each class of c is a
# single orbit.

# %%
key = G.keys_of_order(k)[0]
local = parametric_local_triples(p, k, key)
print(len(local), "solutions at a = diag(1,-1)")
par = enumerate_triples_parametric(p, k, key)
brute = enumerate_triples_brute(p, (2, 3, k), key)
print("parametric == brute:", [t.sort_key() for t in par] == [t.sort_key() for t in brute])

# %% [markdown]
# Second triples of type (2, 4, 20), with a in the involution class of PSL2(19).

# %%
for key in G.keys_of_order(20):
    print(key, count_second_triples(p, 20, key))
