# %% [markdown]
# # Galois exponents acting on surfaces
#
# gamma in (Z/m)* sends the orbit keys (key1, key2) to the keys of
# (c1^gamma, c2^gamma). On the phi(m)/4 surfaces this action is regular.

# %%
from beauville import build_all_surfaces, galois_orbit_table
from beauville.arith import admissible_params, scan_primes

for p, k, l in [(19, 18, 20), (43, 42, 44)]:
    records = build_all_surfaces(p, k, l)
    table = galois_orbit_table(p, k, l, records)
    print(f"p={p}: {len(records)} surfaces, kernel {table.kernel}, regular {table.regular}")

# %% [markdown]
# Primes admissible for k = 18, l = 20 lie in one residue class.

# %%
params = admissible_params(18, 20)
print(params.combined_residue, "mod", params.combined_modulus)
print(scan_primes(params, 5000))
