# %% [markdown]
# # The twelve surfaces over PGL2(19)
#
# Three orbits of (2,3,18) triples and four of (2,4,20) triples give
# 3 * 4 = 12 Beauville structures. The bundled fixtures are the published
# representatives; `verify_example19` re-checks every property.

# %%
from beauville.fixtures import verify_example19
from beauville.surfaces import sigma_key_set

report = verify_example19()
for check in report.checks:
    print("PASS" if check.ok else "FAIL", check.name, check.detail)

# %%
r = report.records[0]
print("genera:", r.genus_1, r.genus_2)
print("sigma keys of first triple: ", sorted(map(str, sigma_key_set(r.first_triple))))
print("sigma keys of second triple:", sorted(map(str, sigma_key_set(r.second_triple))))

# %% [markdown]
# Pairing two triples of the same type fails condition (3).

# %%
from beauville.surfaces import BeauvilleError, verify_beauville

try:
    verify_beauville(report.records[0].first_triple, report.records[4].first_triple)
except BeauvilleError as exc:
    print(exc)
