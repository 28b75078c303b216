# %% [markdown]
# # Character table and Frobenius's count
#
# The table comes from diagonalizing the class-multiplication matrices.
# The number of solutions of abc = 1 with a, b, c in classes A, B, C is
# |A||B||C|/|G| * sum over chi of chi(a)chi(b)chi(c)/chi(1).

# %%
import numpy as np

from beauville import character_table, class_key, frobenius_count, group
from beauville.characters import count_ratio_diagnostic
from beauville.pgl2 import INVOLUTION, ClassKey

p = 19
T = character_table(p)
print("degrees:", T.degrees)
print("sum of squares:", sum(d * d for d in T.degrees))
print("orthogonality errors:", T.row_orthogonality_error(), T.column_orthogonality_error())

# %% [markdown]
# The degree p-1 characters vanish on hyperbolic classes of order > 2.

# %%
hyper = [i for i, c in enumerate(T.classes) if c.kind == "hyperbolic" and c.order > 2]
rows = [r for r, d in enumerate(T.degrees) if d == p - 1]
print("max |value|:", np.abs(T.values[np.ix_(rows, hyper)]).max())

# %%
a = ClassKey(INVOLUTION, det_square=False)
(b,) = group(p).keys_of_order(3)
c = class_key(group(p).element(2, 0, 0, 1))
print("Frobenius count:", frobenius_count(a, b, c, T))
print("ratio to |G|:", count_ratio_diagnostic(p, 18, table=T), count_ratio_diagnostic(p, 20, table=T))

# %%
print(T.to_csv())
