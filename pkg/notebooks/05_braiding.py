# %% [markdown]
# # R-matrix, Yang-Baxter and hexagons on truncated Vermas
#
# R = Theta ∘ f~ ∘ P. All checks run on basis tuples whose total depth stays
# inside the module cutoff, where the truncation is exact.

# %%
import itertools
from fractions import Fraction

from qgr.presentation import Algebra
from qgr.cat_o import verma
from qgr.braiding import build_R, intertwining_check, qybe_check, hexagon_check, theta, unitriangularity_check

alg = Algebra(2, "gl")
print(theta(alg, (1,)))
M1, M2 = verma(alg, (1, 0), 4), verma(alg, (2, 0), 4)

# %%
R = build_R(M2, M1, 2)
for col, entries in sorted(R.columns.items()):
    print(col, {k: str(c) for k, c in entries.items()})
print(intertwining_check(R)["pass"], unitriangularity_check(R)["pass"])

# %%
for triple in itertools.product([M1, M2], repeat=3):
    print([m.lam.eps for m in triple], qybe_check(*triple, 2)["pass"], hexagon_check(*triple, 2)["pass"])

# %% [markdown]
# Same checks at a numeric point u = 2, v = 3.

# %%
u0, v0 = Fraction(2), Fraction(3)
num = Algebra(3, "gl", r=u0 ** 2, s=v0 ** 2, sqrt_rs=u0 / v0)
N = verma(num, (1, 0, 0), 3)
print(qybe_check(N, N, N, 1)["pass"], hexagon_check(N, N, N, 1)["pass"])
