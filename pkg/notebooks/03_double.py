# %% [markdown]
# # The double of the Borel parts
#
# Cross products (1 ⊗ b)(a ⊗ 1) computed from coproducts, antipode and the
# pairing, then multiplied out, must reproduce b * a in the full algebra.

# %%
from qgr.presentation import Algebra
from qgr.double import cross_product, phi, verify_double_iso
from qgr.pairing import pair_words

alg = Algebra(2, "sl")
x = cross_product(alg.f(1), alg.e(1))
print(x)
print(phi(x) == alg.f(1) * alg.e(1))

# %%
for n in (2, 3):
    for kind in ("gl", "sl"):
        rep = verify_double_iso(n, kind, random_words=5, seed=1)
        print(n, kind, rep["pass"], rep["checked"])

# %% [markdown]
# Negative control: scale the pairing and the cross relations break.

# %%
rep = verify_double_iso(2, "sl", pair=lambda y, x: pair_words(y, x) * alg.r)
print(rep["pass"], sorted(rep["residuals"])[:3])
