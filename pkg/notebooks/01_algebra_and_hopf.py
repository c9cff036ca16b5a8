# %% [markdown]
# # The algebra and its Hopf structure
#
# Elements live in the normal form F-word * torus * E-word with coefficients in
# Q(u, v), where r = u^2 and s = v^2.

# %%
from qgr.presentation import Algebra, relation_residuals, random_element
from qgr.hopf import coproduct, antipode, counit, hopf_axiom_residuals, iterated_coproduct
import random

alg = Algebra(3, "gl")
e1, e2, f1, f2 = alg.e(1), alg.e(2), alg.f(1), alg.f(2)

# %% [markdown]
# Straightening: e f - f e lands in the torus.

# %%
print(e1 * f1 - f1 * e1)
print(e1 * f2)          # distant e, f commute
print(alg.a(1) * e1)    # torus times e stays put, e * a_1 picks up r^-1
print(e1 * alg.a(1))

# %% [markdown]
# Commutation-type relations vanish on the nose; the Serre-type ones stay
# as nonzero words and are only zero modulo the pairing radical (see notebook 02).

# %%
for name, res in relation_residuals(alg):
    if not res.is_zero():
        print(name, "->", len(res.terms), "terms")

# %%
print("Delta(e1) =", coproduct(e1))
print("Delta(f1) =", coproduct(f1))
print("S(e1 f2)  =", antipode(e1 * f2))
print("eps(e1 f1) =", counit(e1 * f1))
print(iterated_coproduct(f2, 3))

# %% [markdown]
# Axioms on random elements.

# %%
rng = random.Random(0)
bad = 0
for _ in range(50):
    x = random_element(alg, rng)
    bad += sum(not v.is_zero() for v in hopf_axiom_residuals(x).values())
print("failing axiom instances:", bad)
