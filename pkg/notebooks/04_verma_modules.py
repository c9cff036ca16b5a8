# %% [markdown]
# # Truncated Verma modules

# %%
from qgr.presentation import Algebra, Generator
from qgr.scalars import ONE
from qgr.cat_o import verma, module_relation_audit, character_injectivity_check, weight_character

alg = Algebra(3, "gl")
M = verma(alg, (2, 1, 0), 3)
print("dim", M.dim)
for k in range(6):
    print(k, M.basis[k][1], M.weight(k))

# %%
v = {0: ONE}
print(M.apply_word([Generator("E", 1), Generator("F", 1)], v))
print(module_relation_audit(M)["pass"])

# %% [markdown]
# Torus characters tell root-lattice points apart at generic parameters.

# %%
print(weight_character(Algebra(2, "sl"), (1, 0)))
for n in (2, 3, 4):
    print(n, character_injectivity_check(n, 3)["pass"])
