# %% [markdown]
# # Maps between presentations
#
# The rank-one parameter collapse U_{r,s}(sl_2) -> U_{rt,st}(sl_2), and the
# comparison map from the multiparameter presentation into U_{r,s}(gl_n).

# %%
from qgr.presentation import Algebra, Generator
from qgr.morphisms import (
    sl2_iso_check, chm_morphism, chm_relation_transport, torus_image_identities,
    n2_generation_witness, n3_cokernel_witness, apply_raw,
)
from qgr.scalars import ONE

rep = sl2_iso_check(spec_count=5, seed=0)
for p in rep["points"]:
    print(p["r"], p["s"], p["t"], p["pass"])

# %%
for n in (2, 3):
    rep = chm_relation_transport(n)
    print(n, rep["pass"], rep["relations_checked"])

# %%
alg = Algebra(3, "gl")
m = chm_morphism(alg)
print(apply_raw(m, [(ONE, [Generator("Linv", 1), Generator("L", 2)])]), "==", alg.omega(1))
print(torus_image_identities(alg))

# %% [markdown]
# For n = 2 every generator has a preimage; for n = 3 a_1 is outside the image.

# %%
print(n2_generation_witness())
print(n3_cokernel_witness())
