# %% [markdown]
# # The Casimir operator
#
# Omega = sum S(v_k) u_k composed with the weight-diagonal map m -> g(mu) m acts by
# the scalar g(lambda) on the Verma module of highest weight lambda.

# %%
from qgr.presentation import Algebra
from qgr.cat_o import verma
from qgr.braiding import casimir, casimir_element, g_weight, two_rho

alg = Algebra(2, "gl")
print(casimir_element(alg, 1))
print("2 rho =", two_rho(2), " g(eps1) =", g_weight(alg, (1, 0)))

# %%
for lam in [(1, 0), (2, 0), (3, -1)]:
    rep = casimir(verma(alg, lam, 4))
    print(lam, rep["pass"], rep["g_lambda"])

# %%
alg3 = Algebra(3, "gl")
print(casimir(verma(alg3, (1, 1, 0), 3))["pass"])
