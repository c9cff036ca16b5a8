# %% [markdown]
# # Pairing, graded pieces and dual bases
#
# U+ is never given a PBW basis. Each graded piece is span(words) modulo the
# radical of the pairing; a Gram matrix picks representative words.

# %%
from qgr.presentation import Algebra, Generator
from qgr.pairing import (
    graded_basis, dual_bases, pair_words, kostant_partition_count, contents_up_to,
    oracle_pair_letters, get_context, p_map, oracle_p_map, f_form,
)

alg = Algebra(3, "gl")

# %%
gb = graded_basis(alg, (2, 1))
print("words:", gb.words, "rank:", gb.rank)
for row in gb.gram:
    print([str(c) for c in row])

# %% [markdown]
# The rank deficit is the Serre relation: this combination pairs to zero with
# every F-word of the same content.

# %%
e1, e2 = alg.e(1), alg.e(2)
r, s = alg.r, alg.s
serre = e1 * e1 * e2 - (e1 * e2 * e1).scale(r + s) + (e2 * e1 * e1).scale(r * s)
print([str(pair_words(alg.fword(w), serre)) for w in gb.words])

# %% [markdown]
# Ranks against the Kostant partition function.

# %%
for zeta in contents_up_to(3, 5, min_height=1):
    print(zeta, graded_basis(alg, zeta).rank, kostant_partition_count(3, zeta))

# %% [markdown]
# The fast recursive pairing against the slow oracle built from the pairing axioms.

# %%
ctx = get_context(alg)
fw, ew = (1, 2, 1), (2, 1, 1)
print(ctx.pair_fe(fw, ew))
print(oracle_pair_letters(alg, [Generator("F", i) for i in fw], [Generator("E", i) for i in ew]))
print(p_map(alg.eword(ew), 1, primed=True) == oracle_p_map(alg.eword(ew), 1, primed=True))

# %%
dp = dual_bases(alg, (1, 1))
for u, v in zip(dp.u_list, dp.v_list):
    print("u =", u, "   v =", v)
print([[str(pair_words(v, u)) for u in dp.u_list] for v in dp.v_list])

# %%
print("f(eps1, eps2) =", f_form(alg, (1, 0, 0), (0, 1, 0)))
print("f(eps2, eps1) =", f_form(alg, (0, 1, 0), (1, 0, 0)))
