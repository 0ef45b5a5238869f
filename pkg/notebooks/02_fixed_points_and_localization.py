# %% [markdown]
# # Fixed points and restriction
#
# A fixed point is a permutation word in which the values sharing a phi-label
# appear in increasing order. Restriction to w replaces x_i by u_phi(w(i)).

# %%
from springer_k import Partition
from springer_k.fixed_points import fixed_points, generators_vanish_check, gkm_image
from springer_k.presentations import equivariant_space

lam = Partition.of(2, 2)
fps = fixed_points(lam)
print(len(fps), "fixed points:", fps.points)

# %% [markdown]
# Each coordinate function becomes a tuple of u-monomials, one per point.

# %%
space = equivariant_space(lam)
for i in range(1, lam.n + 1):
    print(f"x{i}", gkm_image(space.var(f"x{i}"), lam).to_list())

# %% [markdown]
# Every generator of the ideal restricts to zero.

# %%
res = generators_vanish_check(lam)
print(res.passed, res.comparisons, "comparisons")

# %% [markdown]
# At a generic point the standard monomials, evaluated at the fixed points,
# give a square matrix of full rank.

# %%
from springer_k.linalg import exact_rank
from springer_k.verify import evaluation_matrix

M = evaluation_matrix(lam)
for row in M:
    print(row)
print("rank", exact_rank(M))
