# %% [markdown]
# # Partitions and ideal presentations
#
# The generators of every presentation are indexed by partition data: the
# dual partition, the counting function p, and the sequence phi that records
# which u-variable each position is tied to.

# %%
from springer_k import Partition, dual_partition, multinomial, p_function, phi_sequence

lam = Partition.of(5, 4, 4, 2, 2, 2, 1)
dual = dual_partition(lam)
print("dual:", dual)
print("p on the dual for s = 14..20:", [p_function(dual, s) for s in range(14, 21)])

# %% [markdown]
# phi lists block r as 1..r, repeated lam_r - lam_{r+1} times.

# %%
for shape in [(2, 1), (2, 2), (3, 2, 1)]:
    mu = Partition.of(*shape)
    print(mu, phi_sequence(mu), "multinomial", multinomial(mu))

# %% [markdown]
# The equivariant K-theory ideal for (2,1) has six generators.

# %%
from springer_k import build_presentation

ideal = build_presentation("EqK", Partition.of(2, 1))
print(ideal.to_text())

# %% [markdown]
# The cohomological version prints its x-variables as y.

# %%
print(build_presentation("EqCoh", Partition.of(2, 1)).to_text())
