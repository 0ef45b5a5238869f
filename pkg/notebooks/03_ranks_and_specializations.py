# %% [markdown]
# # Ranks and specializations
#
# Specializing the u-parameters to distinct primes and counting standard
# monomials gives the rank of the quotient. It should equal n!/prod(lam_i!).

# %%
from springer_k import Partition, build_presentation, multinomial
from springer_k.partitions import partitions_up_to
from springer_k.verify import generic_basis, generic_rank

for lam in partitions_up_to(5):
    r = generic_rank(build_presentation("EqK", lam))
    print(f"{str(lam):>10}  rank {r:>3}  expected {multinomial(lam):>3}")

# %%
basis, values = generic_basis(build_presentation("EqK", Partition.of(2, 1)))
print(values, basis.to_text_list())

# %% [markdown]
# Setting every u to 1 recovers the ordinary K-theory ideal; setting every u
# to 0 in the cohomological ideal recovers the classical one.

# %%
from springer_k.groebner import ideal_equality
from springer_k.presentations import (
    classical_tanisaki_ideal,
    constant_specialization,
    equivariant_cohomology_ideal,
    equivariant_k_ideal,
    ordinary_k_ideal,
    specialize_ideal,
)

lam = Partition.of(3, 1)
eqk = equivariant_k_ideal(lam)
at_one = specialize_ideal(eqk, constant_specialization(eqk, 1))
print("u -> 1 matches:", ideal_equality(list(at_one.generators), list(ordinary_k_ideal(lam).generators)))

coh = equivariant_cohomology_ideal(lam)
at_zero = specialize_ideal(coh, constant_specialization(coh, 0))
print([g.to_text() for g in at_zero.generators])
print([g.to_text() for g in classical_tanisaki_ideal(lam).generators])

# %% [markdown]
# For the one-column shape the ideal coincides with the flag-variety ideal.

# %%
from springer_k.verify import flag_consistency

print({n: flag_consistency(n) for n in range(1, 5)})
