# %% [markdown]
# # Building small groups
#
# Groups are stored as Cayley tables with the identity at index 0.
# Element orders and cyclic subgroups are computed once and cached.

# %%
from collections import Counter

from powergraph.groups import cyclic_subgroup_poset, is_generalized_quaternion, make_group, parse_spec

D6 = make_group(parse_spec("dihedral 6"))
print(D6.name, D6.order)
print(sorted(Counter(D6.orders).items()))

# %% [markdown]
# The quaternion group of order 8 has a single involution, which is how it is recognised.

# %%
Q8 = make_group(parse_spec("q 3"))
print(is_generalized_quaternion(Q8), Counter(Q8.orders)[2])

# %% [markdown]
# Cyclic subgroups form a poset under inclusion.

# %%
P = cyclic_subgroup_poset(make_group(parse_spec("cyclic 6")))
print(P.orders())
print(sorted(P.inclusion))

# %% [markdown]
# Direct products and Cayley tables read from CSV work as well.

# %%
V = make_group(parse_spec("product c:2 c:2"))
print(V.name, V.orders)
