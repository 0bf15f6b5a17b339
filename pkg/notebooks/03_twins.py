# %% [markdown]
# # Closed twins
#
# Two adjacent vertices are closed twins when their neighbourhoods agree apart from each other.
# N_a counts the closed twins of a, plus a itself.

# %%
from powergraph.graphs import power_graph
from powergraph.groups import make_group, parse_spec
from powergraph.twins import check_monotonicity, formula_twin_counts, twin_counts

G = make_group(parse_spec("cyclic 12"))
T = twin_counts(power_graph(G))
print(list(zip(G.orders, T.counts)))

# %% [markdown]
# For many elements N_a is known from the element order alone.
# Elements it does not cover are reported as None.

# %%
for text in ["cyclic 12", "dihedral 6", "q 3"]:
    H = make_group(parse_spec(text))
    F = formula_twin_counts(H)
    print(text, F.counts, f"coverage {F.coverage:.2f}")

# %% [markdown]
# In a non-cyclic group, N never drops when passing from a cyclic subgroup to a larger one.

# %%
H = make_group(parse_spec("dihedral 12"))
X = power_graph(H)
print(check_monotonicity(H, X, twin_counts(X)))
