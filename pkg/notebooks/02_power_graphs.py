# %% [markdown]
# # Power graph and enhanced power graph
#
# In the power graph two elements are adjacent when one is a power of the other.
# In the enhanced power graph they are adjacent when they lie in a common cyclic subgroup.

# %%
from powergraph.graphs import enhanced_power_graph, power_graph, universal_vertices
from powergraph.groups import make_group, parse_spec

G = make_group(parse_spec("dihedral 6"))
P = power_graph(G)
E = enhanced_power_graph(G)
print(P.edge_count, E.edge_count)
print(sorted(E.difference(P)))

# %% [markdown]
# The vertices adjacent to everything in the power graph:

# %%
for text in ["cyclic 12", "cyclic 8", "q 4", "s 4"]:
    H = make_group(parse_spec(text))
    print(text, len(universal_vertices(power_graph(H))))
