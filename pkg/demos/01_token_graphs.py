# %% [markdown]
# # Token graphs in a few lines
#
# Put k indistinguishable tokens on distinct vertices of a graph G.  A move
# slides one token along an edge to an empty vertex.  The k-token graph
# F_k(G) has one vertex per placement and one edge per move.

# %%
from tokengraphs import build_token_graph, cycle_graph, path_graph, to_dot

tg = build_token_graph(cycle_graph(6), 2)
print(tg)
print([tg.label(r) for r in range(6)])

# %% [markdown]
# Vertices are ranked in colexicographic order, so `{1,2}` comes first and
# `{5,6}` last.  The degree of a placement is the number of edges of G with
# exactly one end occupied:

# %%
for r in range(tg.order):
    print(tg.label(r), tg.graph.degree(r))

# %% [markdown]
# On a path the degrees already carry a lot of structure.  Count them for
# F_2(P_6):

# %%
hist = build_token_graph(path_graph(6), 2).graph.degree_histogram()
print(hist)

# %% [markdown]
# The two placements of degree one are `{1,2}` and `{5,6}`, where both
# tokens are jammed against an end of the path.
#
# DOT output keeps the subset labels, so Graphviz can draw the graph:

# %%
small = build_token_graph(path_graph(4), 2)
print(to_dot(small.graph, labels=small.label))
