# %% [markdown]
# # Distances between token placements on a path
#
# On a path, tokens never need to pass each other.  Sort both placements and
# match the i-th token of one to the i-th token of the other; each token
# walks straight to its target.  The distance is the sum of the walks.

# %%
import numpy as np

from tokengraphs import build_token_graph, path_graph
from tokengraphs.path_metrics import all_pairs_bfs, all_pairs_formula, token_path_distance

print(token_path_distance((1, 2, 3), (5, 6, 7)))

# %% [markdown]
# Check the rule against breadth-first search on every pair of F_3(P_7):

# %%
tg = build_token_graph(path_graph(7), 3)
bfs = all_pairs_bfs(tg)
formula = all_pairs_formula(tg)
print(tg.order, "vertices, mismatches:", int((bfs != formula).sum()))
print("diameter:", bfs.max())

# %% [markdown]
# Most pairs are close.  Only the two end placements {1,2,3} and {5,6,7}
# realise the diameter 3 * 4 = 12:

# %%
values, counts = np.unique(bfs[np.triu_indices(tg.order, 1)], return_counts=True)
for v, c in zip(values, counts):
    print(f"{v:2d} {c:4d} {'#' * (c // 10)}")
