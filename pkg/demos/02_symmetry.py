# %% [markdown]
# # Where do the symmetries of F_2(G) come from?
#
# Every automorphism of G moves the tokens around consistently, so it
# induces an automorphism of F_k(G).  Usually that is all there is.  This
# notebook finds the small graphs where F_2(G) has more symmetry than G can
# explain.

# %%
import numpy as np

from tokengraphs import (
    build_token_graph,
    cycle_graph,
    fan_graph,
    find_automorphism_group,
    grid_graph,
    induced_subgroup,
    star_graph,
    wheel_graph,
)


def compare(name, base, k=2):
    tg = build_token_graph(base, k)
    aut = find_automorphism_group(tg.graph)
    induced = induced_subgroup(find_automorphism_group(base), tg)
    return name, aut.order(), induced.order()


rows = [compare(f"C_{n}", cycle_graph(n)) for n in range(3, 9)]
rows += [compare(f"K_1,{n - 1}", star_graph(n)) for n in range(3, 8)]
rows += [compare(f"A_1,{n}", fan_graph(n)) for n in range(3, 8)]
rows += [compare(f"W_1,{n}", wheel_graph(n)) for n in range(3, 8)]
rows.append(compare("G_2,3", grid_graph(2, 3)))

for name, full, induced in rows:
    flag = "" if full == induced else "  <- extra symmetry"
    print(f"{name:8s} |Aut F_2| = {full:6d}   induced = {induced:6d}{flag}")

# %% [markdown]
# The ratio of the two orders shows how much symmetry comes from
# nowhere in G:

# %%
ratios = np.array([full / induced for _, full, induced in rows])
print(ratios)

# %% [markdown]
# C_4 is the standout.  F_2(C_4) is the complete bipartite graph K_{2,4}: the
# two "diagonal" placements {1,3} and {2,4} are adjacent to all four
# "side" placements.  Its automorphism group has order 2 * 24 = 48, six
# times what the 8 symmetries of the square can produce.
#
# For the 2 x 3 grid one can ask the search for a symmetry that no grid
# automorphism induces:

# %%
tg = build_token_graph(grid_graph(2, 3), 2)
aut = find_automorphism_group(tg.graph)
induced = induced_subgroup(find_automorphism_group(tg.base), tg)
labels = [tg.label(r) for r in range(tg.order)]
extra = next(g for g in aut.generators if g not in induced)
print(extra.cycle_notation(labels=labels))
