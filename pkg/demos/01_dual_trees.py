"""Dual trees of sphere stratifications and their colorings.

Run with ``python3 demos/01_dual_trees.py``.
"""
# %% [markdown]
# A stratification of the sphere by double curves is recorded by its dual
# tree: one vertex per sheet, one edge per preimage circle.  Each double
# curve has two preimage circles, so the edges come in pairs.

# %%
from sphere_morse.strata import (
    closure_surfaces,
    enumerate_pairings,
    enumerate_trees,
    four_edge_trees,
    min_critical_points,
    stratification_name,
    tree_canonical,
)

for n in range(1, 5):
    trees = enumerate_trees(n)
    print(f"{n} edge(s): {len(trees)} tree(s)")

# %% [markdown]
# Two double curves give four edges.  There are three such trees, and the
# pairings of their edges up to symmetry are the candidate stratifications.

# %%
for name, t in four_edge_trees().items():
    print(name, tree_canonical(t))
    for ct in enumerate_pairings(t):
        print("   ", stratification_name(ct), ct.pairing)

# %% [markdown]
# Gluing each curve's two circles back gives a closed-up piece at every
# vertex.  Its genus and boundary count bound how few critical points a
# function on the whole surface can have.

# %%
for t in four_edge_trees().values():
    for ct in enumerate_pairings(t):
        pieces = ", ".join(
            f"v{p.vertex}:{p.name()}" for p in closure_surfaces(ct) if ct.tree.degree(p.vertex) > 1
        )
        print(f"{stratification_name(ct):5s} min points {min_critical_points(ct)}  [{pieces}]")
