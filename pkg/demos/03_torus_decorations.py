"""Decorating the torus Reeb graph with the image of one double curve."""
# %%
import itertools

from sphere_morse.distinguish import dg_canonical, distinct_decorations, stratum_cycle
from sphere_morse.reeb import torus_graph
from sphere_morse.render import dg_dot

torus = torus_graph()

# %% [markdown]
# When the curve holds two of the four critical points, each of its two
# arcs becomes a monotone path between them.  Counting decorations up to
# equivalence:

# %%
total = 0
for pair in itertools.combinations(range(4), 2):
    found = distinct_decorations(torus, [("pair", pair)])
    total += len(found)
    print(f"p{pair[0]}-p{pair[1]}: {len(found)}")
print("total", total)

# %% [markdown]
# The bottom-to-top pair has two answers: the arcs run up opposite sides
# of the hole, or the same side.

# %%
for dg in distinct_decorations(torus, [("pair", (0, 3))]):
    print([p.edges for p in dg.decoration.paths])

# %% [markdown]
# A curve through all four points must visit them as p0, p2, p1, p3.
# Other orders have no decoration at all.

# %%
for perm in itertools.permutations((1, 2, 3)):
    cyc = (0,) + perm
    found = distinct_decorations(torus, [("circle", cyc)])
    orders = {stratum_cycle(d, 0) for d in found}
    print(cyc, len(found), sorted(orders))

first = distinct_decorations(torus, [("circle", (0, 2, 1, 3))])[0]
print(dg_canonical(first))
print(dg_dot(first))
