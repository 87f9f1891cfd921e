"""Reeb graphs of optimal functions on closed surfaces."""
# %%
from sphere_morse.reeb import betti, enumerate_optimal_reeb, reeb_canonical
from sphere_morse.render import reeb_dot

# %% [markdown]
# An optimal function on a genus g surface has 2 + 2g critical points.
# Its Reeb graph has one minimum, one maximum and first Betti number g.

# %%
for g in range(3):
    graphs = enumerate_optimal_reeb(g)
    print(f"genus {g}: {len(graphs)} graph(s)")
    for r in graphs:
        print("   edges", [(s, t) for _, s, t in r.edges], "betti", betti(r))

# %% [markdown]
# The torus graph, as DOT text.  Pipe it into ``dot -Tsvg`` to draw it.

# %%
(torus,) = enumerate_optimal_reeb(1)
print(reeb_canonical(torus))
print(reeb_dot(torus, "torus"))
