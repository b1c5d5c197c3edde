# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Pairs, coordinates and the normalized distance
#
# An intuitionistic fuzzy pair stores a degree of truth `mu` and a degree of
# falsity `nu` with `mu + nu <= 1`.  The leftover `pi = 1 - mu - nu` is the
# incompleteness and `tau = mu - nu` the net truth.

# %%
import matplotlib.pyplot as plt
import numpy as np

from ifsinfo import (
    ambiguity,
    complement,
    distance,
    find_triangle_violation,
    from_secondary,
    incompleteness,
    l1_distance,
    make_pair,
    net_truth,
    similarity,
    to_secondary,
)

# %%
p = make_pair(0.2, 0.3)
print("pi    =", incompleteness(p))
print("tau   =", net_truth(p))
print("alpha =", ambiguity(p))
print("implicit coordinates:", to_secondary(p))
print("back again:         ", from_secondary(to_secondary(p)))
print("complement:         ", complement(p))

# %% [markdown]
# Values slightly outside the triangle (CSV round-off, say) are pulled onto
# the boundary; anything further out is rejected.

# %%
print(make_pair(0.6 + 4e-10, 0.4 + 2e-10))
try:
    make_pair(0.7, 0.7)
except ValueError as exc:
    print("rejected:", exc)

# %% [markdown]
# ## Distance and similarity
#
# The L1 distance is divided by the length of the detour through the corner
# `(1, 1)`, which is `2 + pi_p + pi_q`.  Pairs with more missing
# information are therefore judged closer.

# %%
a, b, c = make_pair(1, 0), make_pair(0, 1), make_pair(0, 0)
for x, y in [(a, b), (c, a), (p, p)]:
    print(tuple(x), tuple(y), "l1 =", l1_distance(x, y), "D =", round(distance(x, y), 6),
          "S =", round(similarity(x, y), 6))

# %% [markdown]
# The normalized distance is not a metric.  A search over the quarter-step
# lattice finds a triangle-inequality violation straight away.

# %%
P, Q, R = find_triangle_violation(0.25)
print("P, Q, R =", tuple(P), tuple(Q), tuple(R))
print("D(P,R) =", distance(P, R), "> D(P,Q) + D(Q,R) =", distance(P, Q) + distance(Q, R))

# %% [markdown]
# Distance from every lattice pair to the fully known pair `(1, 0)`.

# %%
mu, nu = np.meshgrid(np.linspace(0, 1, 101), np.linspace(0, 1, 101), indexing="ij")
inside = mu + nu <= 1 + 1e-12
dist = np.full(mu.shape, np.nan)
for i, j in zip(*np.nonzero(inside)):
    dist[i, j] = distance(make_pair(min(mu[i, j], 1 - nu[i, j]), nu[i, j]), a)

fig, ax = plt.subplots(figsize=(4, 3.5))
cs = ax.contourf(mu, nu, dist, levels=20)
fig.colorbar(cs, ax=ax, label="D(X, (1,0))")
ax.set_xlabel("mu")
ax.set_ylabel("nu")
plt.show()
