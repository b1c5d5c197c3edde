# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Fuzziness and incompleteness
#
# The normalized entropy splits into a fuzziness term, largest at
# `(0.5, 0.5)`, and an incompleteness term, largest at `(0, 0)`.  Below,
# both terms are swept over the triangle and drawn as contour maps.  The
# same table is available from the command line as
# `ifsinfo sweep --step 0.01 --measures E_SN,E_A,E_U`.

# %%
import matplotlib.pyplot as plt
import numpy as np

from ifsinfo import entropy_decomposition, jensen_bound, make_pair
from ifsinfo.cli import SweepConfig, sweep_rows

# %%
for mu, nu in [(0.5, 0.5), (0, 0), (0.2, 0.3), (1, 0)]:
    print((mu, nu), entropy_decomposition(make_pair(mu, nu)))

# %%
rows = np.array(sweep_rows(SweepConfig(0.02, ("E_SN", "E_A", "E_U"))))
mu, nu, e_sn, e_a, e_u = rows.T
print(len(rows), "lattice points")
print("max |E_A + E_U - E_SN| =", np.abs(e_a + e_u - e_sn).max())
print("E_A maximum at", rows[np.argmax(e_a), :2], " E_U maximum at", rows[np.argmax(e_u), :2])

# %%
slack = [jensen_bound(make_pair(a, b)) - f for a, b, f in zip(mu, nu, e_a)]
print("smallest Jensen slack:", min(slack))

# %%
fig, axes = plt.subplots(1, 3, figsize=(11, 3.2), sharey=True)
for ax, values, title in zip(axes, (e_sn, e_a, e_u), ("E_SN", "E_A", "E_U")):
    cs = ax.tricontourf(mu, nu, values, levels=20)
    fig.colorbar(cs, ax=ax)
    ax.set_title(title)
    ax.set_xlabel("mu")
axes[0].set_ylabel("nu")
fig.tight_layout()
plt.show()
