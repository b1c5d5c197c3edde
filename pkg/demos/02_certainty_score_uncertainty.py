# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Certainty, score and uncertainty
#
# Certainty is the normalized distance between a pair and its complement.
# Dropping the absolute value gives the signed score, and one minus the
# certainty is the uncertainty.

# %%
import matplotlib.pyplot as plt
import numpy as np

from ifsinfo import certainty, complement, distance, make_pair, measure_report, score, uncertainty

# %%
for mu, nu in [(1, 0), (0, 1), (0.3, 0.3), (0.2, 0.3), (0.6, 0.1), (0, 0)]:
    print((mu, nu), measure_report(make_pair(mu, nu)))

# %%
p = make_pair(0.6, 0.1)
print(certainty(p), distance(p, complement(p)))

# %% [markdown]
# The score rises with `mu` and falls with `nu`.  It does not rise merely
# because `mu - nu` and `mu + nu` both grow.  With negative net truth,
# adding evidence on both sides pushes the score further down:

# %%
p1, p2 = make_pair(0.0, 0.5), make_pair(0.25, 0.75)
print("tau:", p1.mu - p1.nu, p2.mu - p2.nu, " mu+nu:", p1.mu + p1.nu, p2.mu + p2.nu)
print("score:", score(p1), score(p2))

# %% [markdown]
# Score along rays of constant net truth, as the incompleteness shrinks.

# %%
fig, ax = plt.subplots(figsize=(5, 3))
for tau in (-0.5, -0.2, 0.0, 0.2, 0.5):
    pis = np.linspace(0, 1 - abs(tau), 50)
    r = [score(make_pair((1 - pi + tau) / 2, (1 - pi - tau) / 2)) for pi in pis]
    ax.plot(pis, r, label=f"tau={tau}")
ax.set_xlabel("pi")
ax.set_ylabel("score")
ax.legend(fontsize=7)
plt.show()

# %%
print("uncertainty at (0.2, 0.3):", uncertainty(make_pair(0.2, 0.3)))
