# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Escort pairs and Shannon entropy
#
# The escort of a pair is the fuzzy pair `(mu_hat, nu_hat)` that sums to
# one and has the same score.  The entropy of the pair is the binary
# Shannon entropy of `mu_hat`.

# %%
import decimal
from decimal import Decimal

import numpy as np

from ifsinfo import (
    FORMS,
    entropy,
    entropy_partials,
    entropy_variant,
    escort,
    fuzzy_shannon,
    incompleteness,
    make_pair,
    net_truth,
    score,
)
from ifsinfo.entropy import tau_pi_form

# %%
p = make_pair(0.2, 0.3)
h = escort(p)
print(h, "sum =", h.mu_hat + h.nu_hat, "diff =", h.mu_hat - h.nu_hat, "score =", score(p))
print("entropy (nats):", entropy(p), "=", fuzzy_shannon(h.mu_hat))

# %% [markdown]
# Five closed forms give the same number.

# %%
for form in FORMS:
    print(f"{form:>10}: {entropy_variant(p, form)!r}")

# %% [markdown]
# ## Partial derivatives
#
# In `(|tau|, pi)` coordinates the entropy falls with `|tau|` and rises with
# `pi`.  Check the analytic partials against central differences.  Near
# `tau = 0` the derivative in `pi` is of order `tau**2` and double-precision
# differences lose it, so the differences are taken in 40-digit decimals.

# %%
def central_differences(abs_tau, pi, h=Decimal("1e-6")):
    with decimal.localcontext(decimal.Context(prec=40)):
        a, b = Decimal(abs_tau), Decimal(pi)
        f = lambda x, y: tau_pi_form(x, y, log=Decimal.ln)
        return (
            float((f(a + h, b) - f(a - h, b)) / (2 * h)),
            float((f(a, b + h) - f(a, b - h)) / (2 * h)),
        )


for mu, nu in [(0.2, 0.3), (0.6, 0.1), (0.301, 0.3)]:
    q = make_pair(mu, nu)
    print((mu, nu), entropy_partials(q), central_differences(abs(net_truth(q)), incompleteness(q)))

# %%
rng = np.random.default_rng(0)
tau_pi = [(abs(a - b), 1 - a - b) for a, b in rng.random((5, 2)) / 2]
print([round(float(tau_pi_form(t, pi)), 6) for t, pi in tau_pi])
