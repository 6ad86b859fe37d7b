# %% [markdown]
# # Forward and inverse transform
#
# The spectrum stores the first row of each coefficient matrix F_k.
# Both the fast and the direct algorithm count every ring addition.

# %%
import random

from tmft import Signal, coefficient_matrix, itmft, make_ring, tmft_direct, tmft_fast
from tmft.fileio import format_spectrum
from tmft.selftest import one_hot_probe
from tmft.transform import fast_coefficients

f = one_hot_probe(3)  # sample j is the byte with only bit j set
F, counter = tmft_fast(f)
print(format_spectrum(F))
print("fast additions", counter.additions)
print("direct additions", tmft_direct(f)[1].additions)

# %% [markdown]
# ## Which samples share a basis matrix
#
# Each coefficient below is a bit mask of the samples it collects.

# %%
for k, coeffs in enumerate(fast_coefficients(f)):
    print(k, [format(c, "08b") for c in coeffs])

# %% [markdown]
# ## The full matrix from its first row

# %%
print(coefficient_matrix(F, 2))

# %% [markdown]
# ## Inverse

# %%
ring = make_ring("gf:8:11b")
rng = random.Random(1)
g = Signal(5, ring, [ring.random_element(rng) for _ in range(32)])
G, _ = tmft_fast(g, "flat")
back, cost = itmft(G)
print(back == g, cost.additions)
