# %% [markdown]
# # Convolution and shifts
#
# Convolution over C_2^n becomes a product of coefficient matrices in the
# transform domain.

# %%
import random

from tmft import Signal, convolve_direct, convolve_via_tmft, make_ring, shift, tmft_fast
from tmft.convolution import shifted_spectrum

ring = make_ring("poly:4:13")
rng = random.Random(2)


def rand_signal(n):
    return Signal(n, ring, [ring.random_element(rng) for _ in range(1 << n)])


r, s = rand_signal(4), rand_signal(4)
c1, direct = convolve_direct(r, s)
c2, spectral = convolve_via_tmft(r, s)
print(c1 == c2)
print("direct", direct)
for stage, cnt in spectral.stages.items():
    print(stage, cnt.additions, cnt.multiplications)

# %% [markdown]
# ## Shifting
#
# Shifting the signal by a multiplies F_k on the right by E_{tau_k(a)}.

# %%
f = rand_signal(4)
F, _ = tmft_fast(f)
for a in range(16):
    assert tmft_fast(shift(f, a))[0] == shifted_spectrum(F, a)
print("shift rule holds for all 16 shifts")
