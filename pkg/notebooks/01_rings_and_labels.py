# %% [markdown]
# # Rings, group elements and labels
#
# Coefficients live in a ring of characteristic 2. Elements are plain ints:
# bit i is the coefficient of x^i, or lane i of a bit vector.

# %%
from tmft import RepLabel, e_matrix, make_ring, phi, sigma, sigma_bar, tau
from tmft.group import decompose, enumerate_subgroup

gf = make_ring("gf:8:11b")   # the AES field
bv = make_ring("bitvec:8")
print(gf.mul(0x57, 0x83), hex(gf.mul(0x57, 0x83)))  # 0xc1
print(bv.mul(0b1100, 0b1010), bv.one)                # lane-wise AND, one is all ones

# %% [markdown]
# ## The group C_2^3
#
# Index j stands for the bit string of j, most significant bit first.
# H_k holds the elements supported on the low k bits.

# %%
n = 3
for k in (1, 2, 3):
    print(k, [e.index for e in enumerate_subgroup(n, k, "H_k")])
print(decompose(n, 3, 6))  # (u, eps, v)

# %% [markdown]
# ## Labels
#
# tau_k sends each group element to a k-bit label, i.e. to a matrix E_b.

# %%
for k in (1, 2, 3):
    print(k, [str(tau(n, k, g)) for g in range(8)])
print("flat", [str(tau(n, 3, g, "flat")) for g in range(8)])
print(sigma(3, 3, 3), sigma_bar(3, 3, 3))

# %% [markdown]
# ## Representation matrices

# %%
for b in ("00", "01", "10", "11"):
    E = e_matrix(RepLabel.from_str(b))
    print(b, E.tolist(), "corner", phi(E))
