# %% [markdown]
# # Operation counts
#
# Closed forms for the three transforms next to the counts measured by the
# instrumented ring.

# %%
from tmft.complexity import cost_report, report_csv

rows = cost_report(1, 10, measured=True)
print(report_csv(rows))

# %% [markdown]
# The direct-to-fast ratio tends to 2 from below.

# %%
for row in cost_report(16, 20):
    print(row.n, f"{row.ratio:.4f}", row.direct_conv_mults, row.spectral_conv_adds)
