"""Closed-form operation counts and measured-vs-formula verification."""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass, fields

MAX_N = 38


def _check(n: int, lo: int = 1):
    if not lo <= n <= MAX_N:
        raise ValueError(f"n={n} outside {lo}..{MAX_N}")


def _half(x: int) -> int:
    q, rem = divmod(x, 2)
    assert rem == 0, f"{x} is odd"
    return q


def cost_fast_tmft(n: int) -> int:
    """Ring additions of the fast TMFT: (3^(n+1) + 1)/2 - 2^(n+1)."""
    _check(n)
    return _half(3 ** (n + 1) + 1) - 2 ** (n + 1)


def cost_fast_tmft_sum(n: int) -> int:
    _check(n)
    return sum(3**k - 2**k for k in range(1, n + 1))


def cost_tmft(n: int) -> int:
    """Ring additions of the direct TMFT: 3^(n+1) - (n+4) 2^n + n + 1."""
    _check(n)
    return 3 ** (n + 1) - (n + 4) * 2**n + n + 1


def cost_tmft_sum(n: int) -> int:
    _check(n)
    return (3**n - 2**n) + sum(
        2 ** (n - k) * (3**k - 2**k) - (2**k - 1) for k in range(1, n)
    )


def cost_itmft(n: int) -> int:
    """Ring additions of the inverse TMFT: (3^(n+1) + 1)/2 + (n-2) 2^n."""
    _check(n)
    return _half(3 ** (n + 1) + 1) + (n - 2) * 2**n


def cost_itmft_sum(n: int) -> int:
    _check(n)
    return sum(3**k - 2**k for k in range(1, n + 1)) + n * 2**n


def cost_direct_convolution(n: int) -> int:
    """Ring multiplications of the direct convolution: 4^n."""
    _check(n)
    return 4**n


def cost_spectral_convolution(n: int) -> int:
    """Transform-stage additions of convolution by transform: 3/2 (3^(n+1) - 2^(n+2) + 1) + n 2^n."""
    _check(n)
    return 3 * _half(3 ** (n + 1) - 2 ** (n + 2) + 1) + n * 2**n


@dataclass
class CostRow:
    n: int
    fast_tmft: int
    tmft: int
    itmft: int
    ratio: float
    direct_conv_mults: int
    spectral_conv_adds: int
    measured_fast: int | None = None
    measured_tmft: int | None = None
    measured_itmft: int | None = None


MEASURE_MAX_N = 12


def measure_counts(n: int, ring=None, scheme="tree", rng=None) -> dict:
    """Run the instrumented transforms on a random signal and return their addition counts."""
    from .ring import make_ring
    from .transform import Signal, itmft, tmft_direct, tmft_fast

    ring = ring or make_ring("bitvec:8")
    rng = rng or random.Random(n)
    f = Signal(n, ring, [ring.random_element(rng) for _ in range(1 << n)])
    F, c_fast = tmft_fast(f, scheme)
    _, c_direct = tmft_direct(f, scheme)
    back, c_inv = itmft(F)
    if back != f:
        raise AssertionError("inverse transform did not reproduce the input")
    return {
        "fast": c_fast.additions,
        "tmft": c_direct.additions,
        "itmft": c_inv.additions,
    }


def verify_counts(n: int, ring=None, scheme="tree") -> dict:
    """Measured vs formula for all three transforms; values are (measured, formula, ok)."""
    got = measure_counts(n, ring, scheme)
    want = {"fast": cost_fast_tmft(n), "tmft": cost_tmft(n), "itmft": cost_itmft(n)}
    return {key: (got[key], want[key], got[key] == want[key]) for key in want}


def cost_report(n_min: int, n_max: int, measured: bool = False) -> list:
    if n_min > n_max:
        raise ValueError("empty n range")
    _check(n_min)
    _check(n_max)
    if measured and n_max > MEASURE_MAX_N:
        raise ValueError(f"measured columns are limited to n <= {MEASURE_MAX_N}")
    rows = []
    for n in range(n_min, n_max + 1):
        row = CostRow(
            n=n,
            fast_tmft=cost_fast_tmft(n),
            tmft=cost_tmft(n),
            itmft=cost_itmft(n),
            ratio=cost_tmft(n) / cost_fast_tmft(n),
            direct_conv_mults=cost_direct_convolution(n),
            spectral_conv_adds=cost_spectral_convolution(n),
        )
        if measured:
            got = measure_counts(n)
            row.measured_fast = got["fast"]
            row.measured_tmft = got["tmft"]
            row.measured_itmft = got["itmft"]
        rows.append(row)
    return rows


def report_csv(rows) -> str:
    names = [f.name for f in fields(CostRow)]
    if rows and rows[0].measured_fast is None:
        names = names[:7]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(names)
    for row in rows:
        out = []
        for name in names:
            v = getattr(row, name)
            out.append(f"{v:.6f}" if isinstance(v, float) else v)
        writer.writerow(out)
    return buf.getvalue()
