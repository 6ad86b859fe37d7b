"""Convolution over C_2^n, directly and through the transform.

``(r * s)(g) = sum_{g'} r(g' + g) s(g')``.  Under the transform the
convolution becomes the coefficient-wise matrix product r_k s_k.  Because
spectra keep first rows only, the product is evaluated as the first row of
r_k times the dense s_k recovered by block copying.
"""

from __future__ import annotations

from .group import GroupElement, as_scheme
from .repmat import reconstruct_from_first_row, row_times_binary
from .ring import OpCounter, counting_ring
from .transform import Signal, Spectrum, SpectrumError, _same, _same_spectra, itmft, tmft_fast


def convolve_direct(r: Signal, s: Signal) -> tuple:
    """Textbook group convolution: 4^n multiplications, 2^n (2^n - 1) additions."""
    _same(r, s)
    ring = counting_ring(r.ring)
    add, mul = ring.add, ring.mul
    size = 1 << r.n
    out = []
    for g in range(size):
        acc = mul(r.values[g], s.values[0])
        for h in range(1, size):
            acc = add(acc, mul(r.values[h ^ g], s.values[h]))
        out.append(acc)
    return Signal(r.n, r.ring, out), ring.counter


def spectral_product(R: Spectrum, S: Spectrum) -> tuple:
    """Coefficient-wise product: row k is the first row of R_k @ S_k.

    Structurally zero entries of S_k (r not a submask of c) are skipped, so
    row k costs 3^k multiplications and 3^k - 2^k additions.
    """
    _same_spectra(R, S)
    R.validate()
    S.validate()
    ring = counting_ring(R.ring)
    add, mul = ring.add, ring.mul
    rows = [[mul(R.dc, S.dc)]]
    for k in range(1, R.n + 1):
        dense = reconstruct_from_first_row(S.rows[k], R.ring).rows
        left = R.rows[k]
        row = []
        for c in range(1 << k):
            acc = None
            for r in range(1 << k):
                if r & c != r:
                    continue
                term = mul(left[r], dense[r][c])
                acc = term if acc is None else add(acc, term)
            row.append(acc)
        rows.append(row)
    return Spectrum(R.n, R.ring, R.scheme, rows), ring.counter


def convolve_via_tmft(r: Signal, s: Signal, scheme="tree") -> tuple:
    """r * s computed as inverse(transform(r) . transform(s)).

    The returned counter is the grand total; ``counter.stages`` holds the
    per-stage counters under ``tmft_r``, ``tmft_s``, ``product``,
    ``inverse`` and the combined transform-only tally ``transforms``.
    """
    _same(r, s)
    scheme = as_scheme(scheme)
    R, c_r = tmft_fast(r, scheme)
    S, c_s = tmft_fast(s, scheme)
    P, c_p = spectral_product(R, S)
    out, c_i = itmft(P)
    transforms = c_r + c_s + c_i
    total = transforms + c_p
    stages = {
        "tmft_r": c_r,
        "tmft_s": c_s,
        "product": c_p,
        "inverse": c_i,
        "transforms": transforms,
    }
    return out, OpCounter(total.additions, total.multiplications, stages)


def shift(f: Signal, a) -> Signal:
    """f shifted by a: g -> f(g + a)."""
    if isinstance(a, GroupElement):
        if a.n != f.n:
            raise ValueError("shift element has the wrong n")
        a = a.index
    if not 0 <= a < (1 << f.n):
        raise ValueError(f"shift {a} outside 0..2^{f.n}-1")
    return Signal(f.n, f.ring, [f.values[g ^ a] for g in range(1 << f.n)])


def shifted_spectrum(F: Spectrum, a: int) -> Spectrum:
    """Spectrum of the shifted signal predicted from F: row k becomes row_k(F_k E_{tau_k(a)})."""
    from .group import tau

    if not 0 <= a < (1 << F.n):
        raise SpectrumError(f"shift {a} outside 0..2^{F.n}-1")
    rows = [F.rows[0]]
    for k in range(1, F.n + 1):
        rows.append(row_times_binary(F.rows[k], tau(F.n, k, a, F.scheme), F.ring))
    return Spectrum(F.n, F.ring, F.scheme, rows)
