"""Two-modular Fourier transform (TMFT) of f: C_2^n -> R and its inverse.

The k-th coefficient is the 2^k x 2^k matrix ``F_k = sum_g f(g) E_{tau_k(g)}``
and ``F_0`` is the plain sum of f.  Each ``F_k`` is determined by its first
row, so a :class:`Spectrum` stores first rows only; entry c of row k is the
sum of f(g) over the g whose label tau_k(g) is a supermask of c.

All three algorithms count ring additions the way the complexity analysis
does: naive per-entry sums, the DC entry computed once and copied, the
all-zero label skipped when folding partial sums, and one memoised corner
table per level in the inverse.  The measured totals are

    direct    3^(n+1) - (n+4) 2^n + n + 1
    fast      (3^(n+1) + 1)/2 - 2^(n+1)
    inverse   (3^(n+1) + 1)/2 + (n-2) 2^n
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .group import LabelingScheme, as_scheme, tau_bits, tau_table
from .repmat import RepLabel, RingMatrix, reconstruct_from_first_row, submasks, supermasks
from .ring import OpCounter, Ring, counting_ring


class SpectrumError(ValueError):
    """A spectrum violates its structural invariants."""


def _naive_sum(add, terms):
    it = iter(terms)
    acc = next(it)
    for t in it:
        acc = add(acc, t)
    return acc


@dataclass(frozen=True)
class Signal:
    n: int
    ring: Ring
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != 1 << self.n:
            raise ValueError(f"signal needs {1 << self.n} values, got {len(self.values)}")
        for v in self.values:
            self.ring.check(v)

    def __getitem__(self, j):
        return self.values[j]

    def __len__(self):
        return len(self.values)

    def __add__(self, other: "Signal") -> "Signal":
        _same(self, other)
        return Signal(self.n, self.ring, [self.ring.add(a, b) for a, b in zip(self, other)])

    def scale(self, alpha: int) -> "Signal":
        return Signal(self.n, self.ring, [self.ring.mul(alpha, a) for a in self.values])


@dataclass(frozen=True)
class Spectrum:
    """First rows of F_0, ..., F_n.  ``rows[0]`` is the 1-tuple (F_0,)."""

    n: int
    ring: Ring
    scheme: LabelingScheme
    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "scheme", as_scheme(self.scheme))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if len(self.rows) != self.n + 1:
            raise SpectrumError(f"expected {self.n + 1} rows, got {len(self.rows)}")
        for k, row in enumerate(self.rows):
            if len(row) != 1 << k:
                raise SpectrumError(f"row {k} has {len(row)} entries, expected {1 << k}")
            for v in row:
                self.ring.check(v)

    @property
    def dc(self):
        return self.rows[0][0]

    def validate(self):
        """Raise SpectrumError unless every row starts with the DC component."""
        for k, row in enumerate(self.rows):
            if row[0] != self.dc:
                raise SpectrumError(f"row {k} starts with {row[0]!r}, DC is {self.dc!r}")
        return self

    def __add__(self, other: "Spectrum") -> "Spectrum":
        _same_spectra(self, other)
        add = self.ring.add
        return self._replace_rows(
            [[add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def scale(self, alpha: int) -> "Spectrum":
        mul = self.ring.mul
        return self._replace_rows([[mul(alpha, a) for a in row] for row in self.rows])

    def _replace_rows(self, rows) -> "Spectrum":
        return Spectrum(self.n, self.ring, self.scheme, rows)


def _same(a: Signal, b: Signal):
    if a.n != b.n:
        raise ValueError(f"signals over C_2^{a.n} and C_2^{b.n}")
    if a.ring != b.ring:
        raise ValueError(f"signals over {a.ring.spec} and {b.ring.spec}")


def _same_spectra(a: Spectrum, b: Spectrum):
    if (a.n, a.ring, a.scheme) != (b.n, b.ring, b.scheme):
        raise SpectrumError("spectra differ in n, ring or labeling scheme")


def dirac(n: int, ring: Ring) -> Signal:
    return indicator(n, 0, ring)


def indicator(n: int, g0: int, ring: Ring) -> Signal:
    if not 0 <= g0 < (1 << n):
        raise ValueError(f"g0={g0} outside 0..2^{n}-1")
    return Signal(n, ring, [ring.one if j == g0 else ring.zero for j in range(1 << n)])


def basis_labels(n: int, k: int, scheme=LabelingScheme.TREE) -> list:
    """The label sequence [tau_k(g) for g in G] defining the k-th basis vector."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    return [RepLabel(k, b) for b in tau_table(n, k, scheme)]


def _trivial(f: Signal, scheme) -> tuple:
    return Spectrum(0, f.ring, scheme, [[f.values[0]]]), OpCounter()


def tmft_direct(f: Signal, scheme=LabelingScheme.TREE) -> tuple:
    """TMFT straight from the definition, one naive sum per first-row entry."""
    scheme = as_scheme(scheme)
    n = f.n
    if n == 0:
        return _trivial(f, scheme)
    ring = counting_ring(f.ring)
    add = ring.add
    vals = f.values
    rows = [None] * (n + 1)

    labels = tau_table(n, n, scheme)
    row_n = []
    for c in range(1 << n):
        row_n.append(_naive_sum(add, (vals[g] for g in range(1 << n) if labels[g] & c == c)))
    rows[n] = row_n
    dc = row_n[0]
    rows[0] = [dc]

    for k in range(1, n):
        labels = tau_table(n, k, scheme)
        row = [dc]
        for c in range(1, 1 << k):
            row.append(_naive_sum(add, (vals[g] for g in range(1 << n) if labels[g] & c == c)))
        rows[k] = row
    return Spectrum(n, f.ring, scheme, rows), ring.counter


def fold_pairs(n: int, k: int, scheme=LabelingScheme.TREE) -> list:
    """For each level-k label b, the two level-(k+1) labels that fold into it.

    Under the tree labeling these are ``0||b`` and ``1||complement(b)``.
    """
    scheme = as_scheme(scheme)
    pairs = [[] for _ in range(1 << k)]
    for s in range(1 << (k + 1)):
        pairs[tau_bits(n, k, s, scheme)].append(tau_bits(n, k + 1, s, scheme))
    return [tuple(sorted(p)) for p in pairs]


def _superset_row(add, coeff, k, skip_zero):
    row = []
    for c in range(1 << k):
        if skip_zero and c == 0:
            continue
        row.append(_naive_sum(add, (coeff[b] for b in supermasks(c, k))))
    return row


def tmft_fast(f: Signal, scheme=LabelingScheme.TREE) -> tuple:
    """Fast TMFT: collect samples sharing a basis matrix before expanding.

    Level n places each sample on its own label.  Going down a level, the
    coefficient of label b is the sum of its two children in the labeling
    tree; the all-zero label is never needed and is skipped.  Row k is then
    the supermask sum of the level-k coefficients, with entry 0 taken from
    the DC component computed at level n.
    """
    scheme = as_scheme(scheme)
    n = f.n
    if n == 0:
        return _trivial(f, scheme)
    ring = counting_ring(f.ring)
    add = ring.add
    rows = [None] * (n + 1)

    coeff = [ring.zero] * (1 << n)
    for j, b in enumerate(tau_table(n, n, scheme)):
        coeff[b] = f.values[j]
    rows[n] = _superset_row(add, coeff, n, skip_zero=False)
    dc = rows[n][0]
    rows[0] = [dc]

    for k in range(n - 1, 0, -1):
        coeff = _fold(add, coeff, fold_pairs(n, k, scheme), skip_zero=True)
        rows[k] = [dc] + _superset_row(add, coeff, k, skip_zero=True)
    return Spectrum(n, f.ring, scheme, rows), ring.counter


def _fold(add, coeff, pairs, skip_zero):
    folded = [None] * len(pairs)
    for b in range(1 if skip_zero else 0, len(pairs)):
        lo, hi = pairs[b]
        folded[b] = add(coeff[lo], coeff[hi])
    return folded


def fast_coefficients(f: Signal, scheme=LabelingScheme.TREE) -> list:
    """Per-level coefficients of the fast TMFT, ``F_k = sum_b coeffs[k][b] E_b``.

    Same folding as :func:`tmft_fast` but uncounted and with the all-zero
    label kept, so every grouping of samples is visible.  ``coeffs[0]`` is
    ``[F_0]``.
    """
    scheme = as_scheme(scheme)
    n = f.n
    ring = f.ring
    coeff = [ring.zero] * (1 << n)
    for j, b in enumerate(tau_table(n, n, scheme)):
        coeff[b] = f.values[j]
    levels = [None] * (n + 1)
    levels[n] = coeff
    for k in range(n - 1, -1, -1):
        coeff = _fold(ring.add, coeff, fold_pairs(n, k, scheme), skip_zero=False)
        levels[k] = coeff
    return levels


def tmft(f: Signal, scheme=LabelingScheme.TREE) -> Spectrum:
    return tmft_fast(f, scheme)[0]


def corner_table(row: Sequence, ring: Ring) -> list:
    """``Phi(F_k E_b)`` for every k-bit label b, from the first row of F_k.

    The corner of ``F_k E_b`` pairs the first row of F_k with the last
    column of E_b, whose support is {r : NOT r is a submask of b}.
    """
    k = len(row).bit_length() - 1
    full = (1 << k) - 1
    add = ring.add
    return [
        _naive_sum(add, (row[full ^ sub] for sub in submasks(b)))
        for b in range(1 << k)
    ]


def itmft(F: Spectrum) -> tuple:
    """Inverse TMFT: f_j = F_0 + sum_k Phi(F_k E_{tau_k(j)})."""
    F.validate()
    n = F.n
    if n == 0:
        return Signal(0, F.ring, [F.dc]), OpCounter()
    ring = counting_ring(F.ring)
    add = ring.add
    tables = [None] + [corner_table(F.rows[k], ring) for k in range(1, n + 1)]
    labels = [None] + [tau_table(n, k, F.scheme) for k in range(1, n + 1)]
    out = []
    for j in range(1 << n):
        acc = F.dc
        for k in range(1, n + 1):
            acc = add(acc, tables[k][labels[k][j]])
        out.append(acc)
    return Signal(n, F.ring, out), ring.counter


def coefficient_matrix(F: Spectrum, k: int) -> RingMatrix:
    """Dense F_k rebuilt from its stored first row."""
    if not 0 <= k <= F.n:
        raise ValueError(f"k={k} outside 0..{F.n}")
    return reconstruct_from_first_row(F.rows[k], F.ring)


def coefficient_matrix_dense(f: Signal, k: int, scheme=LabelingScheme.TREE) -> RingMatrix:
    """F_k = sum_g f(g) E_{tau_k(g)} accumulated entry by entry (reference path)."""
    from .repmat import e_matrix

    ring = f.ring
    size = 1 << k
    acc = [[ring.zero] * size for _ in range(size)]
    for g, b in enumerate(tau_table(f.n, k, scheme)):
        E = e_matrix(RepLabel(k, b))
        for r, c in zip(*E.nonzero()):
            acc[r][c] = ring.add(acc[r][c], f.values[g])
    return RingMatrix(ring, acc)
