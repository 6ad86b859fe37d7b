"""The binary group G = C_2^n, its subgroup chain and the labeling maps.

Group elements are n-bit vectors ``(b_1, ..., b_n)`` identified with the
integer ``sum b_i 2^(n-i)``; b_1 is the most significant bit.  The chain is

    H_k = vectors whose first n-k bits are zero   (low k bits free)
    G/H_k = vectors whose last k bits are zero
    d_k = the vector with only bit n-k+1 set      (integer 2^(k-1))

so every g splits uniquely as ``u + eps*d_k + v`` with u in H_k/<d_k>
(the low k-1 bits), eps in {0, 1} and v in G/H_k.

Two labelings tau_k: G -> C_2^k are provided.  Writing s = (s_1, ..., s_k)
for the low k bits of g, MSB first:

* ``tree``: t_i = s_1 + ... + s_i (prefix parity).  This is the labeling of
  the basis table and the labeling trees; it is the default.
* ``flat``: t_1 = s_1 and t_i = s_i + s_1, i.e. sigma_k(u) when eps = 0 and
  its complement when eps = 1.

Both are linear, surjective, have kernel G/H_k and send d_k to all-ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .repmat import RepLabel


class LabelingScheme(str, Enum):
    TREE = "tree"
    FLAT = "flat"

    def __str__(self):
        return self.value


def as_scheme(scheme) -> LabelingScheme:
    try:
        return LabelingScheme(scheme)
    except ValueError:
        raise ValueError(f"unknown labeling scheme {scheme!r}") from None


@dataclass(frozen=True, order=True)
class GroupElement:
    n: int
    index: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0 <= self.index < (1 << self.n):
            raise ValueError(f"index {self.index} outside 0..2^{self.n}-1")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "GroupElement":
        return cls(len(bits), decimal_of_bits(bits))

    @property
    def bits(self) -> tuple:
        return bits_of_decimal(self.index, self.n)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"cannot add elements of C_2^{self.n} and C_2^{other.n}")
        return GroupElement(self.n, self.index ^ other.index)

    __xor__ = __add__

    def __str__(self):
        return "".join(map(str, self.bits))


def _index(n: int, g) -> int:
    if isinstance(g, GroupElement):
        if g.n != n:
            raise ValueError(f"element of C_2^{g.n} used where C_2^{n} expected")
        return g.index
    if not 0 <= g < (1 << n):
        raise ValueError(f"group index {g} outside 0..2^{n}-1")
    return g


def _check_k(n: int, k: int, lo: int = 1):
    if not lo <= k <= n:
        raise ValueError(f"k={k} outside {lo}..{n}")


def decimal_of_bits(bits: Sequence[int]) -> int:
    value = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"bit value {b!r}")
        value = (value << 1) | b
    return value


def bits_of_decimal(j: int, n: int) -> tuple:
    if not 0 <= j < (1 << n):
        raise ValueError(f"{j} does not fit in {n} bits")
    return tuple((j >> (n - 1 - i)) & 1 for i in range(n))


def d_element(n: int, k: int) -> GroupElement:
    _check_k(n, k)
    return GroupElement(n, 1 << (k - 1))


SUBGROUPS = ("H_k", "G_mod_Hk", "Hk_mod_dk")


def enumerate_subgroup(n: int, k: int, which: str) -> list:
    """Elements of H_k, G/H_k or H_k/<d_k> in increasing order."""
    _check_k(n, k)
    if which == "H_k":
        idx = range(1 << k)
    elif which == "G_mod_Hk":
        idx = (v << k for v in range(1 << (n - k)))
    elif which == "Hk_mod_dk":
        idx = range(1 << (k - 1))
    else:
        raise ValueError(f"unknown subgroup {which!r}")
    return [GroupElement(n, i) for i in idx]


def decompose(n: int, k: int, g) -> tuple:
    """Split g into (u, eps, v) with g = u + eps*d_k + v."""
    _check_k(n, k)
    g = _index(n, g)
    low = (1 << (k - 1)) - 1
    return g & low, (g >> (k - 1)) & 1, g & ~((1 << k) - 1)


def sigma(n: int, k: int, u) -> RepLabel:
    """Drop the leading n-k zero bits of u in H_k/<d_k>: (0, b_{n-k+2}, ..., b_n)."""
    _check_k(n, k)
    u = _index(n, u)
    if u >> (k - 1):
        raise ValueError(f"{u} is not in H_{k}/<d_{k}> for n={n}")
    return RepLabel(k, u)


def sigma_bar(n: int, k: int, u) -> RepLabel:
    return sigma(n, k, u).complement


def _prefix_parity(s: int, k: int) -> int:
    # MSB-first running XOR; equivalent to s ^ (s >> 1) ^ (s >> 2) ^ ...
    t = s
    shift = 1
    while shift < k:
        t ^= t >> shift
        shift <<= 1
    return t


def tau_bits(n: int, k: int, g: int, scheme=LabelingScheme.TREE) -> int:
    """Label bits of tau_k(g) as an int (hot path; no validation of g)."""
    s = g & ((1 << k) - 1)
    if k == 0:
        return 0
    if LabelingScheme(scheme) is LabelingScheme.TREE:
        return _prefix_parity(s, k)
    top = (s >> (k - 1)) & 1
    return s ^ (((1 << (k - 1)) - 1) if top else 0)


def tau(n: int, k: int, g, scheme=LabelingScheme.TREE) -> RepLabel:
    _check_k(n, k, lo=0)
    return RepLabel(k, tau_bits(n, k, _index(n, g), as_scheme(scheme)))


def tau_table(n: int, k: int, scheme=LabelingScheme.TREE) -> list:
    """``tau_bits`` for every g in 0..2^n-1."""
    scheme = as_scheme(scheme)
    _check_k(n, k, lo=0)
    low = [tau_bits(n, k, s, scheme) for s in range(1 << k)]
    mask = (1 << k) - 1
    return [low[g & mask] for g in range(1 << n)]


def tau_recursive(n: int, k: int, g, scheme=LabelingScheme.TREE) -> RepLabel:
    """Reference labeling following the constructions literally.

    ``flat``: decompose g = u + eps*d_k + v and return sigma_k(u) or its
    complement.  ``tree``: walk the labeling tree from the root; going from
    level j-1 to level j prepends 0 to the parent label when the d_j bit of g
    is clear, and prepends 1 to the complemented parent label otherwise.
    """
    scheme = as_scheme(scheme)
    _check_k(n, k, lo=0)
    g = _index(n, g)
    if k == 0:
        return RepLabel(0, 0)
    if scheme is LabelingScheme.FLAT:
        u, eps, _ = decompose(n, k, g)
        return sigma_bar(n, k, u) if eps else sigma(n, k, u)
    label = RepLabel(0, 0)
    for j in range(1, k + 1):
        if (g >> (j - 1)) & 1:
            label = RepLabel(j, (1 << (j - 1)) | label.complement.bits)
        else:
            label = RepLabel(j, label.bits)
    return label
