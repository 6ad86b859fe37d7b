"""Two-modular representation matrices of C_2^k.

``E_b`` is the Kronecker product of ``E_0 = I_2`` and ``E_1 = [[1, 1], [0, 1]]``
taken over the bits of ``b``, most significant bit first.  Row and column
indices of a 2^k x 2^k matrix are read as k-bit vectors with the same
MSB-first convention as group elements and labels.

The pure 0/1 matrices are returned as ``numpy.uint8`` arrays.  Matrices with
ring entries are :class:`RingMatrix` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .ring import Ring

E0 = np.array([[1, 0], [0, 1]], dtype=np.uint8)
E1 = np.array([[1, 1], [0, 1]], dtype=np.uint8)

MAX_DENSE_K = 20


@dataclass(frozen=True, order=True)
class RepLabel:
    """A k-bit label ``b`` naming the matrix ``E_b``.

    ``k = 0`` is allowed and names the 1x1 matrix ``[1]`` (the trivial
    representation used for the DC term).
    """

    k: int
    bits: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"label dimension k={self.k} must be >= 0")
        if not 0 <= self.bits < (1 << self.k):
            raise ValueError(f"label bits {self.bits} do not fit in k={self.k}")

    @classmethod
    def from_str(cls, text: str) -> "RepLabel":
        return cls(len(text), int(text, 2) if text else 0)

    @property
    def weight(self) -> int:
        return bin(self.bits).count("1")

    @property
    def complement(self) -> "RepLabel":
        return RepLabel(self.k, self.bits ^ ((1 << self.k) - 1))

    def __xor__(self, other: "RepLabel") -> "RepLabel":
        if other.k != self.k:
            raise ValueError("labels of different dimension")
        return RepLabel(self.k, self.bits ^ other.bits)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.k}b") if self.k else ""


def _as_label(label, k: int | None = None) -> RepLabel:
    if isinstance(label, RepLabel):
        return label
    if isinstance(label, str):
        return RepLabel.from_str(label)
    if k is None:
        raise TypeError("integer labels need an explicit k")
    return RepLabel(k, label)


def e_matrix(label, k: int | None = None, max_k: int = MAX_DENSE_K) -> np.ndarray:
    """Dense 0/1 matrix ``E_b`` built by repeated Kronecker products."""
    label = _as_label(label, k)
    if label.k > max_k:
        raise ValueError(f"refusing to materialise a 2^{label.k} square matrix")
    out = np.ones((1, 1), dtype=np.uint8)
    for i in range(label.k - 1, -1, -1):
        out = np.kron(out, E1 if (label.bits >> i) & 1 else E0)
    return out


def e_entry(label, r: int, c: int, k: int | None = None) -> int:
    """Entry ``E_b[r, c]`` without building the matrix.

    Nonzero exactly when r is a submask of c and r XOR c is a submask of b.
    """
    label = _as_label(label, k)
    size = 1 << label.k
    if not (0 <= r < size and 0 <= c < size):
        raise IndexError(f"({r}, {c}) outside a {size}x{size} matrix")
    return int((r & ~c) == 0 and ((r ^ c) & ~label.bits) == 0)


def e_first_row(label, k: int | None = None) -> int:
    """First row of ``E_b`` as a column bit mask (bit c set iff c is a submask of b)."""
    label = _as_label(label, k)
    mask = 0
    sub = label.bits
    while True:
        mask |= 1 << sub
        if sub == 0:
            break
        sub = (sub - 1) & label.bits
    return mask


def e_last_column(label, k: int | None = None) -> int:
    """Last column of ``E_b`` as a row bit mask (bit r set iff NOT r is a submask of b)."""
    label = _as_label(label, k)
    full = (1 << label.k) - 1
    mask = 0
    sub = label.bits
    while True:
        mask |= 1 << (full ^ sub)
        if sub == 0:
            break
        sub = (sub - 1) & label.bits
    return mask


def submasks(b: int):
    """All submasks of ``b``, largest first, ending with 0."""
    sub = b
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & b


def supermasks(c: int, k: int):
    """All k-bit supermasks of ``c``."""
    free = ((1 << k) - 1) & ~c
    for sub in submasks(free):
        yield c | sub


def _check_pow2(size: int) -> int:
    if size < 1 or size & (size - 1):
        raise ValueError(f"size {size} is not a power of two")
    return size.bit_length() - 1


class RingMatrix:
    """Square matrix of ring elements, stored row-major as tuples."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: Ring, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(r) for r in rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("RingMatrix must be square")
        self.ring = ring
        self.rows = rows

    @classmethod
    def from_binary(cls, ring: Ring, arr: np.ndarray) -> "RingMatrix":
        """Lift a 0/1 array to the ring's zero/one."""
        return cls(ring, [[ring.one if x else ring.zero for x in row] for row in arr])

    @classmethod
    def identity(cls, ring: Ring, size: int) -> "RingMatrix":
        return cls(
            ring,
            [[ring.one if i == j else ring.zero for j in range(size)] for i in range(size)],
        )

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def k(self) -> int:
        return _check_pow2(self.size)

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r][c]

    def __eq__(self, other):
        return (
            isinstance(other, RingMatrix)
            and self.ring == other.ring
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"RingMatrix({self.ring.spec}, {self.rows})"

    def first_row(self) -> tuple:
        return self.rows[0]

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        add = self.ring.add
        return RingMatrix(
            self.ring,
            [[add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def scale(self, alpha: int) -> "RingMatrix":
        mul = self.ring.mul
        return RingMatrix(self.ring, [[mul(alpha, a) for a in row] for row in self.rows])

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if other.size != self.size:
            raise ValueError("size mismatch")
        add, mul, zero = self.ring.add, self.ring.mul, self.ring.zero
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    acc = add(acc, mul(a, b))
                out_row.append(acc)
            out.append(out_row)
        return RingMatrix(self.ring, out)

    def is_upper_triangular(self) -> bool:
        z = self.ring.zero
        return all(self.rows[r][c] == z for r in range(self.size) for c in range(r))

    def is_antidiagonal_symmetric(self) -> bool:
        n = self.size - 1
        return all(
            self.rows[r][c] == self.rows[n - c][n - r]
            for r in range(self.size)
            for c in range(self.size)
        )


def phi(matrix) -> object:
    """Top-right corner of a 2^k x 2^k matrix (RingMatrix or array)."""
    if isinstance(matrix, RingMatrix):
        _check_pow2(matrix.size)
        return matrix.rows[0][-1]
    arr = np.asarray(matrix)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("phi needs a square matrix")
    _check_pow2(arr.shape[0])
    return arr[0, -1].item()


def reconstruct_from_first_row(row: Sequence[int], ring: Ring) -> RingMatrix:
    """Rebuild the full matrix in the span of {E_b} from its first row.

    Block-copy recursion: after stage j the top 2^j rows are known; the next
    2^j rows are those rows shifted right by 2^j inside every 2^(j+1) block
    of columns, with zeros elsewhere.  Only copies, no ring arithmetic.
    """
    k = _check_pow2(len(row))
    size = 1 << k
    zero = ring.zero
    v = [list(row)]
    for j in range(k):
        half = 1 << j
        w = [[zero] * size for _ in range(half)]
        for i in range(0, size - half, 2 * half):
            for r in range(half):
                w[r][i + half:i + 2 * half] = v[r][i:i + half]
        v.extend(w)
    return RingMatrix(ring, v)


def row_times_binary(row: Sequence[int], label, ring: Ring, k: int | None = None) -> tuple:
    """First row of ``M @ E_b`` given the first row of ``M`` (M in the span of {E_b}).

    Entry c is the sum of row[r] over the rows r with E_b[r, c] = 1.
    """
    label = _as_label(label, k)
    size = 1 << label.k
    if len(row) != size:
        raise ValueError("row length does not match label dimension")
    add = ring.add
    out = []
    for c in range(size):
        acc = ring.zero
        for r in range(size):
            if e_entry(label, r, c):
                acc = add(acc, row[r])
        out.append(acc)
    return tuple(out)
