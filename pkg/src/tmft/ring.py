"""Finite commutative rings of characteristic 2.

Elements are plain Python ints holding an m-bit coefficient vector; bit i is
the coefficient of X^i (or bit i of the word for ``bitvec``).  Addition is
XOR for every kind.  Multiplication depends on the kind:

* ``bitvec``  -- (F_2^m, XOR, AND), the bitwise ring.  Its unit is the
  all-ones word.
* ``poly``    -- F_2[X]/phi(X) for an arbitrary degree-m modulus phi.
* ``gf``      -- F_2[X]/phi(X) with phi irreducible, i.e. the field GF(2^m).

Moduli are bit masks that include the leading X^m term, so GF(2^8) with the
AES polynomial is ``RingSpec("gf", 8, 0x11b)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

MAX_WIDTH = 64
KINDS = ("bitvec", "poly", "gf")

# Exhaustive divisor trial is used up to this width; above it the (exact)
# Ben-Or gcd test takes over because 2^(m/2) trial divisors is too many.
_EXHAUSTIVE_IRREDUCIBILITY_MAX = 24


class RingError(ValueError):
    """Invalid ring description or element."""


def clmul(a: int, b: int) -> int:
    """Carry-less product of two binary polynomials."""
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def poly_mod(a: int, m: int) -> int:
    """Remainder of ``a`` divided by the nonzero binary polynomial ``m``."""
    if m == 0:
        raise ZeroDivisionError("division by zero polynomial")
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def _mulmod(a: int, b: int, m: int) -> int:
    return poly_mod(clmul(a, b), m)


def is_irreducible_trial(phi: int) -> bool:
    """Irreducibility over F_2 by trying every divisor of degree <= deg/2."""
    d = phi.bit_length() - 1
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if poly_mod(phi, q) == 0:
            return False
    return True


def is_irreducible_benor(phi: int) -> bool:
    """Ben-Or test: phi has no factor of degree i iff gcd(phi, X^(2^i) - X) = 1."""
    d = phi.bit_length() - 1
    if d < 1:
        return False
    x = 0b10
    h = x
    for _ in range(d // 2):
        h = _mulmod(h, h, phi)
        if poly_gcd(phi, h ^ x) != 1:
            return False
    return True


def is_irreducible(phi: int) -> bool:
    if phi.bit_length() - 1 <= _EXHAUSTIVE_IRREDUCIBILITY_MAX:
        return is_irreducible_trial(phi)
    return is_irreducible_benor(phi)


@dataclass(frozen=True)
class RingSpec:
    kind: str
    m: int
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise RingError(f"unknown ring kind {self.kind!r}")
        if not 1 <= self.m <= MAX_WIDTH:
            raise RingError(f"width m={self.m} outside 1..{MAX_WIDTH}")
        if self.kind == "bitvec":
            if self.modulus is not None:
                raise RingError("bitvec rings take no modulus")
            return
        if self.modulus is None:
            raise RingError(f"{self.kind} ring needs a modulus")
        if self.modulus.bit_length() - 1 != self.m:
            raise RingError(
                f"modulus {self.modulus:#x} has degree "
                f"{self.modulus.bit_length() - 1}, expected {self.m}"
            )
        if self.kind == "gf" and not is_irreducible(self.modulus):
            raise RingError(f"modulus {self.modulus:#x} is reducible over F_2")

    @classmethod
    def parse(cls, text: str) -> "RingSpec":
        """Parse ``bitvec:<m>``, ``poly:<m>:<hex>`` or ``gf:<m>:<hex>``."""
        parts = text.strip().split(":")
        try:
            if parts[0] == "bitvec" and len(parts) == 2:
                return cls("bitvec", int(parts[1]))
            if parts[0] in ("poly", "gf") and len(parts) == 3:
                return cls(parts[0], int(parts[1]), int(parts[2], 16))
        except ValueError as exc:
            if isinstance(exc, RingError):
                raise
            raise RingError(f"malformed ring spec {text!r}") from exc
        raise RingError(f"malformed ring spec {text!r}")

    def __str__(self) -> str:
        if self.kind == "bitvec":
            return f"bitvec:{self.m}"
        return f"{self.kind}:{self.m}:{self.modulus:x}"


@dataclass(frozen=True)
class OpCounter:
    """Tally of ring operations; ``stages`` optionally breaks the total down."""

    additions: int = 0
    multiplications: int = 0
    stages: dict = field(default_factory=dict, compare=False)

    def __add__(self, other: "OpCounter") -> "OpCounter":
        return OpCounter(
            self.additions + other.additions,
            self.multiplications + other.multiplications,
        )


class Ring:
    """A finite commutative ring of characteristic 2 over m-bit words."""

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.m = spec.m
        self.mask = (1 << spec.m) - 1
        self.zero = 0
        self.one = self.mask if spec.kind == "bitvec" else 1
        self._phi = spec.modulus

    @property
    def kind(self) -> str:
        return self.spec.kind

    @property
    def size(self) -> int:
        return 1 << self.m

    def __eq__(self, other):
        return isinstance(other, Ring) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"Ring({self.spec})"

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if self._phi is None:
            return a & b
        return poly_mod(clmul(a, b), self._phi)

    def contains(self, a) -> bool:
        return isinstance(a, int) and 0 <= a <= self.mask

    def check(self, a: int) -> int:
        if not self.contains(a):
            raise RingError(f"{a!r} is not an element of {self.spec}")
        return a

    def elements(self):
        return range(self.size)

    def random_element(self, rng: random.Random) -> int:
        return rng.getrandbits(self.m)

    def parse(self, token: str) -> int:
        """Hex token to element; lowest bit is the constant coefficient."""
        try:
            value = int(token, 16)
        except ValueError as exc:
            raise RingError(f"bad hex element {token!r}") from exc
        if token.strip().startswith(("-", "+")) or value > self.mask:
            raise RingError(f"{token!r} does not fit in {self.m} bits")
        return value

    def format(self, a: int) -> str:
        return format(a, "x")


class CountingRing(Ring):
    """Delegating ring that tallies every add and mul it performs.

    One instance per computation; the tally is not thread safe.
    """

    def __init__(self, ring: Ring):
        super().__init__(ring.spec)
        self.inner = ring
        self.additions = 0
        self.multiplications = 0

    def add(self, a, b):
        self.additions += 1
        return self.inner.add(a, b)

    def mul(self, a, b):
        self.multiplications += 1
        return self.inner.mul(a, b)

    @property
    def counter(self) -> OpCounter:
        return OpCounter(self.additions, self.multiplications)


def make_ring(spec: RingSpec | str) -> Ring:
    if isinstance(spec, str):
        spec = RingSpec.parse(spec)
    return Ring(spec)


def counting_ring(ring: Ring) -> CountingRing:
    if isinstance(ring, CountingRing):
        ring = ring.inner
    return CountingRing(ring)
