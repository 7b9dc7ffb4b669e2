"""Exact linear algebra over GF(2) with rows packed into Python ints.

Coordinate ``j`` of a vector lives in bit ``j`` (least significant bit is
coordinate 0).  Python ints are arbitrary precision, so a row of length
n <= 273 is a handful of machine words and XOR/popcount run in C.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded

DEFAULT_CAP = 28


def popcount(x: int) -> int:
    return x.bit_count() if hasattr(x, "bit_count") else bin(x).count("1")


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond length")

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        """Build from 0-based coordinate indices."""
        bits = 0
        for j in support:
            bits |= 1 << j
        return cls(length, bits)

    @classmethod
    def ones(cls, length: int) -> "BitVector":
        return cls(length, (1 << length) - 1)

    @property
    def weight(self) -> int:
        return popcount(self.bits)

    def support(self) -> list[int]:
        return support(self.bits)

    def __getitem__(self, j: int) -> int:
        return (self.bits >> j) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if other.length != self.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    def dot(self, other: "BitVector") -> int:
        return popcount(self.bits & other.bits) & 1

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> j) & 1 else "0" for j in range(self.length))


def support(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


@dataclass(frozen=True)
class BitMatrix:
    """Ordered rows of equal length; row order is significant."""

    rows: tuple[int, ...]
    n_cols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        limit = 1 << self.n_cols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError("row has bits beyond n_cols")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "BitMatrix":
        """Build from a dense 0/1 nested list."""
        n_cols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            if len(row) != n_cols:
                raise ValueError("ragged matrix")
            bits = 0
            for j, x in enumerate(row):
                if x & 1:
                    bits |= 1 << j
            rows.append(bits)
        return cls(tuple(rows), n_cols)

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[int]], n_cols: int) -> "BitMatrix":
        return cls(tuple(BitVector.from_support(n_cols, s).bits for s in supports), n_cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> BitVector:
        return BitVector(self.n_cols, self.rows[i])

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.n_cols
        for i, r in enumerate(self.rows):
            for j in support(r):
                cols[j] |= 1 << i
        return BitMatrix(tuple(cols), self.n_rows)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n_cols)] for r in self.rows]


def _echelon(rows: Iterable[int]) -> dict[int, int]:
    """Return {pivot_bit: row} with each row's lowest set bit as its pivot."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            low = (r & -r).bit_length() - 1
            b = basis.get(low)
            if b is None:
                basis[low] = r
                break
            r ^= b
    return basis


def _reduced(basis: dict[int, int]) -> tuple[int, ...]:
    """Fully reduce an echelon basis and order rows by pivot."""
    pivots = sorted(basis)
    rows = {p: basis[p] for p in pivots}
    # eliminate each pivot bit from every other row; process high pivots first
    for p in reversed(pivots):
        bit = 1 << p
        rp = rows[p]
        for q in pivots:
            if q != p and rows[q] & bit:
                rows[q] ^= rp
    return tuple(rows[p] for p in pivots)


def rank(m: BitMatrix | Sequence[int]) -> int:
    rows = m.rows if isinstance(m, BitMatrix) else m
    return len(_echelon(rows))


@dataclass(frozen=True)
class BinaryCode:
    """Row space given by a canonical reduced row-echelon generator.

    Pivot columns are taken leftmost-first, so equal row spaces have
    identical ``rows`` tuples.
    """

    n: int
    rows: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.rows)

    dimension = k

    @property
    def generator(self) -> BitMatrix:
        return BitMatrix(self.rows, self.n)

    @property
    def pivots(self) -> list[int]:
        return [(r & -r).bit_length() - 1 for r in self.rows]

    def __contains__(self, v: BitVector | int) -> bool:
        x = v.bits if isinstance(v, BitVector) else v
        for r in self.rows:
            low = r & -r
            if x & low:
                x ^= r
        return x == 0

    def permuted(self, perm: Sequence[int]) -> "BinaryCode":
        """Image under the coordinate map j -> perm[j] (0-based)."""
        return row_space(BitMatrix(tuple(permute_bits(r, perm) for r in self.rows), self.n))

    def __str__(self) -> str:
        return f"[{self.n},{self.k}]"


def permute_bits(x: int, perm: Sequence[int]) -> int:
    out = 0
    while x:
        low = x & -x
        out |= 1 << perm[low.bit_length() - 1]
        x ^= low
    return out


def row_space(m: BitMatrix) -> BinaryCode:
    return BinaryCode(m.n_cols, _reduced(_echelon(m.rows)))


def code_from_rows(rows: Iterable[int], n: int) -> BinaryCode:
    return BinaryCode(n, _reduced(_echelon(rows)))


def dual_code(c: BinaryCode) -> BinaryCode:
    pivots = c.pivots
    pivot_set = set(pivots)
    null_rows = []
    for f in range(c.n):
        if f in pivot_set:
            continue
        v = 1 << f
        fbit = 1 << f
        for p, r in zip(pivots, c.rows):
            if r & fbit:
                v |= 1 << p
        null_rows.append(v)
    return code_from_rows(null_rows, c.n)


def iter_codeword_bits(c: BinaryCode, cap: int = DEFAULT_CAP) -> Iterator[int]:
    """Yield all 2^k codewords as ints in Gray-code order, zero first."""
    k = c.k
    if k > cap:
        raise CapExceeded(k, cap)
    rows = c.rows
    x = 0
    yield x
    for i in range(1, 1 << k):
        # bit that flips between gray(i-1) and gray(i)
        x ^= rows[(i & -i).bit_length() - 1]
        yield x


def enumerate_codewords(c: BinaryCode, cap: int = DEFAULT_CAP) -> Iterator[BitVector]:
    n = c.n
    for x in iter_codeword_bits(c, cap):
        yield BitVector(n, x)


def weight_counts(c: BinaryCode, cap: int = DEFAULT_CAP) -> list[int]:
    """Direct enumeration of A_0..A_n."""
    counts = [0] * (c.n + 1)
    for x in iter_codeword_bits(c, cap):
        counts[popcount(x)] += 1
    return counts
