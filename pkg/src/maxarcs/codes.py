"""Binary codes of designs: weight distributions, distances, bounds, decoding."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .designs import Design, find_hyperovals
from .errors import (
    CapExceeded,
    DecodingFailure,
    InconsistentParameters,
    TheoremViolation,
    ZeroCode,
)
from .gf2 import (
    DEFAULT_CAP,
    BinaryCode,
    BitVector,
    dual_code,
    popcount,
    row_space,
    support,
    weight_counts,
)


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    counts: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.counts[i] if 0 <= i <= self.n else 0

    @property
    def size(self) -> int:
        return sum(self.counts)

    @property
    def min_distance(self) -> int | None:
        return next((i for i in range(1, self.n + 1) if self.counts[i]), None)

    def nonzero(self) -> dict[int, int]:
        return {i: a for i, a in enumerate(self.counts) if a}


def code_of_design(d: Design) -> BinaryCode:
    return row_space(d.incidence_matrix())


def krawtchouk_column(n: int, x: int) -> list[int]:
    """K_0(x)..K_n(x) for length n via the three-term recurrence in j."""
    out = [1, n - 2 * x]
    for j in range(1, n):
        nxt = (n - 2 * x) * out[j] - (n - j + 1) * out[j - 1]
        out.append(nxt // (j + 1))
    return out[: n + 1]


def macwilliams(dual_counts: Sequence[int], n: int) -> list[int]:
    """Weight distribution of C from that of its dual, in exact integers."""
    total = sum(dual_counts)
    acc = [0] * (n + 1)
    for x, b in enumerate(dual_counts):
        if not b:
            continue
        col = krawtchouk_column(n, x)
        for j in range(n + 1):
            acc[j] += b * col[j]
    out = []
    for a in acc:
        q, r = divmod(a, total)
        if r:
            raise ArithmeticError("MacWilliams transform produced a non-integer count")
        out.append(q)
    return out


def weight_distribution(c: BinaryCode, cap: int = DEFAULT_CAP) -> WeightDistribution:
    """Exact A_0..A_n, enumerating whichever of C and C-perp is smaller."""
    k, r = c.k, c.n - c.k
    if min(k, r) > cap:
        raise CapExceeded(min(k, r), cap)
    if k <= r:
        return WeightDistribution(c.n, tuple(weight_counts(c, cap)))
    dual = weight_counts(dual_code(c), cap)
    return WeightDistribution(c.n, tuple(macwilliams(dual, c.n)))


def parity_columns(c: BinaryCode) -> list[int]:
    """Columns of a parity-check matrix of C, packed as ints over the dual dimension."""
    h = dual_code(c)
    cols = [0] * c.n
    for i, row in enumerate(h.rows):
        for j in support(row):
            cols[j] |= 1 << i
    return cols


def low_weight_words(c: BinaryCode, w: int) -> list[tuple[int, ...]]:
    """Supports (0-based) of all codewords of weight exactly w <= 4.

    Works on column dependencies of the parity-check matrix, never on the
    full code.
    """
    if not 1 <= w <= 4:
        raise ValueError("w must be in 1..4")
    cols = parity_columns(c)
    n = c.n
    if w == 1:
        return [(j,) for j in range(n) if cols[j] == 0]
    if w == 2:
        return [(i, j) for i in range(n) for j in range(i + 1, n) if cols[i] == cols[j]]
    if w == 3:
        where: dict[int, list[int]] = {}
        for j, h in enumerate(cols):
            where.setdefault(h, []).append(j)
        out = []
        for i in range(n):
            for j in range(i + 1, n):
                for l in where.get(cols[i] ^ cols[j], ()):
                    if l > j:
                        out.append((i, j, l))
        return out
    pairs: dict[int, list[tuple[int, int]]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            pairs.setdefault(cols[i] ^ cols[j], []).append((i, j))
    out = set()
    for group in pairs.values():
        for a in range(len(group)):
            i, j = group[a]
            for b in range(a + 1, len(group)):
                k, l = group[b]
                if len({i, j, k, l}) == 4:
                    out.add(tuple(sorted((i, j, k, l))))
    return sorted(out)


def minimum_distance(c: BinaryCode, cap: int = DEFAULT_CAP) -> int:
    if c.k == 0:
        raise ZeroCode("the zero code has no minimum distance")
    try:
        return weight_distribution(c, cap).min_distance
    except CapExceeded:
        pass
    for w in range(1, 5):
        if low_weight_words(c, w):
            return w
    raise CapExceeded(min(c.k, c.n - c.k), cap)


# -- bounds -----------------------------------------------------------------

@dataclass(frozen=True)
class RankBounds:
    lower: int
    upper: int
    t: int
    d: int

    def __contains__(self, value: int) -> bool:
        return self.lower <= value <= self.upper


def ceil_log2(x: int) -> int:
    return (x - 1).bit_length()


def floor_log2(x: int) -> int:
    return x.bit_length() - 1


def ball_size(n: int, radius: int) -> int:
    return sum(comb(n, i) for i in range(radius + 1))


def rank_bounds(n: int, m: int, s: int, d: int, d_perp: int, has_hyperoval: bool | None = None) -> RankBounds:
    """Sphere-packing bounds on the 2-rank of a design with 2^s-point blocks and r = 2^m + 1.

    The lower bound packs the punctured dual, the upper bound the punctured
    code.  ``t`` is 2^(m-1) when d_perp = 2^m + 2 (hyperovals present) and
    d_perp/2 - 1 otherwise.
    """
    if not m >= s >= 1:
        raise InconsistentParameters("need m >= s >= 1")
    if n != 2 ** (m + s) - 2**m + 2**s:
        raise InconsistentParameters(f"n={n} does not match m={m}, s={s}")
    if d <= 0 or d % 2 or d_perp % 2:
        raise InconsistentParameters("d and d_perp must be positive and even")
    if d_perp < 2**m + 2:
        raise InconsistentParameters("d_perp below 2^m + 2")
    if has_hyperoval is not None and has_hyperoval != (d_perp == 2**m + 2):
        raise InconsistentParameters("hyperoval flag contradicts d_perp")
    t = 2 ** (m - 1) if d_perp == 2**m + 2 else d_perp // 2 - 1
    lower = 1 + ceil_log2(ball_size(n - 1, t))
    upper = n - 1 - floor_log2(ball_size(n - 1, d // 2 - 1))
    return RankBounds(lower, upper, t, d)


def sphere_packing_ok(n: int, k: int, d: int) -> bool:
    """True when an [n,k,d] binary code is not excluded by the Hamming bound."""
    return (1 << k) * ball_size(n, (d - 1) // 2) <= 1 << n


def punctured_sphere_packing_ok(n: int, k: int, d: int) -> bool:
    """Hamming bound applied to the punctured [n-1, k, d-1] code."""
    return sphere_packing_ok(n - 1, k, d - 1)


# -- decoding ---------------------------------------------------------------

@dataclass(frozen=True)
class DecodeResult:
    codeword: BitVector
    corrected_positions: frozenset[int]
    within_capacity: bool


def majority_logic_decode(d: Design, received: BitVector) -> DecodeResult:
    """One-step threshold decoding in C-perp using the blocks as parity checks.

    Coordinate j is flipped when more than half of the r blocks through j
    have odd parity on ``received``.
    """
    if received.length != d.v:
        raise ValueError(f"received word must have length {d.v}")
    masks = d.block_masks()
    x = received.bits
    odd = [popcount(x & bm) & 1 for bm in masks]
    flips = []
    for j, blocks in enumerate(d.blocks_through()):
        votes = sum(odd[i] for i in blocks)
        if 2 * votes > len(blocks):
            flips.append(j)
    y = x
    for j in flips:
        y ^= 1 << j
    if any(popcount(y & bm) & 1 for bm in masks):
        raise DecodingFailure("decoder output is not a codeword", BitVector(d.v, y))
    t = d.r // 2
    return DecodeResult(BitVector(d.v, y), frozenset(flips), len(flips) <= t)


# -- reports ----------------------------------------------------------------

def design_exponents(d: Design) -> tuple[int, int]:
    """(m, s) with block size 2^s and replication r = 2^m + 1."""
    s = d.k.bit_length() - 1
    m = (d.r - 1).bit_length() - 1
    if 1 << s != d.k or (1 << m) + 1 != d.r:
        raise InconsistentParameters("design does not have k = 2^s and r = 2^m + 1")
    return m, s


def check_minimum_words_are_blocks(d: Design, c: BinaryCode | None = None) -> dict:
    """Whether every minimum-weight word of C(D) is a block (conjectured for PG(2,2^m) arcs)."""
    if c is None:
        c = code_of_design(d)
    try:
        wd = weight_distribution(c)
        dmin = wd.min_distance
    except CapExceeded:
        wd, dmin = None, minimum_distance(c)
    blocks = {tuple(p - 1 for p in blk) for blk in d.blocks}
    report = {"label": d.label, "min_distance": dmin, "b": d.b}
    if dmin is not None and dmin <= 4:
        words = low_weight_words(c, dmin)
        report[f"A_{dmin}"] = len(words)
        if wd is not None and wd[dmin] != len(words):
            raise ArithmeticError("explicit low-weight search disagrees with the weight distribution")
        report["all_min_words_are_blocks"] = dmin == d.k and set(words) == blocks
    else:
        report["all_min_words_are_blocks"] = False
    report["A_4"] = wd[4] if wd is not None else len(low_weight_words(c, 4))
    return report


def verify_code_properties(d: Design, hyperovals: int | None = None, decode_trials: int = 200,
                           seed: int = 0) -> dict:
    """Check the structural claims for C(D) and C(D)-perp; raise TheoremViolation on failure."""
    m, s = design_exponents(d)
    c = code_of_design(d)
    cp = dual_code(c)
    ones = BitVector.ones(d.v)
    if ones not in c:
        raise TheoremViolation("all-one in C", "all-one vector not in C")
    if ones not in cp:
        raise TheoremViolation("all-one in C-perp", "all-one vector not in C-perp")
    wd = weight_distribution(c)
    wdp = weight_distribution(cp)
    if any(wd.counts[1::2]) or any(wdp.counts[1::2]):
        raise TheoremViolation("even weights", "odd-weight codeword found")
    dmin, dperp = wd.min_distance, wdp.min_distance
    if dmin % 2 or dmin > 2**s:
        raise TheoremViolation("minimum distance of C", f"d={dmin} not even or exceeds 2^s")
    if hyperovals is None:
        hyperovals = len(find_hyperovals(d))
    if dperp % 2:
        raise TheoremViolation("dual distance", f"d_perp={dperp} is odd")
    if hyperovals:
        if dperp != 2**m + 2:
            raise TheoremViolation("dual distance", f"hyperovals exist but d_perp={dperp}")
        if wdp[dperp] != hyperovals:
            raise TheoremViolation("hyperoval count", f"A_{dperp}={wdp[dperp]} != {hyperovals} hyperovals")
    elif dperp < 2**m + 4:
        raise TheoremViolation("dual distance", f"no hyperovals but d_perp={dperp}")
    bounds = rank_bounds(d.v, m, s, dmin, dperp, bool(hyperovals))
    if c.k not in bounds:
        raise TheoremViolation("rank bounds", f"rank {c.k} outside [{bounds.lower}, {bounds.upper}]")
    t = 2 ** (m - 1)
    rng = random.Random(seed)
    for _ in range(decode_trials):
        word = 0
        for row in cp.rows:
            if rng.random() < 0.5:
                word ^= row
        errs = rng.sample(range(d.v), rng.randint(0, t))
        noisy = word
        for j in errs:
            noisy ^= 1 << j
        out = majority_logic_decode(d, BitVector(d.v, noisy))
        if out.codeword.bits != word:
            raise TheoremViolation("majority decoding", f"failed with {len(errs)} errors")
    return {
        "label": d.label,
        "m": m,
        "s": s,
        "rank": c.k,
        "code": [d.v, c.k, dmin],
        "dual_code": [d.v, cp.k, dperp],
        "A_d_perp": wdp[dperp],
        "hyperovals": hyperovals,
        "rank_bounds": [bounds.lower, bounds.upper],
        "t": bounds.t,
        "decode_trials": decode_trials,
        "passed": True,
    }
