"""Steiner 2-designs from maximal arcs, their resolutions and hyperovals."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .arcs import Arc
from .errors import NotPairwiseCompatible, ParseError
from .gf2 import BitMatrix, popcount

try:
    from ._xcover import exact_covers_compiled as _compiled
except ImportError:  # numba is optional
    _compiled = None


@dataclass(frozen=True)
class Design:
    v: int
    k: int
    blocks: tuple[tuple[int, ...], ...]
    label: str = ""
    # plane line id (1-based) of each block when the design comes from an arc
    block_lines: tuple[int, ...] | None = field(default=None, compare=False)
    plane_label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks))

    @property
    def b(self) -> int:
        return len(self.blocks)

    @property
    def r(self) -> int:
        return (self.v - 1) // (self.k - 1)

    def block_masks(self) -> list[int]:
        return [sum(1 << (p - 1) for p in blk) for blk in self.blocks]

    def blocks_through(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.v)]
        for i, blk in enumerate(self.blocks):
            for p in blk:
                out[p - 1].append(i)
        return out

    def incidence_matrix(self) -> BitMatrix:
        """b x v matrix, rows are blocks."""
        return BitMatrix(tuple(self.block_masks()), self.v)

    def relabeled(self, perm: Sequence[int], label: str | None = None) -> "Design":
        """Apply the point map p -> perm[p-1] (1-based images)."""
        blocks = tuple(tuple(sorted(perm[p - 1] for p in blk)) for blk in self.blocks)
        return Design(self.v, self.k, blocks, self.label if label is None else label)

    def __repr__(self) -> str:
        return f"<Design {self.label or ''} 2-({self.v},{self.k},1) b={self.b}>"


def steiner_violations(d: Design) -> list[tuple[int, int, int]]:
    """Point pairs (1-based) not covered exactly once, with their cover count."""
    cover: dict[tuple[int, int], int] = {}
    for blk in d.blocks:
        for pair in combinations(blk, 2):
            cover[pair] = cover.get(pair, 0) + 1
    bad = [(a, b, n) for (a, b), n in cover.items() if n != 1]
    for a, b in combinations(range(1, d.v + 1), 2):
        if (a, b) not in cover:
            bad.append((a, b, 0))
    return sorted(bad)


def is_steiner(d: Design) -> bool:
    if any(len(blk) != d.k for blk in d.blocks):
        return False
    if d.k < 2 or (d.v - 1) % (d.k - 1) or d.b * d.k * (d.k - 1) != d.v * (d.v - 1):
        return False
    return not steiner_violations(d)


def design_from_arc(a: Arc, label: str | None = None) -> Design:
    """Blocks are the k-secant intersections, points renumbered 1..|A| by plane index."""
    if a.degree < 2:
        raise ValueError("arc degree must be at least 2")
    index = {p: i + 1 for i, p in enumerate(a.points)}
    pts = set(a.points)
    blocks, lines = [], []
    for i, line in enumerate(a.plane.lines):
        meet = [index[p] for p in line if p in pts]
        if len(meet) == a.degree:
            blocks.append(tuple(meet))
            lines.append(i + 1)
    d = Design(len(a.points), a.degree, tuple(blocks), a.label if label is None else label,
               tuple(lines), a.plane.label)
    bad = steiner_violations(d)
    if bad:
        raise ValueError(f"arc does not yield a Steiner design: pair {bad[0][:2]} covered {bad[0][2]} times")
    return d


# -- exact cover -------------------------------------------------------------

def exact_covers(items: Iterable[int], options: Sequence[Sequence[int]], compiled: bool = True) -> Iterator[list[int]]:
    """All ways to cover ``items`` exactly once by the given options.

    Algorithm X on bitsets: the live options form one int, each item keeps
    the int of options containing it. Every node branches on the uncovered
    item with fewest live options and fails as soon as some item has none.
    Yields sorted lists of option indices.  Large instances go to a numba
    kernel running the same search when numba is installed.
    """
    item_list = list(items)
    pos = {it: i for i, it in enumerate(item_list)}
    holders = [0] * len(item_list)
    opt_items = []
    for j, opt in enumerate(options):
        m = 0
        for it in opt:
            holders[pos[it]] |= 1 << j
            m |= 1 << pos[it]
        opt_items.append(m)
    clash = []
    for m in opt_items:
        c = 0
        for i in _bits(m):
            c |= holders[i]
        clash.append(c)
    if compiled and _compiled is not None and item_list and len(opt_items) >= 64:
        yield from _compiled(len(item_list), holders, clash, opt_items)
        return
    partial: list[int] = []

    def solve(live: int, uncovered: int) -> Iterator[list[int]]:
        if not uncovered:
            yield sorted(partial)
            return
        best, best_n = 0, 1 << 30
        for i in _bits(uncovered):
            cand = live & holders[i]
            n = popcount(cand)
            if n < best_n:
                if n == 0:
                    return
                best, best_n = cand, n
        for j in _bits(best):
            partial.append(j)
            yield from solve(live & ~clash[j], uncovered & ~opt_items[j])
            partial.pop()

    yield from solve((1 << len(opt_items)) - 1, (1 << len(item_list)) - 1)


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True, order=True)
class ParallelClass:
    """Sorted 0-based block ids forming a partition of the point set."""

    block_ids: tuple[int, ...]

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.block_ids)


@dataclass(frozen=True, order=True)
class Resolution:
    """Parallel classes in canonical (sorted) order."""

    classes: tuple[ParallelClass, ...]

    @classmethod
    def of(cls, classes: Iterable[Iterable[int]]) -> "Resolution":
        return cls(tuple(sorted(ParallelClass(tuple(sorted(c))) for c in classes)))

    def masks(self) -> list[int]:
        return [c.mask for c in self.classes]


def enumerate_parallel_classes(d: Design) -> list[ParallelClass]:
    if d.v % d.k:
        raise ValueError("k must divide v")
    found = exact_covers(range(1, d.v + 1), d.blocks)
    return sorted(ParallelClass(tuple(c)) for c in found)


def enumerate_resolutions(d: Design, classes: Sequence[ParallelClass] | None = None) -> list[Resolution]:
    if classes is None:
        classes = enumerate_parallel_classes(d)
    found = exact_covers(range(d.b), [c.block_ids for c in classes])
    return sorted(Resolution(tuple(sorted(classes[j] for j in sol))) for sol in found)


def check_resolution(d: Design, res: Resolution) -> bool:
    seen = 0
    full_points = (1 << d.v) - 1
    masks = d.block_masks()
    for pc in res.classes:
        cover = 0
        for i in pc.block_ids:
            if cover & masks[i]:
                return False
            cover |= masks[i]
        if cover != full_points or seen & pc.mask:
            return False
        seen |= pc.mask
    return seen == (1 << d.b) - 1 and len(res.classes) == d.r


def compatible(r1: Resolution, r2: Resolution) -> bool:
    """Share exactly one class; every other pair of classes meets in <= 1 block."""
    m1, m2 = r1.masks(), r2.masks()
    shared = [(i, j) for i, a in enumerate(m1) for j, b in enumerate(m2) if a == b]
    if len(shared) != 1:
        return False
    si, sj = shared[0]
    for i, a in enumerate(m1):
        for j, b in enumerate(m2):
            if (i, j) != (si, sj) and popcount(a & b) > 1:
                return False
    return True


def resolutions_from_embedding(a: Arc, d: Design | None = None) -> list[Resolution]:
    """One resolution per exterior line: the secants through each of its points."""
    q, k = a.order, a.degree
    if q % k or q // k < 2:
        raise ValueError("need s = q/k >= 2")
    if d is None:
        d = design_from_arc(a)
    block_of_line = {line: i for i, line in enumerate(d.block_lines)}
    plane = a.plane
    out = []
    for ext in a.exterior_lines():
        classes = []
        for y in plane.lines[ext]:
            classes.append([block_of_line[l + 1] for l in plane.lines_through[y - 1] if l + 1 in block_of_line])
        out.append(Resolution.of(classes))
    return out


def max_compatible_bound_check(resolutions: Sequence[Resolution], s: int, k: int) -> dict:
    for i, j in combinations(range(len(resolutions)), 2):
        if not compatible(resolutions[i], resolutions[j]):
            raise NotPairwiseCompatible(i, j)
    m = len(resolutions)
    bound = (s * k - k + 1) * s
    return {"m": m, "bound": bound, "passed": m <= bound, "equality": m == bound}


def greedy_compatible_set(resolutions: Sequence[Resolution]) -> list[Resolution]:
    chosen: list[Resolution] = []
    for r in resolutions:
        if all(compatible(r, c) for c in chosen):
            chosen.append(r)
    return chosen


@dataclass(frozen=True, order=True)
class Hyperoval:
    points: tuple[int, ...]


def find_hyperovals(d: Design) -> list[Hyperoval]:
    """All (r+1)-sets meeting every block in 0 or 2 points.

    A set containing p that is to become a hyperoval must pick exactly one
    more point on every block through p, so the search repeatedly takes the
    block that meets the current set once and has fewest admissible points,
    and branches over those points. Each hyperoval is reached once, from its
    smallest point.
    """
    masks = d.block_masks()
    through = d.blocks_through()
    found: list[Hyperoval] = []

    def grow(s_mask: int, blocked: int) -> None:
        best_block, best_cand, best_n = -1, 0, 1 << 30
        rest = s_mask
        while rest:
            low = rest & -rest
            rest ^= low
            for bi in through[low.bit_length() - 1]:
                bm = masks[bi]
                if popcount(bm & s_mask) != 1:
                    continue
                cand = bm & ~s_mask & ~blocked
                n = popcount(cand)
                if n < best_n:
                    best_block, best_cand, best_n = bi, cand, n
                    if n == 0:
                        return
        if best_block < 0:
            pts = []
            x = s_mask
            while x:
                low = x & -x
                pts.append(low.bit_length())
                x ^= low
            found.append(Hyperoval(tuple(pts)))
            return
        cand = best_cand
        while cand:
            low = cand & -cand
            cand ^= low
            c = low.bit_length() - 1
            new_blocked = blocked | low
            for bi in through[c]:
                if masks[bi] & s_mask:
                    new_blocked |= masks[bi]
            grow(s_mask | low, new_blocked)
            # later siblings may not reuse c
            blocked |= low

    for p in range(d.v):
        grow(1 << p, (1 << p) - 1)
    return sorted(found)


# -- text formats --------------------------------------------------------------

def serialize_design(d: Design) -> str:
    label = (d.label or "design").replace(" ", "_")
    lines = [f"design {label} v {d.v} k {d.k}"]
    lines.extend(" ".join(map(str, blk)) for blk in d.blocks)
    return "\n".join(lines) + "\n"


def parse_design(text: str) -> Design:
    rows = [(n, ln.strip()) for n, ln in enumerate(text.splitlines(), 1) if ln.strip() and not ln.startswith("#")]
    if not rows:
        raise ParseError("empty design file")
    n, header = rows[0]
    tok = header.split()
    if len(tok) != 6 or tok[0] != "design" or tok[2] != "v" or tok[4] != "k":
        raise ParseError(f"bad header {header!r}", n)
    v, k = int(tok[3]), int(tok[5])
    blocks = []
    for line_no, line in rows[1:]:
        try:
            blk = tuple(int(x) for x in line.split())
        except ValueError:
            raise ParseError(f"bad block {line!r}", line_no) from None
        if len(blk) != k or min(blk) < 1 or max(blk) > v:
            raise ParseError(f"bad block {line!r}", line_no)
        blocks.append(blk)
    return Design(v, k, tuple(blocks), tok[1])


def serialize_resolution(res: Resolution) -> str:
    """One line per parallel class, 1-based block ids."""
    return "\n".join(" ".join(str(i + 1) for i in pc.block_ids) for pc in res.classes) + "\n"


def parse_resolution(text: str) -> Resolution:
    classes = []
    for line in text.splitlines():
        if line.strip():
            classes.append([int(x) - 1 for x in line.split()])
    return Resolution.of(classes)
