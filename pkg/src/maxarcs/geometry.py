"""Finite fields GF(2^m), the Desarguesian plane PG(2,2^m), and plane files.

Point and line identifiers are 1-based throughout, matching the published
arc listings.  Internally generated PG(2,q) uses its own numbering; arcs
listed for the order-16 planes are only meaningful against the numbering
of the corresponding ingested plane file.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .errors import AxiomViolation, ParseError

DEFAULT_MODULI = {
    1: 0b11,  # x + 1
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
    5: 0b100101,  # x^5 + x^2 + 1
    6: 0b1000011,  # x^6 + x + 1
    7: 0b10000011,  # x^7 + x + 1
    8: 0b100011101,  # x^8 + x^4 + x^3 + x^2 + 1
}


def poly_mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in range(1 << d, 1 << (d + 1)):
            if poly_mod(poly, f) == 0:
                return False
    return True


class Gf2mField:
    """GF(2^m) with elements encoded as polynomial bitmasks 0..2^m-1."""

    def __init__(self, m: int, modulus: int | None = None):
        if m < 1 or m > 16:
            raise ValueError("m must be in 1..16")
        if modulus is None:
            modulus = DEFAULT_MODULI.get(m)
            if modulus is None:
                modulus = next(p for p in range(1 << m, 1 << (m + 1)) if is_irreducible(p))
        if modulus.bit_length() - 1 != m or not is_irreducible(modulus):
            raise ValueError(f"modulus {modulus:#b} is not irreducible of degree {m}")
        self.m = m
        self.q = 1 << m
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self):
        q = self.q
        table = [[0] * q for _ in range(q)]
        for a in range(q):
            row = table[a]
            for b in range(q):
                # carry-less multiply then reduce
                r = 0
                x, y = a, b
                while y:
                    if y & 1:
                        r ^= x
                    y >>= 1
                    x <<= 1
                row[b] = poly_mod(r, self.modulus) if r >= q else r
        self._mul = table
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if table[a][b] == 1:
                    self._inv[a] = b
                    break

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def square(self, a: int) -> int:
        return self._mul[a][a]

    def trace(self, a: int) -> int:
        """Absolute trace a + a^2 + ... + a^(2^(m-1)), an element of {0,1}."""
        t, x = 0, a
        for _ in range(self.m):
            t ^= x
            x = self.square(x)
        return t

    def __repr__(self) -> str:
        return f"Gf2mField(m={self.m}, modulus={self.modulus:#b})"


@dataclass(frozen=True)
class IncidenceStructure:
    n_points: int
    blocks: tuple[tuple[int, ...], ...]
    label: str = ""

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        for i, b in enumerate(blocks, 1):
            if b and (b[0] < 1 or b[-1] > self.n_points):
                raise ValueError(f"block {i} has a point outside 1..{self.n_points}")
            if len(set(b)) != len(b):
                raise ValueError(f"block {i} repeats a point")
        if len(set(blocks)) != len(blocks):
            raise ValueError("duplicate blocks")

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def block_masks(self) -> list[int]:
        """Blocks as bitmasks over 0-based point indices."""
        out = []
        for b in self.blocks:
            x = 0
            for p in b:
                x |= 1 << (p - 1)
            out.append(x)
        return out

    def blocks_through(self) -> list[list[int]]:
        """For each 1-based point (index p-1), the 0-based ids of blocks containing it."""
        out: list[list[int]] = [[] for _ in range(self.n_points)]
        for i, b in enumerate(self.blocks):
            for p in b:
                out[p - 1].append(i)
        return out

    def incidence_matrix(self):
        """Rows = blocks, columns = points."""
        from .gf2 import BitMatrix

        return BitMatrix(tuple(self.block_masks()), self.n_points)

    def relabeled(self, point_map: dict[int, int] | Sequence[int], label: str | None = None) -> "IncidenceStructure":
        if not isinstance(point_map, dict):
            point_map = {i + 1: p for i, p in enumerate(point_map)}
        blocks = tuple(tuple(sorted(point_map[p] for p in b)) for b in self.blocks)
        return IncidenceStructure(self.n_points, blocks, self.label if label is None else label)


@dataclass(frozen=True)
class ProjectivePlane:
    order: int
    structure: IncidenceStructure

    @property
    def label(self) -> str:
        return self.structure.label

    @property
    def n_points(self) -> int:
        return self.structure.n_points

    @property
    def lines(self) -> tuple[tuple[int, ...], ...]:
        return self.structure.blocks

    @cached_property
    def line_masks(self) -> list[int]:
        return self.structure.block_masks()

    @cached_property
    def lines_through(self) -> list[list[int]]:
        return self.structure.blocks_through()

    @cached_property
    def line_point_array(self) -> np.ndarray:
        """(n_lines, q+1) array of 0-based point indices."""
        return np.array(self.lines, dtype=np.int64) - 1

    @cached_property
    def point_line_array(self) -> np.ndarray:
        """(n_points, q+1) array of 0-based line indices."""
        return np.array(self.lines_through, dtype=np.int64)

    @cached_property
    def joining_line(self) -> np.ndarray:
        """joining_line[a, b] = 0-based line through 0-based points a != b."""
        n = self.n_points
        out = np.full((n, n), -1, dtype=np.int32)
        for i, pts in enumerate(self.line_point_array):
            out[np.ix_(pts, pts)] = i
        return out


def _normalize(v: tuple[int, int, int], field: Gf2mField) -> tuple[int, int, int]:
    for x in v:
        if x:
            s = field.inv(x)
            return tuple(field.mul(s, y) for y in v)
    raise ValueError("zero vector")


def pg2_points(field: Gf2mField) -> list[tuple[int, int, int]]:
    """Normalized homogeneous triples in lexicographic order."""
    q = field.q
    pts = [v for v in product(range(q), repeat=3) if any(v) and v[next(i for i, x in enumerate(v) if x)] == 1]
    return pts


def make_pg2(field: Gf2mField, label: str | None = None) -> ProjectivePlane:
    q = field.q
    pts = pg2_points(field)
    index = {v: i + 1 for i, v in enumerate(pts)}
    lines = []
    # line i is the kernel of the linear form given by point i's coordinates
    for a, b, c in pts:
        on = []
        for j, (x, y, z) in enumerate(pts, 1):
            if field.mul(a, x) ^ field.mul(b, y) ^ field.mul(c, z) == 0:
                on.append(j)
        lines.append(tuple(on))
    structure = IncidenceStructure(len(pts), tuple(lines), label or f"PG(2,{q})")
    plane = ProjectivePlane(q, structure)
    return plane


def point_index(field: Gf2mField, v: tuple[int, int, int]) -> int:
    """1-based index of the projective point spanned by v in make_pg2 numbering."""
    x0, x1, x2 = _normalize(v, field)
    q = field.q
    if x0 == 1:
        return q + 2 + x1 * q + x2
    if x1 == 1:
        return 2 + x2
    return 1


def check_plane(structure: IncidenceStructure, q: int) -> None:
    """Raise AxiomViolation unless ``structure`` is a projective plane of order q."""
    v = q * q + q + 1
    if structure.n_points != v:
        raise AxiomViolation(f"expected {v} points, got {structure.n_points}")
    if structure.n_blocks != v:
        raise AxiomViolation(f"expected {v} lines, got {structure.n_blocks}", ())
    for i, b in enumerate(structure.blocks, 1):
        if len(b) != q + 1:
            raise AxiomViolation(f"line {i} has {len(b)} points, expected {q + 1}", (None, i))
    cover = np.zeros((v, v), dtype=np.int32)
    arr = np.array(structure.blocks, dtype=np.int64) - 1
    for pts in arr:
        cover[np.ix_(pts, pts)] += 1
    np.fill_diagonal(cover, 1)
    bad = np.argwhere(cover != 1)
    if len(bad):
        a, b = (int(x) + 1 for x in bad[0])
        n = int(cover[a - 1, b - 1])
        lines = tuple(i for i, blk in enumerate(structure.blocks, 1) if a in blk and b in blk)
        raise AxiomViolation(f"points {a} and {b} lie on {n} common lines", (a, b, lines))
    degree = np.bincount(arr.ravel(), minlength=v)
    if (degree != q + 1).any():
        p = int(np.argmax(degree != q + 1)) + 1
        raise AxiomViolation(f"point {p} lies on {int(degree[p - 1])} lines", (p, None))


def plane_from_lines(lines: Iterable[Iterable[int]], q: int, label: str = "") -> ProjectivePlane:
    v = q * q + q + 1
    blocks = tuple(tuple(sorted(b)) for b in lines)
    if len(set(blocks)) != len(blocks):
        seen: dict[tuple, int] = {}
        for i, b in enumerate(blocks, 1):
            if b in seen:
                raise AxiomViolation(f"lines {seen[b]} and {i} are identical", (seen[b], i))
            seen[b] = i
    for i, b in enumerate(blocks, 1):
        if b and (b[0] < 1 or b[-1] > v):
            raise AxiomViolation(f"line {i} has a point outside 1..{v}", (None, i))
    structure = IncidenceStructure(v, blocks, label)
    check_plane(structure, q)
    return ProjectivePlane(q, structure)


def _content_lines(text: str):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield n, line


def _ints(line: str, line_no: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"non-integer token in {line!r}", line_no) from None


def parse_plane(text: str) -> ProjectivePlane:
    """Parse and validate the plane file format.

    Header ``plane <label> order <q>`` followed by q^2+q+1 lines of q+1
    ascending 1-based point indices; ``#`` lines are comments.
    """
    rows = list(_content_lines(text))
    if not rows:
        raise ParseError("empty plane file")
    n, header = rows[0]
    tok = header.split()
    if len(tok) != 4 or tok[0] != "plane" or tok[2] != "order":
        raise ParseError(f"bad header {header!r}", n)
    label = tok[1]
    try:
        q = int(tok[3])
    except ValueError:
        raise ParseError(f"bad order {tok[3]!r}", n) from None
    if q < 2:
        raise ParseError("order must be at least 2", n)
    v = q * q + q + 1
    body = rows[1:]
    if len(body) != v:
        raise ParseError(f"expected {v} lines, found {len(body)}", body[-1][0] if body else n)
    lines = []
    for i, (line_no, line) in enumerate(body, 1):
        pts = _ints(line, line_no)
        if len(pts) != q + 1:
            raise AxiomViolation(f"line {i} has {len(pts)} points, expected {q + 1}", (None, i))
        if any(a >= b for a, b in zip(pts, pts[1:])):
            raise ParseError(f"line {i} is not strictly ascending", line_no)
        lines.append(tuple(pts))
    return plane_from_lines(lines, q, label)


def serialize_plane(plane: ProjectivePlane) -> str:
    label = plane.label or "plane"
    out = [f"plane {label.replace(' ', '_')} order {plane.order}"]
    out.extend(" ".join(map(str, line)) for line in plane.lines)
    return "\n".join(out) + "\n"


def dual_plane(plane: ProjectivePlane, label: str | None = None) -> ProjectivePlane:
    """Point i of the result is line i of ``plane``; line j lists the lines through point j."""
    lines = tuple(tuple(i + 1 for i in through) for through in plane.lines_through)
    structure = IncidenceStructure(plane.n_points, lines, label if label is not None else f"{plane.label}^d")
    return ProjectivePlane(plane.order, structure)


@dataclass(frozen=True)
class ArcRecord:
    """Contents of an arc file."""

    label: str
    plane_label: str
    degree: int
    points: tuple[int, ...] = field(default=())


def parse_arc(text: str) -> ArcRecord:
    rows = list(_content_lines(text))
    if len(rows) < 2:
        raise ParseError("arc file needs a header and a point line")
    n, header = rows[0]
    tok = header.split()
    if len(tok) != 6 or tok[0] != "arc" or tok[2] != "plane" or tok[4] != "degree":
        raise ParseError(f"bad header {header!r}", n)
    try:
        degree = int(tok[5])
    except ValueError:
        raise ParseError(f"bad degree {tok[5]!r}", n) from None
    points: list[int] = []
    for line_no, line in rows[1:]:
        points.extend(_ints(line, line_no))
    if len(set(points)) != len(points):
        raise ParseError("repeated point in arc", rows[1][0])
    return ArcRecord(tok[1], tok[3], degree, tuple(points))


def serialize_arc(record: ArcRecord) -> str:
    return (
        f"arc {record.label} plane {record.plane_label} degree {record.degree}\n"
        + " ".join(map(str, record.points))
        + "\n"
    )
