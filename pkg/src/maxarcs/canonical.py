"""Canonical labeling of colored bipartite graphs and the isomorphism tests built on it.

The canonizer is a plain individualization-refinement search in the style
of nauty: equitable refinement with a FIFO splitter queue, individualization
of the first smallest non-singleton cell, leaf certificates compared
lexicographically, and pruning with the automorphisms discovered along the
way.  The automorphism group order is the product of the orbit lengths of
the first-path vertices in their pointwise stabilizers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .designs import Design
from .errors import CapExceeded
from .gf2 import DEFAULT_CAP, BinaryCode, dual_code, iter_codeword_bits, popcount, support


@dataclass(frozen=True)
class ColoredIncidenceGraph:
    """Bipartite graph; vertices 0..n_left-1 on the left, the rest on the right."""

    n_left: int
    n_right: int
    edges: tuple[tuple[int, int], ...]  # (left index, right index)
    left_colors: tuple[int, ...] = ()
    right_colors: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.left_colors:
            object.__setattr__(self, "left_colors", (0,) * self.n_left)
        if not self.right_colors:
            object.__setattr__(self, "right_colors", (0,) * self.n_right)
        if len(self.left_colors) != self.n_left or len(self.right_colors) != self.n_right:
            raise ValueError("one color per vertex required")

    @property
    def n(self) -> int:
        return self.n_left + self.n_right

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            if not (0 <= a < self.n_left and 0 <= b < self.n_right):
                raise ValueError(f"edge {(a, b)} out of range")
            adj[a].append(self.n_left + b)
            adj[self.n_left + b].append(a)
        return adj

    def colors(self) -> list[tuple[int, int]]:
        return [(0, c) for c in self.left_colors] + [(1, c) for c in self.right_colors]


@dataclass(frozen=True)
class CanonicalForm:
    edges: tuple[tuple[int, int], ...]
    automorphism_group_order: int
    labeling: tuple[int, ...]  # vertex -> canonical position
    color_signature: tuple = ()
    generators: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    def key(self) -> tuple:
        return (self.color_signature, self.edges)


class _Partition:
    """Ordered partition kept as a vertex array plus cell boundaries."""

    __slots__ = ("lab", "pos", "start", "end", "ncells")

    def __init__(self, lab, pos, start, end, ncells):
        self.lab = lab
        self.pos = pos
        self.start = start  # vertex -> start position of its cell
        self.end = end  # start position -> end position (exclusive)
        self.ncells = ncells

    def copy(self) -> "_Partition":
        return _Partition(self.lab[:], self.pos[:], self.start[:], self.end[:], self.ncells)


class _Canonizer:
    def __init__(self, g: ColoredIncidenceGraph):
        self.g = g
        self.n = g.n
        self.adj = g.adjacency()
        self.gens: list[list[int]] = []
        self.first = None
        self.best = None
        self.orbit_sizes: dict[int, int] = {}

    # -- refinement ----------------------------------------------------------

    def initial_partition(self) -> tuple[_Partition, list[int]]:
        colors = self.g.colors()
        order = sorted(range(self.n), key=lambda v: (colors[v], v))
        lab = order
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        start = [0] * self.n
        end = [0] * self.n
        cells = []
        i = 0
        while i < self.n:
            j = i
            while j < self.n and colors[lab[j]] == colors[lab[i]]:
                j += 1
            for t in range(i, j):
                start[lab[t]] = i
            end[i] = j
            cells.append(i)
            i = j
        return _Partition(lab, pos, start, end, len(cells)), cells

    def refine(self, p: _Partition, queue: list[int]) -> None:
        adj = self.adj
        lab, pos, start, end = p.lab, p.pos, p.start, p.end
        in_queue = set(queue)
        qi = 0
        while qi < len(queue) and p.ncells < self.n:
            ws = queue[qi]
            qi += 1
            in_queue.discard(ws)
            count: dict[int, int] = {}
            for u in lab[ws:end[ws]]:
                for x in adj[u]:
                    count[x] = count.get(x, 0) + 1
            touched: dict[int, list[int]] = {}
            for x in count:
                touched.setdefault(start[x], []).append(x)
            for cs in sorted(touched):
                ce = end[cs]
                size = ce - cs
                if size == 1:
                    continue
                hit = touched[cs]
                if len(hit) == size and len({count[x] for x in hit}) == 1:
                    continue
                members = lab[cs:ce]
                members.sort(key=lambda x: count.get(x, 0))
                # fragment boundaries in the sorted order
                frags = []
                i = 0
                while i < size:
                    c = count.get(members[i], 0)
                    j = i
                    while j < size and count.get(members[j], 0) == c:
                        j += 1
                    frags.append((cs + i, cs + j))
                    i = j
                for t, x in enumerate(members):
                    lab[cs + t] = x
                    pos[x] = cs + t
                for fs, fe in frags:
                    end[fs] = fe
                    for t in range(fs, fe):
                        start[lab[t]] = fs
                p.ncells += len(frags) - 1
                if cs in in_queue:
                    new = [fs for fs, _ in frags[1:]]
                else:
                    biggest = max(frags, key=lambda f: (f[1] - f[0], -f[0]))
                    new = [fs for fs, fe in frags if (fs, fe) != biggest]
                for fs in new:
                    if fs not in in_queue:
                        in_queue.add(fs)
                        queue.append(fs)

    def individualize(self, p: _Partition, v: int) -> _Partition:
        q = p.copy()
        cs = q.start[v]
        ce = q.end[cs]
        i = q.pos[v]
        w = q.lab[cs]
        q.lab[cs], q.lab[i] = v, w
        q.pos[v], q.pos[w] = cs, i
        q.end[cs] = cs + 1
        q.end[cs + 1] = ce
        for t in range(cs + 1, ce):
            q.start[q.lab[t]] = cs + 1
        q.ncells += 1
        self.refine(q, [cs])
        return q

    def target_cell(self, p: _Partition) -> list[int]:
        best_s, best_size = -1, self.n + 1
        s = 0
        while s < self.n:
            e = p.end[s]
            if 1 < e - s < best_size:
                best_s, best_size = s, e - s
                if best_size == 2:
                    break
            s = e
        return p.lab[best_s:best_s + best_size]

    # -- search --------------------------------------------------------------

    def certificate(self, p: _Partition) -> tuple:
        pos, adj = p.pos, self.adj
        return tuple(tuple(sorted(pos[x] for x in adj[p.lab[i]])) for i in range(self.g.n_left))

    def run(self) -> CanonicalForm:
        root, cells = self.initial_partition()
        self.refine(root, list(cells))
        self.search(root, [])
        cert, lab, _ = self.best
        labeling = [0] * self.n
        for i, v in enumerate(lab):
            labeling[v] = i
        order = 1
        for size in self.orbit_sizes.values():
            order *= size
        nl = self.g.n_left
        edges = tuple(sorted((i, b - nl) for i, row in enumerate(cert) for b in row))
        colors = self.g.colors()
        signature = tuple(colors[v] for v in lab)
        return CanonicalForm(edges, order, tuple(labeling), signature, tuple(tuple(g) for g in self.gens))

    def _leaf(self, p: _Partition, path: list[int]):
        cert = self.certificate(p)
        if self.first is None:
            self.first = self.best = (cert, p.lab[:], path[:])
            return None
        for ref in (self.first, self.best):
            if cert == ref[0]:
                g = [0] * self.n
                for a, b in zip(ref[1], p.lab):
                    g[a] = b
                self.gens.append(g)
                return _common_prefix(path, ref[2])
        if cert < self.best[0]:
            self.best = (cert, p.lab[:], path[:])
        return None

    def search(self, p: _Partition, path: list[int]):
        if p.ncells == self.n:
            return self._leaf(p, path)
        level = len(path)
        cell = sorted(self.target_cell(p))
        on_first = self.first is None or self.first[2][:level] == path
        done: list[int] = []
        for v in cell:
            if done and self.gens:
                stab = [g for g in self.gens if all(g[x] == x for x in path)]
                if stab and _find_orbit(v, done, stab, cell):
                    continue
            jump = self.search(self.individualize(p, v), path + [v])
            done.append(v)
            if jump is not None and jump < level:
                return jump
        if on_first:
            stab = [g for g in self.gens if all(g[x] == x for x in path)]
            first_child = self.first[2][level]
            self.orbit_sizes[level] = _orbit_size(first_child, stab)
        return None


def _common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    n = 0
    for x, y in zip(a, b):
        if x != y:
            break
        n += 1
    return n


def _orbit(v: int, gens: list[list[int]]) -> set[int]:
    orbit = {v}
    frontier = [v]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit


def _find_orbit(v: int, done: list[int], gens: list[list[int]], cell) -> bool:
    orbit = _orbit(v, gens)
    return any(u in orbit for u in done)


def _orbit_size(v: int, gens: list[list[int]]) -> int:
    return len(_orbit(v, gens))


def canonize(g: ColoredIncidenceGraph) -> CanonicalForm:
    return _Canonizer(g).run()


# -- structures ---------------------------------------------------------------

def design_graph(d: Design) -> ColoredIncidenceGraph:
    edges = tuple((p - 1, i) for i, blk in enumerate(d.blocks) for p in blk)
    return ColoredIncidenceGraph(d.v, d.b, edges)


def code_graph(c: BinaryCode, cap: int = DEFAULT_CAP) -> ColoredIncidenceGraph:
    """Coordinates versus the nonzero words of the dual code, colored by weight.

    Permutation equivalence of C and of C-perp coincide, so the dual (the
    small side for design codes) is used always.
    """
    dual = dual_code(c)
    if dual.k > cap:
        raise CapExceeded(dual.k, cap)
    words = sorted(w for w in iter_codeword_bits(dual, cap) if w)
    edges = tuple((j, i) for i, w in enumerate(words) for j in support(w))
    colors = tuple(popcount(w) for w in words)
    return ColoredIncidenceGraph(c.n, len(words), edges, (), colors)


def design_automorphism_order(d: Design) -> int:
    return canonize(design_graph(d)).automorphism_group_order


def code_automorphism_order(c: BinaryCode, cap: int = DEFAULT_CAP) -> int:
    return canonize(code_graph(c, cap)).automorphism_group_order


def designs_isomorphic(d1: Design, d2: Design, forms: tuple[CanonicalForm, CanonicalForm] | None = None):
    """Return (True, point map) or (False, None); the map is 1-based, d1 point -> d2 point."""
    if (d1.v, d1.k, d1.b) != (d2.v, d2.k, d2.b):
        return False, None
    f1, f2 = forms if forms is not None else (canonize(design_graph(d1)), canonize(design_graph(d2)))
    if f1.key() != f2.key():
        return False, None
    inv2 = {pos: v for v, pos in enumerate(f2.labeling)}
    mapping = {p + 1: inv2[f1.labeling[p]] + 1 for p in range(d1.v)}
    target = set(d2.blocks)
    if any(tuple(sorted(mapping[p] for p in blk)) not in target for blk in d1.blocks):
        raise AssertionError("canonical forms agree but the witness fails")
    return True, mapping


def codes_equivalent(c1: BinaryCode, c2: BinaryCode, cap: int = DEFAULT_CAP,
                     forms: tuple[CanonicalForm, CanonicalForm] | None = None):
    """Return (True, perm) with 0-based coordinate map j -> perm[j], or (False, None)."""
    from .codes import weight_distribution

    if c1.n != c2.n or c1.k != c2.k:
        return False, None
    if forms is None:
        if weight_distribution(c1, cap) != weight_distribution(c2, cap):
            return False, None
        forms = (canonize(code_graph(c1, cap)), canonize(code_graph(c2, cap)))
    f1, f2 = forms
    if f1.key() != f2.key():
        return False, None
    inv2 = {pos: v for v, pos in enumerate(f2.labeling)}
    perm = [inv2[f1.labeling[j]] for j in range(c1.n)]
    if c1.permuted(perm) != c2:
        raise AssertionError("canonical forms agree but the witness fails")
    return True, perm


# -- permutations in cycle notation -------------------------------------------

def perm_from_cycles(cycles: Iterable[Sequence[int]], n: int) -> list[int]:
    """1-based cycles -> 0-based image list."""
    perm = list(range(n))
    seen = set()
    for cyc in cycles:
        for i, a in enumerate(cyc):
            if a in seen or not 1 <= a <= n:
                raise ValueError(f"bad cycle entry {a}")
            seen.add(a)
            perm[a - 1] = cyc[(i + 1) % len(cyc)] - 1
    return perm


def cycles_of(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """0-based image list -> 1-based nontrivial cycles."""
    seen = set()
    out = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = perm[x]
        out.append(tuple(cyc))
    return out


def format_cycles(perm: Sequence[int]) -> str:
    return "".join("(" + ", ".join(map(str, c)) + ")" for c in cycles_of(perm)) or "()"


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    out = []
    for chunk in text.replace(" ", "").split(")"):
        chunk = chunk.strip().lstrip("(")
        if chunk:
            out.append(tuple(int(x) for x in chunk.split(",")))
    return out


def verify_table5(perm: Sequence[int] | Iterable[Sequence[int]], c_from: BinaryCode, c_to: BinaryCode) -> bool:
    """Whether moving coordinate i to perm(i) maps c_from onto c_to exactly.

    ``perm`` is either a 0-based image list of length n or 1-based cycles.
    """
    perm = list(perm)
    if perm and not isinstance(perm[0], int):
        perm = perm_from_cycles(perm, c_from.n)
    if sorted(perm) != list(range(c_from.n)):
        raise ValueError("not a permutation")
    if c_from.n != c_to.n:
        return False
    return c_from.permuted(perm) == c_to
