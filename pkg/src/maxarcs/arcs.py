"""Maximal arcs: validation, Denniston construction, dual arcs and tabu search."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import NotMaximal
from .geometry import Gf2mField, ProjectivePlane, dual_plane, make_pg2, point_index

log = logging.getLogger(__name__)

_BLOCKED = 1 << 40


@dataclass(frozen=True, eq=False)
class Arc:
    plane: ProjectivePlane
    points: tuple[int, ...]
    degree: int
    label: str = ""

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def order(self) -> int:
        return self.plane.order

    def intersection_sizes(self) -> np.ndarray:
        return line_intersections(self.plane, self.points)

    def secant_lines(self) -> list[int]:
        """0-based ids of lines meeting the arc in ``degree`` points."""
        return [int(i) for i in np.flatnonzero(self.intersection_sizes() == self.degree)]

    def exterior_lines(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.intersection_sizes() == 0)]

    def __eq__(self, other):
        return (
            isinstance(other, Arc)
            and self.plane is other.plane
            and self.points == other.points
            and self.degree == other.degree
        )

    def __hash__(self):
        return hash((id(self.plane), self.points, self.degree))

    def __repr__(self) -> str:
        name = self.label or "Arc"
        return f"<{name}: ({self.size},{self.degree})-arc in {self.plane.label}>"


def maximal_size(q: int, k: int) -> int:
    return q * k + k - q


def line_intersections(plane: ProjectivePlane, points: Iterable[int]) -> np.ndarray:
    mask = np.zeros(plane.n_points, dtype=np.int64)
    mask[np.asarray(list(points), dtype=np.int64) - 1] = 1
    return mask[plane.line_point_array].sum(axis=1)


def validate_arc(plane: ProjectivePlane, points: Iterable[int], k: int, label: str = "") -> Arc:
    """Return the Arc, or raise NotMaximal naming the first bad line (1-based)."""
    pts = tuple(sorted(set(points)))
    if pts and (pts[0] < 1 or pts[-1] > plane.n_points):
        raise ValueError(f"points must lie in 1..{plane.n_points}")
    sizes = line_intersections(plane, pts)
    bad = np.flatnonzero((sizes != 0) & (sizes != k))
    if len(bad):
        i = int(bad[0])
        raise NotMaximal(i + 1, int(sizes[i]))
    if len(pts) != maximal_size(plane.order, k):
        raise NotMaximal(None, len(pts))
    return Arc(plane, pts, k, label)


def irreducible_form_coefficient(field: Gf2mField) -> int:
    """Smallest alpha with trace 1, so alpha*x^2 + x*y + y^2 has no nontrivial zero."""
    return next(a for a in field.elements if field.trace(a) == 1)


def _check_subgroup(h: Sequence[int], field: Gf2mField) -> frozenset[int]:
    hs = frozenset(h)
    if 0 not in hs or any(a ^ b not in hs for a in hs for b in hs):
        raise ValueError("subgroup must be closed under addition")
    if any(x < 0 or x >= field.q for x in hs):
        raise ValueError("subgroup elements must be field elements")
    return hs


def denniston_arc(
    field: Gf2mField,
    s: int,
    subgroup: Sequence[int] | None = None,
    plane: ProjectivePlane | None = None,
) -> Arc:
    """Degree-2^s maximal arc {(x, y, 1) : alpha x^2 + xy + y^2 in H} in PG(2, 2^m).

    ``H`` defaults to the elements with bitmask below 2^s.  Any additive
    subgroup of order 2^s may be passed instead; in PG(2,16) with s=2 the
    subfield GF(4) gives an arc inequivalent to the default one.
    """
    m = field.m
    if not 1 <= s <= m:
        raise ValueError("need 1 <= s <= m")
    h = _check_subgroup(range(1 << s) if subgroup is None else subgroup, field)
    if len(h) != 1 << s:
        raise ValueError(f"subgroup must have order {1 << s}")
    alpha = irreducible_form_coefficient(field)
    if plane is None:
        plane = make_pg2(field)
    pts = []
    for x in field.elements:
        ax2 = field.mul(alpha, field.square(x))
        for y in field.elements:
            if ax2 ^ field.mul(x, y) ^ field.square(y) in h:
                pts.append(point_index(field, (x, y, 1)))
    tag = "" if subgroup is None else "H=" + ",".join(map(str, sorted(h)))
    label = f"Denniston(m={m},s={s}{',' + tag if tag else ''})"
    return validate_arc(plane, pts, 1 << s, label)


def dual_arc(a: Arc, dual: ProjectivePlane | None = None) -> Arc:
    """Exterior lines of ``a`` as a maximal arc of degree q/k in the dual plane."""
    q, k = a.order, a.degree
    if k >= q:
        raise ValueError("dual arc needs degree < q")
    if dual is None:
        dual = dual_plane(a.plane)
    pts = [i + 1 for i in a.exterior_lines()]
    label = f"{a.label}^" if a.label else ""
    return validate_arc(dual, pts, q // k, label)


@dataclass(frozen=True)
class SearchConfig:
    k: int
    max_experiments: int = 10_000
    moves_per_experiment: int = 50_000
    tabu_length: int = 30
    random_move_probability: Fraction = Fraction(1, 100)
    rng_seed: int = 0
    stop_after: int | None = None

    def __post_init__(self):
        if min(self.k, self.max_experiments, self.moves_per_experiment, self.tabu_length) <= 0:
            raise ValueError("counts must be positive")
        p = Fraction(self.random_move_probability)
        if not 0 <= p <= 1:
            raise ValueError("probability must lie in [0, 1]")
        object.__setattr__(self, "random_move_probability", p)
        object.__setattr__(self, "rng_seed", self.rng_seed & (2**64 - 1))


def penalty_table(k: int, q: int) -> np.ndarray:
    """penalty(i) = squared distance from i to the nearest of {0, k}."""
    i = np.arange(q + 3)
    return np.minimum(i, np.abs(k - i)) ** 2


def objective(plane: ProjectivePlane, points: Iterable[int], k: int) -> int:
    pen = penalty_table(k, plane.order)
    return int(pen[line_intersections(plane, points)].sum())


def _run_experiment(plane: ProjectivePlane, cfg: SearchConfig, index: int) -> tuple[int, ...] | None:
    q, k = plane.order, cfg.k
    n = plane.n_points
    size = maximal_size(q, k)
    if size <= 0 or size >= n:
        return None
    rng = np.random.default_rng((cfg.rng_seed + index) & (2**64 - 1))
    pen = penalty_table(k, q)
    plines = plane.point_line_array
    join = plane.joining_line
    p_random = float(cfg.random_move_probability)

    perm = rng.permutation(n)
    inside = np.sort(perm[:size])
    outside = np.sort(perm[size:])
    counts = np.zeros(plane.n_points, dtype=np.int64)  # one slot per line
    np.add.at(counts, plines[inside].ravel(), 1)
    obj = int(pen[counts].sum())
    best = obj
    tabu: list[tuple[int, int]] = []

    for _ in range(cfg.moves_per_experiment):
        if obj == 0:
            return tuple(sorted(int(p) + 1 for p in inside))
        if p_random and rng.random() < p_random:
            i = int(rng.integers(size))
            j = int(rng.integers(n - size))
        else:
            rem = pen[counts - 1] - pen[counts]
            add = pen[counts + 1] - pen[counts]
            d_rem = rem[plines[inside]].sum(axis=1)
            d_add = add[plines[outside]].sum(axis=1)
            c = counts[join[np.ix_(inside, outside)]]
            # the joining line keeps its count under a swap
            delta = d_rem[:, None] + d_add[None, :] - (pen[c - 1] + pen[c + 1] - 2 * pen[c])
            if tabu:
                pos_in = {int(p): t for t, p in enumerate(inside)}
                pos_out = {int(p): t for t, p in enumerate(outside)}
                for added, removed in tabu:
                    a, r = pos_in.get(added), pos_out.get(removed)
                    if a is not None and r is not None and obj + delta[a, r] >= best:
                        delta[a, r] = _BLOCKED
            low = delta.min()
            cand = np.flatnonzero(delta.ravel() == low)
            pick = int(cand[rng.integers(len(cand))])
            i, j = divmod(pick, n - size)
        p_out, p_in = int(inside[i]), int(outside[j])
        counts[plines[p_out]] -= 1
        counts[plines[p_in]] += 1
        obj = int(pen[counts].sum())
        best = min(best, obj)
        inside[i], outside[j] = p_in, p_out
        order_in, order_out = np.argsort(inside), np.argsort(outside)
        inside, outside = inside[order_in], outside[order_out]
        tabu.append((p_in, p_out))
        if len(tabu) > cfg.tabu_length:
            tabu.pop(0)
    if obj == 0:
        return tuple(sorted(int(p) + 1 for p in inside))
    return None


def tabu_search(plane: ProjectivePlane, cfg: SearchConfig) -> list[Arc]:
    """Randomised swap search for maximal arcs of degree ``cfg.k``.

    Experiment ``i`` draws from its own generator seeded with ``rng_seed + i``.
    Found arcs are validated, deduplicated by point set and returned sorted.
    """
    found: set[tuple[int, ...]] = set()
    for index in range(cfg.max_experiments):
        pts = _run_experiment(plane, cfg, index)
        if pts is None or pts in found:
            continue
        found.add(pts)
        log.info("experiment %d found arc %d", index, len(found))
        if cfg.stop_after is not None and len(found) >= cfg.stop_after:
            break
    out = []
    for n, pts in enumerate(sorted(found), 1):
        out.append(validate_arc(plane, pts, cfg.k, f"{plane.label}.search{n}"))
    return out
