"""Slow independent oracles used only by the tests."""

from itertools import combinations


def brute_force_automorphisms(v, blocks):
    """Count point permutations mapping the block set of a Steiner 2-design to itself.

    In a Steiner 2-design a bijection preserves the blocks iff it preserves
    which triples are collinear, which lets the backtracking prune early.
    """
    line_of = {}
    for i, b in enumerate(blocks):
        for x in b:
            for y in b:
                if x != y:
                    line_of[x, y] = i
    block_set = {frozenset(b) for b in blocks}

    def collinear(x, y, z):
        return line_of[x, y] == line_of.get((x, z))

    image = {}
    used = set()

    def extend(p):
        if p > v:
            return int({frozenset(image[x] for x in b) for b in blocks} == block_set)
        total = 0
        done = list(image)
        for t in range(1, v + 1):
            if t in used:
                continue
            if any(collinear(x, y, p) != collinear(image[x], image[y], t)
                   for i, x in enumerate(done) for y in done[i + 1:]):
                continue
            image[p] = t
            used.add(t)
            total += extend(p + 1)
            used.discard(t)
            del image[p]
        return total

    return extend(1)


def affine_plane_blocks(q_points):
    """Lines of AG(2,3) as 1-based blocks."""
    pts = [(x, y) for x in range(3) for y in range(3)]
    idx = {p: i + 1 for i, p in enumerate(pts)}
    lines = set()
    for a, b in combinations(pts, 2):
        d = ((b[0] - a[0]) % 3, (b[1] - a[1]) % 3)
        lines.add(frozenset(idx[((a[0] + t * d[0]) % 3, (a[1] + t * d[1]) % 3)] for t in range(3)))
    return [tuple(sorted(l)) for l in lines]


def rank_mod2_lists(rows, n_cols):
    """Plain Gaussian elimination on 0/1 lists."""
    m = [list(r) for r in rows]
    rank = 0
    for col in range(n_cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                m[i] = [a ^ b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def span_by_brute_force(rows, n):
    words = {0}
    for r in rows:
        words |= {w ^ r for w in words}
    return words


def hyperovals_by_brute_force(plane):
    """All (q+2)-sets of PG(2,q) meeting each line in 0 or 2 points, q tiny."""
    q = plane.order
    masks = plane.line_masks
    found = []
    for combo in combinations(range(1, plane.n_points + 1), q + 2):
        s = sum(1 << (p - 1) for p in combo)
        if all(bin(s & m).count("1") in (0, 2) for m in masks):
            found.append(combo)
    return found
