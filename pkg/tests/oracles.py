"""Independent brute-force references used by the tests.

Nothing here imports the search module: vectors come from a plain box
enumeration and tuples are checked pairwise, with no symmetry or
definiteness shortcuts.
"""
import itertools
from math import isqrt


def box_vectors(norm, m):
    r = isqrt(max(norm, 0))
    return [v for v in itertools.product(range(-r, r + 1), repeat=m) if sum(x * x for x in v) == norm]


def brute_representations(gram, m):
    """Every tuple of rows (row i in Z^m) with -<row_i, row_j> = gram[i][j]."""
    n = len(gram)
    cands = [box_vectors(-gram[i][i], m) if gram[i][i] <= 0 else [] for i in range(n)]
    out = []
    rows = []

    def rec(i):
        if i == n:
            out.append(tuple(rows))
            return
        for v in cands[i]:
            if all(-sum(a * b for a, b in zip(v, rows[j])) == gram[i][j] for j in range(i)):
                rows.append(v)
                rec(i + 1)
                rows.pop()

    rec(0)
    return out


def brute_orbit_count(gram, m):
    """Orbits under signed column permutations, found by applying the
    whole group to each solution (no canonical-form shortcut)."""
    sols = brute_representations(gram, m)
    remaining = set(sols)
    count = 0
    group = [(p, s) for p in itertools.permutations(range(m)) for s in itertools.product((1, -1), repeat=m)]
    while remaining:
        R = remaining.pop()
        count += 1
        for p, s in group:
            img = tuple(tuple(s[k] * row[p[k]] for k in range(m)) for row in R)
            remaining.discard(img)
    return count


def max_form_on_box(gram, bound=3):
    """max of uᵀ·gram·u over nonzero u in [-bound, bound]^r."""
    r = len(gram)
    best = None
    for u in itertools.product(range(-bound, bound + 1), repeat=r):
        if any(u):
            val = sum(u[i] * gram[i][j] * u[j] for i in range(r) for j in range(r))
            best = val if best is None else max(best, val)
    return best


def random_gram(rng, rank, lo=-3, hi=1):
    g = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        for j in range(i, rank):
            g[i][j] = g[j][i] = rng.randint(lo, hi)
    return g
