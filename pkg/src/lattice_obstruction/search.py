"""Exhaustive backtracking search for Gram representations into D_m.

Generators are placed one at a time. The candidates for generator i are
the vectors of the right norm that meet every cross-pairing with rows
already placed. With canonicalization on, a candidate is kept only if it
is the representative of its orbit under a subgroup of the stabilizer
of the partial assignment: columns that agree on all placed rows may be
permuted freely, and columns that are still zero may also change sign.
So inside each such column class the candidate's entries must be
nonincreasing, and on the zero class also nonnegative. Any solution can
be moved into this form one row at a time without disturbing earlier
rows, so the search stays complete up to automorphisms of D_m.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt
from typing import Optional, Sequence

from .lattice import (
    Definiteness,
    DiagonalTarget,
    GramLattice,
    GramRepresentation,
    InvalidInputError,
    classify_definiteness,
    verify_representation,
)

PRUNE_RULES = ("definiteness", "norm", "support", "canonical", "cross_pairing")
GENERATOR_ORDERS = ("given", "descending-absolute-norm")


def enumerate_norm_vectors(s: int, m: int) -> list[tuple[int, ...]]:
    """All integer vectors of length m with sum of squares s.

    Listed in decreasing lexicographic order.
    """
    if s < 0 or m < 0:
        raise InvalidInputError("norm and dimension must be nonnegative")
    return list(_norm_vectors(s, m))


@lru_cache(maxsize=None)
def _norm_vectors(s: int, m: int) -> tuple[tuple[int, ...], ...]:
    if m == 0:
        return ((),) if s == 0 else ()
    out = []
    r = isqrt(s)
    for x in range(r, -r - 1, -1):
        for tail in _norm_vectors(s - x * x, m - 1):
            out.append((x,) + tail)
    return tuple(out)


@dataclass(frozen=True)
class SearchOptions:
    """``max_solutions=None`` means unlimited. ``precheck`` toggles the
    definiteness short-circuit; turning it off never changes the verdict."""

    max_solutions: Optional[int] = 1
    canonicalize: bool = True
    generator_order: str = "given"
    precheck: bool = True

    def __post_init__(self):
        if self.max_solutions is not None and self.max_solutions < 1:
            raise InvalidInputError("max_solutions must be positive or None")
        if self.generator_order not in GENERATOR_ORDERS:
            raise InvalidInputError(f"generator_order must be one of {GENERATOR_ORDERS}")


UNLIMITED = SearchOptions(max_solutions=None)


@dataclass(frozen=True)
class SearchCertificate:
    solutions: tuple[GramRepresentation, ...]
    nodes_visited: int
    m: int
    pruned_by: dict = field(default_factory=dict)

    @property
    def outcome(self) -> str:
        return "Found" if self.solutions else "Exhausted"

    @property
    def found(self) -> bool:
        return bool(self.solutions)

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "m": self.m,
            "nodes_visited": self.nodes_visited,
            "pruned_by": dict(self.pruned_by),
            "solutions": [[list(row) for row in R.images] for R in self.solutions],
        }

    @classmethod
    def from_dict(cls, data) -> "SearchCertificate":
        m = data["m"]
        sols = tuple(GramRepresentation(rows, m) for rows in data["solutions"])
        if (data["outcome"] == "Found") != bool(sols):
            raise InvalidInputError("certificate outcome disagrees with its solution list")
        return cls(sols, data["nodes_visited"], m, dict(data["pruned_by"]))


def _generator_order(L: GramLattice, how: str) -> list[int]:
    if how == "given":
        return list(range(L.rank))
    # stable sort keeps ties in the given order
    return sorted(range(L.rank), key=lambda i: -abs(L.gram[i][i]))


def _column_classes(rows: Sequence[Sequence[int]], m: int):
    """Group coordinates by their column over the placed rows.

    Returns (chains, zero_cols): chains holds, for every class with at
    least two members, its coordinates in increasing order.
    """
    classes: dict[tuple, list[int]] = {}
    for k in range(m):
        classes.setdefault(tuple(r[k] for r in rows), []).append(k)
    zero = tuple(classes.get((0,) * len(rows), []))
    chains = [ks for ks in classes.values() if len(ks) > 1]
    return chains, zero


def _is_canonical(v, chains, zero_cols) -> bool:
    for k in zero_cols:
        if v[k] < 0:
            return False
    for ks in chains:
        prev = v[ks[0]]
        for k in ks[1:]:
            if v[k] > prev:
                return False
            prev = v[k]
    return True


def find_representations(L: GramLattice, target: DiagonalTarget,
                         opts: SearchOptions = SearchOptions()) -> SearchCertificate:
    m = target.m
    tally = Counter()
    if opts.precheck and classify_definiteness(L).kind is Definiteness.OTHER:
        tally["definiteness"] += 1
        return SearchCertificate((), 0, m, dict(tally))

    order = _generator_order(L, opts.generator_order)
    G = [[L.gram[i][j] for j in order] for i in order]
    r = len(order)
    norms = [-G[i][i] for i in range(r)]
    limit = opts.max_solutions
    rows: list[tuple[int, ...]] = []
    found: list[tuple[tuple[int, ...], ...]] = []
    nodes = 1

    def candidates(i):
        s = norms[i]
        if s < 0:
            tally["norm"] += 1
            return
        if opts.canonicalize:
            chains, zero_cols = _column_classes(rows, m)
        wanted = [-G[i][j] for j in range(i)]
        for v in _norm_vectors(s, m):
            if sum(1 for x in v if x) > s:
                tally["support"] += 1
                continue
            if opts.canonicalize and not _is_canonical(v, chains, zero_cols):
                tally["canonical"] += 1
                continue
            ok = True
            for j in range(i):
                if sum(a * b for a, b in zip(v, rows[j])) != wanted[j]:
                    ok = False
                    break
            if not ok:
                tally["cross_pairing"] += 1
                continue
            yield v

    def descend(i) -> bool:
        nonlocal nodes
        if i == r:
            found.append(tuple(rows))
            return limit is not None and len(found) >= limit
        for v in candidates(i):
            nodes += 1
            rows.append(v)
            stop = descend(i + 1)
            rows.pop()
            if stop:
                return True
        return False

    descend(0)

    inverse = [0] * r
    for pos, gen in enumerate(order):
        inverse[gen] = pos
    sols = tuple(GramRepresentation([sol[inverse[g]] for g in range(r)], m) for sol in found)
    return SearchCertificate(sols, nodes, m, {k: tally[k] for k in PRUNE_RULES if tally[k]})


def support_bound(L: GramLattice) -> int:
    """Σ|gram[i][i]|: no representation needs more target coordinates."""
    return sum(abs(x) for x in L.diagonal())


def represents_into_some_diagonal(L: GramLattice, opts: SearchOptions = SearchOptions()) -> SearchCertificate:
    """Decide representability into D_m for all m at once.

    Image i has at most |gram[i][i]| nonzero coordinates, so a
    representation anywhere touches at most support_bound(L) coordinates
    and can be compressed into D_{m*}; zero padding goes the other way.
    """
    return find_representations(L, DiagonalTarget(support_bound(L)), opts)


def canonical_form(R: GramRepresentation) -> tuple[tuple[int, ...], ...]:
    """Orbit invariant of R under signed permutations of target coordinates.

    Each column is sign-normalized (first nonzero entry positive) and the
    columns are sorted; two representations are related by a target
    automorphism iff their canonical forms agree.
    """
    cols = []
    for k in range(R.target_m):
        col = tuple(row[k] for row in R.images)
        first = next((x for x in col if x), 0)
        if first < 0:
            col = tuple(-x for x in col)
        cols.append(col)
    cols.sort(reverse=True)
    return tuple(tuple(c[i] for c in cols) for i in range(R.source_rank))


def orbits(L: GramLattice, target: DiagonalTarget) -> list[GramRepresentation]:
    """One representative per orbit of representations, in search order."""
    cert = find_representations(L, target, UNLIMITED)
    seen = {}
    for R in cert.solutions:
        assert verify_representation(L, R)
        seen.setdefault(canonical_form(R), R)
    return list(seen.values())


def orbit_count(L: GramLattice, target: DiagonalTarget) -> int:
    return len(orbits(L, target))


def extension_norms(L: GramLattice, prefix: Sequence[Sequence[int]], m: int, max_norm: int) -> list[int]:
    """Norms s <= max_norm for which some v in Z^m with Σv² = s meets the
    cross-pairings of generator len(prefix) against the given prefix rows.

    Ignores the generator's own required norm. Used to inspect how far
    the placed rows force the next image.
    """
    i = len(prefix)
    if i >= L.rank:
        raise InvalidInputError("prefix already covers every generator")
    wanted = [-L.gram[i][j] for j in range(i)]
    out = []
    for s in range(max_norm + 1):
        for v in _norm_vectors(s, m):
            if all(sum(a * b for a, b in zip(v, prefix[j])) == wanted[j] for j in range(i)):
                out.append(s)
                break
    return out
