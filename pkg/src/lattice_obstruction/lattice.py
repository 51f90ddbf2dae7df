"""Integral lattices given by Gram matrices, and pairing-preserving maps
into the negative definite diagonal lattice D_m.

Everything here is exact: Python integers and ``fractions.Fraction``.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence


class InvalidInputError(ValueError):
    """Malformed lattice, representation, or vector."""


def _as_int(x, what: str) -> int:
    # bools are ints in Python; a JSON ``true`` in a gram matrix is a mistake
    if isinstance(x, bool) or not isinstance(x, int):
        raise InvalidInputError(f"{what} must be an integer, got {x!r}")
    return x


@dataclass(frozen=True)
class GramLattice:
    gram: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        try:
            rows = tuple(tuple(_as_int(x, "gram entry") for x in row) for row in self.gram)
        except TypeError as exc:
            raise InvalidInputError(f"gram must be a list of rows: {exc}") from None
        r = len(rows)
        if r == 0:
            raise InvalidInputError("rank must be positive")
        for i, row in enumerate(rows):
            if len(row) != r:
                raise InvalidInputError(f"gram row {i} has length {len(row)}, expected {r}")
        for i in range(r):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InvalidInputError(
                        f"gram is not symmetric: [{i}][{j}]={rows[i][j]} but [{j}][{i}]={rows[j][i]}")
        object.__setattr__(self, "gram", rows)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != r:
                raise InvalidInputError(f"{len(labels)} labels for rank {r}")
            object.__setattr__(self, "labels", labels)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.gram[i][i] for i in range(self.rank))

    @classmethod
    def from_dict(cls, data) -> "GramLattice":
        if not isinstance(data, dict) or "gram" not in data:
            raise InvalidInputError('lattice must be a JSON object with a "gram" field')
        lat = cls(data["gram"], data.get("labels"))
        if "rank" in data and data["rank"] != lat.rank:
            raise InvalidInputError(f"declared rank {data['rank']!r} does not match gram size {lat.rank}")
        return lat

    def to_dict(self) -> dict:
        out = {"rank": self.rank, "gram": [list(row) for row in self.gram]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out


def load_lattice(path) -> GramLattice:
    """Read a lattice file ``{"rank": r, "gram": [[...]], "labels": [...]}``."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path}: malformed JSON: {exc}") from None
    return GramLattice.from_dict(data)


def diagonal_lattice(m: int) -> GramLattice:
    """D_m written as a GramLattice (m >= 1)."""
    return GramLattice([[-1 if i == j else 0 for j in range(m)] for i in range(m)])


@dataclass(frozen=True)
class DiagonalTarget:
    m: int

    def __post_init__(self):
        if _as_int(self.m, "m") < 0:
            raise InvalidInputError("m must be nonnegative")

    def pairing(self, x: Sequence[int], y: Sequence[int]) -> int:
        if len(x) != self.m or len(y) != self.m:
            raise InvalidInputError(f"vectors must have length {self.m}")
        return -sum(a * b for a, b in zip(x, y))


@dataclass(frozen=True)
class GramRepresentation:
    """Row i of ``images`` is the image of generator i in D_m."""

    images: tuple[tuple[int, ...], ...]
    target_m: int

    def __post_init__(self):
        rows = tuple(tuple(_as_int(x, "image entry") for x in row) for row in self.images)
        if not rows:
            raise InvalidInputError("a representation needs at least one generator")
        for row in rows:
            if len(row) != self.target_m:
                raise InvalidInputError(f"image row of length {len(row)} in D_{self.target_m}")
        object.__setattr__(self, "images", rows)

    @property
    def source_rank(self) -> int:
        return len(self.images)

    def padded(self, extra: int = 1) -> "GramRepresentation":
        return GramRepresentation([row + (0,) * extra for row in self.images], self.target_m + extra)


def pairing(L: GramLattice, u: Sequence[int], v: Sequence[int]) -> int:
    r = L.rank
    if len(u) != r or len(v) != r:
        raise InvalidInputError(f"vectors must have length {r}, got {len(u)} and {len(v)}")
    G = L.gram
    return sum(u[i] * G[i][j] * v[j] for i in range(r) if u[i] for j in range(r) if v[j])


def verify_representation(L: GramLattice, R: GramRepresentation) -> bool:
    if R.source_rank != L.rank:
        raise InvalidInputError(f"representation has {R.source_rank} rows, lattice rank is {L.rank}")
    rows = R.images
    for i in range(L.rank):
        for j in range(i + 1):
            if -sum(a * b for a, b in zip(rows[i], rows[j])) != L.gram[i][j]:
                return False
    return True


def direct_sum(L1: GramLattice, L2: GramLattice) -> GramLattice:
    r1, r2 = L1.rank, L2.rank
    gram = [list(row) + [0] * r2 for row in L1.gram] + [[0] * r1 + list(row) for row in L2.gram]
    labels = None
    if L1.labels is not None and L2.labels is not None:
        labels = L1.labels + L2.labels
    return GramLattice(gram, labels)


class Definiteness(enum.Enum):
    NEGATIVE_DEFINITE = "negative-definite"
    NEGATIVE_SEMIDEFINITE_DEGENERATE = "negative-semidefinite-degenerate"
    OTHER = "other"


@dataclass(frozen=True)
class DefinitenessClass:
    """``kernel`` is set for the degenerate case; ``witness`` for OTHER
    (an integer vector u with uᵀ·gram·u > 0)."""

    kind: Definiteness
    kernel: Optional[tuple[int, ...]] = None
    witness: Optional[tuple[int, ...]] = None

    def describe(self) -> str:
        if self.kind is Definiteness.NEGATIVE_DEFINITE:
            return "negative definite"
        if self.kind is Definiteness.NEGATIVE_SEMIDEFINITE_DEGENERATE:
            return "negative semidefinite, degenerate; kernel (" + ",".join(map(str, self.kernel)) + ")"
        return "not negative semidefinite; witness (" + ",".join(map(str, self.witness)) + ")"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "kernel": list(self.kernel) if self.kernel is not None else None,
            "witness": list(self.witness) if self.witness is not None else None,
        }

    @classmethod
    def from_dict(cls, data) -> "DefinitenessClass":
        k, w = data.get("kernel"), data.get("witness")
        return cls(Definiteness(data["kind"]),
                   tuple(k) if k is not None else None,
                   tuple(w) if w is not None else None)


def _primitive(vec: Sequence[Fraction]) -> tuple[int, ...]:
    den = lcm(*(x.denominator for x in vec))
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _lift(M, pivots, y: dict[int, Fraction]) -> list[Fraction]:
    """Extend y (given on non-pivot coordinates) to x with (M x)_p = 0 for
    every pivot p, so that xᵀMx equals the Schur-complement form of y."""
    n = len(M)
    x = [Fraction(0)] * n
    for j, val in y.items():
        x[j] = val
    P = list(pivots)
    if not P:
        return x
    # solve M[P,P] z = -M[P,Q] y by exact Gauss-Jordan
    k = len(P)
    A = [[Fraction(M[p][q]) for q in P] + [-sum(Fraction(M[p][j]) * v for j, v in y.items())] for p in P]
    for c in range(k):
        piv = next(r for r in range(c, k) if A[r][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [a * inv for a in A[c]]
        for r in range(k):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    for idx, p in enumerate(P):
        x[p] = A[idx][k]
    return x


def classify_definiteness(L: GramLattice) -> DefinitenessClass:
    """Exact test of whether -gram is positive (semi)definite.

    Symmetric elimination over the rationals on M = -gram. A negative
    pivot, or a zero pivot with a nonzero row, means M is not PSD; a
    witness is lifted back through the elimination.
    """
    n = L.rank
    M = [[Fraction(-x) for x in row] for row in L.gram]
    S = [row[:] for row in M]  # running Schur complement
    pivots: list[int] = []
    remaining = list(range(n))
    while remaining:
        pos = [i for i in remaining if S[i][i] > 0]
        if not pos:
            break
        p = pos[0]
        pivots.append(p)
        remaining.remove(p)
        for i in remaining:
            if S[i][p] != 0:
                f = S[i][p] / S[p][p]
                for j in remaining:
                    S[i][j] -= f * S[p][j]
        for i in range(n):
            if i != p:
                S[i][p] = S[p][i] = Fraction(0)

    neg = [i for i in remaining if S[i][i] < 0]
    if neg:
        i = neg[0]
        return DefinitenessClass(Definiteness.OTHER, witness=_primitive(_lift(M, pivots, {i: Fraction(1)})))
    for i in remaining:
        for j in remaining:
            if S[i][j] != 0:
                # S[i][i] = S[j][j] = 0: y = e_j + t e_i gives 2 t S[i][j]
                t = Fraction(-1) if S[i][j] > 0 else Fraction(1)
                return DefinitenessClass(
                    Definiteness.OTHER, witness=_primitive(_lift(M, pivots, {j: Fraction(1), i: t})))
    if not remaining:
        return DefinitenessClass(Definiteness.NEGATIVE_DEFINITE)
    # S vanishes on the remaining block: lift e_q to a kernel vector of M
    q = remaining[0]
    return DefinitenessClass(
        Definiteness.NEGATIVE_SEMIDEFINITE_DEGENERATE, kernel=_primitive(_lift(M, pivots, {q: Fraction(1)})))
