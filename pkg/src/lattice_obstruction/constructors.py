"""Intersection forms of blown-up projective planes, the lattices L_d, and
the (g, n) -> (d, k) arithmetic of the cap construction."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .lattice import GramLattice, InvalidInputError


@dataclass(frozen=True)
class BlowupClass:
    """a·h + Σ γ_i e_i in H_2 of the k-fold blow-up, with h² = 1, e_i² = -1."""

    a: int
    c: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(self.c))

    @property
    def k(self) -> int:
        return len(self.c)

    def pairing(self, other: "BlowupClass") -> int:
        if other.k != self.k:
            raise InvalidInputError(f"classes live in blow-ups at {self.k} and {other.k} points")
        return self.a * other.a - sum(x * y for x, y in zip(self.c, other.c))

    def square(self) -> int:
        return self.pairing(self)

    def label(self) -> str:
        terms = []
        if self.a:
            terms.append(("" if self.a == 1 else f"{self.a}") + "h")
        for i, x in enumerate(self.c, 1):
            if x:
                sign = "+" if x > 0 else "-"
                mag = "" if abs(x) == 1 else str(abs(x))
                terms.append(f"{sign}{mag}e{i}")
        s = "".join(terms).lstrip("+")
        return s or "0"


def h_class(k: int) -> BlowupClass:
    return BlowupClass(1, (0,) * k)


def e_class(i: int, k: int) -> BlowupClass:
    """Exceptional class e_i, 1-based."""
    c = [0] * k
    c[i - 1] = 1
    return BlowupClass(0, tuple(c))


def blowup_lattice(k: int) -> GramLattice:
    gram = [[0] * (k + 1) for _ in range(k + 1)]
    gram[0][0] = 1
    for i in range(1, k + 1):
        gram[i][i] = -1
    return GramLattice(gram, ["h"] + [f"e{i}" for i in range(1, k + 1)])


def sublattice_from_classes(k: int, classes: Sequence[BlowupClass]) -> GramLattice:
    for x in classes:
        if x.k != k:
            raise InvalidInputError(f"class {x.label()} has {x.k} exceptional coordinates, expected {k}")
    gram = [[x.pairing(y) for y in classes] for x in classes]
    return GramLattice(gram, [x.label() for x in classes])


def ld_generators(d: int, k: Optional[int] = None) -> list[BlowupClass]:
    """Chain e_i - e_{i+1} (i < 2d) followed by h - e_1 - ... - e_d."""
    if d < 1:
        raise InvalidInputError("d must be positive")
    k = 2 * d if k is None else k
    if k < 2 * d:
        raise InvalidInputError(f"need k >= 2d = {2 * d}, got {k}")
    gens = []
    for i in range(1, 2 * d):
        c = [0] * k
        c[i - 1], c[i] = 1, -1
        gens.append(BlowupClass(0, tuple(c)))
    gens.append(BlowupClass(1, tuple([-1] * d + [0] * (k - d))))
    return gens


def ld_lattice(d: int) -> GramLattice:
    """Gram matrix of L_d written down directly (rank 2d)."""
    if d < 1:
        raise InvalidInputError("d must be positive")
    r = 2 * d
    gram = [[0] * r for _ in range(r)]
    for i in range(r - 1):
        gram[i][i] = -2
    gram[r - 1][r - 1] = -(d - 1)
    for i in range(r - 2):
        gram[i][i + 1] = gram[i + 1][i] = 1
    gram[d - 1][r - 1] = gram[r - 1][d - 1] = 1
    return GramLattice(gram, [f"w{i}" for i in range(1, r + 1)])


def chain_lattice(r: int) -> GramLattice:
    """A_r: r generators of square -2, consecutive ones pairing 1."""
    return GramLattice([[-2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(r)]
                        for i in range(r)])


def proper_transform_class(d: int, k: int) -> BlowupClass:
    """(d+2)h - e_1 - ... - e_k."""
    return BlowupClass(d + 2, (-1,) * k)


def plane_curve_genus(degree: int) -> int:
    return (degree - 1) * (degree - 2) // 2


def in_theorem_window(g: int, n: int, d: int) -> bool:
    return d >= 1 and d * (d + 1) <= 2 * g <= n <= (d + 1) ** 2 + 3


@dataclass(frozen=True)
class CapData:
    g: int
    n: int
    d: int
    k: int
    fake_handles: int
    curve_degree: int
    proper_transform_square: int

    def __post_init__(self):
        problems = []
        if self.k != (self.d + 2) ** 2 - self.n:
            problems.append("k != (d+2)^2 - n")
        if self.k < 2 * self.d:
            problems.append("k < 2d")
        if not in_theorem_window(self.g, self.n, self.d):
            problems.append("(g, n, d) outside d(d+1) <= 2g <= n <= (d+1)^2+3")
        if self.curve_degree != self.d + 2:
            problems.append("curve degree != d+2")
        if self.fake_handles != self.g - plane_curve_genus(self.curve_degree) or self.fake_handles < 0:
            problems.append("fake handle count mismatch")
        if self.proper_transform_square != self.n:
            problems.append("proper transform square != n")
        if problems:
            raise InvalidInputError("inconsistent cap data: " + "; ".join(problems))

    def to_dict(self) -> dict:
        return dict(self.__dict__)

    @classmethod
    def from_dict(cls, data) -> "CapData":
        return cls(**data)


@dataclass(frozen=True)
class NotCovered:
    g: int
    n: int
    reason: str


def cap_for_degree(g: int, n: int, d: int) -> CapData:
    k = (d + 2) ** 2 - n
    degree = d + 2
    return CapData(g, n, d, k, g - plane_curve_genus(degree), degree,
                   proper_transform_class(d, k).square())


def admissible_degrees(g: int, n: int) -> list[int]:
    """Every d >= 1 with d(d+1) <= 2g <= n <= (d+1)^2 + 3, ascending."""
    out = []
    d = 1
    while d * (d + 1) <= 2 * g:
        if in_theorem_window(g, n, d):
            out.append(d)
        d += 1
    return out


def cap_parameters(g: int, n: int):
    """CapData for the smallest admissible d, or NotCovered."""
    if n < 2 * g:
        return NotCovered(g, n, "n < 2g")
    ds = admissible_degrees(g, n)
    if not ds:
        return NotCovered(g, n, "no d >= 1 with d(d+1) <= 2g and n <= (d+1)^2 + 3")
    return cap_for_degree(g, n, ds[0])


def orthogonality_report(d: int, k: int) -> list[tuple[str, int]]:
    """Pairing of each generator of L_d with the proper transform class."""
    C = proper_transform_class(d, k)
    return [(w.label(), w.pairing(C)) for w in ld_generators(d, k)]


def orthogonality_note(d: int, k: int) -> Optional[str]:
    """Flag generators of L_d that are not orthogonal to the proper
    transform class. Informational; nothing downstream depends on it."""
    bad = [(lab, p) for lab, p in orthogonality_report(d, k) if p]
    if not bad:
        return None
    listed = ", ".join(f"{lab} -> {p}" for lab, p in bad)
    return (f"open question: pairing with {d + 2}h - e1 - ... - e{k} is nonzero for {listed}; "
            "such a class cannot be carried by a surface disjoint from the removed curve, "
            "so the map of L_d into H_2(Z) is taken as assumption A3, not derived")
