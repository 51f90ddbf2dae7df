"""Torsion Spin^c arithmetic on the disk bundle D_{g,n} and the circle
bundle Y_{g,n} over a genus-g surface.

Torsion classes on Y_{g,n} are multiples of F, the Poincaré dual of a
fiber, with nF = 0; they are stored as residues mod n. The free part
of H^2 is never represented.
"""
from __future__ import annotations

from dataclasses import dataclass


class OutOfDomainError(ValueError):
    pass


@dataclass(frozen=True)
class CircleBundle:
    g: int
    n: int

    def __post_init__(self):
        if self.g < 1:
            raise OutOfDomainError(f"genus must be >= 1, got {self.g}")

    def require_torsion(self):
        if self.n < 1:
            raise OutOfDomainError(f"torsion residues need n >= 1, got n = {self.n}")

    def require_contact(self):
        if self.n < 2 * self.g:
            raise OutOfDomainError(f"xi_0, xi_1 are defined only for n >= 2g; got g={self.g}, n={self.n}")

    def require_even(self):
        if self.n % 2:
            raise OutOfDomainError(f"formula needs even n, got n = {self.n}")


@dataclass(frozen=True)
class TorsionSpinc:
    """t_e, with e reduced mod n on construction."""

    bundle: CircleBundle
    e: int

    def __post_init__(self):
        self.bundle.require_torsion()
        object.__setattr__(self, "e", self.e % self.bundle.n)


@dataclass(frozen=True)
class FMultiple:
    bundle: CircleBundle
    coefficient: int

    def __post_init__(self):
        self.bundle.require_torsion()
        object.__setattr__(self, "coefficient", self.coefficient % self.bundle.n)


@dataclass(frozen=True)
class DiskSpinc:
    g: int
    n: int
    e: int


def c1_circle(t: TorsionSpinc) -> FMultiple:
    b = t.bundle
    return FMultiple(b, 2 * (1 - b.g + t.e))


def c1_disk(s: DiskSpinc) -> int:
    return 2 * (1 - s.g + s.e) + s.n


def disk_spin_index(g: int, n: int) -> int:
    """The e with c1 = 0 on D_{g,n}; only even n admit one."""
    if n % 2:
        raise OutOfDomainError(f"D_(g,n) is not spin for odd n = {n}")
    return g - n // 2 - 1


def spin_structures_circle(b: CircleBundle) -> set[TorsionSpinc]:
    b.require_torsion()
    out = {TorsionSpinc(b, b.g - 1)}
    if b.n % 2 == 0:
        out.add(TorsionSpinc(b, b.g + b.n // 2 - 1))
    return out


def contact_spinc(b: CircleBundle, i: int) -> TorsionSpinc:
    """Spin^c structure of xi_i: t_{n-1} for i = 0, t_{2g-1} for i = 1."""
    b.require_contact()
    if i == 0:
        return TorsionSpinc(b, b.n - 1)
    if i == 1:
        return TorsionSpinc(b, 2 * b.g - 1)
    raise OutOfDomainError(f"i must be 0 or 1, got {i}")


def _sign(i: int) -> int:
    if i not in (0, 1):
        raise OutOfDomainError(f"i must be 0 or 1, got {i}")
    return 1 if i == 0 else -1


def euler_class_xi(b: CircleBundle, i: int) -> FMultiple:
    b.require_contact()
    return FMultiple(b, -_sign(i) * 2 * b.g)


def vanishing_locus_pd(b: CircleBundle, i: int) -> FMultiple:
    """PD of the curve where the doubled section of xi_i vanishes."""
    b.require_even()
    b.require_contact()
    return FMultiple(b, _sign(i) * (b.n // 2 - b.g))


def section_spin(b: CircleBundle) -> TorsionSpinc:
    """The spin structure t_v induced by that section: t_{g+n/2-1}."""
    b.require_even()
    return TorsionSpinc(b, b.g + b.n // 2 - 1)


def spincform_check(b: CircleBundle, i: int) -> bool:
    """t_v + PD([L_v]) == t_{xi_i}."""
    b.require_even()
    lhs = (section_spin(b).e + vanishing_locus_pd(b, i).coefficient) % b.n
    return lhs == contact_spinc(b, i).e


def torsion_table(b: CircleBundle) -> list[tuple[int, int]]:
    """(e, c1 coefficient) for every torsion Spin^c structure t_e."""
    b.require_torsion()
    return [(e, c1_circle(TorsionSpinc(b, e)).coefficient) for e in range(b.n)]
