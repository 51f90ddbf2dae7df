"""The obstruction pipeline for (g, n): contact Spin^c data, the cap
parameters, and the exhaustive search on L_d, gathered in one report.

The report's verdict only speaks for the computational step. The
analytic inputs it rests on are listed in ``ASSUMPTIONS`` and are never
checked here.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .constructors import (
    CapData,
    NotCovered,
    admissible_degrees,
    cap_for_degree,
    cap_parameters,
    ld_lattice,
    orthogonality_note,
)
from .lattice import DefinitenessClass, classify_definiteness
from .search import SearchCertificate, SearchOptions, represents_into_some_diagonal
from .spinc import CircleBundle, contact_spinc, euler_class_xi

SCHEMA_VERSION = "1"

OBSTRUCTED = "Obstructed"
NOT_COVERED = "NotCovered"
# some admissible d exists but every L_d tried has a representation
INCONCLUSIVE = "Inconclusive"
VERDICTS = (OBSTRUCTED, NOT_COVERED, INCONCLUSIVE)

ASSUMPTIONS = (
    {"id": "A1", "source": "Seiberg-Witten theory",
     "statement": "A weak symplectic semi-filling W of (Y_{g,n}, xi_i), n >= 2g, has connected "
                  "boundary, b2+(W) = 0, and H^2(W;R) -> H^2(dW;R) is the zero map."},
    {"id": "A2", "source": "Donaldson's diagonalization theorem",
     "statement": "A smooth closed oriented negative definite 4-manifold V has intersection "
                  "lattice isomorphic to D_{b2(V)}."},
    {"id": "A3", "source": "cap construction",
     "statement": "The generators of L_d are carried by smooth surfaces in the cap Z, so L_d "
                  "maps pairing-preservingly into (H_2(Z;Z), Q_Z)."},
)

MAYER_VIETORIS_REMARK = (
    "Not verified: if W existed, V = W u Z would satisfy H_2(V;R) = H_2(W;R) + H_2(Z;R) and "
    "b2+(V) = b2+(W) + b2+(Z) = 0, so L_d would map into D_{b2(V)}.")


@dataclass(frozen=True)
class DegreeAttempt:
    d: int
    outcome: str
    m: int
    nodes_visited: int

    def to_dict(self):
        return dict(self.__dict__)


@dataclass(frozen=True)
class ObstructionReport:
    g: int
    n: int
    verdict: str
    reason: str = ""
    contact: Optional[dict] = None
    cap: Optional[CapData] = None
    lattice: Optional[dict] = None
    definiteness: Optional[DefinitenessClass] = None
    search: Optional[SearchCertificate] = None
    attempts: tuple[DegreeAttempt, ...] = ()
    assumptions: tuple = ASSUMPTIONS
    remarks: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "g": self.g,
            "n": self.n,
            "verdict": self.verdict,
            "reason": self.reason,
            "contact": self.contact,
            "cap": self.cap.to_dict() if self.cap else None,
            "lattice": self.lattice,
            "definiteness": self.definiteness.to_dict() if self.definiteness else None,
            "search": self.search.to_dict() if self.search else None,
            "attempts": [a.to_dict() for a in self.attempts],
            "assumptions": [dict(a) for a in self.assumptions],
            "remarks": list(self.remarks),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data) -> "ObstructionReport":
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(
            g=data["g"],
            n=data["n"],
            verdict=data["verdict"],
            reason=data["reason"],
            contact=data["contact"],
            cap=CapData.from_dict(data["cap"]) if data["cap"] else None,
            lattice=data["lattice"],
            definiteness=DefinitenessClass.from_dict(data["definiteness"]) if data["definiteness"] else None,
            search=SearchCertificate.from_dict(data["search"]) if data["search"] else None,
            attempts=tuple(DegreeAttempt(**a) for a in data["attempts"]),
            assumptions=tuple(data["assumptions"]),
            remarks=tuple(data["remarks"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "ObstructionReport":
        return cls.from_dict(json.loads(text))


def contact_data(g: int, n: int) -> dict:
    b = CircleBundle(g, n)
    return {
        "t_xi0": contact_spinc(b, 0).e,
        "t_xi1": contact_spinc(b, 1).e,
        "euler_xi0": euler_class_xi(b, 0).coefficient,
        "euler_xi1": euler_class_xi(b, 1).coefficient,
    }


def obstruct(g: int, n: int, opts: SearchOptions = SearchOptions()) -> ObstructionReport:
    """Run the pipeline for Y_{g,n}.

    Admissible degrees d are tried in increasing order; the first whose
    L_d has no representation in any D_m decides the verdict. When every
    admissible L_d is representable the verdict is Inconclusive and the
    report carries the smallest d's data.
    """
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    if n < 2 * g:
        return ObstructionReport(g, n, NOT_COVERED, reason="contact structures undefined for n < 2g")
    contact = contact_data(g, n)
    cap = cap_parameters(g, n)
    if isinstance(cap, NotCovered):
        return ObstructionReport(g, n, NOT_COVERED, reason=cap.reason, contact=contact)

    attempts = []
    chosen = None
    for d in admissible_degrees(g, n):
        L = ld_lattice(d)
        cert = represents_into_some_diagonal(L, opts)
        attempts.append(DegreeAttempt(d, cert.outcome, cert.m, cert.nodes_visited))
        run = (cap_for_degree(g, n, d), L, cert)
        if chosen is None:
            chosen = run
        if not cert.found:
            chosen = run
            break
    cap, L, cert = chosen
    verdict = INCONCLUSIVE if cert.found else OBSTRUCTED
    if verdict == OBSTRUCTED:
        how = "definiteness short-circuit" if "definiteness" in cert.pruned_by else f"search exhausted at D_{cert.m}"
        reason = f"L_{cap.d} has no representation in any D_m ({how})"
    else:
        reason = "every admissible L_d has a representation in D_m"
    return ObstructionReport(
        g, n, verdict,
        reason=reason,
        contact=contact,
        cap=cap,
        lattice={"d": cap.d, "rank": L.rank, "gram": [list(r) for r in L.gram]},
        definiteness=classify_definiteness(L),
        search=cert,
        attempts=tuple(attempts),
        remarks=tuple(r for r in (MAYER_VIETORIS_REMARK, orthogonality_note(cap.d, cap.k)) if r),
    )


def theorem_range(d_max: int) -> list[tuple[int, int, int]]:
    """(g, n, smallest d) for every pair covered by some d <= d_max."""
    if d_max < 1:
        raise ValueError("d_max must be positive")
    out = []
    n_max = (d_max + 1) ** 2 + 3
    for g in range(1, n_max // 2 + 1):
        for n in range(2 * g, n_max + 1):
            ds = [d for d in admissible_degrees(g, n) if d <= d_max]
            if ds:
                out.append((g, n, ds[0]))
    return out
