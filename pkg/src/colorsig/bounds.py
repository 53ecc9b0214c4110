"""Genus bounds and concordance / 0.5-solvable cobordism obstructions.

The inequalities are only theorems at points that are not concordance roots.
Every check is still computed everywhere, but rows at other points are marked
``applicable=False`` and never count towards an obstruction.
"""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .ccomplex import CComplexData, require_valid
from .errors import ColorsigError, ConsistencyError, DimensionError, DomainError
from .inertia import InertiaResult, signature_and_nullity
from .omega import OmegaClassification, classify
from .scalar import RootOfUnity, TorusPoint

CONSISTENT = "Consistent"
OBSTRUCTED = "Obstructed"


# ---------------------------------------------------------------------------
# profiles


@dataclass(frozen=True)
class CobordismProfile:
    """A colored cobordism described by any of three equivalent encodings.

    ``euler``: chi(Sigma_i) per color; ``betti``: b_1(Sigma_i) per color;
    ``genera``: total genus of Sigma_i per color.  ``m`` counts connected
    components, ``c`` double points, ``n``/``n_prime`` the components of the
    two boundary links.
    """

    euler: Optional[tuple] = None
    betti: Optional[tuple] = None
    genera: Optional[tuple] = None
    m: Optional[int] = None
    c: int = 0
    n: Optional[int] = None
    n_prime: Optional[int] = None

    @classmethod
    def concordance(cls, mu: int, components: int) -> "CobordismProfile":
        """``components`` annuli split over ``mu`` colors, no double points."""
        return cls(euler=(0,) * mu, genera=(0,) * mu, m=components, c=0,
                   n=components, n_prime=components)

    @classmethod
    def from_json(cls, data) -> "CobordismProfile":
        def tup(key):
            return tuple(data[key]) if data.get(key) is not None else None
        return cls(euler=tup("euler"), betti=tup("betti"), genera=tup("genera"),
                   m=data.get("m"), c=data.get("c", 0), n=data.get("n"),
                   n_prime=data.get("n_prime"))

    def encodings(self) -> dict:
        """Value of sum -chi(Sigma_i) + c from each supplied encoding."""
        if self.c < 0:
            raise ConsistencyError("the number of double points cannot be negative")
        if self.m is not None and self.m < 1:
            raise ConsistencyError("a cobordism has at least one component")
        out = {}
        if self.euler is not None:
            out["euler"] = -sum(self.euler) + self.c
        if self.betti is not None:
            if self.m is None:
                raise ConsistencyError("the Betti encoding needs m")
            out["betti"] = sum(self.betti) - self.m + self.c
        if self.genera is not None:
            if None in (self.m, self.n, self.n_prime):
                raise ConsistencyError("the genus encoding needs m, n and n_prime")
            out["genera"] = 2 * sum(self.genera) + self.n + self.n_prime - 2 * self.m + self.c
        if not out:
            raise ConsistencyError("profile has no encoding of the surfaces")
        return out


def cobordism_cost(profile: CobordismProfile) -> int:
    """sum_i -chi(Sigma_i) + c, checked across every supplied encoding."""
    values = profile.encodings()
    if len(set(values.values())) > 1:
        raise ConsistencyError(f"inconsistent cobordism encodings: {values}")
    return next(iter(values.values()))


@dataclass(frozen=True)
class SurfaceProfile:
    """A colored bounding surface in the 4-ball: b_1(F_i) per color, m components, c double points."""

    betti: tuple
    m: int
    c: int = 0

    def __post_init__(self):
        if any(b < 0 for b in self.betti) or self.m < 0 or self.c < 0:
            raise ConsistencyError("surface profile entries must be nonnegative")

    @classmethod
    def from_json(cls, data) -> "SurfaceProfile":
        return cls(betti=tuple(data["betti"]), m=data["m"], c=data.get("c", 0))


# ---------------------------------------------------------------------------
# single-point checks


@dataclass(frozen=True)
class BoundCheck:
    lhs: int
    rhs: int
    satisfied: bool
    applicable: bool
    omega: Optional[TorusPoint] = None

    @property
    def sharp(self) -> bool:
        return self.lhs == self.rhs


def _classification(omega, classification):
    if classification is None:
        return classify(omega)
    if classification.omega is not None and classification.omega != omega:
        raise DomainError("classification belongs to a different point")
    return classification


def genus_bound_check(inv_a: InertiaResult, inv_b: InertiaResult, profile: CobordismProfile,
                      omega: TorusPoint,
                      classification: Optional[OmegaClassification] = None) -> BoundCheck:
    """|sigma_L - sigma_L'| + |eta_L - eta_L'| <= sum -chi(Sigma_i) + c."""
    for inv in (inv_a, inv_b):
        if inv.omega is not None and inv.omega.num_vars != omega.num_vars:
            raise DimensionError("inertia results and point have different numbers of colors")
    if inv_a.omega is not None and inv_b.omega is not None and inv_a.omega != inv_b.omega:
        raise DomainError("inertia results were computed at different points")
    cl = _classification(omega, classification)
    lhs = abs(inv_a.signature - inv_b.signature) + abs(inv_a.eta - inv_b.eta)
    rhs = cobordism_cost(profile)
    return BoundCheck(lhs, rhs, lhs <= rhs, cl.is_safe, omega)


def surface_bound_check(inv: InertiaResult, sp: SurfaceProfile, omega: TorusPoint,
                        classification: Optional[OmegaClassification] = None) -> BoundCheck:
    """|sigma_L| + |eta_L - m + 1| <= sum_i b_1(F_i) + c."""
    if inv.omega is not None and inv.omega.num_vars != omega.num_vars:
        raise DimensionError("inertia result and point have different numbers of colors")
    if len(sp.betti) != omega.num_vars:
        raise DimensionError("surface profile needs one Betti number per color")
    cl = _classification(omega, classification)
    lhs = abs(inv.signature) + abs(inv.eta - sp.m + 1)
    rhs = sum(sp.betti) + sp.c
    return BoundCheck(lhs, rhs, lhs <= rhs, cl.is_safe, omega)


# ---------------------------------------------------------------------------
# grids


def prime_power_roots(p: int, max_exp: int):
    """All roots of unity of order p^e, 1 <= e <= max_exp, by order then exponent."""
    out = []
    for e in range(1, max_exp + 1):
        n = p ** e
        out.extend(RootOfUnity(k, n) for k in range(1, n) if k % p)
    return out


def default_grid(mu: int, primes: Sequence[int] = (2, 3, 5), max_exp: int = 3,
                 cap: int = 256) -> list[TorusPoint]:
    """Points whose coordinates share one prime-power order family.

    Points of one prime are listed by increasing largest order, and the primes
    are interleaved round-robin so that truncation at ``cap`` keeps every prime.
    """
    per_prime = []
    for p in primes:
        coords = prime_power_roots(p, max_exp)
        pts = sorted(itertools.product(coords, repeat=mu),
                     key=lambda t: (max(c.n for c in t), [(c.n, c.k) for c in t]))
        per_prime.append(pts)
    grid = []
    for batch in itertools.zip_longest(*per_prime):
        for pt in batch:
            if pt is not None:
                grid.append(TorusPoint(pt))
                if len(grid) >= cap:
                    return grid
    return grid


# ---------------------------------------------------------------------------
# reports


@dataclass
class ReportRow:
    omega: TorusPoint
    applicable: bool
    sigma_a: Optional[int] = None
    eta_a: Optional[int] = None
    sigma_b: Optional[int] = None
    eta_b: Optional[int] = None
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    satisfied: Optional[bool] = None
    error: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "omega": str(self.omega),
            "sigma_L": self.sigma_a, "eta_L": self.eta_a,
            "sigma_L_prime": self.sigma_b, "eta_L_prime": self.eta_b,
            "lhs": self.lhs, "rhs": self.rhs,
            "applicable": self.applicable, "satisfied": self.satisfied,
            "error": self.error,
        }


@dataclass
class ObstructionReport:
    kind: str
    rows: list = field(default_factory=list)
    linking_mismatch: Optional[dict] = None
    notes: list = field(default_factory=list)

    @property
    def witnesses(self) -> list:
        return [r.omega for r in self.rows if r.applicable and r.satisfied is False]

    @property
    def verdict(self) -> str:
        if self.witnesses or self.linking_mismatch:
            return OBSTRUCTED
        return CONSISTENT

    @property
    def obstructed(self) -> bool:
        return self.verdict == OBSTRUCTED

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "verdict": self.verdict,
            "witnesses": [str(w) for w in self.witnesses],
            "linking_mismatch": self.linking_mismatch,
            "summary": {
                "points": len(self.rows),
                "applicable": sum(r.applicable for r in self.rows),
                "violations": len(self.witnesses),
                "errors": sum(r.error is not None for r in self.rows),
            },
            "notes": list(self.notes),
            "rows": [r.to_json() for r in self.rows],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        cols = ["omega", "sigma_L", "eta_L", "sigma_L_prime", "eta_L_prime", "lhs", "rhs",
                "applicable", "satisfied", "error"]
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in self.rows:
            d = r.to_json()
            w.writerow(["" if d[c] is None else d[c] for c in cols])
        return buf.getvalue()


def _classified_grid(mu, grid, classifications):
    if grid is None:
        grid = default_grid(mu)
    grid = list(grid)
    for w in grid:
        if w.num_vars != mu:
            raise DimensionError(f"grid point {w} does not have {mu} coordinates")
    if classifications is None:
        classifications = [classify(w) for w in grid]
    elif len(classifications) != len(grid):
        raise DomainError("need one classification per grid point")
    return grid, classifications


def _invariants(cc, omega, kw):
    try:
        return signature_and_nullity(cc, omega, **kw), None
    except ColorsigError as exc:
        return None, f"{type(exc).__name__}: {exc}"


def concordance_obstruction(cc_a: CComplexData, cc_b: CComplexData,
                            grid: Optional[Sequence[TorusPoint]] = None,
                            classifications: Optional[Sequence[OmegaClassification]] = None,
                            **kw) -> ObstructionReport:
    """Compare sigma and eta of two links on a grid and their sublink linking numbers.

    A difference at a point that is not a concordance root obstructs both
    concordance and 0.5-solvable cobordism.  Differing linking matrices are an
    independent obstruction.
    """
    require_valid(cc_a)
    require_valid(cc_b)
    if cc_a.mu != cc_b.mu:
        raise DimensionError(f"links have {cc_a.mu} and {cc_b.mu} colors")
    grid, classifications = _classified_grid(cc_a.mu, grid, classifications)
    report = ObstructionReport("concordance")
    if cc_a.linking != cc_b.linking:
        diffs = {f"{i + 1},{j + 1}": [cc_a.linking[i][j], cc_b.linking[i][j]]
                 for i in range(cc_a.mu) for j in range(i + 1, cc_a.mu)
                 if cc_a.linking[i][j] != cc_b.linking[i][j]}
        report.linking_mismatch = diffs
    for omega, cl in zip(grid, classifications):
        ia, err_a = _invariants(cc_a, omega, kw)
        ib, err_b = _invariants(cc_b, omega, kw)
        row = ReportRow(omega, cl.is_safe)
        if ia is None or ib is None:
            row.applicable = False
            row.error = err_a or err_b
        else:
            row.sigma_a, row.eta_a, row.sigma_b, row.eta_b = (
                ia.signature, ia.eta, ib.signature, ib.eta)
            row.lhs = abs(ia.signature - ib.signature) + abs(ia.eta - ib.eta)
            row.rhs = 0
            row.satisfied = row.lhs == 0
        report.rows.append(row)
    return report


def genus_bound_report(cc_a: CComplexData, cc_b: CComplexData, profile: CobordismProfile,
                       grid: Optional[Sequence[TorusPoint]] = None,
                       classifications: Optional[Sequence[OmegaClassification]] = None,
                       **kw) -> ObstructionReport:
    """Test the cobordism genus bound for a claimed cobordism at every grid point."""
    require_valid(cc_a)
    require_valid(cc_b)
    if cc_a.mu != cc_b.mu:
        raise DimensionError(f"links have {cc_a.mu} and {cc_b.mu} colors")
    grid, classifications = _classified_grid(cc_a.mu, grid, classifications)
    cost = cobordism_cost(profile)
    report = ObstructionReport("genus_bound", notes=[f"cobordism cost {cost}"])
    for omega, cl in zip(grid, classifications):
        ia, err_a = _invariants(cc_a, omega, kw)
        ib, err_b = _invariants(cc_b, omega, kw)
        row = ReportRow(omega, cl.is_safe)
        if ia is None or ib is None:
            row.applicable = False
            row.error = err_a or err_b
        else:
            chk = genus_bound_check(ia, ib, profile, omega, cl)
            row.sigma_a, row.eta_a, row.sigma_b, row.eta_b = (
                ia.signature, ia.eta, ib.signature, ib.eta)
            row.lhs, row.rhs, row.satisfied = chk.lhs, chk.rhs, chk.satisfied
        report.rows.append(row)
    return report


def surface_bound_report(cc: CComplexData, sp: SurfaceProfile,
                         grid: Optional[Sequence[TorusPoint]] = None,
                         classifications: Optional[Sequence[OmegaClassification]] = None,
                         **kw) -> ObstructionReport:
    """Test the bounding-surface bound for a claimed surface at every grid point."""
    require_valid(cc)
    grid, classifications = _classified_grid(cc.mu, grid, classifications)
    report = ObstructionReport("surface_bound")
    for omega, cl in zip(grid, classifications):
        inv, err = _invariants(cc, omega, kw)
        row = ReportRow(omega, cl.is_safe)
        if inv is None:
            row.applicable = False
            row.error = err
        else:
            chk = surface_bound_check(inv, sp, omega, cl)
            row.sigma_a, row.eta_a = inv.signature, inv.eta
            row.lhs, row.rhs, row.satisfied = chk.lhs, chk.rhs, chk.satisfied
        report.rows.append(row)
    return report
