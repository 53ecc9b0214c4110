"""Inertia of Hermitian forms and the colored signature and nullity."""
from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from typing import Optional, Sequence

import mpmath

from .ccomplex import CComplexData, HermitianForm, hermitian_form, require_valid, symbolic_form
from .errors import ColorsigError, DimensionError, DomainError, IndeterminateInertiaError
from .laurent import rank_over_fraction_field
from .scalar import (DEFAULT_PRECISION, CyclotomicScalar, RootOfUnity, TorusPoint,
                     prime_power_base, sign_of_real)

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class InertiaResult:
    signature: int
    nullity: int
    eta: int
    backend: str
    tolerance_margin: Optional[float] = None
    omega: Optional[TorusPoint] = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "omega": self.omega.to_json() if self.omega is not None else None,
            "signature": self.signature,
            "nullity": self.nullity,
            "eta": self.eta,
            "backend": self.backend,
            "tolerance_margin": self.tolerance_margin,
        }


# ---------------------------------------------------------------------------
# exact congruence reduction


def _clear_denominators(rows):
    den = reduce(math.lcm, (x.den for r in rows for x in r), 1)
    if den == 1:
        return [list(r) for r in rows]
    return [[CyclotomicScalar(x.N, [c * (den // x.den) for c in x.coeffs], reduced=True)
             for x in r] for r in rows]


def _primitive(rows):
    """Divide a block by the positive content of all its coefficients."""
    g = 0
    for r in rows:
        for x in r:
            for c in x.coeffs:
                if c:
                    g = math.gcd(g, c)
                    if g == 1:
                        return rows
    if g <= 1:
        return rows
    return [[CyclotomicScalar(x.N, [c // g for c in x.coeffs], reduced=True) for x in r]
            for r in rows]


def _size(x: CyclotomicScalar) -> int:
    return sum(abs(c).bit_length() for c in x.coeffs)


def exact_inertia_counts(H: HermitianForm) -> tuple[int, int, int]:
    """(positive, negative, zero) counts by Hermitian congruence reduction.

    The reduction never divides: pivoting on a real d != 0 replaces the rest
    of the block by |d| times its Schur complement, and a hyperbolic pivot
    [[0, h], [conj h, 0]] by |h|^2 times it.  Both multipliers are positive
    reals, so inertia is preserved.
    """
    M = _clear_denominators(H.entries)
    pos = neg = zero = 0
    while M:
        n = len(M)
        keep = [i for i in range(n) if any(M[i][j] for j in range(n))]
        zero += n - len(keep)
        if len(keep) < n:
            M = [[M[i][j] for j in keep] for i in keep]
            n = len(M)
            if not n:
                break
        diag = [i for i in range(n) if M[i][i]]
        if diag:
            p = min(diag, key=lambda i: _size(M[i][i]))
            d = M[p][p]
            s = sign_of_real(d)
            if s > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in range(n) if i != p]
            new = []
            for i in rest:
                row = []
                mip = M[i][p]
                for j in rest:
                    v = d * M[i][j]
                    if mip and M[p][j]:
                        v = v - mip * M[p][j]
                    row.append(v if s > 0 else -v)
                new.append(row)
        else:
            p, q = next((i, j) for i in range(n) for j in range(i + 1, n) if M[i][j])
            h = M[p][q]
            hbar = M[q][p]
            norm = h * hbar
            pos += 1
            neg += 1
            rest = [i for i in range(n) if i not in (p, q)]
            new = []
            for k in rest:
                row = []
                for l in rest:
                    v = norm * M[k][l]
                    if M[k][p] and M[q][l]:
                        v = v - M[k][p] * h * M[q][l]
                    if M[k][q] and M[p][l]:
                        v = v - M[k][q] * hbar * M[p][l]
                    row.append(v)
                new.append(row)
        M = _primitive(new)
    return pos, neg, zero


# ---------------------------------------------------------------------------
# approximate eigenvalue counts


def approx_inertia_counts(H: HermitianForm, tolerance: float = DEFAULT_TOLERANCE):
    """(positive, negative, zero, margin) from eigenvalues at H.precision bits.

    Eigenvalues with |lambda| <= tolerance * max|entry| count as zero.  An
    eigenvalue inside (tol/4, 4 tol) is refused rather than guessed.
    """
    n = H.size
    if n == 0:
        return 0, 0, 0, None
    ctx = mpmath.MPContext()
    ctx.prec = H.precision
    A = ctx.matrix(n, n)
    for i in range(n):
        for j in range(n):
            x = H.entries[i][j]
            A[i, j] = x.to_complex(H.precision) if isinstance(x, CyclotomicScalar) else ctx.mpc(x)
    scale = max(abs(A[i, j]) for i in range(n) for j in range(n))
    if scale == 0:
        return 0, 0, n, None
    tol = ctx.mpf(tolerance) * scale
    eigs = ctx.eighe(A, eigvals_only=True)
    pos = neg = zero = 0
    margin = None
    for k in range(n):
        lam = ctx.re(eigs[k])
        a = abs(lam)
        if tol / 4 < a < 4 * tol:
            raise IndeterminateInertiaError(
                f"eigenvalue {ctx.nstr(lam, 8)} is within a factor 4 of the zero tolerance "
                f"{ctx.nstr(tol, 8)}; increase the precision or change the tolerance")
        if a <= tol:
            zero += 1
            continue
        margin = a if margin is None else min(margin, a)
        if lam > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg, zero, (float(margin) if margin is not None else None)


def inertia(H: HermitianForm, *, tolerance: float = DEFAULT_TOLERANCE) -> tuple[int, int]:
    """(signature, nullity) of a Hermitian form."""
    if H.backend == "exact":
        p, q, z = exact_inertia_counts(H)
    else:
        p, q, z, _ = approx_inertia_counts(H, tolerance)
    return p - q, z


def signature_and_nullity(cc: CComplexData, omega: TorusPoint, *, backend: str | None = None,
                          precision: int = DEFAULT_PRECISION,
                          tolerance: float = DEFAULT_TOLERANCE) -> InertiaResult:
    """sigma_L(w) = sign H(w) and eta_L(w) = null H(w) + beta0 - 1."""
    if omega.num_vars != cc.mu:
        raise DimensionError(f"point has {omega.num_vars} coordinates, C-complex has {cc.mu} colors")
    if backend is None:
        backend = "exact" if omega.is_exact else "approx"
    H = hermitian_form(cc, omega, backend=backend, precision=precision)
    margin = None
    if H.backend == "exact":
        p, q, z = exact_inertia_counts(H)
    else:
        p, q, z, margin = approx_inertia_counts(H, tolerance)
    return InertiaResult(p - q, z, z + cc.beta0 - 1, H.backend, margin, omega)


@dataclass(frozen=True)
class ProfileRow:
    omega: TorusPoint
    result: Optional[InertiaResult]
    error: Optional[str] = None


def _profile_point(args):
    cc, omega, kw = args
    try:
        return ProfileRow(omega, signature_and_nullity(cc, omega, **kw))
    except ColorsigError as exc:
        return ProfileRow(omega, None, f"{type(exc).__name__}: {exc}")


def torus_profile(cc: CComplexData, grid: Sequence[TorusPoint], *, max_workers: int = 1,
                  **kw) -> list[ProfileRow]:
    """Invariants at every grid point, in grid order; failures are recorded per row."""
    require_valid(cc)
    jobs = [(cc, omega, kw) for omega in grid]
    if max_workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(_profile_point, jobs))
    return [_profile_point(j) for j in jobs]


# ---------------------------------------------------------------------------
# Alexander nullity


def _prime_powers(count: int, lo: int = 11):
    out, n = [], lo
    while len(out) < count:
        if prime_power_base(n):
            out.append(n)
        n += 1
    return out


def sample_points(mu: int, count: int = 32, *, seed: int = 0, lo: int = 11) -> list[TorusPoint]:
    """Exact points whose coordinates are roots of unity of pairwise distinct
    prime-power orders >= ``lo`` (one order per point), with random exponents."""
    rng = random.Random(seed)
    pts = []
    for n in _prime_powers(count, lo):
        coords = []
        for _ in range(mu):
            k = rng.randrange(1, n)
            while math.gcd(k, n) != 1:
                k = rng.randrange(1, n)
            coords.append(RootOfUnity(k, n))
        pts.append(TorusPoint(tuple(coords)))
    return pts


@dataclass(frozen=True)
class AlexanderNullity:
    value: int
    sampled: bool

    def __int__(self):
        return self.value


def alexander_nullity(cc: CComplexData, *, samples: int = 32, seed: int = 0) -> AlexanderNullity:
    """Generic nullity: g - rank H(t) for connected C-complexes, else a sampled minimum of eta."""
    require_valid(cc)
    if cc.beta0 == 1:
        return AlexanderNullity(cc.g - rank_over_fraction_field(symbolic_form(cc)), False)
    etas = [signature_and_nullity(cc, w).eta for w in sample_points(cc.mu, samples, seed=seed)]
    return AlexanderNullity(min(etas), True)
