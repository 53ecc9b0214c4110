"""Scalars attached to points of the torus (S^1 minus 1)^mu.

Roots of unity are handled exactly in the cyclotomic ring Z[zeta_N] (with an
optional rational denominator), reduced modulo the N-th cyclotomic polynomial
so that equality and zero tests are coefficient comparisons.  Other points are
handled with mpmath complex numbers at an explicit working precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Sequence, Union

import mpmath

from .errors import ConfigurationError, DimensionError, DomainError
from .laurent import LaurentPoly

DEFAULT_PRECISION = 128
TWO_PI = 2 * math.pi


# ---------------------------------------------------------------------------
# torus points


@dataclass(frozen=True)
class RootOfUnity:
    """exp(2 pi i k / n), stored with k/n reduced and 0 < k < n."""

    k: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"root of unity order must be positive, got {self.n}")
        k, n = self.k % self.n, self.n
        if k == 0:
            raise DomainError("coordinate equal to 1 is not a point of the torus")
        g = math.gcd(k, n)
        object.__setattr__(self, "k", k // g)
        object.__setattr__(self, "n", n // g)

    @property
    def angle(self) -> float:
        return TWO_PI * self.k / self.n

    def conjugate(self) -> "RootOfUnity":
        return RootOfUnity(self.n - self.k, self.n)

    def to_json(self):
        return {"root": [self.k, self.n]}

    def __str__(self):
        return f"root:{self.k}/{self.n}"


@dataclass(frozen=True)
class Angle:
    """exp(i angle) with angle strictly inside (0, 2 pi)."""

    angle: float

    def __post_init__(self):
        a = float(self.angle)
        if not (0.0 < a < TWO_PI) or not math.isfinite(a):
            raise DomainError(f"angle {self.angle!r} is not in the open interval (0, 2pi)")
        object.__setattr__(self, "angle", a)

    def conjugate(self) -> "Angle":
        return Angle(TWO_PI - self.angle)

    def to_json(self):
        return {"angle": self.angle}

    def __str__(self):
        return f"angle:{self.angle:.12g}"


Coordinate = Union[RootOfUnity, Angle]


@dataclass(frozen=True)
class TorusPoint:
    coords: tuple

    def __post_init__(self):
        coords = tuple(self.coords)
        if not coords:
            raise DimensionError("a torus point needs at least one coordinate")
        for c in coords:
            if not isinstance(c, (RootOfUnity, Angle)):
                raise TypeError(f"bad coordinate {c!r}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def roots(cls, *pairs) -> "TorusPoint":
        """``TorusPoint.roots((1, 3), (1, 2))`` is (zeta_3, -1)."""
        return cls(tuple(RootOfUnity(k, n) for k, n in pairs))

    @classmethod
    def angles(cls, *angles) -> "TorusPoint":
        return cls(tuple(Angle(a) for a in angles))

    @property
    def num_vars(self) -> int:
        return len(self.coords)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, RootOfUnity) for c in self.coords)

    def conjugate(self) -> "TorusPoint":
        return TorusPoint(tuple(c.conjugate() for c in self.coords))

    def to_approx(self) -> "TorusPoint":
        return TorusPoint(tuple(Angle(c.angle) if isinstance(c, RootOfUnity) else c
                                for c in self.coords))

    def to_json(self):
        return {"coords": [c.to_json() for c in self.coords]}

    @classmethod
    def from_json(cls, data) -> "TorusPoint":
        coords = []
        for c in data["coords"]:
            if "root" in c:
                k, n = c["root"]
                coords.append(RootOfUnity(int(k), int(n)))
            elif "angle" in c:
                coords.append(Angle(float(c["angle"])))
            else:
                raise DomainError(f"unknown coordinate encoding {c!r}")
        return cls(tuple(coords))

    def __str__(self):
        return ",".join(str(c) for c in self.coords)


def parse_omega(text: str) -> TorusPoint:
    """Parse ``"root:1/3,root:1/2"`` or ``"angle:2.2,root:1/2"``."""
    coords = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        kind, _, value = chunk.partition(":")
        try:
            if kind == "root":
                k, n = value.split("/")
                coords.append(RootOfUnity(int(k), int(n)))
            elif kind == "angle":
                coords.append(Angle(float(value)))
            else:
                raise DomainError(f"unknown coordinate kind {kind!r} in {chunk!r}")
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise DomainError(f"cannot parse coordinate {chunk!r}") from exc
    return TorusPoint(tuple(coords))


def common_field(omega: TorusPoint) -> int:
    """Smallest N such that every coordinate is a power of zeta_N."""
    if not omega.is_exact:
        raise ConfigurationError("common_field needs an exact point")
    return reduce(math.lcm, (c.n for c in omega.coords), 1)


def prime_power_base(n: int):
    """Return p if n = p^e with e >= 1, else None."""
    if n < 2:
        return None
    p = next((d for d in range(2, math.isqrt(n) + 1) if n % d == 0), n)
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def is_root_of_unity_of_prime_power_order(c: Coordinate):
    if isinstance(c, RootOfUnity):
        return prime_power_base(c.n)
    return None


# ---------------------------------------------------------------------------
# cyclotomic polynomials


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_div_exact(num, den):
    """Exact division of integer coefficient lists (low degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(n: int) -> tuple:
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _poly_div_exact(num, _cyclotomic_coeffs(d))
    return tuple(num)


def cyclotomic_polynomial(n: int) -> LaurentPoly:
    """Phi_n(t) as a one-variable Laurent polynomial."""
    if n < 1:
        raise DomainError("cyclotomic polynomials are indexed by positive integers")
    return LaurentPoly.from_univariate(_cyclotomic_coeffs(n))


@lru_cache(maxsize=None)
def _reducer(N: int):
    """(degree, sparse low part) such that x^deg = -sum c_j x^j modulo Phi_N."""
    coeffs = _cyclotomic_coeffs(N)
    deg = len(coeffs) - 1
    return deg, tuple((j, c) for j, c in enumerate(coeffs[:-1]) if c)


def _reduce(vec, N):
    deg, low = _reducer(N)
    vec = list(vec)
    for k in range(len(vec) - 1, deg - 1, -1):
        c = vec[k]
        if c:
            base = k - deg
            for j, d in low:
                vec[base + j] -= c * d
    vec = vec[:deg]
    vec.extend([0] * (deg - len(vec)))
    return tuple(vec)


def _polymul(a, b):
    """Product of integer coefficient lists via Kronecker packing into one big int."""
    if not a or not b:
        return []
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    if ma == 0 or mb == 0:
        return [0] * (len(a) + len(b) - 1)
    bits = (ma * mb * min(len(a), len(b))).bit_length() + 2
    A = 0
    for c in reversed(a):
        A = (A << bits) + c
    B = 0
    for c in reversed(b):
        B = (B << bits) + c
    P = A * B
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(len(a) + len(b) - 1):
        low = P & mask
        if low >= half:
            low -= 1 << bits
        out.append(low)
        P = (P - low) >> bits
    return out


# ---------------------------------------------------------------------------
# exact scalars


class CyclotomicScalar:
    """An element (sum_j coeffs[j] zeta_N^j) / den of Q(zeta_N).

    ``coeffs`` has length deg Phi_N; ``den`` is a positive integer coprime to
    the content of ``coeffs``.
    """

    __slots__ = ("N", "coeffs", "den")

    def __init__(self, N: int, coeffs: Sequence[int], den: int = 1, *, reduced: bool = False):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if not reduced:
            coeffs = _reduce(coeffs, N)
        if den < 0:
            coeffs = tuple(-c for c in coeffs)
            den = -den
        if den != 1:
            g = reduce(math.gcd, coeffs, den)
            if g > 1:
                coeffs = tuple(c // g for c in coeffs)
                den //= g
        self.N = N
        self.coeffs = tuple(coeffs)
        self.den = den

    @classmethod
    def from_int(cls, value: int, N: int) -> "CyclotomicScalar":
        deg = _reducer(N)[0]
        return cls(N, (value,) + (0,) * (deg - 1), reduced=True)

    @classmethod
    def zeta_power(cls, j: int, N: int) -> "CyclotomicScalar":
        vec = [0] * N
        vec[j % N] = 1
        return cls(N, vec)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def _check(self, other):
        if isinstance(other, int):
            return CyclotomicScalar.from_int(other, self.N)
        if not isinstance(other, CyclotomicScalar):
            return NotImplemented
        if other.N != self.N:
            raise DimensionError(f"scalars live in Q(zeta_{self.N}) and Q(zeta_{other.N})")
        return other

    def __eq__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs and self.den == other.den

    def __hash__(self):
        return hash((self.N, self.coeffs, self.den))

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return CyclotomicScalar(self.N, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
                                    self.den, reduced=True)
        d1, d2 = self.den, other.den
        return CyclotomicScalar(
            self.N, tuple(a * d2 + b * d1 for a, b in zip(self.coeffs, other.coeffs)),
            d1 * d2, reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar(self.N, tuple(-c for c in self.coeffs), self.den, reduced=True)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicScalar(self.N, tuple(c * other for c in self.coeffs), self.den,
                                    reduced=True)
        other = self._check(other)
        if other is NotImplemented:
            return other
        prod = _polymul(self.coeffs, other.coeffs)
        return CyclotomicScalar(self.N, prod, self.den * other.den)

    __rmul__ = __mul__

    def scale_down(self, d: int) -> "CyclotomicScalar":
        """Divide by a nonzero integer."""
        return CyclotomicScalar(self.N, self.coeffs, self.den * d, reduced=True)

    def conjugate(self) -> "CyclotomicScalar":
        vec = [0] * self.N
        for j, c in enumerate(self.coeffs):
            vec[(-j) % self.N] += c
        return CyclotomicScalar(self.N, vec, self.den)

    def is_real(self) -> bool:
        return self == self.conjugate()

    def lift(self, M: int) -> "CyclotomicScalar":
        """Embed into Q(zeta_M) for a multiple M of N."""
        if M % self.N:
            raise DimensionError(f"{self.N} does not divide {M}")
        step = M // self.N
        vec = [0] * M
        for j, c in enumerate(self.coeffs):
            vec[j * step] = c
        return CyclotomicScalar(M, vec, self.den)

    def to_complex(self, precision: int = DEFAULT_PRECISION):
        ctx = mpmath.MPContext()
        ctx.prec = precision
        total = ctx.mpc(0)
        for j, c in enumerate(self.coeffs):
            if c:
                total += c * ctx.expjpi(ctx.mpf(2 * j) / self.N)
        return total / self.den

    def __complex__(self):
        return complex(self.to_complex(64))

    def __repr__(self):
        return f"CyclotomicScalar(N={self.N}, coeffs={list(self.coeffs)}, den={self.den})"


def sign_of_real(x: CyclotomicScalar, *, start_precision: int = 64) -> int:
    """Exact sign of a real element of a cyclotomic field.

    Zero is detected exactly; otherwise an interval enclosure of the value is
    refined at doubling precision until it excludes zero.
    """
    if not x.is_real():
        raise DomainError("sign_of_real called on a non-real cyclotomic number")
    if x.is_zero():
        return 0
    prec = start_precision + max(abs(c) for c in x.coeffs).bit_length()
    while True:
        iv = mpmath.ctx_iv.MPIntervalContext()
        iv.prec = prec
        total = iv.mpf(0)
        two_pi = 2 * iv.pi
        for j, c in enumerate(x.coeffs):
            if c:
                total += c * iv.cos(two_pi * j / x.N)
        if total.a > 0:
            return 1
        if total.b < 0:
            return -1
        prec *= 2


# ---------------------------------------------------------------------------
# evaluation at torus points


def zeta_exponents(omega: TorusPoint):
    """(N, e) with omega_i = zeta_N^{e_i}."""
    N = common_field(omega)
    return N, tuple(c.k * (N // c.n) for c in omega.coords)


def evaluate_exact(p: LaurentPoly, omega: TorusPoint) -> CyclotomicScalar:
    if p.num_vars != omega.num_vars:
        raise DimensionError("polynomial and point have different numbers of variables")
    if not omega.is_exact:
        raise ConfigurationError("exact evaluation needs every coordinate to be a root of unity")
    N, exps = zeta_exponents(omega)
    vec = [0] * N
    for e, c in p.items():
        vec[sum(a * b for a, b in zip(e, exps)) % N] += c
    return CyclotomicScalar(N, vec)


def approx_coordinates(omega: TorusPoint, ctx):
    return [ctx.expj(ctx.mpf(2 * c.k) * ctx.pi / c.n) if isinstance(c, RootOfUnity)
            else ctx.expj(ctx.mpf(c.angle)) for c in omega.coords]


def evaluate_approx(p: LaurentPoly, omega: TorusPoint, precision: int = DEFAULT_PRECISION):
    if p.num_vars != omega.num_vars:
        raise DimensionError("polynomial and point have different numbers of variables")
    ctx = mpmath.MPContext()
    ctx.prec = precision
    zs = approx_coordinates(omega, ctx)
    total = ctx.mpc(0)
    for e, c in p.items():
        term = ctx.mpc(c)
        for z, k in zip(zs, e):
            if k:
                term *= z ** k
        total += term
    return total


def evaluate_poly(p: LaurentPoly, omega: TorusPoint, *, backend: str | None = None,
                  precision: int | None = None):
    if backend is None:
        backend = "exact" if omega.is_exact else "approx"
    if backend == "exact":
        if not omega.is_exact:
            raise ConfigurationError("exact backend requested for an approximate point")
        return evaluate_exact(p, omega)
    if backend == "approx":
        return evaluate_approx(p, omega, precision or DEFAULT_PRECISION)
    raise ConfigurationError(f"unknown backend {backend!r}")
