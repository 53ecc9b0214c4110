"""C-complex data: generalized Seifert matrices and the forms built from them."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import mpmath

from .errors import ConfigurationError, DimensionError, DomainError, ValidationError
from .laurent import LaurentMatrix, LaurentPoly
from .scalar import (DEFAULT_PRECISION, CyclotomicScalar, TorusPoint, approx_coordinates,
                     zeta_exponents)

SCHEMA_VERSION = 1


def sign_vectors(mu: int, *, half: bool = False):
    """All eps in {+1,-1}^mu in a fixed order; ``half`` keeps eps_1 = +1."""
    for tail in itertools.product((1, -1), repeat=mu - 1):
        yield (1,) + tail
    if not half:
        for tail in itertools.product((1, -1), repeat=mu - 1):
            yield (-1,) + tuple(-x for x in tail)


def sign_string(eps) -> str:
    return "".join("+" if e > 0 else "-" for e in eps)


def parse_sign_string(s: str) -> tuple:
    if not s or set(s) - {"+", "-"}:
        raise DomainError(f"bad sign string {s!r}")
    return tuple(1 if ch == "+" else -1 for ch in s)


def _transpose(m):
    return [list(r) for r in zip(*m)] if m else []


@dataclass(frozen=True)
class CComplexData:
    """Generalized Seifert matrices of a C-complex plus link metadata.

    Only the matrices with eps_1 = +1 are stored; A^{-eps} is (A^eps)^T.
    """

    mu: int
    g: int
    half_matrices: Mapping[tuple, tuple]
    beta0: int = 1
    components_per_color: tuple = ()
    linking: tuple = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        mats = {tuple(k): tuple(tuple(int(x) for x in row) for row in v)
                for k, v in dict(self.half_matrices).items()}
        object.__setattr__(self, "half_matrices", mats)
        cpc = tuple(self.components_per_color) or (1,) * self.mu
        object.__setattr__(self, "components_per_color", cpc)
        lk = self.linking or [[0] * self.mu for _ in range(self.mu)]
        object.__setattr__(self, "linking", tuple(tuple(int(x) for x in r) for r in lk))

    @classmethod
    def from_seifert(cls, A: Sequence[Sequence[int]], *, beta0: int = 1, components: int = 1,
                     name: str = "") -> "CComplexData":
        """One-colored C-complex from a classical Seifert matrix ``A``.

        With A^- = A (so A^+ = A^T) the form is (1 - w) A + (1 - conj w) A^T.
        """
        A = [list(r) for r in A]
        return cls(mu=1, g=len(A), half_matrices={(1,): _transpose(A)}, beta0=beta0,
                   components_per_color=(components,), linking=((0,),), name=name)

    @classmethod
    def unlink(cls, m: int, mu: int = 1, name: str = "") -> "CComplexData":
        """m disjoint disks: empty matrices and beta0 = m."""
        if mu != 1:
            raise DomainError("use the general constructor for colored unlinks")
        return cls(mu=1, g=0, half_matrices={(1,): ()}, beta0=m, components_per_color=(m,),
                   linking=((0,),), name=name)

    def matrix(self, eps) -> tuple:
        eps = tuple(eps)
        if eps[0] == 1:
            return self.half_matrices[eps]
        return tuple(zip(*self.half_matrices[tuple(-e for e in eps)]))

    def full_family(self) -> dict:
        return {eps: self.matrix(eps) for eps in sign_vectors(self.mu)}

    # serialization
    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "name": self.name,
            "mu": self.mu,
            "g": self.g,
            "beta0": self.beta0,
            "components_per_color": list(self.components_per_color),
            "linking": [list(r) for r in self.linking],
            "matrices": {sign_string(eps): [list(r) for r in self.half_matrices[eps]]
                         for eps in sorted(self.half_matrices, reverse=True)},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CComplexData":
        problems = []
        if not isinstance(data, Mapping):
            raise ValidationError(["C-complex document must be a JSON object"])
        if data.get("schema", SCHEMA_VERSION) != SCHEMA_VERSION:
            problems.append(f"unsupported schema version {data.get('schema')!r}")
        for key in ("mu", "g", "matrices"):
            if key not in data:
                problems.append(f"missing field {key!r}")
        if problems:
            raise ValidationError(problems)
        mats = {}
        for key, value in data["matrices"].items():
            try:
                eps = parse_sign_string(key)
            except DomainError as exc:
                raise ValidationError([str(exc)]) from exc
            if eps[0] != 1:
                raise ValidationError([f"matrix key {key!r} must start with '+'"])
            mats[eps] = value
        try:
            return cls(mu=int(data["mu"]), g=int(data["g"]), half_matrices=mats,
                       beta0=int(data.get("beta0", 1)),
                       components_per_color=tuple(data.get("components_per_color", ())),
                       linking=data.get("linking", ()), name=data.get("name", ""))
        except (TypeError, ValueError) as exc:
            raise ValidationError([f"malformed C-complex: {exc}"]) from exc

    @classmethod
    def load(cls, path) -> "CComplexData":
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValidationError([f"{path}: invalid JSON ({exc})"]) from exc
        return cls.from_json(data)


def validate(cc: CComplexData) -> list[str]:
    """All violated invariants of ``cc``; an empty list means it is well formed."""
    out = []
    if cc.mu < 1:
        return ["mu must be at least 1"]
    if cc.g < 0:
        out.append("g must be nonnegative")
    if cc.beta0 < 1:
        out.append("beta0 must be at least 1")
    expected = set(sign_vectors(cc.mu, half=True))
    keys = set(cc.half_matrices)
    for eps in sorted(expected - keys):
        out.append(f"missing matrix for sign vector {sign_string(eps)}")
    for eps in sorted(keys - expected):
        out.append(f"unexpected matrix key {sign_string(eps)}")
    for eps in sorted(keys & expected):
        m = cc.half_matrices[eps]
        if len(m) != cc.g or any(len(r) != cc.g for r in m):
            out.append(f"matrix {sign_string(eps)} is not {cc.g}x{cc.g}")
    if len(cc.components_per_color) != cc.mu:
        out.append("components_per_color must have one entry per color")
    elif any(n < 1 for n in cc.components_per_color):
        out.append("every color needs at least one component")
    lk = cc.linking
    if len(lk) != cc.mu or any(len(r) != cc.mu for r in lk):
        out.append("linking matrix must be mu x mu")
    else:
        if any(lk[i][i] for i in range(cc.mu)):
            out.append("linking matrix must have zero diagonal")
        if any(lk[i][j] != lk[j][i] for i in range(cc.mu) for j in range(cc.mu)):
            out.append("linking matrix must be symmetric")
    return out


def require_valid(cc: CComplexData) -> None:
    problems = validate(cc)
    if problems:
        raise ValidationError(problems)


def symbolic_form(cc: CComplexData) -> LaurentMatrix:
    """H(t) = sum_eps prod_i (1 - t_i^{-eps_i}) A^eps over the Laurent ring."""
    require_valid(cc)
    mu, g = cc.mu, cc.g
    one = LaurentPoly.constant(1, mu)
    entries = [[LaurentPoly(mu) for _ in range(g)] for _ in range(g)]
    for eps in sign_vectors(mu):
        factor = one
        for i, e in enumerate(eps):
            exp = [0] * mu
            exp[i] = -e
            factor = factor * (one - LaurentPoly.monomial(exp))
        A = cc.matrix(eps)
        for i in range(g):
            for j in range(g):
                if A[i][j]:
                    entries[i][j] = entries[i][j] + factor * A[i][j]
    return LaurentMatrix(entries, mu, cols=g)


class HermitianForm:
    """A g x g Hermitian matrix over an exact or approximate scalar backend."""

    def __init__(self, entries, backend: str, *, precision: int = DEFAULT_PRECISION,
                 check: bool = True, atol: float = 0.0):
        self.entries = [list(r) for r in entries]
        self.size = len(self.entries)
        if any(len(r) != self.size for r in self.entries):
            raise DimensionError("Hermitian form must be square")
        if backend not in ("exact", "approx"):
            raise ConfigurationError(f"unknown backend {backend!r}")
        self.backend = backend
        self.precision = precision
        if check and not self.is_hermitian(atol):
            raise DomainError("matrix is not Hermitian")

    @classmethod
    def from_rows(cls, rows, N: int = 4) -> "HermitianForm":
        """Exact form from rows of CyclotomicScalar / ints in Q(zeta_N)."""
        ent = [[x if isinstance(x, CyclotomicScalar) else CyclotomicScalar.from_int(x, N)
                for x in r] for r in rows]
        return cls(ent, "exact")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def is_hermitian(self, atol: float = 0.0) -> bool:
        n = self.size
        if self.backend == "exact":
            return all(self.entries[i][j] == self.entries[j][i].conjugate()
                       for i in range(n) for j in range(i, n))
        scale = max([abs(x) for r in self.entries for x in r] + [1])
        tol = atol or scale * mpmath.mpf(2) ** (-(self.precision - 8))
        return all(abs(self.entries[i][j] - self.entries[j][i].conjugate()) <= tol
                   for i in range(n) for j in range(i, n))

    def to_complex(self):
        """Entries as Python complex numbers (for inspection and numpy oracles)."""
        return [[complex(x) for x in r] for r in self.entries]

    def conjugate(self) -> "HermitianForm":
        ent = [[x.conjugate() for x in r] for r in self.entries]
        return HermitianForm(ent, self.backend, precision=self.precision, check=False)


def _exact_factors(cc, omega):
    N, exps = zeta_exponents(omega)
    one = CyclotomicScalar.from_int(1, N)
    factors = {}
    for eps in sign_vectors(cc.mu):
        f = one
        for e, k in zip(eps, exps):
            # 1 - conj(w)^eps = 1 - zeta^(-eps k)
            f = f * (one - CyclotomicScalar.zeta_power(-e * k, N))
        factors[eps] = f
    return N, factors


def hermitian_form(cc: CComplexData, omega: TorusPoint, *, backend: str | None = None,
                   precision: int = DEFAULT_PRECISION) -> HermitianForm:
    """H(w) = sum_eps prod_i (1 - conj(w_i)^eps_i) A^eps."""
    require_valid(cc)
    if omega.num_vars != cc.mu:
        raise DimensionError(f"point has {omega.num_vars} coordinates, C-complex has {cc.mu} colors")
    if backend is None:
        backend = "exact" if omega.is_exact else "approx"
    g = cc.g
    if backend == "exact":
        if not omega.is_exact:
            raise ConfigurationError("exact backend needs every coordinate to be a root of unity")
        N, factors = _exact_factors(cc, omega)
        zero = CyclotomicScalar.from_int(0, N)
        ent = [[zero] * g for _ in range(g)]
        for eps, f in factors.items():
            A = cc.matrix(eps)
            for i in range(g):
                for j in range(g):
                    if A[i][j]:
                        ent[i][j] = ent[i][j] + f * A[i][j]
        return HermitianForm(ent, "exact")
    if backend != "approx":
        raise ConfigurationError(f"unknown backend {backend!r}")
    ctx = mpmath.MPContext()
    ctx.prec = precision
    zs = approx_coordinates(omega, ctx)
    ent = [[ctx.mpc(0)] * g for _ in range(g)]
    for eps in sign_vectors(cc.mu):
        f = ctx.mpc(1)
        for e, z in zip(eps, zs):
            f *= 1 - ctx.conj(z) ** e
        A = cc.matrix(eps)
        for i in range(g):
            for j in range(g):
                if A[i][j]:
                    ent[i][j] += f * A[i][j]
    return HermitianForm(ent, "approx", precision=precision)
