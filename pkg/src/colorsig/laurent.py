"""Integer Laurent polynomials in several variables and matrices over them.

Polynomials are immutable and kept in canonical form: a tuple of
``(exponent_vector, coefficient)`` pairs sorted lexicographically by exponent,
with no zero coefficients.  Matrix rank over the fraction field is computed by
fraction-free (Bareiss) elimination.
"""
from __future__ import annotations

import math
from collections import defaultdict
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError, DomainError

Exponent = tuple


class LaurentPoly:
    """An element of Z[t_1^{+-1}, ..., t_mu^{+-1}]."""

    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[Sequence[int], int] | Iterable = ()):
        if num_vars < 1:
            raise DimensionError("a Laurent polynomial needs at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, int] = defaultdict(int)
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != num_vars:
                raise DimensionError(f"exponent {exp} does not have {num_vars} entries")
            acc[exp] += int(coeff)
        self.num_vars = num_vars
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = None

    # construction helpers
    @classmethod
    def constant(cls, value: int, num_vars: int = 1) -> "LaurentPoly":
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        return cls(len(exponent), {tuple(exponent): coeff})

    @classmethod
    def variable(cls, index: int, num_vars: int) -> "LaurentPoly":
        """The variable t_{index+1} (0-based index)."""
        if not 0 <= index < num_vars:
            raise DomainError(f"variable index {index} out of range for {num_vars} variables")
        exp = [0] * num_vars
        exp[index] = 1
        return cls.monomial(exp)

    @classmethod
    def from_univariate(cls, coeffs: Sequence[int], var: int = 0, num_vars: int = 1, shift: int = 0):
        """Build sum_k coeffs[k] t_var^(k+shift)."""
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                exp = [0] * num_vars
                exp[var] = k + shift
                terms[tuple(exp)] = c
        return cls(num_vars, terms)

    # basic accessors
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.num_vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, self._terms))
        return self._hash

    # ring operations
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.num_vars != self.num_vars:
                raise DimensionError(
                    f"cannot combine polynomials in {self.num_vars} and {other.num_vars} variables"
                )
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.num_vars)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(self.num_vars, acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.num_vars, [(e, -c) for e, c in self._terms])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        acc: dict[tuple, int] = defaultdict(int)
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return LaurentPoly(self.num_vars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) == 1 and abs(self._terms[0][1]) == 1:
                (e, c), = self._terms
                return LaurentPoly.monomial([-x * (-k) for x in e], c ** (-k))
            raise DomainError("only monomial units can be inverted")
        result = LaurentPoly.constant(1, self.num_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # structure
    def min_exponents(self) -> tuple:
        if not self._terms:
            return (0,) * self.num_vars
        return tuple(min(e[i] for e, _ in self._terms) for i in range(self.num_vars))

    def max_exponents(self) -> tuple:
        if not self._terms:
            return (0,) * self.num_vars
        return tuple(max(e[i] for e, _ in self._terms) for i in range(self.num_vars))

    def shift(self, exponent: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial t^exponent."""
        return LaurentPoly(
            self.num_vars, [(tuple(a + b for a, b in zip(e, exponent)), c) for e, c in self._terms]
        )

    def l1_norm(self) -> int:
        return sum(abs(c) for _, c in self._terms)

    def conjugate(self) -> "LaurentPoly":
        """Apply t_i -> t_i^{-1} to every variable."""
        return LaurentPoly(self.num_vars, [(tuple(-x for x in e), c) for e, c in self._terms])

    def substitute(self, images: Sequence["LaurentPoly"]) -> "LaurentPoly":
        """Replace t_i by images[i]; images must be Laurent polynomials in a common ring.

        Negative powers are only allowed for monomial images.
        """
        if len(images) != self.num_vars:
            raise DimensionError("need one image per variable")
        n = images[0].num_vars
        result = LaurentPoly(n)
        for e, c in self._terms:
            term = LaurentPoly.constant(c, n)
            for img, k in zip(images, e):
                if k:
                    term = term * img ** k
            result = result + term
        return result

    def __call__(self, *point):
        """Evaluate at plain numbers (ints, Fractions, complex...)."""
        if len(point) != self.num_vars:
            raise DimensionError("wrong number of arguments")
        total = 0
        for e, c in self._terms:
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * (x ** k)
            total = total + term
        return total

    # presentation
    def __repr__(self):
        if not self._terms:
            return "0"
        names = ["t"] if self.num_vars == 1 else [f"t{i + 1}" for i in range(self.num_vars)]
        parts = []
        for e, c in self._terms:
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> list:
        return [{"exponents": list(e), "coeff": c} for e, c in self._terms]

    @classmethod
    def from_json(cls, data, num_vars: int | None = None) -> "LaurentPoly":
        if isinstance(data, dict):
            num_vars = data.get("num_vars", num_vars)
            data = data["terms"]
        if num_vars is None:
            if not data:
                raise DomainError("cannot infer the number of variables of an empty polynomial")
            num_vars = len(data[0]["exponents"])
        return cls(num_vars, [(tuple(r["exponents"]), int(r["coeff"])) for r in data])


def augment(p: LaurentPoly) -> int:
    """Value at (1, ..., 1), i.e. the sum of the coefficients."""
    return sum(c for _, c in p.items())


def is_in_U(p: LaurentPoly) -> bool:
    return abs(augment(p)) == 1


def evaluate(p: LaurentPoly, omega, *, backend: str | None = None, precision: int | None = None):
    """Evaluate ``p`` at a torus point.

    Exact points give a :class:`~colorsig.scalar.CyclotomicScalar`; points with
    an approximate coordinate (or ``backend="approx"``) give an mpmath complex
    at ``precision`` bits.
    """
    from . import scalar

    return scalar.evaluate_poly(p, omega, backend=backend, precision=precision)


class LaurentMatrix:
    """Dense rows x cols matrix of Laurent polynomials in a common ring."""

    __slots__ = ("rows", "cols", "num_vars", "entries")

    def __init__(self, entries: Sequence[Sequence[LaurentPoly]], num_vars: int | None = None,
                 cols: int | None = None):
        entries = tuple(tuple(row) for row in entries)
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else (cols or 0)
        if any(len(r) != self.cols for r in entries):
            raise DimensionError("ragged matrix")
        if num_vars is None:
            num_vars = entries[0][0].num_vars if self.rows and self.cols else 1
        for row in entries:
            for p in row:
                if p.num_vars != num_vars:
                    raise DimensionError("entries live in different Laurent rings")
        self.num_vars = num_vars
        self.entries = entries

    @classmethod
    def from_ints(cls, rows: Sequence[Sequence[int]], num_vars: int = 1) -> "LaurentMatrix":
        return cls([[LaurentPoly.constant(x, num_vars) for x in r] for r in rows], num_vars)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, LaurentMatrix) and self.num_vars == other.num_vars
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __repr__(self):
        return f"LaurentMatrix({[list(r) for r in self.entries]!r})"

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix(list(zip(*self.entries)), self.num_vars, cols=self.rows)

    def conjugate(self) -> "LaurentMatrix":
        return LaurentMatrix([[p.conjugate() for p in r] for r in self.entries], self.num_vars,
                             cols=self.cols)

    def map(self, fn) -> list:
        return [[fn(p) for p in r] for r in self.entries]


# ---------------------------------------------------------------------------
# Fraction-free elimination.
#
# After each row is multiplied by a monomial so that all exponents are
# nonnegative, the polynomial ring Z[t_1..t_mu] is mapped into Z by the
# Kronecker substitution t_v -> 2^(B * w_v).  The map is a ring homomorphism,
# so Bareiss' exact divisions stay exact, and it is injective on polynomials
# whose degrees and coefficients respect the bounds used to choose B and w.
# Every intermediate Bareiss entry is a minor of the normalised matrix, which
# gives those bounds a priori.
# ---------------------------------------------------------------------------


def _normalized_rows(M: LaurentMatrix):
    rows, shifts = [], []
    for row in M.entries:
        nz = [p for p in row if p]
        if nz:
            lo = tuple(min(p.min_exponents()[v] for p in nz) for v in range(M.num_vars))
        else:
            lo = (0,) * M.num_vars
        shifts.append(lo)
        rows.append([p.shift([-x for x in lo]) for p in row])
    return rows, shifts


class _Packing:
    def __init__(self, rows, num_vars, order):
        degs = [0] * num_vars
        l1 = 1
        for row in rows:
            for p in row:
                if p:
                    degs = [max(a, b) for a, b in zip(degs, p.max_exponents())]
                    l1 = max(l1, p.l1_norm())
        self.weights = []
        w = 1
        for d in degs:
            self.weights.append(w)
            w *= order * d + 1
        self.length = w
        bound = math.factorial(order) * l1 ** order
        self.bits = bound.bit_length() + 2

    def pack(self, p: LaurentPoly) -> int:
        total = 0
        for e, c in p.items():
            total += c << (self.bits * sum(k * w for k, w in zip(e, self.weights)))
        return total

    def unpack(self, value: int, num_vars: int) -> LaurentPoly:
        terms = {}
        mask = (1 << self.bits) - 1
        half = 1 << (self.bits - 1)
        pos = 0
        while value:
            low = value & mask
            if low >= half:
                low -= 1 << self.bits
            if low:
                exp, rest = [], pos
                for v in reversed(range(num_vars)):
                    k, rest = divmod(rest, self.weights[v])
                    exp.append(k)
                terms[tuple(reversed(exp))] = low
            value = (value - low) >> self.bits
            pos += 1
        return LaurentPoly(num_vars, terms)


def _bareiss(A: list[list[int]]):
    """In-place Bareiss with full pivoting; returns (rank, last pivot, permutation sign)."""
    n = len(A)
    m = len(A[0]) if n else 0
    prev, sign, rank = 1, 1, 0
    for k in range(min(n, m)):
        pivot = next(((i, j) for i in range(k, n) for j in range(k, m) if A[i][j]), None)
        if pivot is None:
            break
        i, j = pivot
        if i != k:
            A[k], A[i] = A[i], A[k]
            sign = -sign
        if j != k:
            for row in A:
                row[k], row[j] = row[j], row[k]
            sign = -sign
        rank += 1
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, m):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return rank, prev, sign


def rank_over_fraction_field(M: LaurentMatrix) -> int:
    """Rank of ``M`` over the field of fractions of the Laurent ring."""
    if M.rows == 0 or M.cols == 0:
        return 0
    rows, _ = _normalized_rows(M)
    packing = _Packing(rows, M.num_vars, min(M.rows, M.cols))
    A = [[packing.pack(p) for p in row] for row in rows]
    rank, _, _ = _bareiss(A)
    return rank


def determinant(M: LaurentMatrix) -> LaurentPoly:
    if M.rows != M.cols:
        raise DimensionError("determinant of a non-square matrix")
    if M.rows == 0:
        return LaurentPoly.constant(1, M.num_vars)
    rows, shifts = _normalized_rows(M)
    packing = _Packing(rows, M.num_vars, M.rows)
    A = [[packing.pack(p) for p in row] for row in rows]
    rank, last, sign = _bareiss(A)
    if rank < M.rows:
        return LaurentPoly(M.num_vars)
    det = packing.unpack(sign * last, M.num_vars)
    total_shift = [sum(s[v] for s in shifts) for v in range(M.num_vars)]
    return det.shift(total_shift)
