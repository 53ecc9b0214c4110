"""Concordance roots: when do the invariance theorems apply at a torus point?

A point is a concordance root if some Laurent polynomial p with p(1,...,1) = +-1
vanishes there.  Points whose coordinates are all roots of unity of orders that
are powers of one common prime are never concordance roots; points that are
roots can be certified by exhibiting such a p.  Everything else is reported as
unknown.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .errors import (ConfigurationError, DimensionError, DomainError, InconsistencyError,
                     InvalidCertificateError)
from .laurent import LaurentPoly, augment, is_in_U
from .scalar import (RootOfUnity, TorusPoint, cyclotomic_polynomial, evaluate_exact,
                     is_root_of_unity_of_prime_power_order)

NOT_CONCORDANCE_ROOT = "NotConcordanceRoot"
CONCORDANCE_ROOT = "ConcordanceRoot"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class OmegaClassification:
    verdict: str
    prime: Optional[int] = None
    certificate: Optional[LaurentPoly] = None
    notes: str = ""
    omega: Optional[TorusPoint] = field(default=None, compare=False)

    @property
    def is_safe(self) -> bool:
        """True when the invariance theorems are known to hold at this point."""
        return self.verdict == NOT_CONCORDANCE_ROOT

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "prime": self.prime,
            "certificate": self.certificate.to_json() if self.certificate is not None else None,
            "notes": self.notes,
        }


def common_prime(omega: TorusPoint) -> Optional[int]:
    """The prime p if every coordinate has p-power order, else None."""
    primes = {is_root_of_unity_of_prime_power_order(c) for c in omega.coords}
    if len(primes) == 1 and None not in primes:
        return primes.pop()
    return None


def verify_certificate(p: LaurentPoly, omega: TorusPoint) -> bool:
    """p(w) == 0 exactly and p(1, ..., 1) == +-1."""
    if not omega.is_exact:
        raise ConfigurationError("certificates can only be checked at exact points")
    if p.num_vars != omega.num_vars:
        raise DimensionError("certificate and point have different numbers of variables")
    return is_in_U(p) and _vanishes(p, omega)


def _vanishes(p: LaurentPoly, omega: TorusPoint) -> bool:
    """Exact zero test in the smallest cyclotomic field the variables of p need."""
    used = [i for i in range(p.num_vars) if any(e[i] for e, _ in p.items())]
    if not used:
        return p.is_zero()
    q = LaurentPoly(len(used), [(tuple(e[i] for i in used), c) for e, c in p.items()])
    return evaluate_exact(q, TorusPoint(tuple(omega.coords[i] for i in used))).is_zero()


def transport_certificate(q: LaurentPoly, beta: Mapping[int, int] | Sequence[int],
                          n: int) -> LaurentPoly:
    """p(x_1..x_n) = q(x_beta(1), ..., x_beta(mu)); indices are 1-based.

    If q certifies (w_beta(1), ..., w_beta(mu)) then p certifies (w_1..w_n).
    """
    if isinstance(beta, Mapping):
        images = [beta.get(i + 1) for i in range(q.num_vars)]
    else:
        images = list(beta)
    if len(images) != q.num_vars or any(b is None for b in images):
        raise DomainError("beta must be defined on 1..mu")
    if any(not 1 <= b <= n for b in images):
        raise DomainError(f"beta takes values outside 1..{n}")
    return q.substitute([LaurentPoly.variable(b - 1, n) for b in images])


def _ext_gcd(a, b):
    if b == 0:
        return a, 1, 0
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def auto_certificate(omega: TorusPoint) -> Optional[LaurentPoly]:
    """An elementary certificate for an exact point, if one is available.

    * a coordinate of order n with two distinct prime factors is killed by
      Phi_n(t_i), and Phi_n(1) = 1;
    * coordinates of orders p^a and q^b (p != q prime) are killed by
      x Phi_{p^a}(t_i) - y Phi_{q^b}(t_j) with x p - y q = 1.
    """
    if not omega.is_exact:
        return None
    mu = omega.num_vars
    by_prime: dict[int, tuple[int, int]] = {}
    for i, c in enumerate(omega.coords):
        p = is_root_of_unity_of_prime_power_order(c)
        if p is None:
            phi = cyclotomic_polynomial(c.n)
            return transport_certificate(phi, [i + 1], mu)
        by_prime.setdefault(p, (i, c.n))
    if len(by_prime) < 2:
        return None
    (p, (i, n)), (q, (j, m)) = sorted(by_prime.items())[:2]
    _, x, y = _ext_gcd(p, q)  # x p + y q = 1
    first = transport_certificate(cyclotomic_polynomial(n), [i + 1], mu)
    second = transport_certificate(cyclotomic_polynomial(m), [j + 1], mu)
    return first * x + second * y


def classify(omega: TorusPoint, cert: Optional[LaurentPoly] = None, *,
             auto: bool = True) -> OmegaClassification:
    if cert is not None and cert.num_vars != omega.num_vars:
        raise DimensionError("certificate and point have different numbers of variables")
    p = common_prime(omega)
    if p is not None:
        if cert is not None and verify_certificate(cert, omega):
            raise InconsistencyError(
                f"certificate {cert} vanishes at a point all of whose coordinates have "
                f"{p}-power order, which is impossible")
        return OmegaClassification(
            NOT_CONCORDANCE_ROOT, prime=p, omega=omega,
            notes=f"all coordinates are roots of unity of {p}-power order")
    if cert is not None:
        if not omega.is_exact:
            raise ConfigurationError("certificates can only be checked at exact points")
        if not verify_certificate(cert, omega):
            raise InvalidCertificateError(
                f"{cert} does not certify the point (vanishes: "
                f"{_vanishes(cert, omega)}, augmentation {augment(cert)})")
        return OmegaClassification(CONCORDANCE_ROOT, certificate=cert, omega=omega,
                                   notes="user-supplied certificate verified")
    if auto:
        found = auto_certificate(omega)
        if found is not None:
            if not verify_certificate(found, omega):
                raise InconsistencyError(f"generated certificate {found} failed to verify")
            return OmegaClassification(CONCORDANCE_ROOT, certificate=found, omega=omega,
                                       notes="generated from cyclotomic polynomials")
    if omega.is_exact:
        notes = "no common prime and no certificate available"
    else:
        notes = "approximate coordinates cannot prove prime-power order"
    return OmegaClassification(UNKNOWN, omega=omega, notes=notes)
