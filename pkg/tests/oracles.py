"""Independent reference computations used by the test suite.

Nothing here shares code with the library's inertia engine.
"""
import random
from fractions import Fraction

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from colorsig.scalar import CyclotomicScalar


def _sign_changes(coeffs):
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def charpoly_inertia(rows):
    """(pos, neg, zero) of a Hermitian matrix of Gaussian rationals.

    The characteristic polynomial of a Hermitian matrix is real with only real
    roots, so Descartes' rule of signs counts its positive and negative
    eigenvalues exactly; the multiplicity of 0 is the number of trailing zeros.
    ``rows`` holds (re, im) pairs of Fractions.
    """
    n = len(rows)
    if n == 0:
        return 0, 0, 0
    M = DomainMatrix([[QQ_I(QQ_I.dom(re), QQ_I.dom(im)) for re, im in r] for r in rows], (n, n), QQ_I)
    cp = [Fraction(int(c.x.numerator), int(c.x.denominator)) for c in M.charpoly()]
    zero = 0
    while cp and cp[-1] == 0:
        cp.pop()
        zero += 1
    pos = _sign_changes(cp)
    deg = len(cp) - 1
    neg = _sign_changes([c * (-1) ** (deg - k) for k, c in enumerate(cp)])
    assert pos + neg + zero == n
    return pos, neg, zero


def gaussian_to_scalar(re: Fraction, im: Fraction) -> CyclotomicScalar:
    den = re.denominator * im.denominator
    return CyclotomicScalar(4, [int(re * den), int(im * den)], den)


def random_gaussian_hermitian(rng: random.Random, n: int, *, bound=4, denominators=(1, 2, 3)):
    """A Hermitian matrix of Gaussian rationals, sometimes rank-deficient by construction."""
    def q():
        return Fraction(rng.randint(-bound, bound), rng.choice(denominators))

    mode = rng.random()
    if mode < 0.5 or n == 0:
        rows = [[None] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = (q() if rng.random() > 0.2 else Fraction(0), Fraction(0))
            for j in range(i + 1, n):
                if rng.random() < 0.25:
                    re, im = Fraction(0), Fraction(0)
                else:
                    re, im = q(), q()
                rows[i][j] = (re, im)
                rows[j][i] = (re, -im)
        return rows
    # B^* D B with B of size k x n, k possibly < n
    k = rng.randint(max(0, n - 3), n)
    B = [[(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(n)] for _ in range(k)]
    D = [rng.choice([-2, -1, 0, 1, 3]) for _ in range(k)]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            re = im = 0
            for r in range(k):
                a, b = B[r][i]       # conj(B[r][i]) = a - b i
                c, d = B[r][j]
                re += D[r] * (a * c + b * d)
                im += D[r] * (a * d - b * c)
            row.append((Fraction(re), Fraction(im)))
        rows.append(row)
    return rows
