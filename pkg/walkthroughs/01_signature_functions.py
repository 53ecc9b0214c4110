# # Signature functions from Seifert matrices
#
# A knot with Seifert matrix A has a one-variable signature function: the
# signature of (1 - w) A + (1 - conj w) A^T as w runs around the circle.
# colorsig treats a Seifert matrix as the one-colored case of a C-complex.

from colorsig import CComplexData, TorusPoint, signature_and_nullity, torus_profile
from colorsig import corpus

trefoil = CComplexData.from_seifert([[-1, 1], [0, -1]], name="trefoil")
trefoil


# At w = -1 the form is 2 (A + A^T), and its signature is the classical one.

print(signature_and_nullity(trefoil, TorusPoint.roots((1, 2))))


# Walking around the circle: roots of unity of order 48, evaluated exactly in
# the cyclotomic field Q(zeta_48).  The signature jumps where the Alexander
# polynomial t^2 - t + 1 vanishes, at 1/6 and 5/6 of a turn.

grid = [TorusPoint.roots((k, 48)) for k in range(1, 48)]
for row in torus_profile(trefoil, grid):
    r = row.result
    bar = "#" * abs(r.signature)
    print(f"{str(row.omega):>12}  sigma={r.signature:+d}  null={r.nullity}  {bar}")


# Points that are not roots of unity go through the approximate backend.  The
# report carries the smallest eigenvalue it treated as nonzero, so one can see
# how far from the zero tolerance the answer was.

r = signature_and_nullity(trefoil, TorusPoint.angles(2.0))
print(r.backend, r.signature, r.tolerance_margin)


# Connected sums add signatures.  The granny knot doubles the trefoil's
# values while the square knot (trefoil plus its mirror image) cancels them.

granny = corpus.load("granny").cc
square = corpus.load("square_knot").cc
for k in (3, 9, 15, 21):
    w = TorusPoint.roots((k, 48))
    print(str(w), signature_and_nullity(granny, w).signature,
          signature_and_nullity(square, w).signature)
