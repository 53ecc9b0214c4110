# # Where do the invariants behave?
#
# Signature and nullity are concordance invariants away from concordance
# roots: points killed by a Laurent polynomial with p(1, ..., 1) = +-1.
# Points whose coordinates all have orders that are powers of one prime are
# never concordance roots.  Everything else needs either a certificate or
# stays undecided.

import math

from colorsig import Angle, LaurentPoly, RootOfUnity, TorusPoint, classify
from colorsig.omega import transport_certificate

t1 = LaurentPoly.variable(0, 2)
t2 = LaurentPoly.variable(1, 2)

for w in [TorusPoint.roots((1, 4), (1, 2)),
          TorusPoint.roots((1, 9), (4, 27)),
          TorusPoint.roots((1, 6), (1, 2)),
          TorusPoint.roots((1, 3), (1, 5))]:
    c = classify(w)
    print(f"{str(w):<20} {c.verdict:<20} {c.certificate}")


# A hand-made certificate: t1 + t1^2 - t2 vanishes at (zeta_3, -1) and sums
# to 1 at (1, 1).

cert = t1 + t1 ** 2 - t2
print(classify(TorusPoint.roots((1, 3), (1, 2)), cert))


# Certificates move along coordinate repetitions.  If q certifies
# (w_2, w_1) then q(x_2, x_1) certifies (w_1, w_2, w_2).

p = transport_certificate(cert, [2, 1], 3)
print(p, classify(TorusPoint.roots((1, 2), (1, 3), (1, 3)), p).verdict)


# (3 + 4i)/5 is on the unit circle but is not a root of unity.  Its minimal
# polynomial 5t^2 - 6t + 5 sums to 4, so it is not a certificate, and the
# prime-power test cannot apply to an approximate coordinate.

w = TorusPoint((Angle(math.atan2(4, 3)), RootOfUnity(1, 2)))
print(classify(w))
