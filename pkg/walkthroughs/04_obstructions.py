# # Obstructing concordances and bounding surfaces
#
# Differences of signature and nullity bound the complexity of a cobordism.
# The checks only count at points that are certified not to be concordance
# roots; everywhere else a violated inequality is reported but flagged as not
# applicable.

from colorsig import (CComplexData, CobordismProfile, SurfaceProfile, TorusPoint,
                      concordance_obstruction, genus_bound_report, signature_and_nullity,
                      surface_bound_check)
from colorsig import corpus

hopf = corpus.load("hopf_annulus").cc
unlink2 = corpus.load("unlink2").cc


# The Hopf link and the two-component unlink: their nullities differ at -1.

report = concordance_obstruction(hopf, unlink2)
print(report.verdict, [str(w) for w in report.witnesses[:5]])


# The Hopf link bounds an annulus pushed into the 4-ball, and the surface
# bound is an equality there.

w = TorusPoint.roots((1, 2))
chk = surface_bound_check(signature_and_nullity(hopf, w), SurfaceProfile((1,), 1), w)
print(chk.lhs, "<=", chk.rhs, "sharp:", chk.sharp)


# The trefoil has signature -2, so any cobordism to the unknot costs at least
# 2.  A genus-1 cobordism passes; claiming an annulus fails.

trefoil = corpus.load("trefoil").cc
unknot = CComplexData.unlink(1)
for genus in (0, 1):
    prof = CobordismProfile(genera=(genus,), m=1, n=1, n_prime=1)
    rep = genus_bound_report(trefoil, unknot, prof)
    print(f"genus {genus}: {rep.verdict}")


# The square knot is slice, and no grid point tells it apart from the unknot.

print(concordance_obstruction(corpus.load("square_knot").cc, unknot).verdict)


# Linking numbers obstruct as well, independently of the grid.

a = corpus.load("hopf_2colored").cc
b = corpus.load("hopf_2colored_negative").cc
rep = concordance_obstruction(a, b)
print(rep.verdict, rep.linking_mismatch)

# The same report as CSV, first few rows.
print("\n".join(concordance_obstruction(hopf, unlink2).to_csv().splitlines()[:4]))
