# # Two-colored links
#
# With mu colors the C-complex carries 2^mu generalized Seifert matrices.
# Only the half with eps_1 = +1 is stored; the rest are transposes.

from colorsig import TorusPoint, hermitian_form, signature_and_nullity, symbolic_form
from colorsig import corpus
from colorsig.inertia import alexander_nullity

entry = corpus.load("clasped_disks_t24")
print(entry.provenance)
cc = entry.cc
cc.full_family()


# The symbolic matrix H(t) lives over Z[t1^{+-1}, t2^{+-1}].

print(symbolic_form(cc))


# Specializing at (-1, -1) gives the integer matrix [[-8]].

H = hermitian_form(cc, TorusPoint.roots((1, 2), (1, 2)))
print(H.entries)
print(signature_and_nullity(cc, TorusPoint.roots((1, 2), (1, 2))))


# Along the diagonal w1 = w2 = exp(i theta) the single entry is
# 4 cos(theta) (1 - cos(theta)).  It changes sign at w = i, where the nullity
# jumps to 1.

for k in range(1, 8):
    w = TorusPoint.roots((k, 8), (k, 8))
    r = signature_and_nullity(cc, w)
    print(str(w), r.signature, r.nullity)


# The generic nullity is g - rank H(t); for this link it is 0.

print(alexander_nullity(cc))
