"""
V^{⊗n} for U_q(gl(1|1))
=======================

Words in 0 (∧) and 1 (∨) index the standard basis.  Canonical vectors, two
bilinear forms and their dual bases decategorify the two algebras.
"""

from osz_sartori import rep
from osz_sartori.qcoeff import RatQ

# canonical basis of V^{⊗3}
for k in range(4):
    for w, v in rep.canonical_basis(3, k).items():
        print("v%s =" % "".join(map(str, w)), v)

# the two forms on canonical vectors differ by (k)!(1-q^2)^k
can = rep.canonical_basis(3, 2)
words = rep.weight_basis(3, 2)
for a in words:
    print([str(rep.form("S", can[a], can[b])) for b in words])
print("OSz form:", rep.form("OSz", can[words[0]], can[words[0]]))

# unitriangular change of basis
for row in rep.d_matrix(3, 1):
    print([str(c) for c in row])

# E and F square to zero; F on canonical vectors is the functor F
v = rep.canonical_vector((0, 1))
print("F v01 =", rep.act("F", v))
print("F F v01 zero:", rep.act("F", rep.act("F", v)).is_zero())
print("E'' v1 =", rep.act("E''", rep.RepVector.std((1,))))

# the full invariant suite
print({name: c["pass"] for name, c in rep.verify_rep(3)["checks"].items()})
