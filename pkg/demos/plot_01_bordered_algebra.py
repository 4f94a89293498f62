"""
The bordered algebra B_l(n, k)
==============================

Idempotents are k-element subsets of {0, ..., n-1}.  Between two states x, y
that are not too far there is one big-step generator f_{x,y}; everything else
is a U-polynomial times it.
"""

from osz_sartori import combinat as cb
from osz_sartori import osz
from osz_sartori.combinat import IState
from osz_sartori.qcoeff import UPolynomial, series_truncate

# two states of weight 2 on 4 strands
x, y = IState(4, (0, 3)), IState(4, (1, 2))
print("x =", x, " y =", y, " too far:", cb.too_far(x, y))
print("generating intervals:", cb.generating_intervals(x, y))

# f_{x,y} factors into small steps along a shortest path
path = osz.gamma_path(x, y)
print("path:", path, " evaluates to f_{x,y}:", path.evaluate() == osz.element(x, y))

# a Z-basis of the component, truncated at q-degree 6
for m in osz.basis_piece(x, y, 6):
    print("  U^%s f_{x,y}   degree %d" % (m, cb.distance(x, y) + 2 * sum(m)))

# the graded dimension as a rational function, and its expansion
gd = osz.graded_dim(x, y)
print("graded dim:", gd)
print("to degree 8:", series_truncate(gd, 8))

# products follow the quiver relations
a, b = IState(2, (0,)), IState(2, (1,))
print("f_{0,1} f_{1,0} =", osz.element(a, b) * osz.element(b, a))
print("U_2 I_{0} =", osz.element(a, a, UPolynomial(2, {(0, 1): 1})))

# psi_OSz reverses arrows
r1 = osz.small_step("R", 1, a)
print("psi(R_1) =", osz.psi_osz(r1), " equals L_1:", osz.psi_osz(r1) == osz.small_step("L", 1, b))
