"""
From the bordered algebra to the Sartori algebra
================================================

Ξ sends m f_{x,y} to a map between the objects of the matching ∧∨ sequences.
Its kernel is the ideal J generated by elementary symmetric polynomials in the
U's; the quotient B_l/J is isomorphic to the Sartori algebra, and
B_l is free over the ε-monomials with fork elements as a complement.
"""

from osz_sartori import osz, xi
from osz_sartori.combinat import IState
from osz_sartori.qcoeff import UPolynomial

x, y = IState(4, (0, 3)), IState(4, (1, 2))
for m in [(0, 0, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0)]:
    img = xi.xi_map(osz.element(x, y, UPolynomial(4, {m: 1})))
    print("Ξ(U^%s f) =" % (m,), img)

# fork elements are explicit preimages of the fork basis
for fe in xi.fork_elements(x, y):
    print("fork element", fe.polynomial, " Ξ coords", xi.xi_term(x, y, fe.polynomial).coords)

# U_1 I_{0} is in J and dies
e1 = xi.JIdeal(2, 1).generators()[0]
a = osz.element(IState(2, (0,)), IState(2, (0,)), e1)
print("Ξ(e_1 I_{0}) is zero:", xi.xi_map(a).is_zero())

# degree-by-degree checks of the isomorphism and flatness
for n in range(1, 5):
    for k in range(n + 1):
        iso = xi.verify_iso(n, k, 8)["pass"]
        flat = xi.verify_flatness(n, k, 8)["pass"]
        print("n=%d k=%d  iso %s  flat %s" % (n, k, iso, flat))
