"""
Truncation maps and the functor F
=================================

Ψ' forgets strand 0 on the bordered side, Ψ turns a leading ∧ into ∨ on the
Sartori side.  Ξ intertwines them, which is what makes the two F functors
agree.
"""

from osz_sartori import functors as fn
from osz_sartori import osz, rep, xi
from osz_sartori.combinat import IState, UpDownSeq
from osz_sartori.sartori import SarHom

a = osz.element(IState(4, (0, 3)), IState(4, (0, 2)))
print("Ψ'(f_{03,02}) =", fn.psi_prime(a))
print("Ψ(id_ud) =", fn.psi_sartori(SarHom.identity(UpDownSeq.parse("ud"))))

# F on projectives, and F F = 0
for s in [IState(3, (0, 2)), IState(3, (1, 2)), IState(3, (0,))]:
    print("F(P%s) = %s" % (s, fn.functor_F_on_projective(s)))

# the K_0 matrix agrees with F acting on canonical vectors
print(fn.functor_F_K0_matrix(3, 1) == rep.functor_F_matrix(3, 1))

# Ξ Ψ' = Ψ Ξ on every generator with 0 in both states
for n in range(1, 5):
    for k in range(1, n + 1):
        r = fn.verify_commuting_square(n, k, 8)
        print("n=%d k=%d  %d pairs  %s" % (n, k, len(r["pairs"]), r["pass"]))
