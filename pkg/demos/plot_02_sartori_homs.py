"""
Hom spaces of the integral Sartori algebra
==========================================

Objects are ∧∨ sequences.  Hom(λ, μ) between the quotient rings R_{b^λ} and
R_{b^μ} has a divisibility basis; dividing out the illicit maps W^α leaves a
free module with a basis indexed by oriented fork diagrams.
"""

from osz_sartori import combinat as cb
from osz_sartori import sartori as sa
from osz_sartori.combinat import UpDownSeq
from osz_sartori.qcoeff import UPolynomial, reduce_mod_Ib

lam, mu = UpDownSeq.parse("duud"), UpDownSeq.parse("uddu")
print("λ =", lam, " b =", lam.bseq())
print("μ =", mu, " b =", mu.bseq())

# maps R_{b^λ} -> R_{b^μ} are multiplication by these monomials
x = lambda *i: UPolynomial.from_vars(4, i)
print("divisibility basis:", sa.hom_divisibility_basis(lam, mu))

# x3 x4 lies in I_b, so it is redundant as a generator
print("x3 x4 mod I_b:", reduce_mod_Ib(x(3, 4), mu.bseq()))

# illicit maps and the fork basis that survives them
print("W^α generators:", [g.to_str("x") for g in sa.walpha_generators(lam, mu)])
for f in sa.fork_basis(lam, mu):
    print("  fork η=%s σ=%s  %s  q-degree %d" % (f.eta, f.sigma, f.poly.to_str("x"), f.qdegree))
print("graded rank:", cb.graded_rank_Z(mu, lam))

# x2 x3 is illicit here but not in the coarser W~ variant
print("x2 x3 coordinates:", sa.SarHom(lam, mu, x(2, 3)).coords)
for row in sa.compare_W_variants(lam, mu):
    if not row["equal"]:
        print("  degree %d: in W^α only" % row["degree"], [g.to_str("x") for g in row["alpha_not_tilde"]])

# composition and the anti-automorphism ψ_S
h = sa.SarHom(lam, mu, x(3))
back = sa.psi_s(h)
print("ψ_S(x3) :", back.lam, "->", back.mu, back.p.to_str("x"))
print("h ∘ ψ_S(h) coords:", (h * back).coords)

# a larger example: 12 strands, 8 up arrows
big_l, big_m = UpDownSeq.parse("dududuuduuuu"), UpDownSeq.parse("duududuuuduu")
print("12 strands: etas", len(cb.oriented_etas(big_m, big_l)),
      " rank at q=1", cb.graded_rank_Z(big_m, big_l).at_one())
