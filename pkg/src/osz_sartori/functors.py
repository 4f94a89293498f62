"""Truncation maps Ψ' (bordered side) and Ψ (Sartori side), F on
projectives, and the square Ξ Ψ' = Ψ Ξ relating them.

Both maps forget the leftmost strand: Ψ' removes 0 from both I-states, Ψ
turns a leading ∧ into ∨ on both sequences.  The polynomial is kept and
re-reduced in the smaller algebra.
"""
from . import combinat as cb
from . import osz
from .combinat import DOWN, UP, UpDownSeq
from .osz import OszElement
from .qcoeff import UPolynomial, LaurentQ
from .sartori import SarHom
from .xi import parallel_map, xi_term


def psi_prime(a):
    """B_l(n,k) ⊇ e^∧ B e^∧ -> B_l(n,k-1): drop 0 from both states."""
    terms = {}
    for (x, y), p in a.terms.items():
        if 0 not in x or 0 not in y:
            raise ValueError("Ψ' needs 0 in both states, got %s, %s" % (x, y))
        terms[(x.without(0), y.without(0))] = p
    return OszElement(a.n, a.k - 1, terms)


def lead_to_down(mu):
    if mu.symbols[0] != UP:
        raise ValueError("%s does not start with ∧" % mu)
    return UpDownSeq(mu.n, (DOWN,) + mu.symbols[1:])


def psi_sartori(h):
    """1_μ A_{n,k+1} 1_λ -> 1_{μ'} A_{n,k} 1_{λ'} with leading ∧ -> ∨.

    The b-sequences do not change, so the same polynomial is a map between
    the new objects; only the illicit submodule grows.
    """
    lam, mu = lead_to_down(h.lam), lead_to_down(h.mu)
    assert lam.bseq() == h.lam.bseq() and mu.bseq() == h.mu.bseq()
    return SarHom(lam, mu, h.p, reduce=False)


def functor_F_on_projective(x):
    """F(P(x)) = P(x minus {0}) if 0 ∈ x, else 0 (returned as None)."""
    return x.without(0) if 0 in x else None


def functor_F_K0_matrix(n, k):
    """K_0 matrix of F from weight k+1 to weight k, rows/columns in the
    rep.weight_basis order (states via the 0/1 word with 0 at x_i + 1)."""
    from .rep import weight_basis
    src, tgt = weight_basis(n, k + 1), weight_basis(n, k)
    index = {w: i for i, w in enumerate(tgt)}
    M = [[LaurentQ() for _ in src] for _ in tgt]
    for j, w in enumerate(src):
        x = UpDownSeq(n, w).to_state()
        fx = functor_F_on_projective(x)
        if fx is not None:
            M[index[fx.to_seq().symbols]][j] = LaurentQ(1)
    return M


def square_pair(x, y, D):
    """Compare Ξ Ψ'(m f_{x,y}) with Ψ Ξ(m f_{x,y}) for all basis monomials m."""
    n = x.n
    entry = {"x": list(x.elements), "y": list(y.elements), "checked": 0, "failures": []}
    for m in osz.basis_piece(x, y, D):
        p = UPolynomial(n, {m: 1})
        a = osz.element(x, y, p)
        b = psi_prime(a)
        x2, y2 = x.without(0), y.without(0)
        left = xi_term(x2, y2, b.terms.get((x2, y2), UPolynomial(n)))
        right = psi_sartori(xi_term(x, y, p))
        entry["checked"] += 1
        if left != right:
            entry["failures"].append({"monomial": list(m), "left": list(left.coords),
                                      "right": list(right.coords)})
    entry["pass"] = not entry["failures"]
    return entry


def verify_commuting_square(n, k, D):
    """Ξ Ψ' = Ψ Ξ on m f_{x,y}, 0 ∈ x ∩ y, |x| = k, q-degree <= D."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    states = [x for x in cb.all_states(n, k) if 0 in x]
    pairs = [(x, y, D) for x in states for y in states if not cb.too_far_coords(x, y)]
    results = parallel_map(square_pair, pairs)
    return {"suite": "square", "n": n, "k": k, "D": D,
            "pass": all(r["pass"] for r in results), "pairs": results}
