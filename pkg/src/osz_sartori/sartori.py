"""Sartori's integral algebra A^Z_{n,k} in the cyclic polynomial model.

An element of 1_μ A 1_λ is an R-linear map R_{b^λ} -> R_{b^μ}, determined by
the image p of 1 (reduced mod I_{b^μ}), taken modulo the submodule W^α of
illicit maps.  Hom spaces are finite; every computation is done one
polynomial degree at a time with integer lattices over the monomial basis
{x^j : c_i <= j_i < b^μ_i}, c_i = max(b^μ_i - b^λ_i, 0).

Grading: the element (1 -> p) has q-degree 2 deg(p) + Σ_i (b^λ_i - b^μ_i).
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import combinat as cb
from . import lattice
from .combinat import UpDownSeq
from .qcoeff import LaurentQ, UPolynomial, ib_basis, mono_sort_key, reduce_mod_Ib


def c_vector(lam, mu):
    bl, bm = lam.bseq(), mu.bseq()
    return tuple(max(a - b, 0) for a, b in zip(bm, bl))


def hom_divisibility_basis(lam, mu):
    """{x^j : c_i <= j_i < b^μ_i} for maps from λ to μ."""
    cb._check_seqs(mu, lam)
    bm = mu.bseq()
    c = c_vector(lam, mu)
    out = list(product(*[range(ci, bi) for ci, bi in zip(c, bm)]))
    return sorted(out, key=mono_sort_key)


def _interval_poly(n, a, b, c):
    m = list(c)
    for i in range(a, b + 1):
        m[i - 1] += 1
    return UPolynomial(n, {tuple(m): 1})


def walpha_generators(lam, mu, variant="alpha"):
    """Generators (x_{α(j)} ... x_{β(j)}) x^c of W^α (variant='alpha') or of W̃
    (variant='tilde', where α(j) = ∨_j^λ).  For a too-far pair the whole Hom
    space is illicit and its monomial basis is returned instead."""
    cb._check_seqs(mu, lam)
    n = mu.n
    c = c_vector(lam, mu)
    if cb.seq_too_far(mu, lam):
        return [UPolynomial(n, {m: 1}) for m in hom_divisibility_basis(lam, mu)]
    dm, dl = mu.downs_sentinel(), lam.downs_sentinel()
    out = []
    for j in range(n - mu.k):
        alpha = max(dl[j], dm[j]) if variant == "alpha" else dl[j]
        beta = min(dm[j + 1], dl[j + 1]) - 1
        out.append(_interval_poly(n, alpha, beta, c))
    return out


@dataclass(frozen=True)
class ForkBasisElt:
    eta: UpDownSeq
    sigma: tuple
    monomial: UPolynomial   # p_{μ̲η^σ} before reduction
    poly: UPolynomial       # reduced mod I_{b^μ}
    qdegree: int


def fork_monomial(mu, eta, sigma):
    """S'_σ(x_{∧_1^η}, ..., x_{∧_k^η}) Π_j x_{∨_j^μ} ... x_{∨_j^η - 1}."""
    n = mu.n
    m = [0] * n
    for pos, e in zip(eta.ups(), cb.staircase_exponents(sigma)):
        m[pos - 1] += e
    for a, b in zip(mu.downs(), eta.downs()):
        for i in range(a, b):
            m[i - 1] += 1
    return UPolynomial(n, {tuple(m): 1})


def fork_basis(lam, mu):
    """Fork basis of 1_μ A 1_λ: one element per oriented (η, σ)."""
    return list(hom_space(lam, mu).forks)


class PieceSolver:
    """Lattice data for the polynomial degree e piece of Hom(λ, μ)."""

    def __init__(self, space, e):
        self.e = e
        self.monos = [m for m in space.basis if sum(m) == e]
        self.index = {m: i for i, m in enumerate(self.monos)}
        N = len(self.monos)
        rows = []
        for g in space.wgens:
            dg = g.degree()
            if dg is None or dg > e:
                continue
            for m in ib_basis(space.bmu, e - dg):
                v = space.vector(reduce_mod_Ib(g * UPolynomial(space.n, {m: 1}), space.bmu), self)
                if any(v):
                    rows.append(v)
        self.w_basis = lattice.lattice_basis(rows, N) if rows else []
        self.fork_ids = [i for i, f in enumerate(space.forks) if f.monomial.degree() == e]
        fork_rows = [space.vector(space.forks[i].poly, self) for i in self.fork_ids]
        self.quotient_rank = N - len(self.w_basis)
        M = self.w_basis + fork_rows
        self.inverse = lattice.inverse_unimodular(M) if len(M) == N else None
        self.ok = self.inverse is not None or N == 0
        if N == 0 and self.fork_ids:
            self.ok = False
        self.message = "" if self.ok else (
            "degree %d: Hom rank %d, W rank %d, %d fork elements, not a unimodular completion"
            % (e, N, len(self.w_basis), len(self.fork_ids)))

    def coords(self, v):
        if not self.monos:
            return []
        if self.inverse is None:
            raise RuntimeError("fork basis does not complete W^α: " + self.message)
        full = lattice.vecmat(v, self.inverse)
        return full[len(self.w_basis):]

    def in_w(self, v):
        return lattice.contains(self.w_basis, v) if self.w_basis else not any(v)


class HomSpace:
    """Hom_R(R_{b^λ}, R_{b^μ}) with its W^α lattice and fork basis."""

    def __init__(self, lam, mu):
        cb._check_seqs(mu, lam)
        self.lam, self.mu = lam, mu
        self.n, self.k = mu.n, mu.k
        self.bmu, self.blam = mu.bseq(), lam.bseq()
        self.c = c_vector(lam, mu)
        self.shift = sum(a - b for a, b in zip(self.blam, self.bmu))
        self.too_far = cb.seq_too_far(mu, lam)
        self.basis = hom_divisibility_basis(lam, mu)
        self.basis_set = set(self.basis)
        self.wgens = walpha_generators(lam, mu)
        forks = []
        if not self.too_far:
            for eta in cb.oriented_etas(mu, lam):
                for sigma in cb.all_perms(self.k):
                    mono = fork_monomial(mu, eta, sigma)
                    forks.append(ForkBasisElt(eta, sigma, mono, reduce_mod_Ib(mono, self.bmu),
                                              2 * mono.degree() + self.shift))
        self.forks = tuple(forks)
        self._pieces = {}

    def max_degree(self):
        return sum(b - 1 for b in self.bmu)

    def piece(self, e):
        if e not in self._pieces:
            self._pieces[e] = PieceSolver(self, e)
        return self._pieces[e]

    def vector(self, p, piece):
        v = [0] * len(piece.monos)
        for m, c in p.terms.items():
            i = piece.index.get(m)
            if i is None:
                raise ValueError("%s is not a homomorphism %s -> %s (monomial %r)"
                                 % (p.to_str("x"), self.lam, self.mu, m))
            v[i] = c
        return v

    def check_hom(self, p):
        bad = [m for m in p.terms if m not in self.basis_set]
        if bad:
            raise ValueError("%s is not in Hom(%s, %s)" % (p.to_str("x"), self.lam, self.mu))

    def coords(self, p):
        """Fork coordinates of a reduced polynomial p (list aligned with forks)."""
        self.check_hom(p)
        out = [0] * len(self.forks)
        degs = {sum(m) for m in p.terms}
        for e in degs:
            piece = self.piece(e)
            v = self.vector(p.homogeneous_part(e), piece)
            for i, a in zip(piece.fork_ids, piece.coords(v)):
                out[i] = a
        return out

    def from_coords(self, coords):
        out = UPolynomial(self.n)
        for a, f in zip(coords, self.forks):
            if a:
                out = out + f.poly * a
        return out

    def is_illicit(self, p):
        return not any(self.coords(p))

    def qdegree(self, e):
        return 2 * e + self.shift

    def verify(self):
        """Per-degree checks: rank of Hom/W^α equals the fork count, forks
        complete a W^α basis unimodularly, and degrees match graded_rank_Z."""
        out = []
        grank = cb.graded_rank_Z(self.mu, self.lam)
        for e in range(self.max_degree() + 1):
            piece = self.piece(e)
            t = self.qdegree(e)
            expected = grank.coeff(t)
            entry = {"degree": t, "hom_rank": len(piece.monos),
                     "w_rank": len(piece.w_basis), "quotient_rank": piece.quotient_rank,
                     "forks": len(piece.fork_ids), "graded_rank_coeff": expected,
                     "pass": piece.ok and piece.quotient_rank == len(piece.fork_ids) == expected}
            if not entry["pass"]:
                entry["witness"] = piece.message
            out.append(entry)
        # forks in degrees beyond the Hom space would be lost above
        stray = [f for f in self.forks if f.monomial.degree() > self.max_degree()]
        if stray:
            out.append({"degree": None, "pass": False,
                        "witness": "fork monomials above the top degree of R_b"})
        return out


@lru_cache(maxsize=None)
def hom_space(lam, mu):
    return HomSpace(lam, mu)


class SarHom:
    """The map (1 -> p) from λ (source) to μ (target), up to W^α."""

    __slots__ = ("lam", "mu", "p", "_coords")

    def __init__(self, lam, mu, p, reduce=True):
        self.lam, self.mu = lam, mu
        self.p = reduce_mod_Ib(p, mu.bseq()) if reduce else p
        hom_space(lam, mu).check_hom(self.p)
        self._coords = None

    @classmethod
    def identity(cls, mu):
        return cls(mu, mu, UPolynomial.one(mu.n))

    @property
    def space(self):
        return hom_space(self.lam, self.mu)

    @property
    def coords(self):
        if self._coords is None:
            self._coords = tuple(self.space.coords(self.p))
        return self._coords

    def canonical(self):
        """Representative Σ a_{η,σ} p_{μ̲η^σ}."""
        return self.space.from_coords(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def degrees(self):
        return sorted({self.space.qdegree(sum(m)) for m in self.p.terms})

    def __add__(self, other):
        if (self.lam, self.mu) != (other.lam, other.mu):
            raise ValueError("cannot add maps between different objects")
        return SarHom(self.lam, self.mu, self.p + other.p, reduce=False)

    def __neg__(self):
        return SarHom(self.lam, self.mu, -self.p, reduce=False)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return SarHom(self.lam, self.mu, self.p * c)

    def __mul__(self, other):
        return multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, SarHom):
            return NotImplemented
        return (self.lam, self.mu) == (other.lam, other.mu) and self.coords == other.coords

    def __hash__(self):
        return hash((self.lam, self.mu, self.coords))

    def __repr__(self):
        return "SarHom(%s -> %s : 1 |-> %s)" % (self.lam, self.mu, self.p.to_str("x"))


def multiply(a, b):
    """a: λ -> μ composed after b: ν -> λ, giving ν -> μ."""
    if a.lam != b.mu:
        return SarHom(b.lam, a.mu, UPolynomial(a.mu.n))
    return SarHom(b.lam, a.mu, a.p * b.p)


def to_fork_coords(h):
    return list(h.coords)


def psi_s(h):
    """(1 -> p): λ -> μ  becomes  (1 -> x^{b^λ - b^μ} p): μ -> λ.

    Each monomial of p must absorb the possibly negative exponent vector
    b^λ - b^μ; a negative result is reported, never clamped.
    """
    shift = tuple(a - b for a, b in zip(h.lam.bseq(), h.mu.bseq()))
    terms = {}
    for m, c in h.p.terms.items():
        mm = tuple(i + s for i, s in zip(m, shift))
        if any(e < 0 for e in mm):
            raise ArithmeticError("ψ_S produced a negative exponent %r from %r" % (mm, m))
        terms[mm] = c
    return SarHom(h.mu, h.lam, UPolynomial(h.p.n, terms))


class SarElement:
    """Finite sum of SarHoms between various pairs, keyed by (μ, λ)."""

    __slots__ = ("n", "terms")

    def __init__(self, n, homs=()):
        self.n = n
        self.terms = {}
        for h in homs:
            self._add(h)

    def _add(self, h):
        key = (h.mu, h.lam)
        if key in self.terms:
            h = self.terms[key] + h
        if h.p.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = h

    def __add__(self, other):
        out = SarElement(self.n, self.terms.values())
        for h in other.terms.values():
            out._add(h)
        return out

    def __mul__(self, other):
        out = SarElement(self.n)
        for (mu, lam), a in self.terms.items():
            for (lam2, nu), b in other.terms.items():
                if lam == lam2:
                    out._add(multiply(a, b))
        return out

    def coords(self):
        return {key: h.coords for key, h in self.terms.items() if any(h.coords)}

    def __eq__(self, other):
        if not isinstance(other, SarElement):
            return NotImplemented
        return self.coords() == other.coords()

    def is_zero(self):
        return not self.coords()

    def __repr__(self):
        live = [repr(h) for h in self.terms.values() if not h.is_zero()]
        return " + ".join(live) if live else "0"


def compare_W_variants(lam, mu):
    """Per-degree comparison of W^α with W̃ inside Hom(λ, μ)."""
    space = hom_space(lam, mu)
    tilde = walpha_generators(lam, mu, variant="tilde")
    report = []
    for e in range(space.max_degree() + 1):
        piece = space.piece(e)
        N = len(piece.monos)
        rows = []
        for g in tilde:
            dg = g.degree()
            if dg > e:
                continue
            for m in ib_basis(space.bmu, e - dg):
                v = space.vector(reduce_mod_Ib(g * UPolynomial(space.n, {m: 1}), space.bmu), piece)
                if any(v):
                    rows.append(v)
        tbasis = lattice.lattice_basis(rows, N) if rows else []

        def poly(v):
            return UPolynomial(space.n, {m: c for m, c in zip(piece.monos, v) if c})

        only_alpha = [poly(v) for v in piece.w_basis
                      if not (tbasis and lattice.contains(tbasis, v))]
        only_tilde = [poly(v) for v in tbasis
                      if not (piece.w_basis and lattice.contains(piece.w_basis, v))]
        report.append({"degree": space.qdegree(e), "alpha_rank": len(piece.w_basis),
                       "tilde_rank": len(tbasis), "alpha_not_tilde": only_alpha,
                       "tilde_not_alpha": only_tilde,
                       "equal": not only_alpha and not only_tilde})
    return report
