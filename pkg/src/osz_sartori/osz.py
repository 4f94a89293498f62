"""The bordered algebra B_l(n,k) in big-step normal form.

I_x B_l I_y is free over Z on the monomials in U_1..U_n not divisible by any
p_G = U_{j+1}...U_{j+l} for the generating intervals G = [j+1, j+l] of (x,y);
the monomial m stands for m * f_{x,y}.  Products follow
f_{x,y} f_{y,z} = U^{g(x,y,z)} f_{x,z}, then reduction in the (x,z) quotient.
"""
from dataclasses import dataclass
from functools import lru_cache

from . import combinat as cb
from .combinat import IState
from .qcoeff import (LaurentQ, RatQ, UPolynomial, mono_divides, mono_sort_key,
                     monomials_of_degree, q, qint_nonsym, reduce_mod_monomial_ideal)


@lru_cache(maxsize=None)
def interval_generators(x, y):
    """Monomials p_G for the generating intervals of (x,y); None if too far."""
    if cb.too_far_coords(x, y):
        return None
    out = []
    for a, b in cb.generating_intervals_holes(x, y):
        m = [0] * x.n
        for i in range(a, b + 1):
            m[i - 1] = 1
        out.append(tuple(m))
    return tuple(out)


@lru_cache(maxsize=None)
def _g(x, y, z):
    return cb.g_vec(x, y, z)


def is_normal(m, gens):
    return not any(mono_divides(g, m) for g in gens)


class OszElement:
    """Element of B_l(n,k): {(x, y): reduced UPolynomial}."""

    __slots__ = ("n", "k", "terms")

    def __init__(self, n, k, terms=None):
        self.n, self.k = n, k
        out = {}
        for (x, y), p in (terms or {}).items():
            gens = interval_generators(x, y)
            if gens is None:
                continue
            p = reduce_mod_monomial_ideal(p, gens)
            if not p.is_zero():
                out[(x, y)] = p
        self.terms = out

    @classmethod
    def _raw(cls, n, k, terms):
        out = object.__new__(cls)
        out.n, out.k, out.terms = n, k, terms
        return out

    @classmethod
    def zero(cls, n, k):
        return cls._raw(n, k, {})

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, p in other.terms.items():
            s = out.get(key, UPolynomial(self.n)) + p
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return OszElement._raw(self.n, self.k, out)

    def __neg__(self):
        return OszElement._raw(self.n, self.k, {key: -p for key, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, int):
            if c == 0:
                return OszElement.zero(self.n, self.k)
            return OszElement._raw(self.n, self.k, {key: p * c for key, p in self.terms.items()})
        # central polynomial multiplier
        return OszElement(self.n, self.k, {key: p * c for key, p in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, UPolynomial)):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, OszElement):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.k, tuple(sorted(
            ((x.elements, y.elements), p) for (x, y), p in self.terms.items()))))

    def degrees(self):
        """Set of q-degrees of the terms."""
        out = set()
        for (x, y), p in self.terms.items():
            d = cb.distance(x, y)
            out |= {d + 2 * sum(m) for m in p.terms}
        return out

    def __repr__(self):
        return "OszElement(%s)" % self

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (x, y) in sorted(self.terms):
            parts.append("(%s) f_{%s,%s}" % (self.terms[(x, y)], x, y))
        return " + ".join(parts)


def element(x, y, p=None):
    """p * f_{x,y} (p defaults to 1)."""
    if p is None:
        p = UPolynomial.one(x.n)
    return OszElement(x.n, x.k, {(x, y): p})


def big_step_generator(x, y):
    """f_{x,y}; zero when the pair is too far."""
    return element(x, y)


def idempotent(x):
    return element(x, x)


def multiply(a, b):
    a._check(b)
    n = a.n
    out = {}
    for (x, y), p in a.terms.items():
        for (y2, z), r in b.terms.items():
            if y != y2:
                continue
            gens = interval_generators(x, z)
            if gens is None:
                continue
            g = _g(x, y, z)
            acc = out.get((x, z))
            if acc is None:
                acc = out[(x, z)] = {}
            for m1, c1 in p.terms.items():
                for m2, c2 in r.terms.items():
                    m = tuple(i + j + e for i, j, e in zip(m1, m2, g))
                    if is_normal(m, gens):
                        acc[m] = acc.get(m, 0) + c1 * c2
    terms = {}
    for key, acc in out.items():
        poly = UPolynomial(n, acc)
        if not poly.is_zero():
            terms[key] = poly
    return OszElement._raw(n, a.k, terms)


def small_step(label, i, x):
    """R_i, L_i or U_i starting at the state x, as a big-step element."""
    n = x.n
    if not 1 <= i <= n:
        raise ValueError("generator index %d out of range 1..%d" % (i, n))
    here = (i - 1 in x, i in x)
    if label == "R":
        if i == n or here != (True, False):
            raise ValueError("R_%d needs x ∩ {%d,%d} = {%d}" % (i, i - 1, i, i - 1))
        return big_step_generator(x, x.without(i - 1).with_(i))
    if label == "L":
        if i == n or here != (False, True):
            raise ValueError("L_%d needs x ∩ {%d,%d} = {%d}" % (i, i - 1, i, i))
        return big_step_generator(x, x.without(i).with_(i - 1))
    if label == "U":
        return element(x, x, UPolynomial.var(n, i))
    raise ValueError("label must be R, L or U")


def small_step_target(label, i, x):
    if label == "R":
        return x.without(i - 1).with_(i)
    if label == "L":
        return x.without(i).with_(i - 1)
    return x


@dataclass(frozen=True)
class SmallStepPath:
    """A word in R_i, L_i, U_i starting at `start`; steps are (label, i)."""
    start: IState
    steps: tuple = ()

    def states(self):
        out = [self.start]
        for label, i in self.steps:
            out.append(small_step_target(label, i, out[-1]))
        return out

    @property
    def end(self):
        return self.states()[-1]

    def evaluate(self):
        cur = self.start
        out = idempotent(cur)
        for label, i in self.steps:
            out = multiply(out, small_step(label, i, cur))
            cur = small_step_target(label, i, cur)
        return out

    def __str__(self):
        if not self.steps:
            return "I_%s" % self.start
        return "·".join("%s%d" % s for s in self.steps)


def gamma_path(x, y):
    """The recursive small-step path γ_{x,y} from x to y."""
    if cb.too_far_coords(x, y):
        raise ValueError("γ path needs a pair that is not too far")
    steps = []
    cur = x
    while cur != y:
        up = [a for a in range(cur.k) if cur.elements[a] < y.elements[a]]
        if up:
            a = max(up)
            xa = cur.elements[a]
            steps.append(("R", xa + 1))
            cur = cur.without(xa).with_(xa + 1)
        else:
            a = min(a for a in range(cur.k) if cur.elements[a] > y.elements[a])
            xa = cur.elements[a]
            steps.append(("L", xa))
            cur = cur.without(xa).with_(xa - 1)
    return SmallStepPath(x, tuple(steps))


def basis_piece(x, y, D):
    """Normal monomials m with q-degree(m) <= D - d(x,y), sorted by degree."""
    gens = interval_generators(x, y)
    if gens is None:
        return []
    top = D - cb.distance(x, y)
    out = []
    for e in range(0, top // 2 + 1):
        out.extend(m for m in monomials_of_degree(x.n, e) if is_normal(m, gens))
    return sorted(out, key=mono_sort_key)


@lru_cache(maxsize=None)
def normal_monomials(x, y, e):
    """Normal monomials of exponent degree e for the pair (x,y)."""
    gens = interval_generators(x, y)
    if gens is None:
        return ()
    return tuple(sorted((m for m in monomials_of_degree(x.n, e) if is_normal(m, gens)),
                        key=mono_sort_key))


def graded_dim(x, y):
    """q^d Π(l_i)_{q^2} / (1-q^2)^k, or 0 if too far."""
    if cb.too_far_coords(x, y):
        return RatQ(0)
    num = LaurentQ.q(cb.distance(x, y))
    for l in cb.interval_lengths(x, y):
        num = num * qint_nonsym(l)
    return RatQ(num, (1 - q ** 2) ** x.k)


def psi_osz(a):
    """Anti-automorphism swapping R and L: (x, y, p) -> (y, x, p)."""
    return OszElement._raw(a.n, a.k, {(y, x): p for (x, y), p in a.terms.items()})


def all_basis_elements(n, k, D):
    """All m f_{x,y} with q-degree <= D, as (x, y, monomial) triples."""
    out = []
    for x in cb.all_states(n, k):
        for y in cb.all_states(n, k):
            for m in basis_piece(x, y, D):
                out.append((x, y, m))
    return out


def can_step(label, i, x):
    n = x.n
    if label == "U":
        return 1 <= i <= n
    if not 1 <= i < n:
        return False
    here = (i - 1 in x, i in x)
    return here == ((True, False) if label == "R" else (False, True))


def _path(x, *steps):
    cur = x
    for label, i in steps:
        if not can_step(label, i, cur):
            return None
        cur = small_step_target(label, i, cur)
    return SmallStepPath(x, tuple(steps)).evaluate()


def check_small_step_relations(n, k):
    """Evaluate every quiver relation at every state; returns (checked, failures)."""
    checked = 0
    failures = []

    def expect(name, x, lhs, rhs):
        nonlocal checked
        checked += 1
        if lhs != rhs:
            failures.append("%s at %s: %s != %s" % (name, x, lhs, rhs))

    zero = OszElement.zero(n, k)
    idx = range(1, n + 1)
    for x in cb.all_states(n, k):
        arrows = [(lab, i) for lab in "RL" for i in idx if can_step(lab, i, x)]
        for i in idx:
            for j in idx:
                expect("Ucommute", x, _path(x, ("U", i), ("U", j)), _path(x, ("U", j), ("U", i)))
            for a in arrows:
                expect("Ucommute", x, _path(x, a, ("U", i)), _path(x, ("U", i), a))
            u = _path(x, ("U", i))
            if can_step("R", i, x):
                expect("loop", x, _path(x, ("R", i), ("L", i)), u)
            if can_step("L", i, x):
                expect("loop", x, _path(x, ("L", i), ("R", i)), u)
            if (i - 1 not in x) and (i not in x):
                expect("Uzero", x, u, zero)
        for a in "RL":
            for b in "RL":
                for i in idx:
                    for j in idx:
                        if abs(i - j) <= 1:
                            continue
                        lhs = _path(x, (a, i), (b, j))
                        if lhs is not None:
                            expect("RLcommute", x, lhs, _path(x, (b, j), (a, i)))
        for i in range(2, n + 1):
            p = _path(x, ("R", i - 1), ("R", i))
            if p is not None:
                expect("twoline", x, p, zero)
            p = _path(x, ("L", i), ("L", i - 1))
            if p is not None:
                expect("twoline", x, p, zero)
    return checked, failures
