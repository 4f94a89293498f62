"""Exact coefficient arithmetic.

LaurentQ      integer Laurent polynomials in q
RatQ          rational functions in q, kept in a canonical reduced form
UPolynomial   integer polynomials in commuting variables U_1..U_n (or x_1..x_n)

plus the two normal forms used everywhere else: reduction modulo a monomial
ideal, and reduction modulo the ideal I_b generated by complete symmetric
polynomials h_{b_i}(x_1, ..., x_i).
"""
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import gcd


class LaurentQ:
    """Integer Laurent polynomial in q, stored as {exponent: coefficient}."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms}
        self.terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    @classmethod
    def q(cls, e=1):
        return cls({e: 1})

    @classmethod
    def coerce(cls, a):
        if isinstance(a, LaurentQ):
            return a
        if isinstance(a, int):
            return cls({0: a})
        raise TypeError("cannot coerce %r to LaurentQ" % (a,))

    def is_zero(self):
        return not self.terms

    def coeff(self, e):
        return self.terms.get(e, 0)

    def min_degree(self):
        return min(self.terms) if self.terms else None

    def max_degree(self):
        return max(self.terms) if self.terms else None

    def shift(self, s):
        return LaurentQ({e + s: c for e, c in self.terms.items()})

    def at_one(self):
        return sum(self.terms.values())

    def bar(self):
        """q -> q^{-1}."""
        return LaurentQ({-e: c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, RatQ):
            return NotImplemented
        other = LaurentQ.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentQ(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, RatQ):
            return NotImplemented
        return self + (-LaurentQ.coerce(other))

    def __rsub__(self, other):
        return LaurentQ.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RatQ):
            return NotImplemented
        other = LaurentQ.coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentQ(out)

    __rmul__ = __mul__

    def __pow__(self, m):
        if m < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = LaurentQ(1)
        for _ in range(m):
            out = out * self
        return out

    def __truediv__(self, other):
        return RatQ(self) / other

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentQ(other)
        if isinstance(other, RatQ):
            return RatQ(self) == other
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items())))
        return self._hash

    def __repr__(self):
        return "LaurentQ(%s)" % self

    def __str__(self):
        return laurent_str(self)

    def to_json(self):
        return [[e, c] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data):
        return cls({int(e): int(c) for e, c in data})


def laurent_str(f, var="q"):
    if not f.terms:
        return "0"
    parts = []
    for e in sorted(f.terms):
        c = f.terms[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mon = var if e == 1 else "%s^%d" % (var, e)
            body = mon if a == 1 else "%d*%s" % (a, mon)
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += " %s %s" % (sign, body)
    return s


# -- univariate helpers over Q, used only to cancel common factors in RatQ --

def _strip(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        f = a[-1] / lead
        s = len(a) - len(b)
        q[s] = f
        for i, c in enumerate(b):
            a[s + i] -= f * c
        a.pop()
        _strip(a)
    return q, a


def _poly_gcd(a, b):
    a = _strip([Fraction(c) for c in a])
    b = _strip([Fraction(c) for c in b])
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return a


def _laurent_to_poly(f):
    """Split f = q^s * p(q) with p(0) != 0, p as a coefficient list."""
    s = f.min_degree()
    top = f.max_degree()
    return s, [f.terms.get(s + i, 0) for i in range(top - s + 1)]


def _content(coeffs):
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    return g


class RatQ:
    """Rational function num/den in q with canonical representation.

    Canonical form: den is an honest polynomial with nonzero constant term,
    num and den share no factor over Q, all coefficients are integers with
    joint content 1, and den has positive leading coefficient.  Equal
    rational functions therefore have identical (num, den).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = LaurentQ.coerce(num)
        den = LaurentQ(1) if den is None else LaurentQ.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("RatQ with zero denominator")
        self.num, self.den = _canonical(num, den)

    @classmethod
    def coerce(cls, a):
        return a if isinstance(a, RatQ) else cls(a)

    def is_zero(self):
        return self.num.is_zero()

    def is_laurent(self):
        return self.den.terms == {0: 1}

    def as_laurent(self):
        if not self.is_laurent():
            raise ValueError("%s is not a Laurent polynomial" % self)
        return self.num

    def __add__(self, other):
        other = RatQ.coerce(other)
        if self.den == other.den:
            return RatQ(self.num + other.num, self.den)
        return RatQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RatQ)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        return self + (-RatQ.coerce(other))

    def __rsub__(self, other):
        return RatQ.coerce(other) - self

    def __mul__(self, other):
        other = RatQ.coerce(other)
        if self.is_zero() or other.is_zero():
            return RatQ(0)
        return RatQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatQ(self.den, self.num)

    def __truediv__(self, other):
        return self * RatQ.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RatQ.coerce(other) * self.inverse()

    def __pow__(self, m):
        base = self if m >= 0 else self.inverse()
        out = RatQ(1)
        for _ in range(abs(m)):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, LaurentQ)):
            other = RatQ(other)
        if not isinstance(other, RatQ):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return "RatQ(%s)" % self

    def __str__(self):
        if self.is_laurent():
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def to_json(self):
        if self.is_laurent() and set(self.num.terms) <= {0}:
            return self.num.coeff(0)
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, int):
            return cls(data)
        return cls(LaurentQ.from_json(data["num"]), LaurentQ.from_json(data["den"]))


def _canonical(num, den):
    if num.is_zero():
        return LaurentQ(), LaurentQ(1)
    sn, pn = _laurent_to_poly(num)
    sd, pd = _laurent_to_poly(den)
    g = _poly_gcd(pn, pd)
    if len(g) > 1:
        pn, r1 = _poly_divmod([Fraction(c) for c in pn], g)
        pd, r2 = _poly_divmod([Fraction(c) for c in pd], g)
        assert not r1 and not r2
        # clear denominators introduced by dividing over Q
        lcm = 1
        for c in pn + pd:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        pn = [int(c * lcm) for c in pn]
        pd = [int(c * lcm) for c in pd]
        _strip(pn)
        _strip(pd)
    cont = gcd(_content(pn), _content(pd))
    if pd[-1] < 0:
        cont = -cont
    pn = [c // cont for c in pn]
    pd = [c // cont for c in pd]
    s = sn - sd
    return (LaurentQ({s + i: c for i, c in enumerate(pn)}),
            LaurentQ({i: c for i, c in enumerate(pd)}))


q = LaurentQ.q()


def qint_nonsym(k):
    """(k)_{q^2} = 1 + q^2 + ... + q^{2k-2}."""
    return LaurentQ({2 * i: 1 for i in range(k)})


def qfactorial_nonsym(k):
    """(k)!_{q^2}; (0)! = 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = LaurentQ(1)
    for i in range(1, k + 1):
        out = out * qint_nonsym(i)
    return out


def series_truncate(f, D):
    """Power series of f in q truncated to q-degree <= D, as a LaurentQ.

    The denominator must have a unit constant term once its lowest q-power is
    factored out, otherwise the series does not live over Z.
    """
    f = RatQ.coerce(f)
    num, den = f.num, f.den
    if num.is_zero():
        return LaurentQ()
    sd, pd = _laurent_to_poly(den)
    if pd[0] not in (1, -1):
        raise ValueError("denominator %s is not expandable over Z" % den)
    shift = -sd
    lo = num.min_degree() + shift
    # invert pd as a power series up to the needed length
    n_terms = D - lo + 1
    if n_terms <= 0:
        return LaurentQ()
    inv = [0] * n_terms
    inv[0] = pd[0]  # 1/(+-1) = +-1
    for i in range(1, n_terms):
        s = 0
        for j in range(1, min(i, len(pd) - 1) + 1):
            s += pd[j] * inv[i - j]
        inv[i] = -s * pd[0]
    out = {}
    for e, c in num.terms.items():
        e = e + shift
        for i, a in enumerate(inv):
            if e + i > D:
                break
            if a:
                out[e + i] = out.get(e + i, 0) + c * a
    return LaurentQ(out)


# -- multivariate polynomials -------------------------------------------------

def mono_mul(a, b):
    return tuple(i + j for i, j in zip(a, b))


def mono_divides(a, b):
    return all(i <= j for i, j in zip(a, b))


def mono_degree(m):
    return sum(m)


class UPolynomial:
    """Integer polynomial in n commuting variables.

    Monomials are exponent tuples of length n.  deg^q of a variable is 2, so
    a monomial of total exponent e has q-degree 2e.
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * n: 1})

    @classmethod
    def var(cls, n, i):
        """The variable U_i (1-based)."""
        m = [0] * n
        m[i - 1] = 1
        return cls(n, {tuple(m): 1})

    @classmethod
    def monomial(cls, exps, c=1):
        exps = tuple(exps)
        return cls(len(exps), {exps: c})

    @classmethod
    def from_vars(cls, n, idx):
        """Product of the variables with the given 1-based indices."""
        m = [0] * n
        for i in idx:
            m[i - 1] += 1
        return cls(n, {tuple(m): 1})

    def is_zero(self):
        return not self.terms

    def coeff(self, m):
        return self.terms.get(tuple(m), 0)

    def monomials(self):
        return sorted(self.terms, key=mono_sort_key)

    def is_homogeneous(self):
        return len({sum(m) for m in self.terms}) <= 1

    def degree(self):
        """Total exponent degree (None for zero); q-degree is twice this."""
        if not self.terms:
            return None
        return max(sum(m) for m in self.terms)

    def qdegree(self):
        d = self.degree()
        return None if d is None else 2 * d

    def homogeneous_part(self, d):
        return UPolynomial(self.n, {m: c for m, c in self.terms.items() if sum(m) == d})

    def _coerce(self, other):
        if isinstance(other, UPolynomial):
            if other.n != self.n:
                raise ValueError("variable count mismatch: %d vs %d" % (self.n, other.n))
            return other
        if isinstance(other, int):
            return UPolynomial(self.n, {(0,) * self.n: other})
        raise TypeError("cannot combine UPolynomial with %r" % (other,))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return UPolynomial(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return UPolynomial(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return UPolynomial(self.n, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return UPolynomial(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = UPolynomial.one(self.n)
        for _ in range(e):
            out = out * self
        return out

    def substitute(self, images):
        """Replace variable i by images[i-1] (UPolynomials in a common ring)."""
        target_n = images[0].n
        out = UPolynomial(target_n)
        for m, c in self.terms.items():
            t = UPolynomial(target_n, {(0,) * target_n: c})
            for i, e in enumerate(m):
                if e:
                    t = t * images[i] ** e
            out = out + t
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = UPolynomial(self.n, {(0,) * self.n: other})
        if not isinstance(other, UPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, tuple(sorted(self.terms.items()))))
        return self._hash

    def __repr__(self):
        return "UPolynomial(%s)" % self.to_str()

    def __str__(self):
        return self.to_str()

    def to_str(self, var="U"):
        if not self.terms:
            return "0"
        parts = []
        for m in self.monomials():
            c = self.terms[m]
            mon = mono_str(m, var)
            a = abs(c)
            if mon == "1":
                body = str(a)
            else:
                body = mon if a == 1 else "%d*%s" % (a, mon)
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += " %s %s" % (sign, body)
        return s


def mono_sort_key(m):
    """Degree first, then U_1-heavy monomials first (U_1 < U_3 < U_1^2 ...)."""
    return (sum(m), tuple(-e for e in m))


def mono_str(m, var="U"):
    parts = []
    for i, e in enumerate(m, 1):
        if e == 1:
            parts.append("%s%d" % (var, i))
        elif e > 1:
            parts.append("%s%d^%d" % (var, i, e))
    return "*".join(parts) if parts else "1"


def monomials_of_degree(n, d):
    """All exponent tuples in n variables of total degree d."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        m = [0] * n
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    return out


def sym_poly(kind, j, variables, n=None):
    """Elementary (e_j) or complete (h_j) symmetric polynomial.

    variables: 1-based variable indices; n: number of variables of the ambient
    ring (defaults to the largest index).  e_j with j > len(variables) is 0.
    """
    variables = sorted(set(variables))
    if n is None:
        n = max(variables)
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j == 0:
        return UPolynomial.one(n)
    terms = {}
    if kind in ("elementary", "e"):
        from itertools import combinations
        for combo in combinations(variables, j):
            m = [0] * n
            for i in combo:
                m[i - 1] = 1
            terms[tuple(m)] = 1
    elif kind in ("complete", "h"):
        for combo in combinations_with_replacement(variables, j):
            m = [0] * n
            for i in combo:
                m[i - 1] += 1
            terms[tuple(m)] = 1
    else:
        raise ValueError("kind must be 'elementary' or 'complete'")
    return UPolynomial(n, terms)


def reduce_mod_monomial_ideal(p, gens):
    """Delete every term divisible by one of the monomials in gens."""
    gens = [tuple(g) for g in gens]
    return UPolynomial(p.n, {m: c for m, c in p.terms.items()
                             if not any(mono_divides(g, m) for g in gens)})


def check_bseq(b):
    b = tuple(b)
    if not b or any(bi < 1 for bi in b):
        raise ValueError("b-sequence must be a nonempty tuple of positive integers")
    for a, c in zip(b, b[1:]):
        if not (a - 1 <= c <= a):
            raise ValueError("b-sequence %r violates b_i >= b_{i+1} >= b_i - 1" % (b,))
    return b


@lru_cache(maxsize=None)
def _h_tail(i, a):
    """Monomials of h_a(x_1..x_i) other than x_i^a, as exponent tuples of length i."""
    out = []
    for combo in combinations_with_replacement(range(i), a):
        if combo == (i - 1,) * a:
            continue
        m = [0] * i
        for t in combo:
            m[t] += 1
        out.append(tuple(m))
    return tuple(out)


@lru_cache(maxsize=200000)
def _nf_monomial(b, m):
    """Normal form of x^m modulo I_b as a tuple of (monomial, coeff) pairs."""
    top = None
    for i in range(len(b) - 1, -1, -1):
        if m[i] >= b[i]:
            top = i
            break
    if top is None:
        return ((m, 1),)
    a = b[top]
    rest = list(m)
    rest[top] -= a
    acc = {}
    for t in _h_tail(top + 1, a):
        mm = tuple(rest[j] + t[j] if j <= top else rest[j] for j in range(len(m)))
        for mon, c in _nf_monomial(b, mm):
            acc[mon] = acc.get(mon, 0) - c
    return tuple((mon, c) for mon, c in acc.items() if c)


def reduce_mod_Ib(p, b):
    """Normal form of p in R_b = Z[x_1..x_n]/I_b on the basis x^j, j_i < b_i.

    Uses the rewrite x_i^{b_i} -> x_i^{b_i} - h_{b_i}(x_1..x_i); the h's are a
    Groebner basis for lex order with x_n > ... > x_1, so the result is unique.
    """
    b = tuple(b)
    if len(b) != p.n:
        raise ValueError("b has length %d but polynomial has %d variables" % (len(b), p.n))
    out = {}
    for m, c in p.terms.items():
        for mon, d in _nf_monomial(b, m):
            out[mon] = out.get(mon, 0) + c * d
    return UPolynomial(p.n, out)


def ib_basis(b, degree=None):
    """Normal-form monomials {x^j : 0 <= j_i < b_i}, optionally of one degree."""
    from itertools import product
    out = [m for m in product(*[range(bi) for bi in b])
           if degree is None or sum(m) == degree]
    return sorted(out, key=mono_sort_key)
