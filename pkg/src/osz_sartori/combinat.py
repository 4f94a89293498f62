"""States, up-down sequences and fork diagrams.

A left I-state is a k-subset x of {0..n-1}; it corresponds to the up-down
sequence with an up arrow (∧, encoded 0) at each position x_i + 1 and down
arrows (∨, encoded 1) elsewhere.  Positions and line indices are 1-based,
region indices 0-based.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product

from .qcoeff import LaurentQ, qfactorial_nonsym, qint_nonsym

UP, DOWN = 0, 1


@dataclass(frozen=True, order=True)
class IState:
    n: int
    elements: tuple

    def __post_init__(self):
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        if list(els) != sorted(set(els)) or any(not 0 <= a < self.n for a in els):
            raise ValueError("I-state must be an increasing subset of {0..%d}: %r"
                             % (self.n - 1, els))

    @classmethod
    def of(cls, n, elements):
        return cls(n, tuple(sorted(elements)))

    @property
    def k(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a):
        return a in self.elements

    def __len__(self):
        return len(self.elements)

    def holes(self):
        """Hole sequence {0..n} minus x, increasing; the last hole is n."""
        return tuple(a for a in range(self.n + 1) if a not in self.elements)

    def weight_v(self):
        return weight_v(self)

    def without(self, a):
        return IState(self.n, tuple(e for e in self.elements if e != a))

    def with_(self, a):
        return IState.of(self.n, set(self.elements) | {a})

    def to_seq(self):
        return state_to_seq(self)

    def __str__(self):
        return "{%s}" % ",".join(map(str, self.elements))


@dataclass(frozen=True, order=True)
class UpDownSeq:
    n: int
    symbols: tuple

    def __post_init__(self):
        syms = tuple(self.symbols)
        object.__setattr__(self, "symbols", syms)
        if len(syms) != self.n or any(s not in (UP, DOWN) for s in syms):
            raise ValueError("bad up-down sequence %r" % (syms,))

    @classmethod
    def parse(cls, text):
        """Accepts 'u'/'d', '∧'/'∨' or '0'/'1' (0 = ∧)."""
        table = {"u": UP, "d": DOWN, "∧": UP, "∨": DOWN, "0": UP, "1": DOWN,
                 "^": UP, "v": DOWN}
        try:
            syms = tuple(table[ch] for ch in text.strip())
        except KeyError as exc:
            raise ValueError("cannot parse up-down sequence %r" % text) from exc
        return cls(len(syms), syms)

    @property
    def k(self):
        return self.symbols.count(UP)

    def ups(self):
        """Positions ∧_1 < ... < ∧_k (1-based)."""
        return tuple(i for i, s in enumerate(self.symbols, 1) if s == UP)

    def downs(self):
        """Positions ∨_1 < ... < ∨_{n-k} (1-based)."""
        return tuple(i for i, s in enumerate(self.symbols, 1) if s == DOWN)

    def downs_sentinel(self):
        """∨ positions followed by the sentinel n+1."""
        return self.downs() + (self.n + 1,)

    def bseq(self):
        """b_i = 1 + number of ∧ strictly right of position i."""
        out = []
        count = 0
        for s in reversed(self.symbols):
            out.append(count + 1)
            if s == UP:
                count += 1
        return tuple(reversed(out))

    def to_state(self):
        return seq_to_state(self)

    def ascii(self):
        return "".join("u" if s == UP else "d" for s in self.symbols)

    def binary(self):
        return "".join(str(s) for s in self.symbols)

    def __str__(self):
        return "".join("∧" if s == UP else "∨" for s in self.symbols)


def all_states(n, k):
    return [IState(n, c) for c in combinations(range(n), k)]


def all_seqs(n, k):
    return [state_to_seq(x) for x in all_states(n, k)]


def state_to_seq(x):
    syms = [DOWN] * x.n
    for a in x.elements:
        syms[a] = UP
    return UpDownSeq(x.n, tuple(syms))


def seq_to_state(mu):
    return IState(mu.n, tuple(i - 1 for i in mu.ups()))


def weight_v(x):
    """v_i = |x ∩ {i..n}| for i = 1..n."""
    return tuple(sum(1 for a in x.elements if a >= i) for i in range(1, x.n + 1))


def _check_pair(x, y):
    if x.n != y.n or x.k != y.k:
        raise ValueError("states %s and %s have different n or k" % (x, y))


def w_vec(x, y):
    """w^{x,y}_i = |v^x_i - v^y_i| / 2."""
    _check_pair(x, y)
    return tuple(Fraction(abs(a - b), 2) for a, b in zip(weight_v(x), weight_v(y)))


def g_vec(x, y, z):
    """Exponent vector of U in f_{x,y} f_{y,z} = U^g f_{x,z}; always integral."""
    vx, vy, vz = weight_v(x), weight_v(y), weight_v(z)
    out = []
    for a, b, c in zip(vx, vy, vz):
        twice = abs(b - c) - abs(a - c) + abs(a - b)
        assert twice % 2 == 0
        out.append(twice // 2)
    return tuple(out)


def distance(x, y):
    """d = Σ|x_i - y_i|, the minimal q-degree of the (x,y) component."""
    _check_pair(x, y)
    return sum(abs(a - b) for a, b in zip(x.elements, y.elements))


def too_far_coords(x, y):
    _check_pair(x, y)
    return any(abs(a - b) > 1 for a, b in zip(x.elements, y.elements))


def too_far_holes(x, y):
    """Hole criterion: h^x_i >= h^y_{i+1} or h^y_i >= h^x_{i+1} for some i."""
    _check_pair(x, y)
    hx, hy = x.holes(), y.holes()
    for i in range(len(hx) - 1):
        if hx[i] >= hy[i + 1] or hy[i] >= hx[i + 1]:
            return True
    return False


def too_far(x, y, method="coords"):
    if method == "coords":
        return too_far_coords(x, y)
    if method == "holes":
        return too_far_holes(x, y)
    raise ValueError("unknown method %r" % method)


def generating_intervals_regions(x, y):
    """Scan regions and lines directly.

    Region i (0..n) is fully used when i ∈ x∩y; line j (1..n) is crossed when
    v^x_j != v^y_j.  [a+1, b] is generating when regions a and b are not
    fully used, everything strictly between is, and lines a+1..b are uncrossed.
    """
    _check_pair(x, y)
    if too_far_coords(x, y):
        raise ValueError("generating intervals need a pair that is not too far")
    both = set(x.elements) & set(y.elements)
    vx, vy = weight_v(x), weight_v(y)
    free = [r for r in range(x.n + 1) if r not in both]
    out = []
    for a, b in zip(free, free[1:]):
        if all(vx[j - 1] == vy[j - 1] for j in range(a + 1, b + 1)):
            out.append((a + 1, b))
    return out


def generating_intervals_holes(x, y):
    """j = max(h^x_i, h^y_i), j + l = min(h^x_{i+1}, h^y_{i+1})."""
    _check_pair(x, y)
    if too_far_coords(x, y):
        raise ValueError("generating intervals need a pair that is not too far")
    hx, hy = x.holes(), y.holes()
    out = []
    for i in range(len(hx) - 1):
        j = max(hx[i], hy[i])
        end = min(hx[i + 1], hy[i + 1])
        out.append((j + 1, end))
    return out


def generating_intervals(x, y, method="holes"):
    if method == "holes":
        return generating_intervals_holes(x, y)
    if method == "regions":
        return generating_intervals_regions(x, y)
    raise ValueError("unknown method %r" % method)


def interval_lengths(x, y):
    return [b - a + 1 for a, b in generating_intervals_holes(x, y)]


@dataclass(frozen=True)
class StatePairData:
    x: IState
    y: IState
    wvec: tuple
    intervals: tuple
    d: int
    too_far: bool


def pair_data(x, y):
    tf = too_far_coords(x, y)
    ints = () if tf else tuple(generating_intervals_holes(x, y))
    return StatePairData(x, y, w_vec(x, y), ints, distance(x, y), tf)


# -- Sartori-side pair combinatorics ------------------------------------------

def _check_seqs(mu, lam):
    if mu.n != lam.n or mu.k != lam.k:
        raise ValueError("sequences %s and %s have different n or k" % (mu, lam))


def seq_interval_bounds(mu, lam):
    """For j = 1..n-k: (max(∨_j^μ, ∨_j^λ), min(∨_{j+1}^μ, ∨_{j+1}^λ))."""
    _check_seqs(mu, lam)
    dm, dl = mu.downs_sentinel(), lam.downs_sentinel()
    return [(max(dm[j], dl[j]), min(dm[j + 1], dl[j + 1])) for j in range(len(dm) - 1)]


def seq_too_far(mu, lam):
    return too_far_coords(seq_to_state(mu), seq_to_state(lam))


def is_oriented(mu, eta, lam):
    """Orientation test: max(∨_j^μ, ∨_j^λ) <= ∨_j^η < min(∨_{j+1}^μ, ∨_{j+1}^λ)."""
    _check_seqs(mu, lam)
    _check_seqs(mu, eta)
    de = eta.downs()
    return all(lo <= de[j] < hi for j, (lo, hi) in enumerate(seq_interval_bounds(mu, lam)))


def oriented_etas(mu, lam):
    """All η making μ̲ η λ̄ oriented, lexicographic in (∨_1^η, ...)."""
    bounds = seq_interval_bounds(mu, lam)
    out = []
    for downs in product(*[range(lo, hi) for lo, hi in bounds]):
        syms = [UP] * mu.n
        for d in downs:
            syms[d - 1] = DOWN
        out.append(UpDownSeq(mu.n, tuple(syms)))
    return out


def perm_length(sigma):
    """Number of inversions of a permutation in one-line notation."""
    return sum(1 for i in range(len(sigma)) for j in range(i + 1, len(sigma))
               if sigma[i] > sigma[j])


def all_perms(k):
    """S_k in one-line notation (values 1..k), lexicographic; identity first."""
    return list(permutations(range(1, k + 1)))


def staircase_exponents(sigma):
    """c_i = #{j < σ^{-1}(i) : σ(j) > i}; S'_σ = Π x_i^{c_i}."""
    k = len(sigma)
    pos = {v: p for p, v in enumerate(sigma)}
    return tuple(sum(1 for j in range(pos[i]) if sigma[j] > i) for i in range(1, k + 1))


@dataclass(frozen=True)
class ForkDiagram:
    mu: UpDownSeq
    eta: UpDownSeq
    lam: UpDownSeq
    sigma: tuple = None

    def __post_init__(self):
        if self.sigma is None:
            object.__setattr__(self, "sigma", tuple(range(1, self.mu.k + 1)))


def fork_degree(d):
    """deg(μ̲η) + deg(ηλ̄) + 2ℓ(σ)."""
    if not is_oriented(d.mu, d.eta, d.lam):
        raise ValueError("fork diagram %s %s %s is not oriented" % (d.mu, d.eta, d.lam))
    de, dm, dl = d.eta.downs(), d.mu.downs(), d.lam.downs()
    return (sum(e - m for e, m in zip(de, dm)) + sum(e - l for e, l in zip(de, dl))
            + 2 * perm_length(d.sigma))


def seq_distance(mu, lam):
    """Σ|∧_i^λ - ∧_i^μ|."""
    _check_seqs(mu, lam)
    return sum(abs(a - b) for a, b in zip(mu.ups(), lam.ups()))


def graded_rank_Z(mu, lam):
    """q^d (k)!_{q^2} Π (l_i)_{q^2}, or 0 for a too-far pair."""
    if seq_too_far(mu, lam):
        return LaurentQ()
    out = LaurentQ.q(seq_distance(mu, lam)) * qfactorial_nonsym(mu.k)
    for lo, hi in seq_interval_bounds(mu, lam):
        out = out * qint_nonsym(hi - lo)
    return out
