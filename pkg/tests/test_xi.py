import pytest
from hypothesis import given, settings, strategies as st

from osz_sartori import combinat as cb
from osz_sartori import osz, xi
from osz_sartori.combinat import IState
from osz_sartori.qcoeff import UPolynomial
from osz_sartori.sartori import SarHom, fork_basis, psi_s


def I(n, *els):
    return IState(n, els)


def x(n, *idx):
    return UPolynomial.from_vars(n, idx)


def test_xi_examples():
    img = xi.xi_term(I(4, 0, 3), I(4, 1, 2), UPolynomial.one(4))
    assert (img.lam, img.mu) == (I(4, 1, 2).to_seq(), I(4, 0, 3).to_seq())
    assert img.p == x(4, 3)
    assert xi.xi_c(I(4, 0, 3), I(4, 1, 2)) == (0, 0, 1, 0)


def test_xi_on_small_steps():
    for n in range(2, 6):
        for k in range(1, n):
            for s in cb.all_states(n, k):
                for i in range(1, n):
                    if osz.can_step("R", i, s):
                        (h,) = xi.xi_map(osz.small_step("R", i, s)).terms.values()
                        assert h == SarHom(h.lam, h.mu, UPolynomial.one(n))
                    if osz.can_step("L", i, s):
                        (h,) = xi.xi_map(osz.small_step("L", i, s)).terms.values()
                        assert h == SarHom(h.lam, h.mu, x(n, i))


def test_fork_element_examples():
    a, b = I(4, 0, 3), I(4, 1, 2)
    z = IState(4, tuple(min(p, r) for p, r in zip(a.elements, b.elements)))
    assert xi.fork_element(a, z, b).polynomial == UPolynomial.one(4)
    # the staircase factor for σ = s_1 is U_{z_1 + 1} = U_1; no interval factor
    # survives because both generating intervals start at a hole of z
    assert xi.fork_element(a, I(4, 0, 2), b, (2, 1)).polynomial == x(4, 1)
    assert xi.fork_element(I(2, 0), I(2, 0), I(2, 1)).polynomial == UPolynomial.one(2)
    with pytest.raises(ValueError):
        xi.fork_element(a, I(4, 1, 3), b)


def test_fork_elements_map_to_fork_basis():
    for n in range(6):
        for k in range(n + 1):
            for a in cb.all_states(n, k):
                for b in cb.all_states(n, k):
                    elems = xi.fork_elements(a, b)
                    forks = fork_basis(b.to_seq(), a.to_seq())
                    assert len(elems) == len(forks)
                    for i, fe in enumerate(elems):
                        img = xi.xi_term(a, b, fe.polynomial)
                        assert img.coords == tuple(1 if j == i else 0 for j in range(len(forks)))
                        assert fe.degree() == forks[i].qdegree


def test_j_examples():
    # e_1 I_{0} = U_1 I_{0} goes to x_1, which vanishes in R_(1,1)
    e1 = xi.JIdeal(2, 1).generators()[0]
    a = osz.element(I(2, 0), I(2, 0), e1)
    assert a == osz.element(I(2, 0), I(2, 0), x(2, 1))
    assert xi.xi_map(a).is_zero()
    assert xi.JIdeal(3, 0).generators() == []


def test_theta_generators():
    assert xi.theta_equivalence(3, 1, 8)
    assert xi.theta_equivalence(3, 2, 8)
    assert xi.theta_equivalence(4, 3, 8)
    for n in range(6):
        for k in range(n + 1):
            assert xi.theta_equivalence(n, k, 8)


def test_iso_small_cases():
    r = xi.verify_iso(2, 1, 6)
    assert r["pass"]
    full = xi.verify_iso(3, 3, 12)
    assert full["pass"]
    # B/J at n = k is the coinvariant algebra of rank n!
    (pair,) = full["pairs"]
    assert sum(d["rank_quotient"] for d in pair["degrees"]) == 6
    assert xi.verify_iso(3, 0, 6)["pass"]


def test_flatness_examples():
    r = xi.verify_flatness(2, 1, 4)
    assert r["pass"]
    pair = next(p for p in r["pairs"] if p["x"] == [0] and p["y"] == [0])
    assert [d["rank"] for d in pair["degrees"]] == [1, 1, 1]
    assert xi.verify_flatness(3, 0, 6)["pass"]
    assert [fe.polynomial for fe in xi.fork_elements(I(4, 0, 3), I(4, 1, 2))] == \
        [UPolynomial.one(4), x(4, 1)]
    assert xi.verify_flatness(4, 2, 8)["pass"]


def test_iso_and_flatness_up_to_four():
    for n in range(5):
        for k in range(n + 1):
            assert xi.verify_iso(n, k, 8)["pass"]
            assert xi.verify_flatness(n, k, 8)["pass"]


def test_psi_compatibility_examples():
    r1 = osz.small_step("R", 1, I(2, 0))
    (left,) = xi.xi_map(osz.psi_osz(r1)).terms.values()
    (right,) = xi.xi_map(r1).terms.values()
    assert left == psi_s(right)
    assert left.p == x(2, 1)
    for n in range(5):
        for k in range(n + 1):
            assert xi.psi_compatibility(n, k, 6)


def test_relation_suite():
    for n in range(5):
        assert xi.verify_relations(n, D=6, samples=60)["pass"]


nk = st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n)))


@settings(max_examples=80, deadline=None)
@given(nk, st.data())
def test_xi_is_multiplicative(nk, data):
    n, k = nk
    basis = osz.all_basis_elements(n, k, 6)
    a_x, a_y, m1 = data.draw(st.sampled_from(basis))
    rest = [t for t in basis if t[0] == a_y]
    _, b_y, m2 = data.draw(st.sampled_from(rest))
    a = osz.element(a_x, a_y, UPolynomial(n, {m1: 1}))
    b = osz.element(a_y, b_y, UPolynomial(n, {m2: 1}))
    assert xi.xi_map(a * b) == xi.xi_map(a) * xi.xi_map(b)


def test_parallel_map_matches_serial(monkeypatch):
    monkeypatch.setenv(xi.WORKERS_ENV, "2")
    par = xi.verify_iso(3, 1, 6)
    monkeypatch.setenv(xi.WORKERS_ENV, "1")
    assert par == xi.verify_iso(3, 1, 6)
