import pytest
import sympy
from hypothesis import given, strategies as st

import oracles as O
from osz_sartori import combinat as cb
from osz_sartori.combinat import ForkDiagram, IState, UpDownSeq
from osz_sartori.qcoeff import LaurentQ, qfactorial_nonsym, qint_nonsym

S = UpDownSeq.parse


def I(n, *els):
    return IState(n, els)


def all_pairs(max_n):
    for n in range(max_n + 1):
        for k in range(n + 1):
            states = cb.all_states(n, k)
            for x in states:
                for y in states:
                    yield x, y


def test_weight_v_examples():
    assert cb.weight_v(I(3, 0, 2)) == (1, 1, 0)
    assert cb.weight_v(I(2)) == (0, 0)
    assert cb.weight_v(I(4, 0, 3)) == (1, 1, 1, 0)


def test_too_far_examples():
    assert cb.too_far(I(3, 0), I(3, 2))
    assert not cb.too_far(I(3, 1), I(3, 1))
    assert not cb.too_far(I(4, 0, 3), I(4, 1, 2))


def test_generating_interval_examples():
    assert cb.generating_intervals(I(4, 0, 3), I(4, 1, 2)) == [(2, 2), (4, 4)]
    assert cb.generating_intervals(I(2, 0), I(2, 1)) == [(2, 2)]


def test_state_sequence_examples():
    assert str(I(4, 0, 3).to_seq()) == "∧∨∨∧"
    assert str(I(2).to_seq()) == "∨∨"
    assert str(I(3, 0, 1, 2).to_seq()) == "∧∧∧"


def test_pair_invariants_up_to_six():
    for x, y in all_pairs(6):
        far = O.too_far(x, y)
        assert cb.too_far(x, y, "coords") == far
        assert cb.too_far(x, y, "holes") == far
        if far:
            continue
        a = cb.generating_intervals(x, y, "regions")
        b = cb.generating_intervals(x, y, "holes")
        assert a == b
        assert len(a) == x.n - x.k
        assert all(s <= e for s, e in a)
        assert all(e1 < s2 for (_, e1), (s2, _) in zip(a, a[1:]))


def test_state_sequence_bijection():
    for n in range(7):
        for k in range(n + 1):
            for x in cb.all_states(n, k):
                mu = x.to_seq()
                assert mu.to_state() == x
                # b^μ_i - 1 counts the ∧ strictly right of position i
                ups = mu.ups()
                assert mu.bseq() == tuple(1 + sum(1 for u in ups if u > i) for i in range(1, n + 1))
                assert mu.bseq() == tuple(v + 1 for v in cb.weight_v(x))


def test_oriented_eta_examples():
    assert cb.oriented_etas(S("ud"), S("du")) == [S("ud")]
    assert cb.oriented_etas(S("du"), S("du")) == [S("du"), S("ud")]
    assert cb.oriented_etas(S("udd"), S("ddu")) == []


def test_fork_degree_examples():
    assert cb.fork_degree(ForkDiagram(S("ud"), S("ud"), S("du"))) == 1
    assert cb.fork_degree(ForkDiagram(S("udud"), S("udud"), S("udud"))) == 0
    assert cb.fork_degree(ForkDiagram(S("du"), S("ud"), S("du"))) == 2
    with pytest.raises(ValueError):
        cb.fork_degree(ForkDiagram(S("ud"), S("du"), S("du")))


def test_graded_rank_examples():
    q = LaurentQ.q
    assert cb.graded_rank_Z(S("uddu"), S("duud")) == q(2) + q(4)
    assert cb.graded_rank_Z(S("uu"), S("uu")) == 1 + q(2)
    assert cb.graded_rank_Z(S("udd"), S("ddu")).is_zero()


def test_fork_counts_against_enumeration():
    for n in range(7):
        for k in range(n + 1):
            seqs = cb.all_seqs(n, k)
            for mu in seqs:
                for lam in seqs:
                    etas = cb.oriented_etas(mu, lam)
                    ref = O.oriented_etas(mu.symbols, lam.symbols)
                    assert [e.symbols for e in etas] == sorted(ref, key=O.downs)
                    x, y = mu.to_state(), lam.to_state()
                    lengths = [] if O.too_far(x, y) else cb.interval_lengths(x, y)
                    prod = 0 if O.too_far(x, y) else 1
                    for l in lengths:
                        prod *= l
                    assert len(etas) == prod
                    rank = cb.graded_rank_Z(mu, lam)
                    assert sympy.expand(O.laurent_to_sympy(rank) - O.graded_rank(mu.symbols, lam.symbols)) == 0
                    assert rank.at_one() == prod * sympy.factorial(k)


def test_minimal_eta_degree_is_distance():
    for n in range(7):
        for k in range(n + 1):
            for mu in cb.all_seqs(n, k):
                for lam in cb.all_seqs(n, k):
                    etas = cb.oriented_etas(mu, lam)
                    if etas:
                        low = min(cb.fork_degree(ForkDiagram(mu, e, lam)) for e in etas)
                        assert low == cb.seq_distance(mu, lam)


def test_twelve_strand_example():
    lam = S("dududuuduuuu")
    mu = S("duududuuuduu")
    x, y = mu.to_state(), lam.to_state()
    assert cb.generating_intervals(x, y) == [(1, 2), (4, 4), (6, 7), (10, 12)]
    assert len(cb.oriented_etas(mu, lam)) == 12
    rank = cb.graded_rank_Z(mu, lam)
    assert rank.at_one() == 483840
    expected = LaurentQ.q(4) * qfactorial_nonsym(8)
    for l in (2, 1, 2, 3):
        expected = expected * qint_nonsym(l)
    assert rank == expected


@given(st.integers(0, 6).flatmap(lambda k: st.permutations(list(range(1, k + 1)))))
def test_staircase_exponents(sigma):
    sigma = tuple(sigma)
    c = cb.staircase_exponents(sigma)
    assert sum(c) == cb.perm_length(sigma) == O.inversions(sigma)
    assert all(0 <= ci <= len(sigma) - 1 - i for i, ci in enumerate(c))


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        S("uxd")
    with pytest.raises(ValueError):
        I(3, 2, 1)
