import pytest
from hypothesis import given, strategies as st

from crossres import simpl_index as si
from oracles import brute_surjections, history_from_ops


@st.composite
def surjections(draw, max_m=6):
    m = draw(st.integers(0, max_m))
    n = draw(st.integers(0, m))
    return draw(st.sampled_from(si.enumerate_surjections(m, n)))


@pytest.mark.parametrize("m", range(6))
@pytest.mark.parametrize("n", range(6))
def test_enumeration_matches_exhaustive_search(m, n):
    assert si.enumerate_surjections(m, n) == brute_surjections(m, n)


def test_small_cases():
    assert si.enumerate_surjections(2, 1) == [(0, 0, 1), (0, 1, 1)]
    assert si.enumerate_surjections(1, 2) == []
    assert si.coface(2, 1) == (0, 2)
    assert si.codegeneracy(1, 0) == (0, 0, 1)


def test_range_errors():
    with pytest.raises(ValueError):
        si.coface(0, 0)
    with pytest.raises(ValueError):
        si.codegeneracy(1, 2)


def test_face_classification_examples():
    # s0 of a level-1 symbol: history (0,0,1)
    assert si.compose_delta((0, 0, 1), 0) == si.Surjective((0, 1))
    assert si.compose_delta((0, 0, 1), 2) == si.LastCoface((0, 0))
    assert si.compose_delta((0, 1, 1), 0) == si.OtherCoface(0, (0, 0))
    assert si.compose_delta((0, 1), 0) == si.OtherCoface(0, (0,))


@given(surjections())
def test_decomposition_recomposes(t):
    ops = si.decompose_to_degeneracies(t)
    assert list(ops) == sorted(ops, reverse=True)
    assert history_from_ops(ops, t[-1]) == t


@given(surjections())
def test_realize_applies_in_increasing_index_order(t):
    calls = si.realize(t, lambda i, acc: acc + (i,), ())
    assert calls == tuple(sorted(calls))
    assert calls == tuple(reversed(si.decompose_to_degeneracies(t)))


@given(surjections(), st.data())
def test_compose_delta_is_consistent(t, data):
    n, k = len(t) - 1, t[-1]
    if n == 0:
        return
    i = data.draw(st.integers(0, n))
    u = tuple(t[x] for x in si.coface(n, i))
    c = si.compose_delta(t, i)
    if isinstance(c, si.Surjective):
        assert c.u == u and si.is_surjection(u)
    else:
        j = k if isinstance(c, si.LastCoface) else c.j
        assert j < k or isinstance(c, si.LastCoface)
        assert si.is_surjection(c.t_prime) and c.t_prime[-1] == k - 1
        assert tuple(si.coface(k, j)[v] for v in c.t_prime) == u


@given(surjections(), st.data())
def test_compose_alpha_is_precomposition(t, data):
    n = len(t) - 1
    i = data.draw(st.integers(0, n))
    v = si.compose_alpha(t, i)
    assert si.is_surjection(v) and len(v) == len(t) + 1
    assert v == history_from_ops((i,) + si.decompose_to_degeneracies(t), t[-1])


@pytest.mark.parametrize("k", range(4))
@pytest.mark.parametrize("gap", range(5))
def test_decomposition_round_trips_exhaustively(k, gap):
    for t in si.enumerate_surjections(k + gap, k):
        rebuilt = si.realize(t, lambda i, h: si.compose_alpha(h, i), si.identity(k))
        assert rebuilt == t
