from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from conftest import table
from crossres import CosetOverflow, load_bundled
from crossres.coset_oracle import GroupRingElement, enumerate_cosets, ring_act, ring_add, sum_elements
from crossres.document import parse
from crossres.words import GeneratorSymbol, Word, reduce
from oracles import PERMUTATION_MODELS, evaluate, multiplication_table

EXPECTED_ORDER = {"z1": 1, "z2": 2, "z3": 3, "s3": 6}


def cayley_isomorphism(tab, model):
    """Map cosets to model elements by simultaneous breadth-first search.

    Returns the bijection, or ``None`` when the two generator actions disagree.
    """
    e = tuple(range(len(next(iter(model.values())))))
    phi = {1: e}
    queue = deque([1])
    while queue:
        c = queue.popleft()
        for x in tab.generator_order:
            for sign in (1, -1):
                d = tab.image(c, x, sign)
                target = evaluate(model, [(x, sign)])
                img = _right(phi[c], target)
                if d in phi:
                    if phi[d] != img:
                        return None
                else:
                    phi[d] = img
                    queue.append(d)
    if len(set(phi.values())) != len(phi):
        return None
    return phi


def _right(g, p):
    return tuple(p[g[x]] for x in range(len(g)))


def test_models_satisfy_the_relators(doc):
    model = PERMUTATION_MODELS[doc]
    ident = tuple(range(len(next(iter(model.values())))))
    for _, w in load_bundled(doc).presentation.relators:
        assert evaluate(model, [(s.basis_id, e) for s, e in w]) == ident


def test_coset_counts_match_brute_force(doc):
    elements, _ = multiplication_table(PERMUTATION_MODELS[doc])
    tab = table(doc)
    assert tab.order == len(elements) == EXPECTED_ORDER[doc]
    phi = cayley_isomorphism(tab, PERMUTATION_MODELS[doc])
    assert phi is not None and len(phi) == tab.order


def test_multiplication_matches_model(doc):
    model = PERMUTATION_MODELS[doc]
    tab = table(doc)
    phi = cayley_isomorphism(tab, model)
    for g in range(1, tab.order + 1):
        for h in range(1, tab.order + 1):
            assert phi[tab.multiply(g, h)] == _right(phi[g], phi[h])
        assert tab.multiply(g, tab.inverse(g)) == 1


def test_table_is_canonical_and_one_based():
    tab = table("s3")
    assert tab.class_of(Word.identity(0)) == 1
    assert tab.dump().splitlines()[0] == "coset\ta\ta^-1\tb\tb^-1"
    assert tab.dump() == enumerate_cosets(load_bundled("s3").presentation).dump()


def test_representatives_trace_back(doc):
    tab = table(doc)
    for c in range(1, tab.order + 1):
        w = reduce([(GeneratorSymbol.basis(x, 0), 1 if e > 0 else -1)
                    for x, e in tab.representative(c) for _ in range(abs(e))], 0)
        assert tab.class_of(w) == c


def test_overflow_is_reported():
    infinite = parse("[generators]\na b\n[relators]\nr: a b a^-1 b^-1\n")
    with pytest.raises(CosetOverflow):
        enumerate_cosets(infinite.presentation, max_cosets=50)


def test_group_ring_arithmetic():
    x = GroupRingElement.from_dict({1: 2, 2: -1})
    y = GroupRingElement.from_dict({2: 1})
    assert ring_add(x, y) == GroupRingElement.from_dict({1: 2})
    assert (x - x).is_zero()
    assert (-y).as_dict() == {2: -1}
    assert GroupRingElement.from_dict({1: -1, 2: 1}).render() == "-[1] + [2]"
    with pytest.raises(ValueError):
        ring_add(GroupRingElement.unit(1, "r"), GroupRingElement.unit(1, "s"))


coeffs = st.dictionaries(st.integers(1, 6), st.integers(-3, 3), max_size=6)


@settings(max_examples=60)
@given(coeffs, coeffs, st.integers(1, 6))
def test_action_is_additive_and_free(c1, c2, g):
    tab = table("s3")
    x, y = GroupRingElement.from_dict(c1), GroupRingElement.from_dict(c2)
    assert ring_act(tab, g, ring_add(x, y)) == ring_add(ring_act(tab, g, x), ring_act(tab, g, y))
    assert ring_act(tab, tab.inverse(g), ring_act(tab, g, x)) == x
    assert sum_elements([x, y]) == ring_add(x, y)


@settings(max_examples=60)
@given(coeffs, st.integers(1, 6), st.integers(1, 6))
def test_action_composes(c, g, h):
    tab = table("s3")
    x = GroupRingElement.from_dict(c)
    assert ring_act(tab, g, ring_act(tab, h, x)) == ring_act(tab, tab.multiply(g, h), x)
