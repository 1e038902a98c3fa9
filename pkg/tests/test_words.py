import pytest
from hypothesis import given, strategies as st

from crossres.words import (GeneratorSymbol, StructureError, Word, apply_hom, commutator,
                            conjugate, invert, multiply, product, reduce)
from oracles import naive_reduce

A, B, C = (GeneratorSymbol.basis(x, 0) for x in "abc")
letters = st.lists(st.tuples(st.sampled_from([A, B, C]), st.sampled_from([1, -1])), max_size=40)
words = letters.map(lambda ls: reduce(ls, 0))


def w(*pairs):
    """Level-0 word from ``(name, exponent)`` pairs."""
    return reduce([(GeneratorSymbol.basis(x, 0), 1 if e > 0 else -1)
                   for x, e in pairs for _ in range(abs(e))], 0)


def test_reduce_cancels_seams():
    assert reduce([(A, 1), (B, 1), (B, -1), (A, -1)], 0) == Word.identity(0)
    assert reduce([(A, 1), (B, 1), (A, -1)], 0).letters == ((A, 1), (B, 1), (A, -1))


def test_identity_is_falsy_and_levelled():
    assert not Word.identity(2)
    assert Word.identity(2).level == 2
    assert Word.from_symbol(A)


def test_mixed_levels_rejected():
    r = GeneratorSymbol.basis("r", 1)
    with pytest.raises(StructureError):
        reduce([(A, 1), (r, 1)])
    with pytest.raises(StructureError):
        multiply(Word.from_symbol(A), Word.from_symbol(r))


def test_bad_history_rejected():
    with pytest.raises(StructureError):
        GeneratorSymbol("a", 0, (0, 2))
    with pytest.raises(StructureError):
        GeneratorSymbol("r", 1, (0, 0))


def test_commutator_and_conjugate_conventions():
    a, b = Word.from_symbol(A), Word.from_symbol(B)
    assert commutator(a, b) == w(("a", 1), ("b", 1), ("a", -1), ("b", -1))
    assert conjugate(a, b) == w(("a", 1), ("b", 1), ("a", -1))


def test_power_and_product():
    a = Word.from_symbol(A)
    assert a ** 3 == product([a, a, a], 0)
    assert a ** -2 == invert(a ** 2)
    assert a ** 0 == Word.identity(0)


def test_apply_hom_on_mapping():
    image = {A: w(("b", 1), ("b", 1)), B: w(("a", -1))}
    assert apply_hom(image, w(("a", 1), ("b", -1)), 0) == w(("b", 2), ("a", 1))


@given(letters)
def test_reduce_matches_pairwise_cancellation(ls):
    assert list(reduce(ls, 0).letters) == naive_reduce(ls)


@given(words, words, words)
def test_associativity(u, v, x):
    assert multiply(multiply(u, v), x) == multiply(u, multiply(v, x))


@given(words)
def test_inverse_laws(u):
    e = Word.identity(0)
    assert multiply(u, invert(u)) == e == multiply(invert(u), u)
    assert multiply(u, e) == u == multiply(e, u)
    assert invert(invert(u)) == u


@given(words)
def test_reduced_words_have_no_cancelling_pair(u):
    assert all(not (a == b and e == -f) for (a, e), (b, f) in zip(u.letters, u.letters[1:]))


@given(words, words)
def test_apply_hom_is_a_homomorphism(u, v):
    image = {A: w(("b", 1), ("c", -1)), B: w(("a", 2)), C: Word.identity(0)}
    f = lambda x: apply_hom(image, x, 0)  # noqa: E731
    assert f(multiply(u, v)) == multiply(f(u), f(v))
