import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from conftest import ops_of, skeleton
from crossres import BUNDLED, ValidationError, load_bundled
from crossres.document import parse
from crossres.skeleton import MAX_LEVEL, Skeleton, gen, ident, rel
from crossres.words import GeneratorSymbol, StructureError, Word, invert, multiply, reduce
from oracles import history_from_ops, rewrite_face


def _make_symbol(bid, k, ops):
    return GeneratorSymbol(bid, k, history_from_ops(ops, k))


def _theta_oracle(sk):
    """Last faces of basis symbols as ``(id, birth, ops, e)`` letter lists."""
    out = {}
    for name, w in sk.data.presentation.relators:
        out[(name, 1)] = [(s.basis_id, s.birth_level, ops_of(s), e) for s, e in w]
    for name, w in sk.data.identities:
        out[(name, 2)] = [(s.basis_id, s.birth_level, ops_of(s), e) for s, e in w]
    return out


def test_table_sizes_follow_binomial_count(doc):
    sk = skeleton(doc)
    births = sk.births()
    for n in range(MAX_LEVEL + 1):
        assert len(sk.table(n)) == sum(comb(n, k) for _, k in births if k <= n)


def test_known_table_sizes():
    assert [len(t) for t in skeleton("z2").tables] == [1, 2, 4, 7]
    assert [len(t) for t in skeleton("s3").tables] == [2, 5, 9, 14]


def test_relator_and_identity_faces(doc):
    sk = skeleton(doc)
    for name, w in sk.data.presentation.relators:
        y = Word.from_symbol(rel(name))
        assert sk.d(1, y) == w
        assert not sk.d(0, y)
    for name, w in sk.data.identities:
        y = Word.from_symbol(ident(name))
        assert sk.d(2, y) == w
        assert not sk.d(0, y) and not sk.d(1, y)


def test_generator_faces_are_constant(doc):
    sk = skeleton(doc)
    for x in sk.data.presentation.generators:
        w = Word.from_symbol(gen(x))
        for n in range(MAX_LEVEL):
            up = sk.s(n, w)
            assert all(sk.d(i, up) == w for i in range(n + 2))
            w = up


def test_faces_match_rewriting_oracle(doc):
    """Every face of every table symbol agrees with d-s rewriting on its canonical word."""
    sk = skeleton(doc)
    theta = _theta_oracle(sk)
    for n in range(1, MAX_LEVEL + 1):
        for sym in sk.table(n):
            for i in range(n + 1):
                expected = reduce(rewrite_face((sym.basis_id, sym.birth_level, ops_of(sym)), i,
                                               theta, _make_symbol), n - 1)
                assert sk.face_symbol(sym, i) == expected, (sym, i)


def test_worked_degenerate_faces():
    sk = skeleton("z2")
    r = Word.from_symbol(rel("r"))
    s0r, s1r = sk.s(0, r), sk.s(1, r)
    assert sk.d(0, s0r) == r == sk.d(1, s0r)
    assert sk.d(2, s0r) == sk.s(0, sk.d(1, r))
    assert sk.d(1, s1r) == r == sk.d(2, s1r)
    assert not sk.d(0, s1r)


def test_s_chain_applies_rightmost_first():
    sk = skeleton("z2")
    a = Word.from_symbol(gen("a"))
    assert sk.s_chain((1, 0), a) == sk.s(1, sk.s(0, a))


def test_level_bounds():
    sk = skeleton("z2", 1)
    r = Word.from_symbol(rel("r"))
    with pytest.raises(StructureError):
        sk.s(0, r)
    with pytest.raises(StructureError):
        sk.face(1, 2, r)
    with pytest.raises(StructureError):
        sk.d(0, Word.from_symbol(gen("a")))
    with pytest.raises(ValidationError):
        Skeleton(sk.data, MAX_LEVEL + 1)


def test_invalid_identity_rejected_with_faces():
    text = "[generators]\na\n[relators]\nr: a^2\n[identities]\ni1: r (a>r)\n"
    with pytest.raises(ValidationError, match="d1 = a\\^4"):
        Skeleton(parse(text))
    with pytest.raises(ValidationError):
        Skeleton(parse(text), 0)


def test_verify_identity():
    sk = skeleton("s3")
    good = sk.data.identities[0][1]
    assert sk.verify_identity(good)
    assert not sk.verify_identity(Word.from_symbol(rel("r")))


def test_cw_basis_check_passes(doc):
    assert skeleton(doc).cw_basis_check().passed


def test_cw_basis_check_detects_missing_degeneracy():
    sk = skeleton("z2")
    tables = [list(t) for t in sk.tables]
    dropped = sk.s(0, Word.from_symbol(rel("r"))).letters[0][0]
    tables[2].remove(dropped)
    report = sk.cw_basis_check(tables)
    assert not report.passed


def test_simplicial_identity_suite_passes(doc):
    report = skeleton(doc).simplicial_identity_suite(trials=40, seed=3)
    assert report.passed
    assert len(report.checks) == 7


def test_moore_membership_of_basis(doc):
    sk = skeleton(doc)
    for k in (1, 2):
        for sym in sk.basis_symbols(k):
            assert sk.moore_member(k, Word.from_symbol(sym))
    for x in sk.data.presentation.generators:
        assert not sk.moore_member(1, sk.s(0, Word.from_symbol(gen(x))))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_moore_project_lands_in_moore_complex(doc, n):
    sk = skeleton(doc)
    rng = random.Random(n)
    for _ in range(30):
        w = sk.random_word(n, rng)
        p = sk.moore_project(w)
        assert sk.moore_member(n, p)


def test_random_moore_words_are_nontrivial(doc):
    sk = skeleton(doc)
    rng = random.Random(5)
    for n in (1, 2, 3):
        ws = [sk.random_moore_word(n, rng) for _ in range(20)]
        assert all(sk.moore_member(n, w) for w in ws)
        assert sum(1 for w in ws if w) >= 15


def test_sampling_is_seeded(doc):
    sk = skeleton(doc)
    a = [sk.random_word(2, random.Random(9)) for _ in range(3)]
    b = [sk.random_word(2, random.Random(9)) for _ in range(3)]
    assert a == b


def _level_words(n):
    sk = skeleton("s3")
    return st.lists(st.tuples(st.sampled_from(sk.table(n)), st.sampled_from([1, -1])),
                    max_size=20).map(lambda ls: reduce(ls, n))


@settings(max_examples=60, deadline=None)
@given(_level_words(2), _level_words(2))
def test_faces_and_degeneracies_are_homomorphisms(u, v):
    sk = skeleton("s3")
    for i in range(3):
        assert sk.d(i, multiply(u, v)) == multiply(sk.d(i, u), sk.d(i, v))
        assert sk.s(i, invert(u)) == invert(sk.s(i, u))


@settings(max_examples=60, deadline=None)
@given(_level_words(2))
def test_simplicial_identities_property(w):
    sk = skeleton("s3")
    n = 2
    for j in range(n + 1):
        for i in range(j):
            assert sk.d(i, sk.d(j, w)) == sk.d(j - 1, sk.d(i, w))
    for j in range(n + 1):
        up = sk.s(j, w)
        assert sk.d(j, up) == w == sk.d(j + 1, up)
        for i in range(n + 2):
            if i < j:
                assert sk.d(i, up) == sk.s(j - 1, sk.d(i, w))
            elif i > j + 1:
                assert sk.d(i, up) == sk.s(j, sk.d(i - 1, w))


def test_bundled_documents_load():
    for name in BUNDLED:
        data = load_bundled(name)
        assert data.presentation.generators
