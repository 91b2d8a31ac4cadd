import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import reduced_corpus, small_corpus
from baerlat import baer as bz
from baerlat import elements as el
from baerlat.corpus import fixture, gen_boolean, gen_chain, gen_zn
from baerlat.errors import FrameLawViolation
from baerlat.quantale import is_reduced


def names(M, items):
    return {M.label(x) for x in items}


def test_baer_sets(C3, B2, N4, Z30):
    assert not bz.is_baer(C3, C3.lookup("m"))
    assert names(C3, bz.baer_elements(C3)) == {"0", "1"}
    assert bz.is_baer(B2, B2.lookup("a"))
    assert bz.baer_elements(B2) == frozenset(range(4))
    assert names(N4, bz.baer_elements(N4)) == {"0", "1"}
    assert bz.baer_elements(Z30) == frozenset(range(8))
    assert bz.baer_elements(fixture("C1")) == frozenset({0})


def test_bounds_are_baer():
    for _, M in reduced_corpus():
        assert bz.is_baer(M, M.bottom) and bz.is_baer(M, M.top)


def test_baer_matches_definition_oracle():
    for _, M in small_corpus():
        got = bz.baer_elements(M)
        assert got == frozenset(b for b in M.elements if oracles.is_baer(M.leq, M.mul, b))


def test_characterisations_agree():
    for _, M in reduced_corpus():
        cz = bz.baer_closure(M)
        for b in M.elements:
            v = bz.is_baer(M, b)
            assert v == bz.is_baer_char2(M, b) == bz.is_baer_char3(M, b) == bz.is_baer_char4(M, b)
            assert v == (cz(b) == b)


def test_b_multiplicative(N4):
    assert bz.is_B_multiplicative(N4)
    for M in (gen_chain(5), gen_boolean(3), gen_zn(210)):
        assert bz.is_B_multiplicative(M)


def test_b_multiplicative_iff_product_closed():
    for _, M in reduced_corpus():
        assert bz.is_B_multiplicative(M) == (bz.baer_product_closed(M) is None)


def test_baer_closure_tables(C3, N4):
    assert bz.baer_closure(C3).table == (0, 2, 2)
    assert names(N4, [bz.baer_closure(N4)(x) for x in N4.elements]) == {"0", "1"}
    assert [N4.label(v) for v in bz.baer_closure(N4).table] == ["0", "1", "1", "1"]
    assert bz.d_closure(C3).table == (0, 2, 2)


def test_closure_is_least_baer_above():
    for _, M in reduced_corpus():
        cz, B = bz.baer_closure(M), bz.baer_elements(M)
        assert cz.is_closure_operator()
        assert cz.image() == B == cz.fixed_points()
        for a in M.elements:
            above = [b for b in B if M.le(a, b)]
            assert cz(a) in above and all(M.le(cz(a), b) for b in above)


def test_d_closure_properties():
    for _, M in reduced_corpus():
        d, cz, B = bz.d_closure(M), bz.baer_closure(M), bz.baer_elements(M)
        for x in M.elements:
            assert (d(x) == x) == (x in B)
            assert M.le(x, d(x)) and M.le(d(x), cz(x))


def test_closure_map_validation(C3):
    with pytest.raises(ValueError):
        bz.closure_map(C3, [0, 1])
    phi = bz.closure_map(C3, [0, 0, 2])
    assert phi.inflationary_witness() == (1,)


def test_nucleus_of_cz_on_c3(C3):
    r = bz.classify_nucleus(C3, bz.baer_closure(C3))
    assert r.is_nucleus and r.is_quantic_nucleus and r.is_localic
    # cz(m) = 1 with m != 1 breaks the "phi(a) = 1 iff a = 1" clause
    assert not r.is_multiplicative_nucleus
    assert r.witnesses["multiplicative"] == (C3.lookup("m"),)


def test_nucleus_of_cz_on_n4(N4):
    r = bz.classify_nucleus(N4, bz.baer_closure(N4))
    assert r.is_quantic_nucleus and r.is_nucleus


@pytest.mark.parametrize("name", ["C3", "B2", "N4", "Z30"])
def test_identity_map_classification(name):
    M = fixture(name)
    r = bz.classify_nucleus(M, bz.closure_map(M, M.elements))
    mul_is_meet = all(M.mul[a][b] == M.meet(a, b) for a in M.elements for b in M.elements)
    assert r.is_nucleus and r.is_quantic_nucleus
    assert r.is_multiplicative_nucleus == mul_is_meet
    assert r.is_localic == mul_is_meet


def test_constant_top_is_not_a_multiplicative_nucleus(B2):
    r = bz.classify_nucleus(B2, bz.closure_map(B2, [B2.top] * B2.n))
    assert r.is_nucleus and not r.is_multiplicative_nucleus


def test_quantic_identities():
    for M in (fixture("C3"), fixture("N4"), gen_boolean(3), gen_chain(6)):
        assert bz.quantic_identities_check(M)


def test_frames(C3, B2, Z30):
    F = bz.baer_frame(C3)
    assert F.carrier == (0, 2) and F.frame.n == 2
    F = bz.baer_frame(B2)
    assert F.frame == B2
    F = bz.baer_frame(Z30)
    assert F.frame.n == 8
    assert F.frame.lattice.is_distributive() is None
    assert all(F.frame.mul[a][b] == F.frame.meet(a, b)
               for a in F.frame.elements for b in F.frame.elements)
    # the frame of Z30 is Boolean: every element has a complement
    L = F.frame
    assert all(any(L.meet(a, b) == L.bottom and L.join(a, b) == L.top for b in L.elements)
               for a in L.elements)


def test_frame_operations(B2):
    F = bz.baer_frame(B2)
    a, b = B2.lookup("a"), B2.lookup("b")
    assert F.join(a, b) == B2.top and F.meet(a, b) == B2.bottom
    assert F.odot(a, a) == a and F.index(B2.top) == 3


def test_frame_laws_on_reduced_corpus():
    for _, M in reduced_corpus():
        assert bz.frame_violation(M) is None
        bz.baer_frame(M)


def test_frame_rejected_outside_assumptions():
    # Z_4 is the chain (1) > (2) > (0) with (2)^2 = 0. Every element is Baer,
    # but the product of (2) with itself closes to 0, not to (2).
    M = gen_zn(4)
    assert not is_reduced(M)
    two = M.lookup("(2)")
    assert bz.frame_violation(M) == ("odot=meet", (two, two))
    with pytest.raises(FrameLawViolation) as exc:
        bz.baer_frame(M)
    assert exc.value.witness == (two, two)


def test_join_closure_examples():
    assert bz.baer_join_closed(gen_boolean(3)) is None
    assert bz.baer_join_closed(fixture("N4")) is None


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([M for _, M in reduced_corpus()]), st.data())
def test_closure_laws_random(M, data):
    a = data.draw(st.integers(0, M.n - 1))
    b = data.draw(st.integers(0, M.n - 1))
    cz = bz.baer_closure(M)
    assert cz(M.mul[a][b]) == cz(M.meet(a, b)) == M.meet(cz(a), cz(b))
    assert M.le(el.radical(M, a), cz(a))
    assert cz(a) == cz(el.radical(M, a))
    assert cz(M.join(a, b)) == cz(M.join(cz(a), cz(b)))
