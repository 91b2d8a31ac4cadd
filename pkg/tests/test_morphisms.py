from itertools import product

import pytest

from conftest import reduced_corpus
from baerlat.corpus import fixture, gen_boolean, gen_chain
from baerlat.errors import PreconditionViolated
from baerlat.morphisms import (Homomorphism, contraction_check, enumerate_homomorphisms,
                               is_homomorphism, is_injective, is_strong, preserves_bounds,
                               strong_homomorphisms, strong_witness)


def test_two_into_three():
    two, three = fixture("C2"), fixture("C3")
    maps = list(enumerate_homomorphisms(two, three, injective=True))
    strong = [h for h in maps if is_strong(h)]
    assert len(strong) == 1
    h = strong[0]
    # 0 -> 0 and 1 -> 1 in the 3-chain
    assert h.table == (0, 2)
    assert contraction_check(h) == (True, None)


def test_identity_is_strong():
    for name in ("C1", "C3", "B2", "N4", "Z30"):
        M = fixture(name)
        h = Homomorphism(M, M, tuple(M.elements))
        assert is_strong(h) and preserves_bounds(h)
        assert contraction_check(h) == (True, None)


def test_collapse_three_onto_two():
    three, two = fixture("C3"), fixture("C2")
    h = Homomorphism(three, two, (0, 1, 1))
    assert is_homomorphism(h)
    assert not is_injective(h)
    assert not is_strong(h)
    assert strong_witness(h) == ("not-injective",)
    with pytest.raises(PreconditionViolated):
        contraction_check(h)


def test_bad_table_rejected():
    with pytest.raises(ValueError):
        Homomorphism(fixture("C2"), fixture("C3"), (0, 5))


def brute_force_homomorphisms(S, T):
    out = []
    for table in product(T.elements, repeat=S.n):
        h = Homomorphism(S, T, table)
        if is_homomorphism(h):
            out.append(table)
    return out


@pytest.mark.parametrize("s, t", [("C2", "C3"), ("C3", "B2"), ("B2", "N4"), ("N4", "B2"),
                                  ("C3", "C3"), ("B2", "B2")])
def test_enumeration_matches_brute_force(s, t):
    S, T = fixture(s), fixture(t)
    got = sorted(h.table for h in enumerate_homomorphisms(S, T))
    assert got == sorted(brute_force_homomorphisms(S, T))
    inj = sorted(h.table for h in enumerate_homomorphisms(S, T, injective=True))
    assert inj == sorted(tb for tb in got if len(set(tb)) == len(tb))


def test_boolean_automorphisms_are_strong():
    B = gen_boolean(2)
    strong = list(strong_homomorphisms(B, B))
    assert sorted(h.table for h in strong) == [(0, 1, 2, 3), (0, 2, 1, 3)]


def test_contraction_over_small_reduced_corpus():
    small = [M for _, M in reduced_corpus() if M.n <= 4]
    count = 0
    for S in small:
        for T in small:
            for h in strong_homomorphisms(S, T):
                count += 1
                assert contraction_check(h) == (True, None)
    assert count > 0


def test_chain_embeddings():
    # 3-chain into 4-chain: phi(0') = phi(0)' forces both bounds to be kept
    S, T = gen_chain(2), gen_chain(3)
    got = {h.table: strong_witness(h) for h in enumerate_homomorphisms(S, T, injective=True)}
    assert got == {(0, 1, 2): ("annihilator", 0), (0, 1, 3): None,
                   (0, 2, 3): None, (1, 2, 3): ("annihilator", 0)}
