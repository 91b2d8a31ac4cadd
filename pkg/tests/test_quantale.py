import pytest
from hypothesis import given, settings, strategies as st

import oracles
from baerlat.corpus import fixture, gen_chain, gen_zn
from baerlat.errors import (BottomNotAbsorbing, IdentityFails, NotAssociative,
                            NotCommutative, NotJoinDistributive, StructureError)
from baerlat.lattice import FiniteLattice
from baerlat.quantale import (bip_sweep, compact_elements, is_reduced, nilpotents, power,
                              powers, validate_quantale)


def chain(n):
    return FiniteLattice([[i <= j for j in range(n)] for i in range(n)])


def test_c3_meet_is_valid():
    M = validate_quantale(chain(3), [[min(a, b) for b in range(3)] for a in range(3)])
    assert M.mul[1][1] == 1


def test_n4_fixture_valid_and_powers():
    M = fixture("N4")
    assert oracles.quantale_ok(M.leq, M.mul)
    a, b = M.lookup("a"), M.lookup("b")
    assert power(M, b, 2) == a
    assert powers(M, b) == (b, a, a, a)
    assert is_reduced(M)


def test_c3_with_m_squared_top_rejected():
    mul = [[0, 0, 0], [0, 2, 1], [0, 1, 2]]
    with pytest.raises((IdentityFails, NotJoinDistributive)):
        validate_quantale(chain(3), mul)


@pytest.mark.parametrize("mul, err", [
    ([[0, 0, 0], [0, 1, 0], [0, 1, 2]], IdentityFails),
    ([[0, 0, 0], [0, 1, 1], [1, 1, 2]], IdentityFails),
    ([[1, 0, 0], [0, 1, 1], [0, 1, 2]], BottomNotAbsorbing),
])
def test_unit_and_absorption(mul, err):
    with pytest.raises(err) as exc:
        validate_quantale(chain(3), mul)
    assert exc.value.witness is not None


def test_non_commutative_rejected():
    # B2 with a*b = a but b*a = 0
    L = fixture("B2").lattice
    mul = [[0, 0, 0, 0], [0, 1, 1, 1], [0, 0, 2, 2], [0, 1, 2, 3]]
    with pytest.raises(NotCommutative):
        validate_quantale(L, mul)


def test_non_associative_rejected():
    # scan the free cells of a 4-chain for a unital, absorbing, commutative
    # table that is not associative
    found = None
    L = chain(4)
    from itertools import product
    for aa, ab, bb in product(range(4), repeat=3):
        mul = [[0, 0, 0, 0], [0, aa, ab, 1], [0, ab, bb, 2], [0, 1, 2, 3]]
        try:
            validate_quantale(L, mul)
        except NotAssociative:
            found = mul
            break
        except StructureError:
            continue
    assert found is not None
    assert not oracles.quantale_ok(L.leq, found)


def test_entries_must_be_elements():
    with pytest.raises(StructureError):
        validate_quantale(chain(2), [[0, 0], [0, 5]])


def test_powers_of_bounds():
    for M in (fixture("N4"), fixture("Z30"), gen_chain(4)):
        for k in range(1, 6):
            assert power(M, M.top, k) == M.top
            assert power(M, M.bottom, k) == M.bottom


def test_reducedness():
    assert is_reduced(fixture("N4"))
    Z12 = gen_zn(12)
    assert not is_reduced(Z12)
    six = Z12.lookup("(6)")
    assert Z12.mul[six][six] == Z12.bottom
    assert six in nilpotents(Z12)
    for k in range(1, 8):
        assert is_reduced(gen_chain(k))


def test_compacts_are_everything():
    assert compact_elements(fixture("C3")) == frozenset({0, 1, 2})
    assert compact_elements(fixture("B2")) == frozenset(range(4))
    assert compact_elements(fixture("C1")) == frozenset({0})


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(["C3", "B2", "N4"]).flatmap(
    lambda name: st.tuples(st.just(name), st.lists(
        st.integers(0, fixture(name).n - 1), min_size=fixture(name).n ** 2,
        max_size=fixture(name).n ** 2))))
def test_validation_agrees_with_triple_oracle(arg):
    name, flat = arg
    L = fixture(name).lattice
    n = L.n
    mul = [flat[i * n:(i + 1) * n] for i in range(n)]
    try:
        M = validate_quantale(L, mul)
    except StructureError:
        assert not oracles.quantale_ok(L.leq, mul)
    else:
        assert oracles.quantale_ok(L.leq, mul)
        assert bip_sweep(M) is None
