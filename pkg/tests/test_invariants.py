import pytest

from ringlab.errors import EngineBugError
from ringlab.invariants import (
    center,
    delta,
    delta_definitional,
    delta_u_exponent,
    delta_via_unit_subring,
    idempotents,
    invariant_bundle,
    jacobson,
    nilpotents,
    prime_radical,
    prime_radical_oracle,
    unit_orders,
    units,
)
from ringlab.ring import FiniteRing

# the six invertible matrices listed for M_2(Z_2), as labels
GL2_F2 = {
    "[[1, 0], [0, 1]]", "[[0, 1], [1, 0]]", "[[0, 1], [1, 1]]",
    "[[1, 0], [1, 1]]", "[[1, 1], [0, 1]]", "[[1, 1], [1, 0]]",
}


def ids(S):
    return {int(i) for i in S.ids}


def test_units(ring):
    assert ids(units(ring("Zmod(6)"))) == {1, 5}
    assert set(units(ring("Mat(2, Zmod(2))")).labels()) == GL2_F2
    F9 = ring("GF(9)")
    assert len(units(F9)) == 8 and 0 not in units(F9)


def test_jacobson(ring):
    assert ids(jacobson(ring("Zmod(4)"))) == {0, 2}
    assert ids(jacobson(ring("GF(8)"))) == {0}
    UT = ring("UT(2, Zmod(2))")
    assert len(jacobson(UT)) == 2
    strict = UT.meta["coords"].encode_one([0, 1, 0])
    assert ids(jacobson(UT)) == {0, strict}


def test_delta(ring):
    Z6 = ring("Zmod(6)")
    assert ids(delta(Z6)) == {0} and 2 not in delta(Z6)
    assert ids(delta(ring("Zmod(4)"))) == {0, 2}
    assert ids(delta(ring("Mat(2, Zmod(2))"))) == {0}


@pytest.mark.parametrize("text", ["Zmod(12)", "Triv(Zmod(4))", "UT(2, GF(4))", "GrpRing(Zmod(4), C(2))",
                                  "Ks(Zmod(4), #2)", "Mat(2, Zmod(2))", "SkewUT(2, GF(4), frob)"])
def test_delta_cross_checks(ring, text):
    R = ring(text)
    D = delta_definitional(R, "left")
    assert D == delta_definitional(R, "right") == delta_via_unit_subring(R)
    assert jacobson(R) <= D


def test_other_subsets(ring):
    assert ids(nilpotents(ring("Zmod(4)"))) == {0, 2}
    assert ids(idempotents(ring("Zmod(6)"))) == {0, 1, 3, 4}
    M2 = ring("Mat(2, Zmod(2))")
    assert ids(center(M2)) == {0, M2.one}


def test_prime_radical(ring):
    assert ids(prime_radical(ring("Zmod(4)"))) == {0, 2}
    assert ids(prime_radical(ring("GF(4)"))) == {0}
    RG = ring("GrpRing(Zmod(2), C(2))")
    assert prime_radical_oracle(RG).labels() == ["0", "e + g"]


def test_delta_u_exponent(ring):
    assert delta_u_exponent(ring("Zmod(6)"))[0] == 2
    assert delta_u_exponent(ring("Mat(2, Zmod(2))"))[0] == 6
    assert delta_u_exponent(ring("Zmod(4)"))[0] == 1
    n_min, valid = delta_u_exponent(ring("GF(16)"))
    assert n_min == 15 and valid == [15]


def test_unit_orders(ring):
    assert sorted(unit_orders(ring("Mat(2, Zmod(2))")).values()) == [1, 2, 2, 2, 3, 3]
    Z6 = ring("Zmod(6)")
    assert unit_orders(Z6) == {1: 1, 5: 2}


def test_bundle(ring):
    b = invariant_bundle(ring("Triv(Zmod(8))"))
    assert not b.violations()
    assert b.delta_u_exponent == 1


def test_broken_table_is_an_engine_bug():
    # with 3 * 3 = 3 the row of 3 still has trivial kernel but no longer
    # contains 1, so the kernel test and the inverse search disagree
    from ringlab import constructors as C
    Z = C.zmod(4)
    M = Z.mul_table.copy()
    M[3, 3] = 3
    bad = FiniteRing(4, Z.add_table, M, one=1)
    with pytest.raises(EngineBugError) as err:
        delta(bad)
    assert err.value.exit_status == 1
