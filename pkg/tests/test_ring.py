import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab import constructors as C
from ringlab.errors import NotIdempotentError, ResourceCapExceeded
from ringlab.ring import (
    FiniteRing,
    Subset,
    all_ideals,
    corner,
    ideal_generated,
    is_ideal,
    quotient,
    semisimple_decomposition,
    unit_subring,
    unital_subrings,
    verify_axioms,
)


def ids(S):
    return {int(i) for i in S.ids}


def test_zmod6_axioms(ring):
    rep = verify_axioms(ring("Zmod(6)"))
    assert rep.ok and rep.method == "exhaustive"


def test_injected_fault_is_reported():
    R = C.zmod(6)
    M = R.mul_table.copy()
    M[2, 3] = 1
    bad = FiniteRing(6, R.add_table, M, one=1)
    rep = verify_axioms(bad)
    assert not rep.ok
    axioms = {a for a, _ in rep.violations}
    assert "mul-associative" in axioms


def test_fault_detected_above_triple_scan():
    R = C.poly_quot(C.zmod(8), None, 3)
    M = R.mul_table.copy()
    M[5, 7] = R.add(M[5, 7], R.one)
    bad = FiniteRing(R.size, R.add_table, M, one=R.one)
    rep = verify_axioms(bad)
    assert rep.method == "generator-reduced"
    assert not rep.ok


def test_ks_z4_axioms(ring):
    rep = verify_axioms(ring("Ks(Zmod(4), #2)"))
    assert rep.ok and rep.size == 256


def test_is_ideal_examples(ring):
    Z4 = ring("Zmod(4)")
    assert is_ideal(Z4, Subset.from_ids(Z4, [0, 2]))
    assert not is_ideal(Z4, Subset.from_ids(Z4, [0, 1]))
    M2 = ring("Mat(2, Zmod(2))")
    assert is_ideal(M2, Subset.from_ids(M2, [0]))


def test_ideal_generated(ring):
    Z4 = ring("Zmod(4)")
    assert ids(ideal_generated(Z4, [2])) == {0, 2}
    assert len(ideal_generated(Z4, [1])) == 4
    M2 = ring("Mat(2, Zmod(2))")
    e11 = M2.meta["coords"].encode_one([1, 0, 0, 0])
    assert len(ideal_generated(M2, [e11])) == 16


def test_all_ideals(ring):
    assert [ids(I) for I in all_ideals(ring("Zmod(6)"))] == [{0}, {0, 3}, {0, 2, 4}, set(range(6))]
    assert len(all_ideals(ring("GF(4)"))) == 2
    assert len(all_ideals(ring("Zmod(4)"))) == 3


def test_all_ideals_cap(ring):
    with pytest.raises(ResourceCapExceeded):
        all_ideals(ring("Ks(Zmod(8), #4)"))


def test_quotients(ring):
    Z4 = ring("Zmod(4)")
    Q, proj = quotient(Z4, Subset.from_ids(Z4, [0, 2]))
    assert Q.size == 2 and Q.characteristic() == 2
    Z6 = ring("Zmod(6)")
    Q, _ = quotient(Z6, Subset.from_ids(Z6, [0, 3]))
    assert Q.size == 3 and Q.times(3, Q.one) == 0
    UT = ring("UT(2, Zmod(2))")
    # positions (0,0), (0,1), (1,1): the strict upper part is the middle coordinate
    strict = [UT.meta["coords"].encode_one([0, a, 0]) for a in (0, 1)]
    Q, _ = quotient(UT, Subset.from_ids(UT, strict))
    assert Q.size == 4
    assert [R.size for R in semisimple_decomposition(Q)] == [2, 2]


def test_corner(ring):
    Z6 = ring("Zmod(6)")
    same = corner(Z6, Z6.one)
    assert (same.mul_table == Z6.mul_table).all()
    M2 = ring("Mat(2, Zmod(2))")
    e11 = M2.meta["coords"].encode_one([1, 0, 0, 0])
    assert corner(M2, e11).size == 2
    P = ring("Prod(Zmod(2), Zmod(3))")
    e = P.meta["coords"].encode_one([1, 0])
    assert corner(P, e).size == 2
    with pytest.raises(NotIdempotentError):
        corner(Z6, 2)


def test_unit_subring(ring):
    assert unit_subring(ring("Zmod(6)"))[0].size == 6
    assert unit_subring(ring("GF(4)"))[0].size == 4
    assert unit_subring(ring("Triv(Zmod(2))"))[0].size == 4


def test_semisimple_decomposition(ring):
    assert sorted(R.size for R in semisimple_decomposition(ring("Zmod(6)"))) == [2, 3]
    assert [R.size for R in semisimple_decomposition(ring("GF(4)"))] == [4]
    assert [R.size for R in semisimple_decomposition(ring("Mat(2, Zmod(2))"))] == [16]


def test_unital_subrings(ring):
    assert [S.size for S in unital_subrings(ring("Zmod(4)"))] == [4]
    assert [S.size for S in unital_subrings(ring("GF(4)"))] == [2, 4]
    assert [S.size for S in unital_subrings(ring("Prod(Zmod(2), Zmod(2))"))] == [2, 4]


SMALL = ["Zmod(6)", "Zmod(8)", "GF(4)", "Mat(2, Zmod(2))", "UT(2, Zmod(3))", "Triv(Zmod(4))",
         "GrpRing(Zmod(2), C(3))", "Prod(Zmod(2), GF(4))", "Ks(Zmod(2), 0)"]


@pytest.mark.parametrize("text", SMALL)
def test_ideal_lattice_properties(ring, text):
    R = ring(text)
    ideals = all_ideals(R)
    keys = {I.key() for I in ideals}
    assert Subset.zero(R).key() in keys and Subset.whole(R).key() in keys
    for I in ideals:
        Q, proj = quotient(R, I)
        assert Q.size * len(I) == R.size
        assert proj.is_homomorphism() and proj.surjective
        assert ids(proj.kernel()) == ids(I)
    for I in ideals:
        for K in ideals:
            assert (I & K).key() in keys
            assert ideal_generated(R, list(I.ids) + list(K.ids)).key() in keys


@pytest.mark.parametrize("text", SMALL)
def test_semisimple_sizes_multiply(ring, text):
    from ringlab.invariants import jacobson
    R = ring(text)
    Q, _ = quotient(R, jacobson(R))
    comps = semisimple_decomposition(Q)
    assert int(np.prod([c.size for c in comps])) == Q.size


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 40), st.data())
def test_zmod_quotients_match_divisors(n, data):
    R = C.zmod(n)
    d = data.draw(st.sampled_from([d for d in range(1, n + 1) if n % d == 0]))
    I = ideal_generated(R, [d % n])
    Q, _ = quotient(R, I)
    assert Q.size == (d if d < n else n)
    assert verify_axioms(Q).ok
