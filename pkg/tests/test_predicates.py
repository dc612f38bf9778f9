import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab import constructors as C
from ringlab.errors import NotAnIdealError
from ringlab.invariants import jacobson
from ringlab.predicates import (
    PREDICATES,
    is_abelian,
    is_clean,
    is_dedekind_finite,
    is_delta_u,
    is_exchange,
    is_n_delta_u,
    is_n_uj,
    is_n_uu,
    is_pi_regular,
    is_reduced,
    is_regular,
    is_semiregular,
    is_strongly_pi_regular,
    is_strongly_regular,
    is_unit_regular,
    lookup,
    right_ideals_have_idempotents,
    satisfies_power_identity,
    units_lift,
)
from ringlab.ring import Subset


def test_n_delta_u(ring):
    assert is_n_delta_u(ring("Zmod(6)"), 2).value
    res = is_n_delta_u(ring("Mat(2, Zmod(2))"), 3)
    assert not res.value
    # the witness is a unit of order 2, i.e. a transvection or a swap
    M2 = ring("Mat(2, Zmod(2))")
    assert M2.power(res.witness[0], 2) == M2.one
    assert is_n_delta_u(ring("GF(4)"), 3).value


def test_delta_u(ring):
    assert is_delta_u(ring("Zmod(4)")).value
    assert not is_delta_u(ring("Zmod(6)")).value
    assert is_delta_u(ring("GF(2)")).value


def test_uj_uu(ring):
    assert is_n_uj(ring("Zmod(6)"), 2).value
    assert is_n_uu(ring("GF(4)"), 3).value
    assert not is_n_uj(ring("GrpRing(Zmod(2), C(3))"), 2).value


def test_clean_exchange(ring):
    assert is_clean(ring("Zmod(4)")).value
    Z4 = ring("Zmod(4)")
    assert Z4.add(1, 3) == 0
    assert is_exchange(ring("Zmod(6)")).value


def test_regularity(ring):
    for text in ("GF(4)", "GF(9)"):
        F = ring(text)
        assert is_regular(F).value and is_strongly_regular(F).value and is_unit_regular(F).value
    Z4 = ring("Zmod(4)")
    for pred in (is_regular, is_strongly_regular, is_unit_regular):
        res = pred(Z4)
        assert not res.value and res.witness == (2,)
    M2 = ring("Mat(2, Zmod(2))")
    assert is_regular(M2).value
    res = is_strongly_regular(M2)
    assert not res.value
    # the witness squares to zero, as E12 does
    assert M2.mul(res.witness[0], res.witness[0]) == 0


def test_pi_regular(ring):
    for text in ("Zmod(8)", "Mat(2, Zmod(2))", "Triv(Zmod(4))", "Ks(Zmod(4), #2)"):
        assert is_pi_regular(ring(text)).value
        assert is_strongly_pi_regular(ring(text)).value


def test_semiregular(ring):
    assert is_semiregular(ring("Zmod(4)")).value
    assert is_semiregular(ring("UT(2, Zmod(2))")).value


def test_reduced_abelian_df(ring):
    assert is_reduced(ring("Zmod(6)")).value
    M2 = ring("Mat(2, Zmod(2))")
    res = is_abelian(M2)
    assert not res.value and M2.mul(res.witness[0], res.witness[0]) == res.witness[0]
    assert is_dedekind_finite(M2).value


def test_power_identity(ring):
    assert satisfies_power_identity(ring("Prod(Zmod(2), Zmod(2))"), 2).value
    assert satisfies_power_identity(ring("GF(4)"), 4).value
    res = satisfies_power_identity(ring("Zmod(4)"), 4)
    assert not res.value and res.witness == (2,)


def test_right_ideals_idempotents(ring):
    assert right_ideals_have_idempotents(ring("GF(7)")).value
    res = right_ideals_have_idempotents(ring("Zmod(4)"))
    assert not res.value and res.witness == (2,)
    assert right_ideals_have_idempotents(ring("Mat(2, Zmod(2))")).value


def test_units_lift(ring):
    Z4 = ring("Zmod(4)")
    assert units_lift(Z4, jacobson(Z4)).value
    RG = ring("GrpRing(Zmod(2), C(2))")
    assert units_lift(RG, C.augmentation_ideal(RG)).value
    Z6 = ring("Zmod(6)")
    assert units_lift(Z6, Subset.from_ids(Z6, [0, 3])).value
    with pytest.raises(NotAnIdealError):
        units_lift(Z4, Subset.from_ids(Z4, [0, 1]))
    Z10 = C.zmod(10)
    assert units_lift(Z10, Subset.from_ids(Z10, [0, 5])).value


def test_lookup():
    assert lookup("n-delta-u").name == "n_delta_u"
    assert lookup("2_primal").name == "two_primal"
    with pytest.raises(KeyError):
        lookup("noetherian")
    assert set(PREDICATES) >= {"n_delta_u", "n_uj", "n_uu", "clean", "exchange", "regular"}


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 60), st.integers(1, 12))
def test_class_inclusions_on_zmod(n, k):
    R = C.zmod(n)
    uu, uj, du = is_n_uu(R, k).value, is_n_uj(R, k).value, is_n_delta_u(R, k).value
    assert (not uu or uj) and (not uj or du)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9]), st.integers(1, 24))
def test_field_exponents(q, n):
    p, k = C.prime_power(q)
    assert is_n_delta_u(C.gf(p, k), n).value == (n % (q - 1) == 0)
