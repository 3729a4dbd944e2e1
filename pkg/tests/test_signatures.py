from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbicurve import (
    INFINITE,
    KindName,
    MalformedSignature,
    NinfVerdict,
    OrbSignature,
    canonicalize,
    classify_kind,
    euler_characteristic,
    finite_order,
    is_finite_cyclic,
    satisfies_ninf,
)

small_sigs = st.builds(
    OrbSignature,
    st.integers(0, 4),
    st.integers(0, 4),
    st.lists(st.integers(2, 12), max_size=5).map(lambda m: tuple(sorted(m))),
)


def chi_by_hand(g, r, m):
    # independent evaluation of the defining formula
    return Fraction(2) - 2 * g - r - sum(Fraction(e - 1, e) for e in m)


def test_canonicalize_sorts():
    assert canonicalize(OrbSignature(0, 0, (7, 2, 3))) == OrbSignature(0, 0, (2, 3, 7))
    assert canonicalize(OrbSignature(1, 0, ())) == OrbSignature(1, 0, ())
    assert canonicalize(OrbSignature(0, 2, (5, 5, 2))) == OrbSignature(0, 2, (2, 5, 5))


def test_bad_entries_rejected():
    with pytest.raises(MalformedSignature):
        OrbSignature(0, 0, (1, 3))
    with pytest.raises(MalformedSignature):
        OrbSignature(0, 0, (0,))
    with pytest.raises(MalformedSignature):
        OrbSignature(-1, 0, ())


def test_non_canonical_rejected_by_decisions():
    with pytest.raises(MalformedSignature):
        finite_order(OrbSignature(0, 0, (3, 2)))


@pytest.mark.parametrize(
    "sig, expected",
    [
        (OrbSignature(0, 0, (2, 3, 7)), Fraction(-1, 42)),
        (OrbSignature(1, 0, ()), Fraction(0)),
        (OrbSignature(0, 1, ()), Fraction(1)),
        (OrbSignature(0, 0, (2, 2, 2, 2)), Fraction(0)),
    ],
)
def test_euler_characteristic_values(sig, expected):
    assert euler_characteristic(sig) == expected
    assert euler_characteristic(sig) == chi_by_hand(sig.g, sig.r, sig.m)


@given(
    st.integers(0, 4),
    st.integers(0, 4),
    st.lists(st.integers(2, 12), max_size=5),
)
def test_euler_characteristic_permutation_invariant(g, r, m):
    base = euler_characteristic(OrbSignature(g, r, tuple(m)))
    assert base == euler_characteristic(OrbSignature(g, r, tuple(reversed(m))))
    assert base == euler_characteristic(canonicalize(OrbSignature(g, r, tuple(m))))


@pytest.mark.parametrize(
    "sig, name, finite, order",
    [
        (OrbSignature(0, 0, (2, 3, 6)), KindName.EUCLIDEAN, False, None),
        (OrbSignature(0, 0, (2, 3, 7)), KindName.HYPERBOLIC, False, None),
        (OrbSignature(0, 0, (2, 2, 5)), KindName.SPHERICAL, True, 10),
        (OrbSignature(1, 0, ()), KindName.EUCLIDEAN, False, None),
        (OrbSignature(0, 1, ()), KindName.SPHERICAL, True, 1),
    ],
)
def test_classify_kind(sig, name, finite, order):
    kind = classify_kind(sig)
    assert kind.name is name
    assert kind.finite == finite
    assert kind.order == order


@pytest.mark.parametrize(
    "sig, order",
    [
        (OrbSignature(0, 0, (4, 6)), 2),
        (OrbSignature(0, 0, (2, 3, 5)), 60),
        (OrbSignature(0, 0, (2, 3, 3)), 12),
        (OrbSignature(0, 0, (2, 3, 4)), 24),
        (OrbSignature(0, 0, (2, 2, 2)), 4),
        (OrbSignature(0, 1, (9,)), 9),
        (OrbSignature(0, 0, ()), 1),
        (OrbSignature(0, 0, (5,)), 1),
        (OrbSignature(0, 1, ()), 1),
        (OrbSignature(1, 0, ()), INFINITE),
        (OrbSignature(0, 2, ()), INFINITE),
        (OrbSignature(0, 1, (2, 2)), INFINITE),
        (OrbSignature(0, 0, (3, 3, 3)), INFINITE),
    ],
)
def test_finite_order(sig, order):
    assert finite_order(sig) == order


@given(small_sigs)
def test_finiteness_dichotomy(sig):
    # infinite exactly when chi <= 0, across compact and open signatures
    assert (finite_order(sig) is INFINITE) == (euler_characteristic(sig) <= 0)


@given(small_sigs)
def test_kind_consistent_with_chi(sig):
    kind = classify_kind(sig)
    chi = euler_characteristic(sig)
    expected = (
        KindName.SPHERICAL if chi > 0
        else KindName.EUCLIDEAN if chi == 0
        else KindName.HYPERBOLIC
    )
    assert kind.name is expected
    assert kind.finite == (finite_order(sig) is not INFINITE)


def test_finite_cyclic_predicate():
    assert is_finite_cyclic(OrbSignature(0, 0, (4, 6)))
    assert is_finite_cyclic(OrbSignature(0, 1, (9,)))
    assert is_finite_cyclic(OrbSignature(0, 0, ()))
    assert not is_finite_cyclic(OrbSignature(0, 0, (2, 2, 2)))
    assert not is_finite_cyclic(OrbSignature(0, 1, (2, 2)))
    assert not is_finite_cyclic(OrbSignature(1, 0, ()))


class TestNinf:
    def test_hyperbolic_satisfies(self):
        assert satisfies_ninf(OrbSignature(0, 0, (2, 3, 7))).verdict is NinfVerdict.SATISFIES

    def test_torus_fails_with_witness(self):
        status = satisfies_ninf(OrbSignature(1, 0, ()))
        assert status.verdict is NinfVerdict.FAILS
        assert "normal" in status.witness

    def test_2222_fails(self):
        assert satisfies_ninf(OrbSignature(0, 0, (2, 2, 2, 2))).verdict is NinfVerdict.FAILS

    @pytest.mark.parametrize("m", [(3, 3, 3), (2, 4, 4), (2, 3, 6)])
    def test_euclidean_triangles_undetermined(self, m):
        assert satisfies_ninf(OrbSignature(0, 0, m)).verdict is NinfVerdict.UNDETERMINED

    @given(small_sigs)
    def test_satisfies_only_outside_euclidean_compact(self, sig):
        status = satisfies_ninf(sig)
        euclidean_compact = sig.r == 0 and euler_characteristic(sig) == 0
        if status.verdict is NinfVerdict.SATISFIES:
            assert not euclidean_compact
        else:
            assert euclidean_compact
