"""Residues, the duality map and its inverse, and pair extraction."""

import random

import pytest
from hypothesis import given

from akizuki import (
    AlgebraError,
    CohomologyClass,
    ContinuousHom,
    LaurentTail,
    NotInvertibleError,
    PrecisionError,
    RationalField,
    ResiduePair,
    extract_pair,
    parse_gf,
    parse_hom,
    parse_pair,
    parse_series,
)
from support import (
    RING_P101,
    RING_Q,
    hom_st,
    klass_st,
    pair_st,
    rand_hom,
    rand_klass,
    rand_nf,
    rand_pair,
)

QQ = RationalField()


def S(text, precision, ring=RING_Q):
    return parse_series(text, ring.field, precision)


def K(text, ring=RING_Q):
    return parse_gf(text, ring)


def H(text, ring=RING_Q):
    return parse_hom(text, ring)


def P(text, ring=RING_Q):
    return parse_pair(text, ring)


# ----------------------------------------------------------------------
# residue goldens


def test_residue_golden():
    tail = P("pair(1;1+t)").residue(K("gf(t;1;2)"))
    assert str(tail) == "t^-2 + 2t^-1"
    assert tail == LaurentTail.from_coeffs(QQ, [2, 1])


def test_residue_of_unit_over_t():
    assert str(P("pair(1;0)").residue(K("gf(1;0;1)"))) == "t^-1"
    assert P("pair(0;1)").residue(K("gf(1;0;1)")).is_zero()


def test_residue_respects_raising():
    pair = P("pair(1+t^2;3)")
    a = K("gf(1;2;2)")
    b = CohomologyClass.make(a.raised_numerator(5), 5)
    assert pair.residue(a) == pair.residue(b)


def test_residue_exponent_guard():
    small = ResiduePair(RING_Q, S("1", 3), S("1", 3))
    with pytest.raises(PrecisionError):
        small.residue(K("gf(1;0;4)"))


# ----------------------------------------------------------------------
# hom canonicalization and evaluation


def test_hom_canonicalization():
    h = ContinuousHom.make(RING_Q, S("t", 3), S("t^2", 3))
    assert h.level == 2
    assert str(h) == "hom(2;1;t)"
    assert ContinuousHom.make(RING_Q, S("0", 5), S("0", 5)).is_zero()
    assert ContinuousHom.zero(RING_Q).level == 1


def test_hom_evaluation_golden():
    h = H("hom(2;1;t)")
    one = RING_Q.one_nf(2)
    w = RING_Q.w_nf(2)
    assert str(h(one)) == "t^-2"
    assert str(h(w)) == "t^-1"
    assert h(RING_Q.nf(S("t", 2), S("1", 2))) == LaurentTail.from_coeffs(QQ, [2])


def test_hom_evaluation_level_guard():
    with pytest.raises(PrecisionError):
        H("hom(3;1;0)")(RING_Q.one_nf(2))


def test_hom_equivalent_across_levels():
    assert H("hom(1;1;0)").equivalent(H("hom(2;t;0)"))
    assert H("hom(2;t;0)") == H("hom(1;1;0)")  # make() canonicalizes


# ----------------------------------------------------------------------
# duality goldens


def test_forward_golden():
    hom = P("pair(0;1)").forward(K("gf(1;0;1)"))
    assert str(hom) == "hom(1;0;1)"


def test_forward_value_at_one_is_the_residue():
    pair = P("pair(1+t;2-t^2)")
    omega = K("gf(1+2t;t;3)")
    hom = pair.forward(omega)
    # tails are canonical, so the two routes give literally equal values
    assert hom(RING_Q.one_nf(hom.level)) == pair.residue(omega)


def test_inverse_golden():
    klass = P("pair(0;1)").inverse(H("hom(3;1;t)"))
    assert str(klass) == "gf(t;1;3)"


def test_inverse_needs_unit_rho():
    with pytest.raises(NotInvertibleError):
        P("pair(1;t)").inverse(H("hom(1;1;0)"))


# ----------------------------------------------------------------------
# the defining identity:  forward(pair, omega)(f) == residue(pair, f * omega)


@pytest.mark.parametrize("ring", [RING_Q, RING_P101], ids=lambda r: str(r.field))
def test_defining_identity(ring):
    rng = random.Random(71)
    for _ in range(40):
        pair = rand_pair(rng, ring, invertible=False)
        omega = rand_klass(rng, ring, 10)
        hom = pair.forward(omega)
        f = rand_nf(rng, ring, omega.exponent)
        assert hom(f) == pair.residue(omega.act(f))


# ----------------------------------------------------------------------
# roundtrips


@pytest.mark.parametrize("ring", [RING_Q, RING_P101], ids=lambda r: str(r.field))
def test_roundtrip_class(ring):
    @given(pair_st(ring), klass_st(ring, 12))
    def check(pair, omega):
        assert pair.inverse(pair.forward(omega)) == omega

    check()


@pytest.mark.parametrize("ring", [RING_Q, RING_P101], ids=lambda r: str(r.field))
def test_roundtrip_hom(ring):
    @given(pair_st(ring), hom_st(ring, 12))
    def check(pair, hom):
        assert pair.forward(pair.inverse(hom)) == hom

    check()


def test_forward_r_independent():
    rng = random.Random(5)
    for _ in range(25):
        pair = rand_pair(rng, RING_Q)
        omega = rand_klass(rng, RING_Q, 14)
        base = pair.forward(omega)
        for r in RING_Q.admissible_indices(omega.exponent):
            assert pair.forward(omega, r_index=r) == base
        hom = rand_hom(rng, RING_Q, 14)
        base = pair.inverse(hom)
        for r in RING_Q.admissible_indices(hom.level):
            assert pair.inverse(hom, r_index=r) == base


def test_pair_additivity():
    rng = random.Random(9)
    for _ in range(25):
        p1 = rand_pair(rng, RING_Q, invertible=False)
        p2 = rand_pair(rng, RING_Q, invertible=False)
        omega = rand_klass(rng, RING_Q, 12)
        assert (p1 + p2).residue(omega) == p1.residue(omega) + p2.residue(omega)
        assert (p1 + p2).forward(omega) == p1.forward(omega) + p2.forward(omega)


# ----------------------------------------------------------------------
# extraction of a pair from a blackbox endomorphism


def test_extract_recovers_forward():
    rng = random.Random(13)
    for level in (5, 14, 30):
        for _ in range(10):
            pair = rand_pair(rng, RING_Q, invertible=False)
            recovered = extract_pair(RING_Q, pair.forward, level)
            assert recovered.sigma == pair.sigma.truncate(level)
            assert recovered.rho == pair.rho.truncate(level)


def test_extract_rejects_bad_blackbox():
    def too_deep(omega):
        return H("hom(9;1;0)")

    with pytest.raises(AlgebraError):
        extract_pair(RING_Q, too_deep, 3)
    with pytest.raises(AlgebraError):
        extract_pair(RING_Q, lambda omega: 17, 3)
    with pytest.raises(PrecisionError):
        extract_pair(RING_Q, P("pair(1;1)").forward, 0)


def test_canonical_levels_agree_on_roundtrip():
    """Homs coming from unit-rho pairs canonicalize at the same level as the
    class they encode, so roundtrips land on identical canonical data."""
    rng = random.Random(17)
    for _ in range(40):
        pair = rand_pair(rng, RING_Q)
        omega = rand_klass(rng, RING_Q, 12)
        hom = pair.forward(omega)
        back = pair.inverse(hom)
        assert back.exponent == omega.exponent
        assert back.numerator == omega.numerator
