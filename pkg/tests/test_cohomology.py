"""Classes of generalized fractions (x + y*w)/t^n and their module structure."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from akizuki import (
    CohomologyClass,
    PrecisionError,
    RationalField,
    TruncatedSeries,
    parse_gf,
    parse_series,
)
from support import RING_P101, RING_Q, klass_st, nf_st

QQ = RationalField()


def S(text, precision, ring=RING_Q):
    return parse_series(text, ring.field, precision)


def K(text, ring=RING_Q):
    return parse_gf(text, ring)


# ----------------------------------------------------------------------
# canonicalization


def test_make_strips_common_powers():
    f = RING_Q.nf(S("t", 4), S("t^2", 4))
    k = CohomologyClass.make(f, 4)
    assert k.exponent == 3
    assert str(k) == "gf(1;t;3)"


def test_make_zero_collapses():
    f = RING_Q.zero_nf(7)
    k = CohomologyClass.make(f, 7)
    assert k.is_zero()
    assert k.exponent == 1
    assert k == CohomologyClass.zero(RING_Q)


def test_make_respects_unit_floor():
    k = CohomologyClass.make(RING_Q.one_nf(3), 3)
    assert k.exponent == 3
    with pytest.raises(ValueError):
        CohomologyClass.make(RING_Q.one_nf(3), 0)
    with pytest.raises(PrecisionError):
        CohomologyClass.make(RING_Q.one_nf(3), 4)


def test_literal_roundtrip():
    k = K("gf(1+t;2;3)")
    assert str(k) == "gf(1 + t;2;3)"
    assert K(str(k)) == k


# ----------------------------------------------------------------------
# the motivating example: the fraction w/t is a nonzero class even though
# the principal part of w/t over the subring A vanishes


def test_w_over_t_vanishing_tail_nonzero_class():
    w = RING_Q.w
    assert w.principal_part(1).is_zero()
    k = K("gf(0;1;1)")
    assert not k.is_zero()
    assert k.numerator == RING_Q.w_nf(1)


# ----------------------------------------------------------------------
# equality by raising


def test_equivalent_across_exponents():
    assert K("gf(1;0;1)").equivalent(K("gf(t;0;2)"))
    assert not K("gf(1;0;1)").equivalent(K("gf(1;0;2)"))
    assert K("gf(t;0;2)") == K("gf(1;0;1)")  # make() canonicalizes


def test_raised_numerator():
    k = K("gf(1;1;2)")
    f = k.raised_numerator(4)
    assert f.level == 4
    assert f.x == S("t^2", 4)
    assert f.y == S("t^2", 4)
    with pytest.raises(PrecisionError):
        k.raised_numerator(1)


# ----------------------------------------------------------------------
# module structure


def test_action_golden():
    k = K("gf(0;1;6)")
    acted = k.act(RING_Q.w_nf(6))
    assert str(acted) == "gf(0;2;3)"
    assert acted == K("gf(0;2;3)")


def test_action_level_guard():
    with pytest.raises(PrecisionError):
        K("gf(0;1;6)").act(RING_Q.w_nf(5))


def test_t_power_annihilates():
    for text in ("gf(1;1;3)", "gf(0;1;1)", "gf(1+t;2t;4)"):
        k = K(text)
        n = k.exponent
        killer = TruncatedSeries.t_power(QQ, n, RING_Q.precision)
        assert k.scaled(killer).is_zero()
        # one power less does not kill a canonical representative
        survivor = TruncatedSeries.t_power(QQ, n - 1, RING_Q.precision)
        assert not k.scaled(survivor).is_zero()


def test_addition_and_negation():
    a = K("gf(1;0;2)")
    b = K("gf(0;1;1)")
    total = a + b
    assert total.exponent == 2
    assert total.numerator.x == S("1", 2)
    assert total.numerator.y == S("t", 2)
    assert (total + (-total)).is_zero()
    assert (a + (-a)).is_zero()


@pytest.mark.parametrize("ring", [RING_Q, RING_P101], ids=lambda r: str(r.field))
def test_addition_laws(ring):
    @given(klass_st(ring, 8), klass_st(ring, 8), klass_st(ring, 8))
    def check(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a + CohomologyClass.zero(ring) == a

    check()


@pytest.mark.parametrize("ring", [RING_Q, RING_P101], ids=lambda r: str(r.field))
def test_action_is_bilinear(ring):
    @given(klass_st(ring, 8), klass_st(ring, 8), nf_st(ring, 8), nf_st(ring, 8))
    def check(a, b, f, g):
        n = max(a.exponent, b.exponent)
        ft, gt = f.truncate(n), g.truncate(n)
        assert (a + b).act(ft) == a.act(ft.truncate(a.exponent)) + b.act(
            ft.truncate(b.exponent)
        )
        assert a.act((ft + gt).truncate(a.exponent)) == a.act(
            ft.truncate(a.exponent)
        ) + a.act(gt.truncate(a.exponent))

    check()


@pytest.mark.parametrize("ring", [RING_Q, RING_P101], ids=lambda r: str(r.field))
def test_action_is_associative(ring):
    @given(klass_st(ring, 8), nf_st(ring, 8), nf_st(ring, 8))
    def check(a, f, g):
        n = a.exponent
        ft, gt = f.truncate(n), g.truncate(n)
        assert a.act(ft * gt) == a.act(ft).act(gt.truncate(a.act(ft).exponent))

    check()


@pytest.mark.parametrize("ring", [RING_Q, RING_P101], ids=lambda r: str(r.field))
def test_raising_leaves_class_fixed(ring):
    @given(klass_st(ring, 8), st.integers(0, 4))
    def check(a, k):
        n = a.exponent + k
        raised = CohomologyClass.make(a.raised_numerator(n), n)
        assert raised == a

    check()
