"""Shared test support: independent oracles and random data generators.

The naive_* helpers implement series arithmetic from scratch on plain
coefficient lists, so cross-checks against the package never share code
with the implementation under test.
"""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from akizuki import (
    AkizukiRing,
    CohomologyClass,
    CompletionElement,
    ContinuousHom,
    PrimeField,
    RationalField,
    ResiduePair,
    TruncatedSeries,
)
from akizuki.expressions import Atom, BinOp, Gen, Neg, Num, Pow

RING_Q = AkizukiRing(RationalField(), 31)
RING_P101 = AkizukiRing(PrimeField(101), 31)
RING_P2 = AkizukiRing(PrimeField(2), 31)

# ----------------------------------------------------------------------
# naive list-based series arithmetic (the oracle side of dual-route checks)


def naive_mul(a, b, field, n):
    out = [field.zero()] * n
    for i in range(min(len(a), n)):
        for j in range(min(len(b), n - i)):
            out[i + j] = field.add(out[i + j], field.mul(a[i], b[j]))
    return out


def naive_inv(a, field, n):
    lead = field.inv(a[0])
    out = [lead]
    for k in range(1, n):
        acc = field.zero()
        for i in range(1, k + 1):
            if i < len(a):
                acc = field.add(acc, field.mul(a[i], out[k - i]))
        out.append(field.neg(field.mul(acc, lead)))
    return out


def naive_w(ring, m):
    out = [ring.field.zero()] * m
    for n_j, a_j in zip(ring.exponents[1:], ring.units[1:]):
        if n_j + 1 < m:
            out[n_j + 1] = a_j
    return out


def naive_gen(ring, i, m):
    """g_i = ((z - a_0 - s_i) / t^{n_i})^2 on plain lists, in a window wide
    enough that dropping invisible terms cannot disturb the result."""
    field = ring.field
    n_i = ring.exponents[i]
    width = m + n_i
    upper = [field.zero()] * width
    for n_j, a_j in zip(ring.exponents[i + 1 :], ring.units[i + 1 :]):
        if n_j < width:
            upper[n_j] = a_j
    q = upper[n_i:]
    return naive_mul(q, q, field, m)


def naive_eval(node, ring, m):
    """Evaluate an expression tree over plain coefficient lists."""
    field = ring.field
    if isinstance(node, Num):
        return [field.from_int(node.value)] + [field.zero()] * (m - 1)
    if isinstance(node, Atom):
        if node.name == "t":
            out = [field.zero()] * m
            if m > 1:
                out[1] = field.one()
            return out
        return naive_w(ring, m)
    if isinstance(node, Gen):
        return naive_gen(ring, node.index, m)
    if isinstance(node, Neg):
        return [field.neg(c) for c in naive_eval(node.arg, ring, m)]
    if isinstance(node, Pow):
        out = [field.one()] + [field.zero()] * (m - 1)
        base = naive_eval(node.base, ring, m)
        for _ in range(node.exponent):
            out = naive_mul(out, base, field, m)
        return out
    left = naive_eval(node.left, ring, m)
    right = naive_eval(node.right, ring, m)
    if node.op == "+":
        return [field.add(x, y) for x, y in zip(left, right)]
    if node.op == "-":
        return [field.sub(x, y) for x, y in zip(left, right)]
    if node.op == "*":
        return naive_mul(left, right, field, m)
    return naive_mul(left, naive_inv(right, field, m), field, m)


# ----------------------------------------------------------------------
# seeded random data (used by the acceptance suite)


def rand_elem(rng: random.Random, field, nonzero=False):
    if field.characteristic == 0:
        value = Fraction(rng.randint(-9, 9))
        if rng.random() < 0.25:
            value = Fraction(rng.randint(-9, 9), rng.randint(1, 6))
        if nonzero and value == 0:
            value = Fraction(rng.randint(1, 9))
        return value
    p = field.characteristic
    value = rng.randrange(p)
    if nonzero and value == 0:
        value = 1 if p == 2 else rng.randrange(1, p)
    return value


def rand_series(rng, field, precision, unit=False):
    coeffs = [rand_elem(rng, field) for _ in range(precision)]
    if unit:
        coeffs[0] = rand_elem(rng, field, nonzero=True)
    return TruncatedSeries(field, tuple(coeffs))


def rand_nf(rng, ring, level, unit=False):
    return ring.nf(
        rand_series(rng, ring.field, level, unit=unit),
        rand_series(rng, ring.field, level),
    )


def rand_klass(rng, ring, max_exponent):
    n = rng.randint(1, max_exponent)
    return CohomologyClass.make(rand_nf(rng, ring, n), n)


def rand_hom(rng, ring, max_level):
    n = rng.randint(1, max_level)
    return ContinuousHom.make(
        ring, rand_series(rng, ring.field, n), rand_series(rng, ring.field, n)
    )


def rand_pair(rng, ring, invertible=True):
    n = ring.precision
    return ResiduePair(
        ring,
        rand_series(rng, ring.field, n),
        rand_series(rng, ring.field, n, unit=invertible),
    )


def rand_comp(rng, ring):
    n = ring.precision
    return CompletionElement(
        ring, rand_series(rng, ring.field, n), rand_series(rng, ring.field, n)
    )


def rand_tree(rng, depth):
    """A random expression tree; division denominators are units by
    construction (a nonzero constant plus t times a subtree)."""
    if depth == 0 or rng.random() < 0.3:
        choice = rng.randrange(6)
        if choice == 0:
            return Atom("t")
        if choice == 1:
            return Atom("w")
        if choice == 2:
            return Gen(0)
        if choice == 3:
            return Gen(1)
        if choice == 4:
            return Pow(Atom("t"), rng.randint(0, 3))
        value = rng.randint(-4, 4)
        return Num(value if value != 0 else 1)
    roll = rng.random()
    if roll < 0.12:
        return Neg(rand_tree(rng, depth - 1))
    if roll < 0.24:
        num = rand_tree(rng, depth - 1)
        den = BinOp(
            "+",
            Num(rng.choice([1, 2, 3, -1, -2])),
            BinOp("*", Atom("t"), rand_tree(rng, depth - 1)),
        )
        return BinOp("/", num, den)
    op = rng.choice(["+", "-", "*", "*"])
    return BinOp(op, rand_tree(rng, depth - 1), rand_tree(rng, depth - 1))


# ----------------------------------------------------------------------
# hypothesis strategies


def coeff_st(field):
    if field.characteristic == 0:
        return st.fractions(min_value=-4, max_value=4, max_denominator=5)
    return st.integers(min_value=0, max_value=field.characteristic - 1)


def series_st(field, precision):
    return st.lists(coeff_st(field), min_size=precision, max_size=precision).map(
        lambda cs: TruncatedSeries(field, tuple(cs))
    )


def unit_series_st(field, precision):
    return st.tuples(
        coeff_st(field).filter(lambda c: not field.is_zero(c)),
        st.lists(coeff_st(field), min_size=precision - 1, max_size=precision - 1),
    ).map(lambda pair: TruncatedSeries(field, (pair[0],) + tuple(pair[1])))


def nf_st(ring, precision):
    return st.tuples(
        series_st(ring.field, precision), series_st(ring.field, precision)
    ).map(lambda pair: ring.nf(pair[0], pair[1]))


def klass_st(ring, max_exponent):
    return st.integers(1, max_exponent).flatmap(
        lambda n: nf_st(ring, n).map(lambda f: CohomologyClass.make(f, n))
    )


def hom_st(ring, max_level):
    return st.integers(1, max_level).flatmap(
        lambda n: st.tuples(
            series_st(ring.field, n), series_st(ring.field, n)
        ).map(lambda ab: ContinuousHom.make(ring, ab[0], ab[1]))
    )


def pair_st(ring, invertible=True):
    n = ring.precision
    rho = unit_series_st(ring.field, n) if invertible else series_st(ring.field, n)
    return st.tuples(series_st(ring.field, n), rho).map(
        lambda sr: ResiduePair(ring, sr[0], sr[1])
    )
