"""Textual literals for series, tails, and the composite value types.

Series text is a signed sum of terms ``c``, ``c*t^k``, ``t^k``, ``t`` with
integer or ``p/q`` coefficients; juxtaposed coefficients (``2t^3``) are also
accepted, which is how integer coefficients are printed.  Tails use the same
grammar with negative exponents.  Composite literals:

    gf( <series x> ; <series y> ; <n> )        cohomology class
    hom( <n> ; <series alpha> ; <series beta> ) continuous hom
    pair( <series sigma> ; <series rho> )       residue pair
    comp( <series rho> ; <series sigma> )       completion element

Printing (the types' __str__) is canonical and parse(print(v)) == v.
"""

from __future__ import annotations

import re

from .cohomology import CohomologyClass
from .duality import CompletionElement, ContinuousHom, ResiduePair
from .errors import ParseError
from .ring import AkizukiRing
from .series import LaurentTail, TruncatedSeries

_NUM_RE = re.compile(r"\d+(?:\s*/\s*\d+)?")
_EXP_RE = re.compile(r"-?\d+")


def _scan_terms(text: str, field):
    """Yield (exponent, signed coefficient) pairs from a sum of terms."""
    s = text.strip()
    if not s:
        raise ParseError("empty series literal")
    i, n = 0, len(s)
    first = True
    while i < n:
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' before {s[i:]!r}")
        while i < n and s[i].isspace():
            i += 1
        coeff_text = None
        starred = False
        m = _NUM_RE.match(s, i)
        if m:
            coeff_text = re.sub(r"\s", "", m.group())
            i = m.end()
            while i < n and s[i].isspace():
                i += 1
            if i < n and s[i] == "*":
                starred = True
                i += 1
                while i < n and s[i].isspace():
                    i += 1
        exponent = None
        if i < n and s[i] == "t":
            i += 1
            if i < n and s[i] == "^":
                i += 1
                m = _EXP_RE.match(s, i)
                if not m:
                    raise ParseError(f"missing exponent after '^' in {text!r}")
                exponent = int(m.group())
                i = m.end()
            else:
                exponent = 1
        elif starred:
            raise ParseError(f"dangling '*' in {text!r}")
        if coeff_text is None and exponent is None:
            raise ParseError(f"expected a term at {s[i:]!r}")
        coeff = field.parse(coeff_text) if coeff_text is not None else field.one()
        if sign < 0:
            coeff = field.neg(coeff)
        yield (exponent if exponent is not None else 0, coeff)
        while i < n and s[i].isspace():
            i += 1
        first = False


def parse_series(text: str, field, precision: int) -> TruncatedSeries:
    """Parse a series literal at the given precision (higher terms reduce away)."""
    if precision < 1:
        raise ParseError("series precision must be at least 1")
    coeffs = [field.zero()] * precision
    for exponent, coeff in _scan_terms(text, field):
        if exponent < 0:
            raise ParseError(f"negative exponent t^{exponent} in a series literal")
        if exponent < precision:
            coeffs[exponent] = field.add(coeffs[exponent], coeff)
    return TruncatedSeries(field, tuple(coeffs))


def parse_tail(text: str, field) -> LaurentTail:
    """Parse a principal-part literal (negative exponents, or just 0)."""
    deep: dict[int, object] = {}
    for exponent, coeff in _scan_terms(text, field):
        if exponent >= 0:
            if field.is_zero(coeff):
                continue
            raise ParseError(
                f"tail terms carry negative exponents, got t^{exponent}"
            )
        j = -exponent
        deep[j] = field.add(deep.get(j, field.zero()), coeff)
    depth = max(deep, default=0)
    return LaurentTail.from_coeffs(
        field, [deep.get(j, field.zero()) for j in range(1, depth + 1)]
    )


def _call_body(text: str, name: str, count: int) -> list[str]:
    s = text.strip()
    if not s.startswith(name):
        raise ParseError(f"expected a {name}(...) literal, got {text!r}")
    rest = s[len(name):].strip()
    if not (rest.startswith("(") and rest.endswith(")")):
        raise ParseError(f"malformed {name}(...) literal: {text!r}")
    parts = rest[1:-1].split(";")
    if len(parts) != count:
        raise ParseError(f"{name}(...) takes {count} ';'-separated fields")
    return [p.strip() for p in parts]


def _parse_level(text: str) -> int:
    if not re.fullmatch(r"\d+", text) or int(text) < 1:
        raise ParseError(f"level field must be a positive integer, got {text!r}")
    return int(text)


def parse_gf(text: str, ring: AkizukiRing) -> CohomologyClass:
    x_text, y_text, n_text = _call_body(text, "gf", 3)
    n = _parse_level(n_text)
    if n > ring.precision:
        raise ParseError(
            f"class exponent {n} exceeds working precision {ring.precision}"
        )
    x = parse_series(x_text, ring.field, n)
    y = parse_series(y_text, ring.field, n)
    return CohomologyClass.make(ring.nf(x, y), n)


def parse_hom(text: str, ring: AkizukiRing) -> ContinuousHom:
    n_text, a_text, b_text = _call_body(text, "hom", 3)
    n = _parse_level(n_text)
    if n > ring.precision:
        raise ParseError(
            f"hom level {n} exceeds working precision {ring.precision}"
        )
    alpha = parse_series(a_text, ring.field, n)
    beta = parse_series(b_text, ring.field, n)
    return ContinuousHom.make(ring, alpha, beta)


def parse_pair(text: str, ring: AkizukiRing) -> ResiduePair:
    s_text, r_text = _call_body(text, "pair", 2)
    sigma = parse_series(s_text, ring.field, ring.precision)
    rho = parse_series(r_text, ring.field, ring.precision)
    return ResiduePair(ring, sigma, rho)


def parse_comp(text: str, ring: AkizukiRing) -> CompletionElement:
    r_text, s_text = _call_body(text, "comp", 2)
    rho = parse_series(r_text, ring.field, ring.precision)
    sigma = parse_series(s_text, ring.field, ring.precision)
    return CompletionElement(ring, rho, sigma)
