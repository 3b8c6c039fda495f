#!/usr/bin/env python3
"""A guided tour of the default instance.

Walks through the phenomena the library is built around: the ring element
w = t(z - a_0) whose principal part over t vanishes even though its
cohomology class does not, the rewriting of w^2, a residue computation, a
duality roundtrip, and the nilpotent of the completed ring.
"""

from akizuki import (
    CompletionElement,
    TruncatedSeries,
    default_ring,
    eval_nf,
    parse_expression,
    parse_gf,
    parse_pair,
)


def main() -> None:
    ring = default_ring()
    print(f"instance: {ring!r}")
    print(f"z = {ring.z}")
    print(f"w = t(z - a_0) = {ring.w}")
    print()

    print("-- the class of w/t --")
    print(f"principal part of w over t (in the DVR): {ring.w.principal_part(1)}")
    omega = parse_gf("gf(0;1;1)", ring)
    print(f"the cohomology class gf(0;1;1) is zero: {omega.is_zero()}")
    print("(the subring residue cannot see w, but the class survives)")
    print()

    print("-- rewriting w^2 --")
    wsq = ring.w_nf(14) * ring.w_nf(14)
    print(f"w * w at level 14: X = {wsq.x}, Y = {wsq.y}")
    print(f"embedded back into the DVR: {wsq.embed()}")
    print(f"direct square of w:         {(ring.w.truncate(14) * ring.w.truncate(14))}")
    print()

    print("-- a residue --")
    pair = parse_pair("pair(1;1+t)", ring)
    cls = parse_gf("gf(t;1;2)", ring)
    print(f"residue of {cls} under {pair}: {pair.residue(cls)}")
    print()

    print("-- duality roundtrip --")
    hom = pair.forward(cls)
    print(f"forward: {hom}")
    back = pair.inverse(hom)
    print(f"inverse: {back}  (matches: {back == cls})")
    print()

    print("-- the completed ring --")
    eps = CompletionElement(ring, ring.w, TruncatedSeries.one(ring.field, ring.precision))
    print(f"eps = comp(w;1) squares to zero: {(eps * eps).is_zero()}")
    f = eval_nf(parse_expression("1 + w*w"), ring, ring.precision)
    print(f"embed 1 + w^2: {CompletionElement.embed(f)}")


if __name__ == "__main__":
    main()
