"""Shared hypothesis strategies: random canonical elements per variant."""

import hypothesis.strategies as st

from hnn_nearring import (
    ZERO,
    Variant,
    add,
    make_int,
    make_omega,
    make_pi,
    make_stable,
    neg,
)


def base_elements(variant):
    if variant is Variant.B_FREE_BASE:
        item = st.tuples(st.integers(0, 4), st.sampled_from([1, -1, 2, -2]))
        return st.lists(item, min_size=1, max_size=3).map(make_pi)
    return st.integers(-6, 6).map(lambda n: make_int(n, variant))


def elements(variant, max_level=2):
    """Recursive element strategy; letters are built over distinct
    nonzero lower-level pairs, sums over sampled pieces."""

    def extend(children):
        @st.composite
        def build(draw):
            pieces = draw(st.lists(children, min_size=1, max_size=3))
            out = ZERO
            for idx, p in enumerate(pieces):
                roll = draw(st.integers(0, 9))
                if roll < 6:
                    q = draw(children)
                    if q is ZERO or q is p:
                        q = neg(p) if p is not ZERO else _unit(variant)
                    if p is ZERO:
                        p = neg(q)
                    sign = 1 if draw(st.booleans()) else -1
                    out = add(out, make_stable(p, q, sign))
                elif roll < 8 and variant is Variant.C_INT_OMEGA_BASE:
                    out = add(out, make_omega(draw(st.integers(0, 2)),
                                              draw(st.sampled_from([1, -1, 2]))))
                else:
                    out = add(out, p)
            return out

        return build()

    return st.recursive(base_elements(variant), extend, max_leaves=max_level + 2)


def _unit(variant):
    if variant is Variant.B_FREE_BASE:
        return make_pi([0])
    return make_int(1, variant)


def nonzero_elements(variant, max_level=2):
    return elements(variant, max_level).filter(lambda e: e is not ZERO)
