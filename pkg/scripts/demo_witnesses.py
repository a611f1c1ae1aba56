#!/usr/bin/env python3
"""Walk through the key computations of the three constructions with
concrete small inputs: the defining relation, the product, the
distinguisher of the integer-base variant, and the two witnesses that
break equiprimeness on the other variants.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from hnn_nearring import (  # noqa: E402
    Variant,
    add,
    conjugator,
    in_h,
    in_w,
    make_int,
    make_omega,
    make_pi,
    make_stable,
    mu,
    mul,
    neg,
    render,
    scale,
)

A = Variant.A_INT_BASE
C = Variant.C_INT_OMEGA_BASE


def show(label, element):
    print(f"  {label:32s} {render(element)}")


def main():
    print("Defining relation (variant A): -t[a,b] + a + t[a,b] normalizes to b")
    one, two = make_int(1, A), make_int(2, A)
    t = conjugator(one, two)
    show("-t[1,2] + 1 + t[1,2] =", add(add(neg(t), one), t))
    show("t[1,2] + 4 - t[1,2]  =", add(add(t, make_int(4, A)), neg(t)))

    print("\nProduct through embeddings (a*b applies the embedding of b to a):")
    x = make_stable(one, neg(one))
    show("t[1,-1] * 2 =", mul(x, two))
    show("t[1,-1] * 3 =", mul(x, make_int(3, A)))
    print("  distinct right factors stay distinguishable through x = t[1,-1]:")
    a = one
    show("1 * x * 2 =", mul(mul(a, x), two))
    show("1 * x * 3 =", mul(mul(a, x), make_int(3, A)))

    print("\nFree-base witness (variant B): a = b = pi(1), c = 2*pi(1)")
    b = make_pi([1])
    c = scale(2, b)
    for probe in (make_pi([1]), make_pi([(2, 1), (0, 1)]), make_stable(b, c)):
        lhs = mul(mul(b, probe), b)
        rhs = mul(mul(b, probe), c)
        print(f"  x = {render(probe):24s} a*x*b = {render(lhs):10s} "
              f"a*x*c = {render(rhs):10s} equal = {lhs is rhs}")
    print(f"  yet b == c is {b is c}; the offset index hides the factor: "
          f"mu(b) = {mu(b)}, mu(c) = {mu(c)}")
    print(f"  invariant subgroup: in_w(pi(1)) = {in_w(b)}, "
          f"in_w(pi(0)) = {in_w(make_pi([0]))}")

    print("\nCentral-generator witness (variant C): zeta1 = 2, zeta2 = 3")
    om0 = make_omega(0, 1)
    z1, z2 = make_int(2, C), make_int(3, C)
    for probe in (make_stable(make_int(1, C), make_int(2, C)),
                  add(make_int(4, C), make_omega(0, 2))):
        lhs = mul(mul(om0, probe), z1)
        rhs = mul(mul(om0, probe), z2)
        print(f"  tau = {render(probe):22s} om(0)*tau*2 = {render(lhs):8s} "
              f"om(0)*tau*3 = {render(rhs):8s} equal = {lhs is rhs}")
    print(f"  membership in the image subgroup of om(0): "
          f"om(1) -> {in_h(om0, make_omega(1, 1))}, 1 -> {in_h(om0, make_int(1, C))}")

    print("\nLeft distributivity fails (nearring, not ring):")
    lhs = mul(x, add(one, one))
    rhs = add(mul(x, one), mul(x, one))
    show("t[1,-1] * (1+1)        =", lhs)
    show("t[1,-1]*1 + t[1,-1]*1  =", rhs)
    print(f"  equal = {lhs is rhs}")


if __name__ == "__main__":
    main()
