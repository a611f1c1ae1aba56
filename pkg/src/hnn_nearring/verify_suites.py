"""Seeded, reproducible verification suites.

Each suite samples elements deterministically from a ``SampleConfig``,
checks one family of desk-checkable claims (nearring axioms, universal
conjugacy, the non-equiprime witnesses, equiprime instances, invariant
subgroup closure, failure of left distributivity) and returns a
machine-readable ``Report``.  Identical configs produce identical
reports; cases are evaluated in stream order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from . import nearring_maps as nr
from . import word_core as wc
from .grammar import render
from .word_core import ZERO, Element, Variant

__all__ = [
    "Report",
    "SampleConfig",
    "check_conjugacy",
    "check_equiprime_instances_A",
    "check_invariant_subgroups",
    "check_nearring_axioms",
    "find_left_distrib_counterexample",
    "sample_element",
    "sample_nonzero",
    "sample_w_element",
    "witness_nonequiprime_B",
    "witness_nonequiprime_C",
]

_MAX_RECORDED_FAILURES = 25


@dataclass(frozen=True)
class SampleConfig:
    """Deterministic generation parameters; equal configs yield equal
    element streams."""

    seed: int = 7
    count: int = 200
    max_level: int = 3
    max_syllables: int = 4
    int_range: Tuple[int, int] = (-6, 6)
    basis_index_range: Tuple[int, int] = (0, 5)
    omega_index_range: Tuple[int, int] = (0, 3)


@dataclass
class Report:
    """Outcome of one suite run; ``passed`` holds exactly when
    ``failures`` is empty."""

    suite_name: str
    variant: Variant
    config: SampleConfig
    cases_run: int
    failures: List[dict] = field(default_factory=list)
    witnesses: List[str] = field(default_factory=list)
    passed: bool = True

    def record(self, inputs, expected, got):
        if len(self.failures) < _MAX_RECORDED_FAILURES:
            self.failures.append(
                {"inputs": list(inputs), "expected": expected, "got": got})
        self.passed = False


# ---------------------------------------------------------------------------
# Deterministic sampling
# ---------------------------------------------------------------------------

def _rng_for(config: SampleConfig, position: int) -> random.Random:
    return random.Random((config.seed & 0xFFFFFFFFFFFFFFFF) * 0x100000000 + position)


def sample_element(config: SampleConfig, position: int, variant: Variant) -> Element:
    """Canonical element of level at most ``max_level``, deterministic in
    ``(seed, position)``.  Target levels cycle with the position so short
    streams already cover every level."""
    rng = _rng_for(config, position)
    if rng.random() < 0.04:
        return ZERO
    target = position % (config.max_level + 1)
    return _gen(rng, config, variant, target, config.max_syllables)


def sample_nonzero(config: SampleConfig, position: int, variant: Variant,
                   max_level: Optional[int] = None) -> Element:
    rng = _rng_for(config, position)
    target = position % ((max_level if max_level is not None else config.max_level) + 1)
    for _ in range(24):
        e = _gen(rng, config, variant, target, config.max_syllables)
        if e is not ZERO:
            return e
        target = rng.randint(0, config.max_level)
    return nr.identity_element(variant)


def _gen_base(rng, config, variant, small=False) -> Element:
    if variant is Variant.B_FREE_BASE:
        lo, hi = config.basis_index_range
        for _ in range(8):
            n = rng.randint(1, 2 if small else 3)
            items = [(rng.randint(lo, hi), rng.choice((1, -1))) for _ in range(n)]
            e = wc.make_pi(items)
            if e is not ZERO:
                return e
        return wc.make_pi([1])
    lo, hi = config.int_range
    if small:
        lo, hi = max(lo, -3), min(hi, 3)
    n = rng.randint(lo, hi)
    if n == 0:
        n = 1
    return wc.make_int(n, variant)


def _gen_exact(rng, config, variant, lvl, budget) -> Element:
    for _ in range(8):
        e = _gen(rng, config, variant, lvl, budget, sub=True)
        if e.level == lvl:
            return e
    return _fallback_exact(variant, lvl)


def _fallback_exact(variant: Variant, lvl: int) -> Element:
    if lvl <= 0:
        return nr.identity_element(variant)
    e = wc.make_pi([1]) if variant is Variant.B_FREE_BASE else wc.make_int(1, variant)
    for _ in range(lvl):
        e = wc.make_stable(e, wc.neg(e))
    return e


def _gen(rng, config, variant, lvl, budget, sub=False) -> Element:
    if lvl <= 0:
        return _gen_base(rng, config, variant, small=sub)
    pieces = []
    syllables = rng.randint(1, max(1, budget))
    sub_budget = max(1, budget - 2)
    for pos in range(syllables):
        roll = rng.random()
        if (variant is Variant.C_INT_OMEGA_BASE and roll < 0.18
                and lvl - 1 <= config.omega_index_range[1]):
            m = rng.randint(-2, 2)
            pieces.append(wc.make_omega(lvl - 1, m if m else 1))
        elif roll < 0.75 or pos == 0:
            pieces.append(_gen_letter(rng, config, variant, lvl, sub_budget))
        else:
            pieces.append(_gen(rng, config, variant, rng.randint(0, lvl - 1),
                               sub_budget, sub=sub))
    out = ZERO
    for p in pieces:
        out = wc.add(out, p)
    return out


def _gen_letter(rng, config, variant, lvl, sub_budget) -> Element:
    """A signed letter whose subscripts have equal sizes (mostly negation
    pairs), so pushing coefficients through sampled words cannot grow
    them geometrically."""
    alpha = _gen_exact(rng, config, variant, lvl - 1, sub_budget)
    beta = wc.neg(alpha)
    if rng.random() >= 0.8:
        for _ in range(3):
            other = _gen(rng, config, variant, rng.randint(0, lvl - 1),
                         sub_budget, sub=True)
            if other is not ZERO and other is not alpha and wc.size(other) == wc.size(alpha):
                beta = other
                break
    if rng.random() < 0.5:
        alpha, beta = beta, alpha
    return wc.make_stable(alpha, beta, rng.choice((1, -1)))


def _distinct_from(alpha: Element, variant: Variant) -> Element:
    one = nr.identity_element(variant)
    if alpha is not one:
        return one
    if variant is Variant.B_FREE_BASE:
        return wc.make_pi([1])
    return wc.make_int(2, variant)


def sample_w_element(config: SampleConfig, position: int) -> Element:
    """Element of the invariant subgroup of variant B, generated only by
    positive-index basis letters and letters over members."""
    rng = _rng_for(config, position)
    target = position % (config.max_level + 1)
    return _gen_w(rng, config, target, config.max_syllables)


def _gen_w(rng, config, lvl, budget) -> Element:
    if lvl <= 0:
        lo, hi = config.basis_index_range
        lo = max(lo, 1)
        for _ in range(8):
            n = rng.randint(1, 3)
            items = [(rng.randint(lo, hi), rng.choice((1, -1))) for _ in range(n)]
            e = wc.make_pi(items)
            if e is not ZERO:
                return e
        return wc.make_pi([1])
    pieces = []
    syllables = rng.randint(1, max(1, budget))
    sub_budget = max(1, budget - 2)
    for pos in range(syllables):
        if rng.random() < 0.75 or pos == 0:
            alpha = _w_exact(rng, config, lvl - 1, sub_budget)
            beta = wc.neg(alpha)
            if rng.random() >= 0.8:
                other = _gen_w(rng, config, rng.randint(0, lvl - 1), sub_budget)
                if other is not ZERO and other is not alpha and wc.size(other) == wc.size(alpha):
                    beta = other
            if rng.random() < 0.5:
                alpha, beta = beta, alpha
            pieces.append(wc.make_stable(alpha, beta, rng.choice((1, -1))))
        else:
            pieces.append(_gen_w(rng, config, rng.randint(0, lvl - 1), sub_budget))
    out = ZERO
    for p in pieces:
        out = wc.add(out, p)
    return out


def _w_exact(rng, config, lvl, budget) -> Element:
    for _ in range(8):
        e = _gen_w(rng, config, lvl, budget)
        if e.level == lvl:
            return e
    e = wc.make_pi([1])
    for _ in range(lvl):
        e = wc.make_stable(e, wc.neg(e))
    return e


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def check_nearring_axioms(variant: Variant, config: SampleConfig) -> Report:
    """Right distributivity, associativity of the product, two-sided
    identity, zero symmetry; sampled triples."""
    rep = Report("nearring_axioms", variant, config, 0)
    one = nr.identity_element(variant)
    for case in range(config.count):
        a = sample_element(config, 3 * case, variant)
        b = sample_element(config, 3 * case + 1, variant)
        c = sample_element(config, 3 * case + 2, variant)
        rep.cases_run += 1
        ins = (render(a), render(b), render(c))
        lhs = nr.mul(wc.add(a, b), c)
        rhs = wc.add(nr.mul(a, c), nr.mul(b, c))
        if lhs is not rhs:
            rep.record(ins, "(a+b)c = ac+bc", f"{render(lhs)} != {render(rhs)}")
        lhs = nr.mul(nr.mul(a, b), c)
        rhs = nr.mul(a, nr.mul(b, c))
        if lhs is not rhs:
            rep.record(ins, "(ab)c = a(bc)", f"{render(lhs)} != {render(rhs)}")
        if nr.mul(a, one) is not a or nr.mul(one, a) is not a:
            rep.record(ins, "a*1 = 1*a = a", render(nr.mul(a, one)))
        if nr.mul(a, ZERO) is not ZERO or nr.mul(ZERO, a) is not ZERO:
            rep.record(ins, "a*0 = 0*a = 0", "nonzero")
    return rep


def check_conjugacy(variant: Variant, config: SampleConfig) -> Report:
    """Any two distinct nonzero elements are conjugate through their
    letter: ``-t + alpha + t`` normalizes exactly to ``beta``."""
    rep = Report("conjugacy", variant, config, 0)
    for case in range(config.count):
        alpha = sample_nonzero(config, 2 * case, variant)
        beta = sample_nonzero(config, 2 * case + 1, variant)
        if alpha is beta:
            beta = _distinct_from(alpha, variant)
        t = wc.conjugator(alpha, beta)
        rep.cases_run += 1
        got = wc.add(wc.add(wc.neg(t), alpha), t)
        if got is not beta:
            rep.record((render(alpha), render(beta)), render(beta), render(got))
    if rep.passed and rep.cases_run:
        rep.witnesses.append("conjugator(alpha,beta) = t[alpha,beta]")
    return rep


def witness_nonequiprime_B(config: SampleConfig) -> Report:
    """With a = b = pi(1) and c = 2*pi(1), the products a*x*b and a*x*c
    agree for every x although b and c differ."""
    variant = Variant.B_FREE_BASE
    rep = Report("nonequiprime_B", variant, config, 0)
    a = wc.make_pi([1])
    b = a
    c = wc.scale(2, a)
    if wc.equal(b, c):
        rep.record(("pi(1)", "2*pi(1)"), "b != c", "equal")
    xs = [ZERO] + [sample_element(config, k, variant) for k in range(config.count)]
    for x in xs:
        rep.cases_run += 1
        lhs = nr.mul(nr.mul(a, x), b)
        rhs = nr.mul(nr.mul(a, x), c)
        if lhs is not rhs:
            rep.record((render(x),), "a*x*b = a*x*c", f"{render(lhs)} != {render(rhs)}")
    rep.witnesses.extend([f"a = b = {render(b)}", f"c = {render(c)}"])
    return rep


def witness_nonequiprime_C(config: SampleConfig, zeta1: int = 2, zeta2: int = 3) -> Report:
    """With distinct integers zeta1, zeta2 outside {0, 1}, the products
    om(0)*tau*zeta1 and om(0)*tau*zeta2 agree for every tau."""
    variant = Variant.C_INT_OMEGA_BASE
    if zeta1 in (0, 1) or zeta2 in (0, 1) or zeta1 == zeta2:
        raise wc.EngineError("witness needs distinct integers outside {0, 1}")
    rep = Report("nonequiprime_C", variant, config, 0)
    om0 = wc.make_omega(0, 1)
    z1 = wc.make_int(zeta1, variant)
    z2 = wc.make_int(zeta2, variant)
    if wc.equal(z1, z2):
        rep.record((str(zeta1), str(zeta2)), "zeta1 != zeta2", "equal")
    taus = [ZERO] + [sample_element(config, k, variant) for k in range(config.count)]
    for tau in taus:
        rep.cases_run += 1
        lhs = nr.mul(nr.mul(om0, tau), z1)
        rhs = nr.mul(nr.mul(om0, tau), z2)
        if lhs is not rhs:
            rep.record((render(tau),), "om(0)*tau*zeta1 = om(0)*tau*zeta2",
                       f"{render(lhs)} != {render(rhs)}")
    rep.witnesses.extend([f"a = {render(om0)}", f"zeta1 = {zeta1}", f"zeta2 = {zeta2}"])
    return rep


def check_equiprime_instances_A(config: SampleConfig) -> Report:
    """Instance evidence that the integer-base nearring is equiprime:
    x = t[1,-1] distinguishes any distinct nonzero b, c against any
    nonzero a, and ``t[1,-1] * b`` is exactly ``t[b,-b]``."""
    variant = Variant.A_INT_BASE
    rep = Report("equiprime_instances_A", variant, config, 0)
    one = wc.make_int(1, variant)
    x = wc.make_stable(one, wc.neg(one))
    for case in range(config.count):
        a = sample_nonzero(config, 3 * case, variant)
        b = sample_nonzero(config, 3 * case + 1, variant)
        c = sample_nonzero(config, 3 * case + 2, variant)
        if b is c:
            c = _distinct_from(b, variant)
        rep.cases_run += 1
        tb = nr.mul(x, b)
        expected_tb = wc.make_stable(b, wc.neg(b))
        if tb is not expected_tb:
            rep.record((render(b),), render(expected_tb), render(tb))
        lhs = nr.mul(nr.mul(a, x), b)
        rhs = nr.mul(nr.mul(a, x), c)
        if lhs is rhs:
            rep.record((render(a), render(b), render(c)),
                       "a*x*b != a*x*c", render(lhs))
    rep.witnesses.append(f"x = {render(x)}")
    return rep


def check_invariant_subgroups(variant: Variant, config: SampleConfig) -> Report:
    """Closure of the designated invariant subgroup under multiplication
    from both sides, plus nontriviality and an empirical properness
    record."""
    rep = Report("invariant_subgroups", variant, config, 0)
    if variant is Variant.B_FREE_BASE:
        pi0, pi1 = wc.make_pi([0]), wc.make_pi([1])
        if nr.in_w(pi0):
            rep.record(("pi(0)",), "in_w(pi(0)) = False", "True")
        if not nr.in_w(pi1):
            rep.record(("pi(1)",), "in_w(pi(1)) = True", "False")
        rep.witnesses.append(f"in_w(pi(0)) = {nr.in_w(pi0)}")
        rep.witnesses.append(f"in_w(pi(1)) = {nr.in_w(pi1)}")
        for case in range(config.count):
            w = sample_w_element(config, 2 * case)
            g = sample_nonzero(config, 2 * case + 1, variant)
            rep.cases_run += 1
            left = nr.mul(g, w)
            right = nr.mul(w, g)
            if not nr.in_w(left):
                rep.record((render(g), render(w)), "g*w in W", render(left))
            if not nr.in_w(right):
                rep.record((render(w), render(g)), "w*g in W", render(right))
        return rep
    if variant is Variant.C_INT_OMEGA_BASE:
        om0 = wc.make_omega(0, 1)
        one = wc.make_int(1, variant)
        if not nr.in_h(om0, om0):
            rep.record(("om(0)",), "in_h(om(0), om(0)) = True", "False")
        rep.witnesses.append(f"in_h(om(0), om(0)) = {nr.in_h(om0, om0)}")
        rep.witnesses.append(f"in_h(om(0), 1) = {nr.in_h(om0, one)}")
        for case in range(config.count):
            y = sample_element(config, 2 * case, variant)
            h = nr.f_eval(om0, y)
            g = sample_nonzero(config, 2 * case + 1, variant)
            rep.cases_run += 1
            left = nr.mul(g, h)
            right = nr.mul(h, g)
            if not nr.in_h(om0, left):
                rep.record((render(g), render(h)), "g*h in H", render(left))
            if not nr.in_h(om0, right):
                rep.record((render(h), render(g)), "h*g in H", render(right))
        return rep
    raise wc.WrongVariant("no designated invariant subgroup under variant A")


def find_left_distrib_counterexample(variant: Variant, config: SampleConfig) -> Report:
    """Search sampled triples for c*(a+b) != c*a + c*b; passes exactly
    when a counterexample turns up, witnessing that the structure is a
    nearring and not a ring."""
    rep = Report("left_distrib_counterexample", variant, config, 0)
    for case in range(config.count):
        c = sample_element(config, 3 * case, variant)
        a = sample_element(config, 3 * case + 1, variant)
        b = sample_element(config, 3 * case + 2, variant)
        rep.cases_run += 1
        lhs = nr.mul(c, wc.add(a, b))
        rhs = wc.add(nr.mul(c, a), nr.mul(c, b))
        if lhs is not rhs:
            rep.witnesses.extend(
                [f"c = {render(c)}", f"a = {render(a)}", f"b = {render(b)}",
                 f"c*(a+b) = {render(lhs)}", f"c*a + c*b = {render(rhs)}"])
            return rep
    rep.record(("<stream>",), "a left-distributivity counterexample", "none found")
    return rep
