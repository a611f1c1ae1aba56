"""Nearring structure carried by the tower groups.

Every nonzero element ``zeta`` determines an embedding of the whole group
onto a proper subgroup, sending the designated identity element to
``zeta``.  Integers map to integer multiples of ``zeta`` (basis letters
shift by the index offset of ``zeta`` under the free base), letters map
to letters of the mapped subscripts, and central generators shift level
by the level of ``zeta``.  The product ``a * b`` is the image of ``a``
under the embedding attached to ``b``; composing two embeddings gives
the embedding attached to an image, which is associativity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .word_core import (
    ZERO,
    DegeneratePair,
    Element,
    EngineError,
    IntChunk,
    Seq,
    Variant,
    WordChunk,
    WrongVariant,
    ZeroInput,
    _join_variants,
    add,
    cyclic_reduce,
    make_int,
    make_omega,
    make_pi,
    make_stable,
    neg,
    power_of,
    scale,
    size,
    sum_elements,
    top_letter_count,
)

__all__ = [
    "PreimageResult",
    "ZeroZeta",
    "f_eval",
    "identity_element",
    "in_h",
    "in_w",
    "mu",
    "mul",
    "preimage",
    "preimage_detail",
]


class ZeroZeta(EngineError):
    """The embedding family is indexed by nonzero elements only."""


def identity_element(variant: Variant) -> Element:
    """The multiplicative identity: 1 for the integer bases, pi(0) for
    the free base."""
    if variant is Variant.B_FREE_BASE:
        return make_pi([0])
    return make_int(1, variant)


# ---------------------------------------------------------------------------
# The basis offset of variant B
# ---------------------------------------------------------------------------

_MU_CACHE: dict = {}


def mu(gamma: Element) -> int:
    """Largest basis index in the hereditary support of ``gamma``
    (base chunks plus, recursively, letter subscripts); 0 when only
    pi(0) occurs.  Governs where the embedding of ``gamma`` sends the
    basis: pi(i) goes to pi(mu(gamma) + i) for i > 0."""
    if gamma is ZERO:
        raise ZeroInput("the basis offset is defined for nonzero elements")
    if gamma.variant is not Variant.B_FREE_BASE:
        raise WrongVariant("the basis offset belongs to the free-base tower")
    return _mu_walk(gamma)


def _mu_walk(x: Element) -> int:
    hit = _MU_CACHE.get(x)
    if hit is not None:
        return hit
    if isinstance(x, WordChunk):
        best = max(abs(c) - 1 for c in x.letters)
    else:
        best = 0
        for m, (_sign, lt) in enumerate(x.letters):
            c = x.coeffs[m]
            if c is not ZERO:
                best = max(best, _mu_walk(c))
            best = max(best, _mu_walk(lt.alpha), _mu_walk(lt.beta))
        last = x.coeffs[-1]
        if last is not ZERO:
            best = max(best, _mu_walk(last))
    _MU_CACHE[x] = best
    return best


# ---------------------------------------------------------------------------
# The embeddings
# ---------------------------------------------------------------------------

_F_CACHE: dict = {}


def f_eval(zeta: Element, x: Element) -> Element:
    """Image of ``x`` under the embedding attached to nonzero ``zeta``.

    Structural on canonical forms, then renormalized: integers scale,
    pi(0) maps to ``zeta`` and pi(i) to the offset letter, ``t[a,b]``
    maps to ``t[image a, image b]``, ``om(j)`` to ``om(level(zeta)+j)``.
    The identity element is a fixed point index: ``f_eval(1, x) = x``.
    """
    if zeta is ZERO:
        raise ZeroZeta("embeddings are attached to nonzero elements")
    _join_variants(zeta.variant, x.variant)
    if x is ZERO:
        return ZERO
    key = (zeta, x)
    hit = _F_CACHE.get(key)
    if hit is None:
        hit = _F_CACHE.setdefault(key, _f_raw(zeta, x))
    return hit


def _f_raw(zeta: Element, x: Element) -> Element:
    if isinstance(x, IntChunk):
        return scale(x.n, zeta)
    if isinstance(x, WordChunk):
        mz = mu(zeta)
        pieces = []
        for idx, e in _word_syllables(x):
            if idx == 0:
                pieces.append(scale(e, zeta))
            else:
                pieces.append(make_pi([(mz + idx, e)]))
        return sum_elements(pieces)
    pieces = []
    for m, (sign, lt) in enumerate(x.letters):
        c = x.coeffs[m]
        if c is not ZERO:
            pieces.append(f_eval(zeta, c))
        pieces.append(make_stable(f_eval(zeta, lt.alpha), f_eval(zeta, lt.beta), sign))
    last = x.coeffs[-1]
    if last is not ZERO:
        pieces.append(f_eval(zeta, last))
    if x.omega:
        pieces.append(make_omega(zeta.level + x.level - 1, x.omega))
    return sum_elements(pieces)


def _word_syllables(w: WordChunk):
    """Runs of equal basis letters as (index, signed exponent) pairs."""
    out = []
    for code in w.letters:
        idx = abs(code) - 1
        e = 1 if code > 0 else -1
        if out and out[-1][0] == idx:
            out[-1] = (idx, out[-1][1] + e)
        else:
            out.append((idx, e))
    return out


def mul(a: Element, b: Element) -> Element:
    """Nearring product: the image of ``a`` under the embedding of ``b``;
    zero annihilates on both sides."""
    _join_variants(a.variant, b.variant)
    if b is ZERO:
        return ZERO
    return f_eval(b, a)


# ---------------------------------------------------------------------------
# Inverse images and the invariant subgroups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PreimageResult:
    """Outcome of an inverse-image search.

    ``reason`` is ``ok``, ``no_parse`` (some component failed to invert)
    or ``ambiguous_parse`` (a candidate was built but failed the final
    verification), so suite failures stay attributable.
    """

    element: Optional[Element]
    reason: str


def preimage_detail(zeta: Element, x: Element) -> PreimageResult:
    """Sound inverse image: any returned element maps back onto ``x``
    exactly (checked before returning)."""
    if zeta is ZERO:
        raise ZeroZeta("embeddings are attached to nonzero elements")
    _join_variants(zeta.variant, x.variant)
    if x is ZERO:
        return PreimageResult(ZERO, "ok")
    y = _invert(zeta, x)
    if y is None:
        return PreimageResult(None, "no_parse")
    if f_eval(zeta, y) is not x:
        return PreimageResult(None, "ambiguous_parse")
    return PreimageResult(y, "ok")


def preimage(zeta: Element, x: Element) -> Optional[Element]:
    return preimage_detail(zeta, x).element


def _scalar_preimage(k: int, variant: Variant) -> Element:
    if variant is Variant.B_FREE_BASE:
        return make_pi([(0, k)])
    return make_int(k, variant)


def _invert(zeta: Element, x: Element) -> Optional[Element]:
    if x is ZERO:
        return ZERO
    k = power_of(x, zeta)
    if k is not None:
        return _scalar_preimage(k, zeta.variant)
    if isinstance(x, IntChunk):
        return None
    if isinstance(x, WordChunk):
        return _invert_word(zeta, x)
    if (zeta.variant is Variant.B_FREE_BASE and zeta.level >= 1
            and x.level == zeta.level):
        # blocks spelling powers of zeta and images of basis letters can
        # interleave at this one level; peel generators off the left
        return _peel_invert(zeta, x)
    out = ZERO
    for m, (sign, lt) in enumerate(x.letters):
        c = x.coeffs[m]
        if c is not ZERO:
            ci = _invert(zeta, c)
            if ci is None:
                return None
            out = add(out, ci)
        ai = _invert(zeta, lt.alpha)
        bi = _invert(zeta, lt.beta)
        if ai is None or bi is None:
            return None
        try:
            out = add(out, make_stable(ai, bi, sign))
        except DegeneratePair:
            return None
    last = x.coeffs[-1]
    if last is not ZERO:
        ci = _invert(zeta, last)
        if ci is None:
            return None
        out = add(out, ci)
    if x.omega:
        oi = _invert_omega(zeta, x.level - 1, x.omega)
        if oi is None:
            return None
        out = add(out, oi)
    return out


def _peel_invert(zeta: Element, x: Element) -> Optional[Element]:
    """Greedy left-to-right parse of an element sitting at the level of
    ``zeta`` itself.  The leftmost atom is either an image of a basis
    letter (index above the offset of ``zeta``), an image letter (both
    subscripts invert), or the head of a block spelling ``zeta``; the
    three cases cannot overlap, so peeling is deterministic on genuine
    images and the final verification rejects everything else."""
    mz = mu(zeta)
    out = []
    v = x
    for _ in range(4 * size(x) + 8):
        if v is ZERO:
            return sum_elements(out)
        k = power_of(v, zeta)
        if k is not None:
            out.append(_scalar_preimage(k, zeta.variant))
            return sum_elements(out)
        atom = _leftmost_atom(v)
        ginv = _invert_atom(zeta, mz, atom)
        if ginv is not None:
            nxt = add(neg(atom), v)
            if _peel_better(nxt, v, zeta.level):
                out.append(ginv)
                v = nxt
                continue
        stripped = False
        for sign in (1, -1):
            cand = add(scale(-sign, zeta), v)
            if _peel_better(cand, v, zeta.level):
                out.append(make_pi([(0, sign)]))
                v = cand
                stripped = True
                break
        if not stripped:
            return None
    return None


def _leftmost_atom(v: Element) -> Element:
    while isinstance(v, Seq):
        head = v.coeffs[0]
        if head is not ZERO:
            v = head
            continue
        sign, lt = v.letters[0]
        return make_stable(lt.alpha, lt.beta, sign)
    if isinstance(v, WordChunk):
        code = v.letters[0]
        return make_pi([(abs(code) - 1, 1 if code > 0 else -1)])
    return v


def _invert_atom(zeta: Element, mz: int, atom: Element) -> Optional[Element]:
    if isinstance(atom, WordChunk):
        code = atom.letters[0]
        idx = abs(code) - 1
        if idx <= mz:
            return None
        return make_pi([(idx - mz, 1 if code > 0 else -1)])
    if isinstance(atom, Seq) and len(atom.letters) == 1:
        sign, lt = atom.letters[0]
        ai = _invert(zeta, lt.alpha)
        bi = _invert(zeta, lt.beta)
        if ai is None or bi is None:
            return None
        try:
            return make_stable(ai, bi, sign)
        except DegeneratePair:
            return None
    return None


def _peel_better(cand: Element, v: Element, lvl: int) -> bool:
    return ((top_letter_count(cand, lvl), size(cand))
            < (top_letter_count(v, lvl), size(v)))


def _invert_omega(zeta: Element, om_index: int, m: int) -> Optional[Element]:
    piece = make_omega(om_index, m)
    k = power_of(piece, zeta)
    if k is not None:
        return make_int(k, zeta.variant)
    j = om_index - zeta.level
    if j >= 0:
        return make_omega(j, m)
    return None


def _invert_word(zeta: Element, w: WordChunk) -> Optional[Element]:
    """Greedy parse of a free-base chunk into blocks spelling powers of
    ``zeta`` and offset basis letters.  Sound because the caller verifies
    the candidate; complete on canonical images because block shells and
    offset letters cannot overlap."""
    mz = mu(zeta)
    if zeta.level == 0:
        d, core = cyclic_reduce(zeta)
        xs = neg(d).letters if d is not ZERO else ()
        cs = core.letters
        xe = d.letters if d is not ZERO else ()
        ics = tuple(-c for c in reversed(cs))
    else:
        xs = cs = xe = ics = None
    target = w.letters
    n = len(target)
    items = []
    pos = 0
    while pos < n:
        if cs is not None:
            blk = _match_block(target, pos, xs, cs, xe, ics)
            if blk is not None:
                consumed, k = blk
                items.append((0, k))
                pos += consumed
                continue
        code = target[pos]
        idx = abs(code) - 1
        if idx <= mz:
            return None
        items.append((idx - mz, 1 if code > 0 else -1))
        pos += 1
    return make_pi(items)


def _match_block(target, pos, xs, cs, xe, ics):
    p = pos
    for c in xs:
        if p >= len(target) or target[p] != c:
            return None
        p += 1
    sgn, body = 1, cs
    if target[p:p + len(cs)] != cs:
        sgn, body = -1, ics
    r = 0
    while tuple(target[p:p + len(body)]) == body:
        p += len(body)
        r += 1
    if r == 0:
        return None
    for c in xe:
        if p >= len(target) or target[p] != c:
            return None
        p += 1
    return p - pos, sgn * r


def in_w(x: Element) -> bool:
    """Membership in the invariant subgroup generated by the positive
    basis letters: hereditarily, no pi(0) in any base chunk and both
    subscripts of every letter again members."""
    if x is ZERO:
        return True
    if x.variant is not Variant.B_FREE_BASE:
        raise WrongVariant("this subgroup lives in the free-base tower")
    return _w_walk(x)


def _w_walk(x: Element) -> bool:
    if x is ZERO:
        return True
    if isinstance(x, WordChunk):
        return all(abs(c) >= 2 for c in x.letters)
    for m, (_sign, lt) in enumerate(x.letters):
        if not (_w_walk(x.coeffs[m]) and _w_walk(lt.alpha) and _w_walk(lt.beta)):
            return False
    return _w_walk(x.coeffs[-1])


def in_h(zeta: Element, x: Element) -> bool:
    """Membership in the image subgroup of the embedding attached to
    ``zeta``, decided through the inverse-image search."""
    if zeta is ZERO:
        raise ZeroZeta("embeddings are attached to nonzero elements")
    return preimage(zeta, x) is not None


def clear_caches():
    _MU_CACHE.clear()
    _F_CACHE.clear()
