"""Exact arithmetic for towers of HNN extensions.

Starting from a base group (the integers, the integers extended stage by
stage with central generators, or a free group of countable rank), every
stage of the tower adjoins one free letter ``t[a,b]`` per ordered pair of
distinct nonzero elements already present, subject to the single relation
``-t[a,b] + a + t[a,b] = b``.  Iterating forever yields a group in which
any two distinct nonzero elements are conjugate.

Elements are immutable, interned, and always canonical: alternating
coefficient/letter sequences that are pinch free and whose coefficient in
front of each letter is a fixed representative of the coset of the cyclic
subgroup attached to that letter.  Structural equality of canonical forms
is therefore equality in the group.  The group law is written additively
throughout even though the group is highly nonabelian.
"""

from __future__ import annotations

import enum
from typing import Iterable, Optional, Tuple, Union

__all__ = [
    "DegeneratePair",
    "Element",
    "EngineError",
    "IntChunk",
    "Seq",
    "StableLetter",
    "Variant",
    "VariantMismatch",
    "WordChunk",
    "WrongVariant",
    "ZERO",
    "ZeroAlpha",
    "ZeroInput",
    "add",
    "conjugator",
    "cyclic_reduce",
    "equal",
    "level",
    "make_int",
    "make_omega",
    "make_pi",
    "make_stable",
    "neg",
    "power_of",
    "renormalize",
    "scale",
    "size",
    "sum_elements",
    "top_letter_count",
]


class EngineError(Exception):
    """Base class for every error raised by the engine."""


class WrongVariant(EngineError):
    """A constructor was used under a variant that does not admit it."""


class VariantMismatch(EngineError):
    """Operands belong to different tower variants."""


class DegeneratePair(EngineError):
    """Letter subscripts must be distinct and nonzero."""


class ZeroInput(EngineError):
    """The operation requires a nonzero element."""


class ZeroAlpha(EngineError):
    """Power membership needs a nonzero subgroup generator."""


class Variant(enum.Enum):
    """Which of the three towers the engine is running.

    ``A_INT_BASE`` starts from the integers, ``B_FREE_BASE`` from a free
    group on basis letters ``pi(0), pi(1), ...`` with ``pi(0)`` acting as
    the multiplicative identity of the nearring layer, and
    ``C_INT_OMEGA_BASE`` from the integers but with an extra central
    generator ``om(i)`` adjoined at every stage.
    """

    A_INT_BASE = "A"
    B_FREE_BASE = "B"
    C_INT_OMEGA_BASE = "C"

    @property
    def int_base(self) -> bool:
        return self is not Variant.B_FREE_BASE


def _join_variants(u: Optional[Variant], v: Optional[Variant]) -> Optional[Variant]:
    if u is None:
        return v
    if v is None or u is v:
        return u
    raise VariantMismatch(f"cannot mix variant {u.value} with variant {v.value}")


# ---------------------------------------------------------------------------
# Element representation
# ---------------------------------------------------------------------------

class Element:
    """A canonical element of the tower group.

    Instances are immutable and interned; two elements are equal in the
    group exactly when they are the same object.  ``level`` is the first
    stage of the tower containing the element (-1 for zero), ``variant``
    is the tower it lives in (None for zero, which belongs to all three).
    """

    __slots__ = ()

    level: int = -1
    variant: Optional[Variant] = None

    def _size(self) -> int:
        raise NotImplementedError


class _Zero(Element):
    __slots__ = ()

    def __repr__(self):
        return "0"

    def _size(self):
        return 0


ZERO = _Zero()


class IntChunk(Element):
    """Nonzero base integer, variants A and C."""

    __slots__ = ("n", "variant", "_hash")

    level = 0

    def __init__(self, n: int, variant: Variant):
        self.n = n
        self.variant = variant
        self._hash = hash((1, n, variant))

    def __repr__(self):
        return str(self.n)

    def __hash__(self):
        return self._hash

    def _size(self):
        return abs(self.n)


class WordChunk(Element):
    """Nonempty reduced word over the free basis, variant B.

    ``letters`` holds signed codes: ``+(i+1)`` for ``pi(i)`` and
    ``-(i+1)`` for its inverse.
    """

    __slots__ = ("letters", "_hash")

    level = 0
    variant = Variant.B_FREE_BASE

    def __init__(self, letters: Tuple[int, ...]):
        self.letters = letters
        self._hash = hash((2, letters))

    def __repr__(self):
        return "p(" + ",".join(map(str, self.letters)) + ")"

    def __hash__(self):
        return self._hash

    def _size(self):
        return len(self.letters)


class StableLetter:
    """The letter ``t[alpha,beta]``, identified by its ordered subscript pair."""

    __slots__ = ("alpha", "beta", "level", "variant", "_hash", "_sz")

    def __init__(self, alpha: Element, beta: Element):
        self.alpha = alpha
        self.beta = beta
        self.level = max(alpha.level, beta.level) + 1
        self.variant = _join_variants(alpha.variant, beta.variant)
        self._hash = hash((3, alpha, beta))
        self._sz = 1 + alpha._size() + beta._size()

    def __repr__(self):
        return f"t[{self.alpha!r},{self.beta!r}]"

    def __hash__(self):
        return self._hash


#: a signed letter is a pair (sign, StableLetter) with sign in {+1, -1}
SignedLetter = Tuple[int, StableLetter]


class Seq(Element):
    """Leveled alternating sequence ``c0 s1 c1 ... sk ck`` plus, under
    variant C, an integer coefficient of the central generator of this
    level (kept rightmost).

    Invariants (enforced by the normalizer, assumed everywhere else):
    letters all have letter level equal to ``level``; coefficients live
    strictly below; no pinches; each coefficient in front of a letter is
    the canonical representative of its coset; ``letters`` nonempty or
    ``omega`` nonzero.
    """

    __slots__ = ("level", "variant", "coeffs", "letters", "omega", "_hash", "_sz", "_rp")

    def __init__(self, lvl, variant, coeffs, letters, omega):
        self.level = lvl
        self.variant = variant
        self.coeffs = coeffs
        self.letters = letters
        self.omega = omega
        self._hash = hash((4, lvl, variant, coeffs, letters, omega))
        sz = abs(omega)
        for c in coeffs:
            sz += c._size()
        for sign, lt in letters:
            sz += lt._sz
        self._sz = sz
        self._rp = None

    def __repr__(self):
        if self._rp is None:
            parts = []
            for m, (sign, lt) in enumerate(self.letters):
                c = self.coeffs[m]
                if c is not ZERO:
                    parts.append(repr(c))
                parts.append(("" if sign > 0 else "-") + repr(lt))
            last = self.coeffs[-1]
            if last is not ZERO:
                parts.append(repr(last))
            if self.omega:
                parts.append(f"{self.omega}w{self.level - 1}")
            self._rp = "{" + "+".join(parts) + "}"
        return self._rp

    def __hash__(self):
        return self._hash

    def _size(self):
        return self._sz


# interning tables; value identity stands in for structural equality,
# and setdefault keeps racing constructors harmless under threads
_INT_CACHE: dict = {}
_WORD_CACHE: dict = {}
_LETTER_CACHE: dict = {}
_SEQ_CACHE: dict = {}


def _intern_int(n, variant):
    key = (n, variant)
    el = _INT_CACHE.get(key)
    if el is None:
        el = _INT_CACHE.setdefault(key, IntChunk(n, variant))
    return el


def _intern_word(letters):
    el = _WORD_CACHE.get(letters)
    if el is None:
        el = _WORD_CACHE.setdefault(letters, WordChunk(letters))
    return el


def _intern_letter(alpha, beta):
    key = (alpha, beta)
    lt = _LETTER_CACHE.get(key)
    if lt is None:
        lt = _LETTER_CACHE.setdefault(key, StableLetter(alpha, beta))
    return lt


def _intern_seq(lvl, variant, coeffs, letters, omega):
    key = (lvl, variant, coeffs, letters, omega)
    el = _SEQ_CACHE.get(key)
    if el is None:
        el = _SEQ_CACHE.setdefault(key, Seq(lvl, variant, coeffs, letters, omega))
    return el


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def make_int(n: int, variant: Variant = Variant.A_INT_BASE) -> Element:
    """Base integer chunk; ``make_int(0)`` is the zero element."""
    if not variant.int_base:
        raise WrongVariant("bare integers are not elements of the free-base tower")
    if n == 0:
        return ZERO
    return _intern_int(n, variant)


def make_pi(word: Iterable[Union[int, Tuple[int, int]]]) -> Element:
    """Free-base word (variant B) from basis indices.

    Items are either a plain index ``i`` (meaning ``pi(i)``) or a pair
    ``(i, e)`` meaning ``pi(i)`` raised to the integer power ``e``.
    """
    raw = []
    for item in word:
        if isinstance(item, tuple):
            idx, exp = item
        else:
            idx, exp = item, 1
        if idx < 0:
            raise WrongVariant("basis indices are natural numbers")
        code = idx + 1 if exp > 0 else -(idx + 1)
        raw.extend([code] * abs(exp))
    reduced = _reduce_word_letters(raw)
    if not reduced:
        return ZERO
    return _intern_word(tuple(reduced))


def make_omega(j: int, m: int = 1) -> Element:
    """Central generator ``om(j)`` scaled by ``m`` (variant C only)."""
    if j < 0:
        raise WrongVariant("omega indices are natural numbers")
    if m == 0:
        return ZERO
    return _intern_seq(j + 1, Variant.C_INT_OMEGA_BASE, (ZERO,), (), m)


def make_stable(alpha: Element, beta: Element, sign: int = 1) -> Element:
    """The element consisting of the single signed letter ``t[alpha,beta]``."""
    lt = _letter(alpha, beta)
    if sign not in (1, -1):
        raise EngineError("letter sign must be +1 or -1")
    return _intern_seq(lt.level, lt.variant, (ZERO, ZERO), ((sign, lt),), 0)


def _letter(alpha: Element, beta: Element) -> StableLetter:
    if alpha is ZERO or beta is ZERO:
        raise DegeneratePair("letter subscripts must be nonzero")
    if alpha is beta:
        raise DegeneratePair("letter subscripts must be distinct")
    _join_variants(alpha.variant, beta.variant)
    return _intern_letter(alpha, beta)


def _signed_letter_element(sign: int, lt: StableLetter) -> Element:
    return _intern_seq(lt.level, lt.variant, (ZERO, ZERO), ((sign, lt),), 0)


# ---------------------------------------------------------------------------
# Free-word helpers (variant B base chunks)
# ---------------------------------------------------------------------------

def _reduce_word_letters(codes):
    out = []
    for c in codes:
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    return out


def _word_from(codes) -> Element:
    if not codes:
        return ZERO
    return _intern_word(tuple(codes))


def _word_neg(w: WordChunk) -> Element:
    return _intern_word(tuple(-c for c in reversed(w.letters)))


# ---------------------------------------------------------------------------
# Basic queries
# ---------------------------------------------------------------------------

def level(a: Element) -> int:
    """First tower stage containing ``a``; zero sits at stage -1."""
    return a.level


def size(a: Element) -> int:
    """Hereditary weight: base magnitude / word length, plus one per
    signed letter plus the sizes of its subscripts."""
    return a._size()


def top_letter_count(a: Element, lvl: int) -> int:
    """Number of signed letters of ``a`` at stage ``lvl`` (0 if below)."""
    if isinstance(a, Seq) and a.level == lvl:
        return len(a.letters)
    return 0


def equal(a: Element, b: Element) -> bool:
    """Group equality; canonical forms make this an identity check."""
    _join_variants(a.variant, b.variant)
    return a is b


def conjugator(alpha: Element, beta: Element) -> Element:
    """The letter conjugating ``alpha`` to ``beta``:
    ``-t[alpha,beta] + alpha + t[alpha,beta]`` normalizes to ``beta``."""
    return make_stable(alpha, beta, 1)


# ---------------------------------------------------------------------------
# The normalizer
# ---------------------------------------------------------------------------

def _items_of(x: Element, lvl: int):
    """Syllable stream of ``x`` viewed inside stage ``lvl`` plus its
    central coefficient at that stage."""
    if x is ZERO:
        return [], 0
    if x.level < lvl:
        return [x], 0
    items = []
    for m, sl in enumerate(x.letters):
        c = x.coeffs[m]
        if c is not ZERO:
            items.append(c)
        items.append(sl)
    last = x.coeffs[-1]
    if last is not ZERO:
        items.append(last)
    return items, x.omega


def _assemble(lvl: int, items, omega: int, variant: Variant) -> Element:
    """Normalize an alternating stream of lower-level elements and signed
    stage-``lvl`` letters into a canonical element.

    One left-to-right pass: each accumulated coefficient is split against
    the cyclic subgroup of the next letter, the subgroup part is pushed
    through the letter (changing generator), and a letter meeting its
    inverse across a coefficient that lies entirely in the subgroup is
    cancelled as a pinch.  Cancellations cascade through the stack.
    """
    acc = ZERO
    pairs = []  # (coset representative, signed letter)
    for it in items:
        if isinstance(it, Element):
            if it is not ZERO:
                acc = add(acc, it)
            continue
        sign, lt = it
        gen_in = lt.alpha if sign > 0 else lt.beta
        gen_out = lt.beta if sign > 0 else lt.alpha
        r, j = _coset_split(acc, gen_in)
        if r is ZERO and pairs and pairs[-1][1][1] is lt and pairs[-1][1][0] == -sign:
            prev, _ = pairs.pop()
            acc = add(prev, scale(j, gen_out))
        else:
            pairs.append((r, it))
            acc = scale(j, gen_out)
    if not pairs:
        if omega == 0:
            return acc
        return _intern_seq(lvl, variant, (acc,), (), omega)
    coeffs = tuple(r for r, _ in pairs) + (acc,)
    letters = tuple(sl for _, sl in pairs)
    return _intern_seq(lvl, variant, coeffs, letters, omega)


def add(a: Element, b: Element) -> Element:
    """Group sum of two canonical elements, in canonical form."""
    if a is ZERO:
        return b
    if b is ZERO:
        return a
    v = _join_variants(a.variant, b.variant)
    lvl = a.level if a.level >= b.level else b.level
    if lvl == 0:
        if v is Variant.B_FREE_BASE:
            return _word_from(_reduce_word_letters(list(a.letters) + list(b.letters)))
        return make_int(a.n + b.n, v)
    ia, oa = _items_of(a, lvl)
    ib, ob = _items_of(b, lvl)
    return _assemble(lvl, ia + ib, oa + ob, v)


def sum_elements(pieces) -> Element:
    """Ordered sum of many elements, folded pairwise so long chains cost
    ``n log n`` normalizations instead of ``n**2``."""
    items = [p for p in pieces if p is not ZERO]
    if not items:
        return ZERO
    while len(items) > 1:
        items = [add(items[i], items[i + 1]) if i + 1 < len(items) else items[i]
                 for i in range(0, len(items), 2)]
    return items[0]


def neg(a: Element) -> Element:
    """Group inverse; ``add(a, neg(a))`` is zero."""
    if a is ZERO:
        return ZERO
    if isinstance(a, IntChunk):
        return _intern_int(-a.n, a.variant)
    if isinstance(a, WordChunk):
        return _word_neg(a)
    items = []
    k = len(a.letters)
    last = a.coeffs[-1]
    if last is not ZERO:
        items.append(neg(last))
    for m in range(k - 1, -1, -1):
        sign, lt = a.letters[m]
        items.append((-sign, lt))
        c = a.coeffs[m]
        if c is not ZERO:
            items.append(neg(c))
    return _assemble(a.level, items, -a.omega, a.variant)


_MATERIALIZE_LIMIT = 2_000_000


def scale(k: int, a: Element) -> Element:
    """Integer multiple ``k*a`` (k-fold sum), computed through the
    cyclically reduced core so the cost is linear in ``k``."""
    if k == 0 or a is ZERO:
        return ZERO
    if k == 1:
        return a
    if isinstance(a, IntChunk):
        return _intern_int(k * a.n, a.variant)
    d, core = cyclic_reduce(a)
    if not isinstance(core, IntChunk) and abs(k) * max(1, core._size()) > _MATERIALIZE_LIMIT:
        raise EngineError(
            f"refusing to materialize a {abs(k)}-fold power of an element "
            f"of size {core._size()}")
    if isinstance(core, IntChunk):
        kc = _intern_int(k * core.n, core.variant)
    elif isinstance(core, WordChunk):
        letters = core.letters if k > 0 else tuple(-c for c in reversed(core.letters))
        kc = _intern_word(letters * abs(k))
    else:
        single, om = _items_of(core, core.level)
        if k < 0:
            rev = []
            kk = len(core.letters)
            last = core.coeffs[-1]
            if last is not ZERO:
                rev.append(neg(last))
            for m in range(kk - 1, -1, -1):
                sign, lt = core.letters[m]
                rev.append((-sign, lt))
                c = core.coeffs[m]
                if c is not ZERO:
                    rev.append(neg(c))
            single = rev
        kc = _assemble(core.level, single * abs(k), k * om, core.variant)
    if d is ZERO:
        return kc
    return add(add(neg(d), kc), d)


def renormalize(a: Element) -> Element:
    """Rebuild ``a`` from scratch through the public constructors.

    Canonical forms are fixed points; used as the idempotence oracle."""
    if a is ZERO:
        return ZERO
    if isinstance(a, IntChunk):
        return make_int(a.n, a.variant)
    if isinstance(a, WordChunk):
        return make_pi([(abs(c) - 1, 1 if c > 0 else -1) for c in a.letters])
    out = ZERO
    for m, (sign, lt) in enumerate(a.letters):
        c = a.coeffs[m]
        if c is not ZERO:
            out = add(out, renormalize(c))
        out = add(out, make_stable(renormalize(lt.alpha), renormalize(lt.beta), sign))
    last = a.coeffs[-1]
    if last is not ZERO:
        out = add(out, renormalize(last))
    if a.omega:
        out = add(out, make_omega(a.level - 1, a.omega))
    return out


# ---------------------------------------------------------------------------
# Cyclic reduction
# ---------------------------------------------------------------------------

_CYCLIC_CACHE: dict = {}


def cyclic_reduce(a: Element):
    """Split ``a = -c + core + c`` with ``core`` cyclically reduced,
    meaning ``core + core`` carries exactly twice the top-level letters
    of ``core`` (no cancellation or pinch across the junction)."""
    if a is ZERO:
        raise ZeroInput("cannot cyclically reduce zero")
    hit = _CYCLIC_CACHE.get(a)
    if hit is not None:
        return hit
    d = ZERO
    cur = a
    while True:
        if isinstance(cur, IntChunk):
            break
        if isinstance(cur, WordChunk):
            letters = cur.letters
            while len(letters) >= 2 and letters[0] == -letters[-1]:
                head = _word_from([letters[0]])
                d = add(neg(head), d)
                letters = letters[1:-1]
            cur = _word_from(list(letters))
            break
        k = len(cur.letters)
        if k == 0:
            break
        doubled = add(cur, cur)
        if top_letter_count(doubled, cur.level) == 2 * k:
            break
        c0 = cur.coeffs[0]
        if c0 is not ZERO:
            cur = add(add(neg(c0), cur), c0)
            d = add(neg(c0), d)
        else:
            sign, lt = cur.letters[0]
            s_el = _signed_letter_element(sign, lt)
            cur = add(add(neg(s_el), cur), s_el)
            d = add(neg(s_el), d)
    res = (d, cur)
    _CYCLIC_CACHE[a] = res
    return res


# ---------------------------------------------------------------------------
# Coset representatives
# ---------------------------------------------------------------------------

_SPLIT_CACHE: dict = {}


def _coset_split(c: Element, gen: Element):
    """Write ``c = r + j*gen`` where ``r`` is the canonical representative
    of the coset ``{c + k*gen}``.  The choice of representative depends
    only on the coset, which is what makes the normal form unique."""
    if c is ZERO:
        return ZERO, 0
    key = (c, gen)
    hit = _SPLIT_CACHE.get(key)
    if hit is not None:
        return hit
    k = _shift_any(c, gen)
    if k == 0:
        res = (c, 0)
    else:
        res = (add(c, scale(k, gen)), -k)
    _SPLIT_CACHE[key] = res
    return res


def _shift_any(e: Element, gen: Element) -> int:
    d, core = cyclic_reduce(gen)
    if d is not ZERO:
        e = add(e, neg(d))
    return _rep_shift(e, core)


def _rep_shift(e: Element, a: Element) -> int:
    """Canonical shift ``k`` such that ``e + k*a`` represents the coset
    ``{e + k*a : k}``; ``a`` must be cyclically reduced and nonzero."""
    if e is ZERO:
        return 0
    if e.level > a.level:
        # a merges into the trailing coefficient, which no letter guards
        return _rep_shift(e.coeffs[-1], a)
    if isinstance(a, IntChunk):
        ev = e.n
        r0 = ev % abs(a.n)
        return (r0 - ev) // a.n
    if isinstance(a, WordChunk):
        return _walk_argmin(e, a, len(e.letters) if isinstance(e, WordChunk) else 0,
                            len(a.letters))
    # a is a Seq
    p = len(a.letters)
    if a.variant is Variant.C_INT_OMEGA_BASE and p == 0:
        a_k = a.coeffs[0]
        if isinstance(e, Seq) and e.level == a.level:
            e_k, e_m = _k_part(e), e.omega
        else:
            e_k, e_m = e, 0
        if a_k is ZERO:
            r0 = e_m % abs(a.omega)
            return (r0 - e_m) // a.omega
        return _shift_any(e_k, a_k)
    le = top_letter_count(e, a.level)
    return _walk_argmin(e, a, le, p)


def _k_part(e: Seq) -> Element:
    if len(e.letters) == 0:
        return e.coeffs[0]
    if e.omega == 0:
        return e
    return _intern_seq(e.level, e.variant, e.coeffs, e.letters, 0)


def _walk_argmin(e: Element, a: Element, le: int, p: int) -> int:
    """Pick the coset representative among ``e + k*a``.

    Walk both directions from ``e``.  Once an append is clean (the letter
    count grows by exactly the count of the cyclically reduced ``a``) all
    later appends are clean too, so no representative candidates lie
    beyond the first clean step; the candidate set therefore contains
    every letter-count minimizer of the coset no matter which member the
    walk starts from, which keeps the choice coset-invariant."""
    lvl = a.level
    cap = (2 * le) // p + 4
    cands = [(_metric(e, lvl), 0, e)]
    for step, sgn in ((a, 1), (neg(a), -1)):
        x = e
        prev = cands[0][0]
        for k in range(1, cap + 1):
            x = add(x, step)
            m = _metric(x, lvl)
            cands.append((m, sgn * k, x))
            if m == prev + p:
                break
            prev = m
    best_m = min(c[0] for c in cands)
    pool = [c for c in cands if c[0] == best_m]
    if len(pool) > 1:
        best_s = min(c[2]._size() for c in pool)
        pool = [c for c in pool if c[2]._size() == best_s]
        if len(pool) > 1:
            pool.sort(key=lambda c: repr(c[2]))
    return pool[0][1]


def _metric(x: Element, lvl: int) -> int:
    if lvl == 0:
        return len(x.letters) if isinstance(x, WordChunk) else 0
    return top_letter_count(x, lvl)


# ---------------------------------------------------------------------------
# Power membership
# ---------------------------------------------------------------------------

_POWER_CACHE: dict = {}


def power_of(g: Element, alpha: Element) -> Optional[int]:
    """Exact decision of ``g = k*alpha``: returns the integer ``k`` when it
    exists (0 exactly for ``g`` zero), ``None`` otherwise.

    Conjugating by the shell of ``alpha`` reduces the question to a
    cyclically reduced core, where the exponent can be read off from
    base arithmetic or from top-level letter counts."""
    if alpha is ZERO:
        raise ZeroAlpha("power membership needs a nonzero generator")
    _join_variants(g.variant, alpha.variant)
    if g is ZERO:
        return 0
    key = (g, alpha)
    if key in _POWER_CACHE:
        return _POWER_CACHE[key]
    d, core = cyclic_reduce(alpha)
    if d is ZERO:
        h = g
    else:
        h = add(add(d, g), neg(d))
    res = _power_of_core(h, core)
    _POWER_CACHE[key] = res
    return res


def _power_of_core(h: Element, a: Element) -> Optional[int]:
    if h is ZERO:
        return 0
    if isinstance(a, IntChunk):
        if isinstance(h, IntChunk) and h.n % a.n == 0:
            return h.n // a.n
        return None
    if isinstance(a, WordChunk):
        if not isinstance(h, WordChunk):
            return None
        la, lh = len(a.letters), len(h.letters)
        if lh % la:
            return None
        k = lh // la
        if h.letters == a.letters * k:
            return k
        if h.letters == tuple(-c for c in reversed(a.letters)) * k:
            return -k
        return None
    # a is a Seq
    if not isinstance(h, Seq) or h.level != a.level:
        return None
    p = len(a.letters)
    if p == 0:
        a_k, a_m = a.coeffs[0], a.omega
        if len(h.letters) != 0:
            return None
        h_k, h_m = h.coeffs[0], h.omega
        if a_k is ZERO:
            if h_k is not ZERO:
                return None
            q, r = divmod(h_m, a_m)
            return q if r == 0 else None
        k = power_of(h_k, a_k)
        if k is not None and h_m == k * a_m:
            return k
        return None
    if len(h.letters) % p:
        return None
    k0 = len(h.letters) // p
    for k in (k0, -k0):
        if scale(k, a) is h:
            return k
    return None


# ---------------------------------------------------------------------------
# Cache maintenance
# ---------------------------------------------------------------------------

def clear_caches():
    """Drop memoized results (interning tables stay)."""
    _CYCLIC_CACHE.clear()
    _SPLIT_CACHE.clear()
    _POWER_CACHE.clear()
