"""Truncated integer power series in non-commuting variables.

A variable is a pair (g, i): a group element tag and a generator index.  To
keep monomial arithmetic cheap, variables are interned into small integer ids
and a monomial is a tuple of ids.  Ordering between variables is *not* fixed at
interning time: every ordering-sensitive operation takes a ``gcmp`` comparator
on the group tags, because for oracle-indexed variables the tag order is the
oracle's left order, which can be arbitrary.
"""

from __future__ import annotations

from typing import Callable, Dict, Optional, Tuple

VarKey = Tuple[object, int]
Monomial = Tuple[int, ...]
GCmp = Callable[[object, object], int]

_VAR_IDS: Dict[VarKey, int] = {}
_VAR_KEYS: list[VarKey] = []


def var_id(g, i: int) -> int:
    """Intern the variable (g, i) and return its id."""
    key = (g, i)
    vid = _VAR_IDS.get(key)
    if vid is None:
        vid = len(_VAR_KEYS)
        _VAR_IDS[key] = vid
        _VAR_KEYS.append(key)
    return vid


def var_key(vid: int) -> VarKey:
    return _VAR_KEYS[vid]


def default_gcmp(a, b) -> int:
    """Natural comparison, for plain integer or tuple tags."""
    return (a > b) - (a < b)


def var_cmp(v1: int, v2: int, gcmp: GCmp) -> int:
    if v1 == v2:
        return 0
    g1, i1 = _VAR_KEYS[v1]
    g2, i2 = _VAR_KEYS[v2]
    c = gcmp(g1, g2)
    if c:
        return c
    return (i1 > i2) - (i1 < i2)


def shortlex_cmp(m1: Monomial, m2: Monomial, gcmp: GCmp = default_gcmp) -> int:
    """Shorter monomials first, ties broken letter by letter."""
    if len(m1) != len(m2):
        return -1 if len(m1) < len(m2) else 1
    for v1, v2 in zip(m1, m2):
        c = var_cmp(v1, v2, gcmp)
        if c:
            return c
    return 0


class NCSeries:
    """Integer series truncated at total degree `cap`; zero coefficients are
    never stored."""

    __slots__ = ("cap", "terms")

    def __init__(self, cap: int, terms: Optional[Dict[Monomial, int]] = None):
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        self.cap = cap
        self.terms: Dict[Monomial, int] = terms if terms is not None else {}

    def constant(self) -> int:
        return self.terms.get((), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NCSeries)
            and self.cap == other.cap
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.cap, frozenset(self.terms.items())))

    def __repr__(self):
        return f"NCSeries(cap={self.cap}, terms={self.terms!r})"


def series_const(c: int, cap: int) -> NCSeries:
    return NCSeries(cap, {(): c} if c else {})


def _check_caps(f: NCSeries, g: NCSeries) -> None:
    if f.cap != g.cap:
        raise ValueError(f"cap mismatch: {f.cap} != {g.cap}")


def add(f: NCSeries, g: NCSeries) -> NCSeries:
    _check_caps(f, g)
    terms = dict(f.terms)
    for mono, coeff in g.terms.items():
        new = terms.get(mono, 0) + coeff
        if new:
            terms[mono] = new
        else:
            terms.pop(mono, None)
    return NCSeries(f.cap, terms)


def neg(f: NCSeries) -> NCSeries:
    return NCSeries(f.cap, {mono: -coeff for mono, coeff in f.terms.items()})


def sub(f: NCSeries, g: NCSeries) -> NCSeries:
    return add(f, neg(g))


def mul_trunc(f: NCSeries, g: NCSeries) -> NCSeries:
    _check_caps(f, g)
    cap = f.cap
    terms: Dict[Monomial, int] = {}
    for m1, c1 in f.terms.items():
        room = cap - len(m1)
        for m2, c2 in g.terms.items():
            if len(m2) > room:
                continue
            mono = m1 + m2
            new = terms.get(mono, 0) + c1 * c2
            if new:
                terms[mono] = new
            else:
                del terms[mono]
    return NCSeries(cap, terms)


def gen_series(vid: int, sign: int, cap: int) -> NCSeries:
    """Image of a generator (sign +1) or its inverse (sign -1): 1 + X, or the
    truncated alternating geometric series 1 - X + X^2 - ..."""
    if sign == 1:
        terms: Dict[Monomial, int] = {(): 1}
        if cap >= 1:
            terms[(vid,)] = 1
        return NCSeries(cap, terms)
    if sign == -1:
        terms = {}
        for d in range(cap + 1):
            terms[(vid,) * d] = 1 if d % 2 == 0 else -1
        return NCSeries(cap, terms)
    raise ValueError(f"sign must be +1 or -1, got {sign}")


def leading_nonconst(
    f: NCSeries, gcmp: GCmp = default_gcmp
) -> Optional[Tuple[Monomial, int]]:
    """Shortlex-smallest positive-degree term, or None for constant series."""
    best: Optional[Monomial] = None
    for mono in f.terms:
        if not mono:
            continue
        if best is None or shortlex_cmp(mono, best, gcmp) < 0:
            best = mono
    if best is None:
        return None
    return best, f.terms[best]


def series_cmp(f: NCSeries, g: NCSeries, gcmp: GCmp = default_gcmp) -> int:
    """Compare constants first, then the sign of the leading term of f - g."""
    cf, cg = f.constant(), g.constant()
    if cf != cg:
        return 1 if cf > cg else -1
    diff = sub(f, g)
    lead = leading_nonconst(diff, gcmp)
    if lead is None:
        return 0
    return 1 if lead[1] > 0 else -1


def sorted_terms(f: NCSeries, gcmp: GCmp = default_gcmp) -> list[Tuple[Monomial, int]]:
    """Terms in shortlex order (constant first)."""
    import functools

    monos = sorted(
        f.terms, key=functools.cmp_to_key(lambda a, b: shortlex_cmp(a, b, gcmp))
    )
    return [(m, f.terms[m]) for m in monos]


def render_series(
    f: NCSeries,
    fmt_var: Callable[[object, int], str],
    gcmp: GCmp = default_gcmp,
) -> str:
    """Human-readable rendering like ``1 + X{1} - 2 X{1}X{2}``."""
    if f.is_zero():
        return "0"
    pieces: list[str] = []
    for mono, coeff in sorted_terms(f, gcmp):
        body = "".join(fmt_var(*var_key(v)) for v in mono)
        mag = abs(coeff)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag} {body}"
        if not pieces:
            pieces.append(text if coeff > 0 else f"-{text}")
        else:
            pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
    return " ".join(pieces)
