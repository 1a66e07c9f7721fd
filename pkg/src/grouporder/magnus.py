"""The Magnus embedding of free groups into non-commuting power series and the
decidable bi-order it induces.

Kernel words are reduced words in free generators indexed by pairs (g, i): a
group-element tag and a generator index 1..n.  Plain free-group words embed by
tagging every letter with 0, which reduces the variable order to the index
order X_1 < X_2 < ...  Comparison expands both words at increasing degree caps
until the difference series shows a nonzero term; injectivity of the embedding
guarantees this terminates, and a hard cap is installed as an engineering
guard.
"""

from __future__ import annotations

import functools
from typing import Optional, Tuple

from .ncseries import (
    GCmp,
    NCSeries,
    default_gcmp,
    gen_series,
    leading_nonconst,
    mul_trunc,
    series_const,
    sub,
    var_id,
)
from .words import FreeWord

KernelLetter = Tuple[object, int, int]  # (g, index, sign)
KernelWord = Tuple[KernelLetter, ...]

LESS, EQUAL, GREATER = -1, 0, 1

KERNEL_EMPTY: KernelWord = ()


def kreduce(letters) -> KernelWord:
    """Free reduction in the letters x_{g,i}."""
    out: list[KernelLetter] = []
    for g, i, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        if out and out[-1][0] == g and out[-1][1] == i and out[-1][2] == -sign:
            out.pop()
        else:
            out.append((g, i, sign))
    return tuple(out)


def kinv(w: KernelWord) -> KernelWord:
    return tuple((g, i, -sign) for g, i, sign in reversed(w))


def kmul(u: KernelWord, v: KernelWord) -> KernelWord:
    return kreduce(u + v)


def free_to_kernel(w: FreeWord) -> KernelWord:
    """Tag a plain free-group word so the Magnus machinery applies to it."""
    return tuple((0, abs(letter), 1 if letter > 0 else -1) for letter in w)


@functools.lru_cache(maxsize=1 << 16)
def _expand(w: KernelWord, cap: int) -> NCSeries:
    n = len(w)
    if n == 0:
        return series_const(1, cap)
    if n == 1:
        g, i, sign = w[0]
        return gen_series(var_id(g, i), sign, cap)
    half = n // 2
    return mul_trunc(_expand(w[:half], cap), _expand(w[half:], cap))


def expand(w, cap: int) -> NCSeries:
    """Image of a kernel word under the embedding, truncated at degree `cap`.

    The constant term is always 1.
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    return _expand(kreduce(w), cap)


def _cap_schedule(hard_cap: int):
    cap = 2
    while cap < hard_cap:
        yield cap
        cap *= 2
    yield hard_cap


def magnus_cmp_at(w1: KernelWord, w2: KernelWord, cap: int, gcmp: GCmp) -> int:
    """Single-shot comparison at a fixed cap (sign of the leading difference
    term, 0 if none appears below the cap)."""
    lead = leading_nonconst(sub(expand(w1, cap), expand(w2, cap)), gcmp)
    if lead is None:
        return EQUAL
    return GREATER if lead[1] > 0 else LESS


def magnus_cmp_cap(
    w1, w2, gcmp: GCmp = default_gcmp
) -> Tuple[int, Optional[int]]:
    """Compare two words in the Magnus order; also report the deciding cap
    (None when the words are identical)."""
    w1 = kreduce(w1)
    w2 = kreduce(w2)
    if w1 == w2:
        return EQUAL, None
    hard_cap = 2 * (len(w1) + len(w2)) + 2
    for cap in _cap_schedule(hard_cap):
        result = magnus_cmp_at(w1, w2, cap, gcmp)
        if result != EQUAL:
            return result, cap
    raise RuntimeError(
        "Magnus comparison did not decide below the hard cap "
        f"{hard_cap}; this contradicts injectivity of the embedding"
    )


def magnus_cmp(w1, w2, gcmp: GCmp = default_gcmp) -> int:
    return magnus_cmp_cap(w1, w2, gcmp)[0]


def is_positive(w, gcmp: GCmp = default_gcmp) -> bool:
    """Membership in the positive cone: w > 1."""
    return magnus_cmp(w, KERNEL_EMPTY, gcmp) == GREATER
