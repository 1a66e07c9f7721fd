"""The fiber product P of the retraction F_n * G -> G and the natural map
F_n -> G, its splitting as (free kernel) x| F_n, the conjugation action of F_n
on the kernel basis, and the induced bi-order.

The order compares the F_n quotient first (Magnus order on F_n) and the kernel
second (Magnus order on the G-indexed basis); cone invariance under the action
makes this a bi-order.
"""

from __future__ import annotations

from typing import Optional, Tuple

from . import magnus
from .errors import NotInFiber, OracleMismatch
from .magnus import KernelWord, kreduce
from .rs import substitute, tau
from .words import (
    FreeWord,
    MixedWord,
    embed_free,
    inv_word,
    mixed_inv,
    mixed_mul,
    pi1,
    pi2,
    reduce_word,
)

LEVEL_QUOTIENT = "quotient"
LEVEL_KERNEL = "kernel"


class FiberElement:
    """A pair (u, v) in (F_n * G) x F_n with pi1(u) = pi2(v).

    Immutable; the kernel/quotient decomposition is computed on demand and
    cached (write-once, safe under concurrent reads).
    """

    __slots__ = ("u", "v", "oracle", "_decomposition")

    def __init__(self, u: MixedWord, v: FreeWord, oracle):
        g1 = pi1(u, oracle)
        g2 = pi2(v, oracle)
        if not oracle.is_identity(oracle.mul(oracle.inv(g1), g2)):
            raise NotInFiber(oracle.key(g1), oracle.key(g2))
        self.u = u
        self.v = v
        self.oracle = oracle
        self._decomposition: Optional[Tuple[KernelWord, FreeWord]] = None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiberElement)
            and self.oracle is other.oracle
            and self.u == other.u
            and self.v == other.v
        )

    def __hash__(self):
        return hash((self.u, self.v))

    def __repr__(self):
        return f"FiberElement(u={self.u!r}, v={self.v!r})"


def make(u: MixedWord, v: FreeWord, oracle) -> FiberElement:
    return FiberElement(u, reduce_word(v, oracle.rank()), oracle)


def identity(oracle) -> FiberElement:
    return FiberElement((), (), oracle)


def _check(p: FiberElement, q: FiberElement) -> None:
    if p.oracle is not q.oracle:
        raise OracleMismatch("fiber elements built over different oracles")


def mul(p: FiberElement, q: FiberElement) -> FiberElement:
    _check(p, q)
    return FiberElement(
        mixed_mul(p.u, q.u, p.oracle), reduce_word(p.v + q.v), p.oracle
    )


def inv(p: FiberElement) -> FiberElement:
    return FiberElement(mixed_inv(p.u, p.oracle), inv_word(p.v), p.oracle)


def decompose(p: FiberElement) -> Tuple[KernelWord, FreeWord]:
    """Split p as (kernel word, quotient word): u = substitute(k) * v."""
    if p._decomposition is None:
        residue = mixed_mul(p.u, mixed_inv(embed_free(p.v), p.oracle), p.oracle)
        p._decomposition = (tau(residue, p.oracle), p.v)
    return p._decomposition


def compose(k: KernelWord, v: FreeWord, oracle) -> FiberElement:
    v = reduce_word(v, oracle.rank())
    u = mixed_mul(substitute(k, oracle), embed_free(v), oracle)
    return FiberElement(u, v, oracle)


def act_letter(i: int, sign: int, k: KernelWord, oracle) -> KernelWord:
    """Conjugation by s_i^sign on the kernel, via the closed formulas
    s_i . x_{g,j} = x_{1,i} x_{tg,j} x_{1,i}^-1 and
    s_i^-1 . x_{g,j} = x_{t^-1,i}^-1 x_{t^-1 g,j} x_{t^-1,i} (t the image of
    s_i in G), applied letterwise."""
    one = oracle.identity()
    t = oracle.generators()[i - 1]
    out = []
    if sign > 0:
        for g, j, eps in k:
            out.append((one, i, 1))
            out.append((oracle.mul(t, g), j, eps))
            out.append((one, i, -1))
    else:
        tinv = oracle.inv(t)
        for g, j, eps in k:
            out.append((tinv, i, -1))
            out.append((oracle.mul(tinv, g), j, eps))
            out.append((tinv, i, 1))
    return kreduce(out)


def act(w: FreeWord, k: KernelWord, oracle) -> KernelWord:
    """Left action of F_n by conjugation, folded rightmost letter first so
    that act(w1 w2, k) = act(w1, act(w2, k))."""
    for letter in reversed(reduce_word(w, oracle.rank())):
        k = act_letter(abs(letter), 1 if letter > 0 else -1, k, oracle)
    return k


def fiber_is_positive(p: FiberElement) -> bool:
    k, v = decompose(p)
    if v:
        return magnus.is_positive(magnus.free_to_kernel(v))
    return magnus.is_positive(k, p.oracle.cmp)


def fiber_cmp_level(p: FiberElement, q: FiberElement) -> Tuple[int, Optional[str]]:
    """Compare in the quotient-first order; also report which level decided."""
    _check(p, q)
    k, v = decompose(mul(inv(p), q))
    if v:
        c = magnus.magnus_cmp(magnus.free_to_kernel(v), ())
        return (magnus.LESS if c > 0 else magnus.GREATER), LEVEL_QUOTIENT
    if k:
        c = magnus.magnus_cmp(k, (), p.oracle.cmp)
        return (magnus.LESS if c > 0 else magnus.GREATER), LEVEL_KERNEL
    return magnus.EQUAL, None


def fiber_cmp(p: FiberElement, q: FiberElement) -> int:
    return fiber_cmp_level(p, q)[0]
