"""Generalized torsion certificates: a nontrivial base element together with
conjugators whose product of conjugates is the identity.  Existence of such an
element obstructs bi-orderability, so the search must come back empty on any
bi-orderable oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .words import FreeWord


@dataclass(frozen=True)
class GenTorsionCertificate:
    base: FreeWord
    conjugators: Tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.conjugators) < 1:
            raise ValueError("a certificate needs at least one conjugator")


def verify_certificate(oracle, cert: GenTorsionCertificate) -> bool:
    """Evaluate (c1^-1 g c1) ... (ck^-1 g ck) in the oracle; true iff the
    product is the identity and g is not."""
    g = oracle.eval_word(cert.base)
    if oracle.is_identity(g):
        return False
    acc = oracle.identity()
    for conj in cert.conjugators:
        c = oracle.eval_word(conj)
        acc = oracle.mul(acc, oracle.mul(oracle.mul(oracle.inv(c), g), c))
    return oracle.is_identity(acc)


def _ball_words(oracle, radius: int) -> list[FreeWord]:
    """Generator words of length <= radius, first word per distinct element,
    in breadth-first order."""
    seen = {oracle.key(oracle.identity())}
    out: list[FreeWord] = [()]
    frontier: list[Tuple[FreeWord, object]] = [((), oracle.identity())]
    n = oracle.rank()
    steps = [i for j in range(1, n + 1) for i in (j, -j)]
    for _ in range(radius):
        nxt = []
        for word, elem in frontier:
            for letter in steps:
                gen = oracle.generators()[abs(letter) - 1]
                if letter < 0:
                    gen = oracle.inv(gen)
                h = oracle.mul(elem, gen)
                k = oracle.key(h)
                if k not in seen:
                    seen.add(k)
                    out.append(word + (letter,))
                    nxt.append((word + (letter,), h))
        frontier = nxt
    return out


def search_certificate(
    oracle, base: FreeWord, max_k: int, radius: int
) -> Optional[GenTorsionCertificate]:
    """Exhaustive scan over conjugator tuples drawn from the ball of the given
    radius; returns the first verified certificate in enumeration order."""
    if max_k > 3 or radius > 3:
        raise ValueError("search is bounded to max_k <= 3 and radius <= 3")
    if max_k < 1 or radius < 0:
        raise ValueError("max_k must be >= 1 and radius >= 0")
    words = _ball_words(oracle, radius)
    for k in range(1, max_k + 1):
        for conjugators in itertools.product(words, repeat=k):
            cert = GenTorsionCertificate(tuple(base), conjugators)
            if verify_certificate(oracle, cert):
                return cert
    return None
