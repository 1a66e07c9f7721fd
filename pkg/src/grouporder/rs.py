"""Subgroup rewriting between ker(pi1) <= F_n * G and its free basis.

The kernel of the retraction pi1 is freely generated by the conjugates
x_{g,i} = g s_i t_i^-1 g^-1 (t_i the i-th oracle generator).  ``tau`` rewrites
a kernel element of the free product into that basis by a single left-to-right
scan that tracks the image of the processed prefix in G; ``substitute`` is the
inverse, replacing each basis letter by its defining word.
"""

from __future__ import annotations

from .errors import NotInKernel
from .magnus import KernelWord, kreduce
from .words import MixedWord, mixed_normalize


def tau(w: MixedWord, oracle) -> KernelWord:
    """Rewrite a kernel element into the free basis x_{g,i}.

    Raises NotInKernel when the word does not map to 1 in G; the check happens
    only at the end of the scan, since prefix images may wander freely.
    """
    gens = oracle.generators()
    state = oracle.identity()
    out = []
    for kind, value in w:
        if kind == "f":
            for letter in value:
                i = abs(letter)
                if letter > 0:
                    out.append((state, i, 1))
                    state = oracle.mul(state, gens[i - 1])
                else:
                    state = oracle.mul(state, oracle.inv(gens[i - 1]))
                    out.append((state, i, -1))
        else:
            state = oracle.mul(state, value)
    if not oracle.is_identity(state):
        raise NotInKernel(oracle.key(state))
    return kreduce(out)


def substitute(k: KernelWord, oracle) -> MixedWord:
    """Replace each x_{g,i}^±1 by its defining word in F_n * G and normalize."""
    gens = oracle.generators()
    syllables = []
    for g, i, sign in k:
        t = gens[i - 1]
        if sign > 0:
            # g s_i t^-1 g^-1
            syllables.append(("g", g))
            syllables.append(("f", (i,)))
            syllables.append(("g", oracle.inv(oracle.mul(g, t))))
        else:
            # g t s_i^-1 g^-1
            syllables.append(("g", oracle.mul(g, t)))
            syllables.append(("f", (-i,)))
            syllables.append(("g", oracle.inv(g)))
    return mixed_normalize(syllables, oracle)
