"""Words in the free group F_n and in the free product F_n * G.

A free word is a tuple of nonzero signed integers: letter ``+i`` is the i-th
generator, ``-i`` its inverse.  A mixed word is a tuple of syllables, each
either ``("f", freeword)`` with a nonempty reduced free word or ``("g", elem)``
with a non-identity element of the group oracle; adjacent syllables always have
different kinds (free-product normal form).  All values are plain immutable
tuples, so every operation here is a pure function.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

FreeWord = Tuple[int, ...]
Syllable = Tuple[str, object]
MixedWord = Tuple[Syllable, ...]

EMPTY: FreeWord = ()
MIXED_EMPTY: MixedWord = ()


def reduce_word(letters: Iterable[int], rank: int | None = None) -> FreeWord:
    """Freely reduce a raw letter sequence.

    Idempotent; raises ValueError on a zero letter or an index above `rank`.
    """
    out: list[int] = []
    for letter in letters:
        if letter == 0:
            raise ValueError("letter index 0 is not a generator")
        if rank is not None and abs(letter) > rank:
            raise ValueError(f"letter index {abs(letter)} exceeds rank {rank}")
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def inv_word(w: FreeWord) -> FreeWord:
    return tuple(-letter for letter in reversed(w))


def mul_words(u: FreeWord, v: FreeWord) -> FreeWord:
    return reduce_word(u + v)


def cyclic_reduce(w: FreeWord) -> FreeWord:
    w = reduce_word(w)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


def free_syllable(w: FreeWord) -> Syllable:
    return ("f", w)


def group_syllable(g) -> Syllable:
    return ("g", g)


def embed_free(w: FreeWord) -> MixedWord:
    """Canonical image of a free word in the free product."""
    return (("f", w),) if w else ()


def mixed_normalize(syllables: Sequence[Syllable], oracle) -> MixedWord:
    """Normal form in F_n * G: merge and reduce adjacent like syllables, drop
    trivial ones."""
    stack: list[list] = []
    for kind, value in syllables:
        if kind == "f":
            value = reduce_word(value, oracle.rank())
            if not value:
                continue
        elif kind == "g":
            if oracle.is_identity(value):
                continue
        else:
            raise ValueError(f"unknown syllable kind {kind!r}")
        while True:
            if not stack or stack[-1][0] != kind:
                stack.append([kind, value])
                break
            _, prev = stack.pop()
            if kind == "f":
                value = reduce_word(prev + value)
                if not value:
                    break
            else:
                value = oracle.mul(prev, value)
                if oracle.is_identity(value):
                    break
    return tuple((kind, value) for kind, value in stack)


def mixed_inv(u: MixedWord, oracle) -> MixedWord:
    out: list[Syllable] = []
    for kind, value in reversed(u):
        if kind == "f":
            out.append(("f", inv_word(value)))
        else:
            out.append(("g", oracle.inv(value)))
    return tuple(out)


def mixed_mul(u: MixedWord, v: MixedWord, oracle) -> MixedWord:
    return mixed_normalize(u + v, oracle)


def pi1(u: MixedWord, oracle):
    """The retraction F_n * G -> G: s_i goes to the i-th oracle generator,
    G-syllables stay put."""
    gens = oracle.generators()
    acc = oracle.identity()
    for kind, value in u:
        if kind == "f":
            for letter in value:
                image = gens[abs(letter) - 1]
                if letter < 0:
                    image = oracle.inv(image)
                acc = oracle.mul(acc, image)
        else:
            acc = oracle.mul(acc, value)
    return acc


def pi2(w: FreeWord, oracle):
    """The natural epimorphism F_n -> G on the designated generating tuple."""
    return pi1(embed_free(reduce_word(w, oracle.rank())), oracle)
