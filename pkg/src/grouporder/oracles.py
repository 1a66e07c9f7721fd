"""Pluggable left-orderable groups with a solvable word problem.

Every oracle supplies exact group arithmetic, a canonical printable key per
element (equal keys iff equal elements), a strict left-invariant total order
``cmp``, and an ordered generating tuple.  Concrete instances: Z^n with the
lexicographic order, the solvable Baumslag-Solitar groups BS(1,m) in affine
normal form with a positive-cone order, and free groups ordered by their own
Magnus bi-order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from . import magnus, syntax
from .words import FreeWord, inv_word, reduce_word


class OrderedGroupOracle:
    """Contract shared by all concrete oracles."""

    name: str

    def identity(self):
        raise NotImplementedError

    def mul(self, g, h):
        raise NotImplementedError

    def inv(self, g):
        raise NotImplementedError

    def is_identity(self, g) -> bool:
        return g == self.identity()

    def cmp(self, g, h) -> int:
        raise NotImplementedError

    def key(self, g) -> str:
        raise NotImplementedError

    def decode(self, literal: str):
        raise NotImplementedError

    def generators(self) -> tuple:
        raise NotImplementedError

    def rank(self) -> int:
        return len(self.generators())

    # Derived helpers -----------------------------------------------------

    def eval_word(self, w: Sequence[int]):
        """Evaluate a word in the generators (signed indices)."""
        gens = self.generators()
        acc = self.identity()
        for letter in w:
            image = gens[abs(letter) - 1]
            if letter < 0:
                image = self.inv(image)
            acc = self.mul(acc, image)
        return acc

    def ball(self, radius: int) -> list:
        """Elements reachable by words of length <= radius, in deterministic
        breadth-first order (identity first)."""
        seen = {self.key(self.identity())}
        order = [self.identity()]
        frontier = [self.identity()]
        steps = [g for gen in self.generators() for g in (gen, self.inv(gen))]
        for _ in range(radius):
            nxt = []
            for g in frontier:
                for s in steps:
                    h = self.mul(g, s)
                    k = self.key(h)
                    if k not in seen:
                        seen.add(k)
                        order.append(h)
                        nxt.append(h)
            frontier = nxt
        return order

    def sample(self, rng, max_len: int):
        """Random element: a random generator word of length <= max_len."""
        length = rng.randint(0, max_len)
        n = self.rank()
        word = [rng.choice((1, -1)) * rng.randint(1, n) for _ in range(length)]
        return self.eval_word(word)


class ZnLexOracle(OrderedGroupOracle):
    """Z^n with coordinatewise addition and the lexicographic order."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("rank must be at least 1")
        self.n = n
        self.name = f"Z^{n}"

    def identity(self):
        return (0,) * self.n

    def mul(self, g, h):
        return tuple(a + b for a, b in zip(g, h))

    def inv(self, g):
        return tuple(-a for a in g)

    def cmp(self, g, h) -> int:
        return (g > h) - (g < h)

    def key(self, g) -> str:
        return ",".join(str(a) for a in g)

    def decode(self, literal: str):
        parts = [p.strip() for p in literal.split(",")]
        if len(parts) != self.n:
            raise syntax.ParseError(
                f"expected {self.n} coordinates in {literal!r}, got {len(parts)}"
            )
        try:
            return tuple(int(p) for p in parts)
        except ValueError as exc:
            raise syntax.ParseError(f"bad integer in {literal!r}") from exc

    def generators(self):
        return tuple(
            tuple(1 if j == i else 0 for j in range(self.n)) for i in range(self.n)
        )


class BSOracle(OrderedGroupOracle):
    """BS(1,m) = <b, t | t b t^-1 = b^m> in the affine normal form (a, k) with
    (a, k)(c, l) = (a + m^k c, k + l), b = (1, 0), t = (0, 1).

    Ordered by the positive cone {k > 0} u {k = 0, a > 0}, which is
    left-invariant for every admissible m including m = -1 (plain
    lexicographic comparison is not).
    """

    def __init__(self, m: int):
        if m in (0, 1):
            raise ValueError("BS(1,m) requires m >= 2 or m = -1")
        if not (m >= 2 or m == -1):
            raise ValueError("BS(1,m) requires m >= 2 or m = -1")
        self.m = m
        self.name = f"BS(1,{m})"

    def identity(self):
        return (Fraction(0), 0)

    def mul(self, g, h):
        a, k = g
        c, l = h
        return (a + Fraction(self.m) ** k * c, k + l)

    def inv(self, g):
        a, k = g
        return (-(Fraction(self.m) ** (-k)) * a, -k)

    def cmp(self, g, h) -> int:
        a, k = self.mul(self.inv(g), h)
        if k != 0:
            return -1 if k > 0 else 1
        if a != 0:
            return -1 if a > 0 else 1
        return 0

    def key(self, g) -> str:
        a, k = g
        return f"{a};k={k}"

    def decode(self, literal: str):
        match = re.match(r"^\s*(-?\d+(?:/\d+)?)\s*;\s*k=(-?\d+)\s*$", literal)
        if not match:
            raise syntax.ParseError(f"bad BS(1,m) literal {literal!r}")
        a = Fraction(match.group(1))
        k = int(match.group(2))
        if self.m == -1:
            if a.denominator != 1:
                raise syntax.ParseError(f"BS(1,-1) element needs an integer, got {a}")
        else:
            d = a.denominator
            while d % abs(self.m) == 0:
                d //= abs(self.m)
            if d != 1:
                raise syntax.ParseError(
                    f"denominator of {a} is not a power of {abs(self.m)}"
                )
        return (a, k)

    def generators(self):
        return ((Fraction(1), 0), (Fraction(0), 1))


class FreeMagnusOracle(OrderedGroupOracle):
    """A free group of finite rank serving as its own ordered oracle via the
    Magnus bi-order on integer-indexed variables."""

    def __init__(self, r: int):
        if r < 1:
            raise ValueError("rank must be at least 1")
        self.r = r
        self.name = f"F{r}"

    def identity(self) -> FreeWord:
        return ()

    def mul(self, g, h):
        return reduce_word(g + h, self.r)

    def inv(self, g):
        return inv_word(g)

    def cmp(self, g, h) -> int:
        return magnus.magnus_cmp(
            magnus.free_to_kernel(g), magnus.free_to_kernel(h)
        )

    def key(self, g) -> str:
        return syntax.format_free_word(g, letter="x")

    def decode(self, literal: str):
        return syntax.parse_free_word(literal, self.r, letter="x")

    def generators(self):
        return tuple((i,) for i in range(1, self.r + 1))


_SPEC_RE = re.compile(r"^(?:Z\^(\d+)|BS\(1,(-?\d+)\)|F(\d+))$")


def oracle_from_spec(spec: str) -> OrderedGroupOracle:
    """Parse an oracle spec string: ``Z^2``, ``BS(1,2)``, ``BS(1,-1)``, ``F2``."""
    match = _SPEC_RE.match(spec.strip())
    if not match:
        raise ValueError(f"unknown group spec {spec!r}")
    zn, bs, fr = match.groups()
    if zn is not None:
        return ZnLexOracle(int(zn))
    if bs is not None:
        return BSOracle(int(bs))
    return FreeMagnusOracle(int(fr))
