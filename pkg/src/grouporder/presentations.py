"""Finitely presented group inputs: the line-oriented file format, named
fixtures, and relator bookkeeping.

File format::

    gens: a1 a2 a3 a4 b
    rel: a2^-1 a1 a2 a1^-2
    rel: ...

Relator tokens are generator names with optional ``^<exponent>``.  Relators
are stored freely and cyclically reduced over signed generator indices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Tuple

from .words import FreeWord, cyclic_reduce

_TOKEN_RE = re.compile(r"^(\S+?)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class Presentation:
    gens: Tuple[str, ...]
    relators: Tuple[FreeWord, ...]

    def __post_init__(self):
        if len(set(self.gens)) != len(self.gens):
            raise ValueError("generator names must be distinct")
        object.__setattr__(
            self, "relators", tuple(cyclic_reduce(r) for r in self.relators)
        )
        for r in self.relators:
            for letter in r:
                if not 1 <= abs(letter) <= len(self.gens):
                    raise ValueError(f"relator letter {letter} out of range")

    @property
    def ngens(self) -> int:
        return len(self.gens)

    def is_balanced(self) -> bool:
        return len(self.relators) == len(self.gens)


def parse_relator(text: str, gens: Tuple[str, ...]) -> FreeWord:
    index = {name: i + 1 for i, name in enumerate(gens)}
    raw: list[int] = []
    for token in text.split():
        match = _TOKEN_RE.match(token)
        if not match or match.group(1) not in index:
            raise ValueError(f"unknown generator in relator token {token!r}")
        i = index[match.group(1)]
        power = int(match.group(2)) if match.group(2) is not None else 1
        sign = 1 if power > 0 else -1
        raw.extend([sign * i] * abs(power))
    return tuple(raw)


def parse_presentation(text: str) -> Presentation:
    gens: Tuple[str, ...] | None = None
    relators: list[FreeWord] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("gens:"):
            if gens is not None:
                raise ValueError(f"line {lineno}: duplicate gens line")
            gens = tuple(line[len("gens:"):].split())
        elif line.startswith("rel:"):
            if gens is None:
                raise ValueError(f"line {lineno}: rel before gens")
            relators.append(parse_relator(line[len("rel:"):], gens))
        else:
            raise ValueError(f"line {lineno}: expected 'gens:' or 'rel:'")
    if gens is None:
        raise ValueError("missing gens line")
    return Presentation(gens, tuple(relators))


def format_presentation(pres: Presentation) -> str:
    lines = ["gens: " + " ".join(pres.gens)]
    for rel in pres.relators:
        tokens = []
        for letter in rel:
            name = pres.gens[abs(letter) - 1]
            tokens.append(name if letter > 0 else f"{name}^-1")
        lines.append("rel: " + " ".join(tokens))
    return "\n".join(lines) + "\n"


def higman() -> Presentation:
    """The 4-generator 4-relator group with no nontrivial finite quotients."""
    gens = ("a1", "a2", "a3", "a4")
    rels = []
    for k in range(4):
        a, b = k + 1, (k + 1) % 4 + 1
        # b^-1 a b a^-2
        rels.append((-b, a, b, -a, -a))
    return Presentation(gens, tuple(rels))


def _power(letter: int, exponent: int) -> FreeWord:
    sign = 1 if exponent > 0 else -1
    return (sign * letter,) * abs(exponent)


def bs_presentation(p: int, q: int) -> Presentation:
    """BS(p,q) = <b, t | t^-1 b^p t b^-q>."""
    if p == 0 or q == 0:
        raise ValueError("BS(p,q) requires nonzero p and q")
    relator = (-2,) + _power(1, p) + (2,) + _power(1, -q)
    return Presentation(("b", "t"), (relator,))


def lemma41(m: int = 1) -> Presentation:
    """The balanced 5-generator group: the Higman relators plus
    a1^-1 b^(2m) a1 b^-(2m+1)."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    gens = ("a1", "a2", "a3", "a4", "b")
    rels = list(higman().relators)
    b, a1 = 5, 1
    rels.append((-a1,) + (b,) * (2 * m) + (a1,) + (-b,) * (2 * m + 1))
    return Presentation(gens, tuple(rels))


def fixture(name: str) -> Presentation:
    """Resolve a built-in fixture name: ``higman``, ``lemma41``,
    ``lemma41:m=<int>``, ``BS(p,q)``."""
    if name == "higman":
        return higman()
    if name == "lemma41":
        return lemma41()
    match = re.match(r"^lemma41:m=(\d+)$", name)
    if match:
        return lemma41(int(match.group(1)))
    match = re.match(r"^BS\((-?\d+),(-?\d+)\)$", name)
    if match:
        return bs_presentation(int(match.group(1)), int(match.group(2)))
    raise KeyError(f"unknown fixture {name!r}")


def load(source: str) -> Presentation:
    """Resolve a fixture name or read a presentation file."""
    try:
        return fixture(source)
    except KeyError:
        with open(source, "r", encoding="utf-8") as fh:
            return parse_presentation(fh.read())
