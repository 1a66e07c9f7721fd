"""Finite target groups as multiplication tables.

Elements are indices 0..order-1.  Symmetric groups are built from permutation
tuples in lexicographic order (the identity is index 0).  Group axioms are
validated at load: identity and inverses always, associativity exhaustively up
to order 24 and on a fixed sample above that (tables built from permutation
composition are associative by construction).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple


@dataclass
class FiniteGroupTable:
    name: str
    order: int
    mul: List[List[int]]
    identity: int
    inv: List[int]

    def __post_init__(self):
        n = self.order
        if len(self.mul) != n or any(len(row) != n for row in self.mul):
            raise ValueError("multiplication table has wrong shape")
        e = self.identity
        for a in range(n):
            if self.mul[e][a] != a or self.mul[a][e] != a:
                raise ValueError(f"identity axiom fails at element {a}")
            b = self.inv[a]
            if self.mul[a][b] != e or self.mul[b][a] != e:
                raise ValueError(f"inverse axiom fails at element {a}")
        triples = (
            itertools.product(range(n), repeat=3)
            if n <= 24
            else _sample_triples(n)
        )
        for a, b, c in triples:
            if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]:
                raise ValueError(f"associativity fails at ({a},{b},{c})")

    def eval_word(self, word: Sequence[int], images: Sequence[int]) -> int:
        """Evaluate a relator word (signed generator indices) under an
        assignment of generator images."""
        acc = self.identity
        for letter in word:
            g = images[abs(letter) - 1]
            if letter < 0:
                g = self.inv[g]
            acc = self.mul[acc][g]
        return acc


def _sample_triples(n: int, count: int = 2000):
    # Deterministic pseudo-sample; the full check is cubic in the order.
    state = 0x9E3779B9
    for _ in range(count):
        state = (state * 0x5DEECE66D + 11) % (1 << 48)
        a = state % n
        b = (state >> 16) % n
        c = (state >> 32) % n
        yield a, b, c


def symmetric_group(n: int) -> FiniteGroupTable:
    """S_n on {0,...,n-1}; permutations indexed in lexicographic order."""
    if n < 1:
        raise ValueError("symmetric group needs n >= 1")
    perms: List[Tuple[int, ...]] = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    order = len(perms)
    mul = [
        [index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms
    ]
    identity = index[tuple(range(n))]
    inv = [0] * order
    for i, p in enumerate(perms):
        q = [0] * n
        for a, b in enumerate(p):
            q[b] = a
        inv[i] = index[tuple(q)]
    return FiniteGroupTable(f"S{n}", order, mul, identity, inv)


def parse_table(text: str, name: str = "table") -> FiniteGroupTable:
    """User-supplied table: a line ``order=m`` then m rows of m indices."""
    lines = [l.strip() for l in text.splitlines() if l.strip() and not l.startswith("#")]
    match = re.match(r"^order=(\d+)$", lines[0]) if lines else None
    if not match:
        raise ValueError("table file must start with 'order=<m>'")
    order = int(match.group(1))
    if len(lines) != order + 1:
        raise ValueError(f"expected {order} table rows, got {len(lines) - 1}")
    mul = [[int(x) for x in line.split()] for line in lines[1:]]
    identity = next(
        (e for e in range(order) if all(mul[e][a] == a and mul[a][e] == a for a in range(order))),
        None,
    )
    if identity is None:
        raise ValueError("table has no identity element")
    inv = []
    for a in range(order):
        b = next((b for b in range(order) if mul[a][b] == identity), None)
        if b is None:
            raise ValueError(f"element {a} has no inverse")
        inv.append(b)
    return FiniteGroupTable(name, order, mul, identity, inv)


def target_from_spec(spec: str) -> FiniteGroupTable:
    """``S<k>`` for a symmetric group, otherwise a table file path."""
    match = re.match(r"^S(\d+)$", spec)
    if match:
        return symmetric_group(int(match.group(1)))
    with open(spec, "r", encoding="utf-8") as fh:
        return parse_table(fh.read(), name=spec)
