"""Counting homomorphisms from a finite presentation into a finite group.

The search assigns generator images by backtracking, ordering generators by
descending relator participation.  Relators mentioning a single generator
filter that generator's domain up front; relators mentioning exactly two
generators are precompiled into satisfying-pair sets and propagated forward,
so each assignment immediately prunes the domains of its neighbours in the
relator graph.  Relators with wider support are checked once their support is
fully assigned.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import BudgetExhausted
from .finitegroups import FiniteGroupTable
from .presentations import Presentation


@dataclass
class Budget:
    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None


@dataclass
class HomSearchReport:
    total: int
    nontrivial: int
    sample_nontrivial: Optional[Tuple[int, ...]]
    nodes: int
    seconds: float
    target: str = ""

    def __post_init__(self):
        assert self.nontrivial <= self.total


def _support(relator) -> Tuple[int, ...]:
    return tuple(sorted({abs(letter) for letter in relator}))


def count_homs_brute(pres: Presentation, target: FiniteGroupTable) -> int:
    """Exhaustive count over all |target|^ngens assignments; the independent
    oracle for the backtracking engine."""
    import itertools

    e = target.identity
    count = 0
    for images in itertools.product(range(target.order), repeat=pres.ngens):
        if all(target.eval_word(r, images) == e for r in pres.relators):
            count += 1
    return count


def enumerate_homs(
    pres: Presentation,
    target: FiniteGroupTable,
    budget: Optional[Budget] = None,
) -> HomSearchReport:
    """Exact, deterministic count of homomorphisms pres -> target."""
    start = time.monotonic()
    n = pres.ngens
    order = target.order
    e = target.identity

    participation = [0] * (n + 1)
    for relator in pres.relators:
        for g in _support(relator):
            participation[g] += 1
    # Stable order: by descending participation, then by generator index.
    gen_order = sorted(range(1, n + 1), key=lambda g: (-participation[g], g))
    position = {g: slot for slot, g in enumerate(gen_order)}

    domains: List[List[int]] = [list(range(order)) for _ in range(n + 1)]
    pair_relators: Dict[Tuple[int, int], List] = {}
    wide_relators: List[Tuple[Tuple[int, ...], tuple]] = []
    for relator in pres.relators:
        support = _support(relator)
        if len(support) == 0:
            continue
        if len(support) == 1:
            g = support[0]
            images = [e] * (n + 1)
            domains[g] = [
                x
                for x in domains[g]
                if _eval_with(target, relator, g, x, images) == e
            ]
        elif len(support) == 2:
            pair_relators.setdefault(support, []).append(relator)
        else:
            wide_relators.append((support, relator))

    # Satisfying pair sets, as per-value allowed sets in both directions.
    allowed: Dict[Tuple[int, int], Dict[int, set]] = {}
    for (g, h), relators in pair_relators.items():
        fwd: Dict[int, set] = {x: set() for x in range(order)}
        bwd: Dict[int, set] = {y: set() for y in range(order)}
        images = [e] * (n + 1)
        for x in range(order):
            images[g] = x
            for y in range(order):
                images[h] = y
                if all(target.eval_word(r, _shift(images)) == e for r in relators):
                    fwd[x].add(y)
                    bwd[y].add(x)
        allowed[(g, h)] = fwd
        allowed[(h, g)] = bwd

    neighbours: Dict[int, List[int]] = {g: [] for g in range(1, n + 1)}
    for g, h in allowed:
        neighbours[g].append(h)

    checks_at: Dict[int, List[tuple]] = {slot: [] for slot in range(n)}
    for support, relator in wide_relators:
        last = max(position[g] for g in support)
        checks_at[last].append(relator)

    total = 0
    nontrivial = 0
    sample: Optional[Tuple[int, ...]] = None
    nodes = 0
    images = [e] * (n + 1)

    max_nodes = budget.max_nodes if budget else None
    max_seconds = budget.max_seconds if budget else None

    def search(slot: int, domains: List[List[int]]):
        nonlocal total, nontrivial, sample, nodes
        if slot == n:
            total += 1
            if any(images[g] != e for g in range(1, n + 1)):
                nontrivial += 1
                if sample is None:
                    sample = tuple(images[1:])
            return
        g = gen_order[slot]
        for x in domains[g]:
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise BudgetExhausted(nodes, total, nontrivial)
            if max_seconds is not None and nodes % 1024 == 0:
                if time.monotonic() - start > max_seconds:
                    raise BudgetExhausted(nodes, total, nontrivial)
            images[g] = x
            ok = True
            narrowed = domains
            for h in neighbours[g]:
                if position[h] < slot:
                    continue
                allow = allowed[(g, h)][x]
                if position[h] == slot:
                    continue
                new_dom = [y for y in narrowed[h] if y in allow]
                if not new_dom:
                    ok = False
                    break
                if narrowed is domains:
                    narrowed = list(domains)
                narrowed[h] = new_dom
            if ok:
                # Pair relators whose second endpoint is already assigned.
                for h in neighbours[g]:
                    if position[h] < slot and images[h] not in allowed[(g, h)][x]:
                        ok = False
                        break
            if ok:
                for relator in checks_at[slot]:
                    if target.eval_word(relator, _shift(images)) != e:
                        ok = False
                        break
            if ok:
                search(slot + 1, narrowed)
        images[g] = e

    search(0, domains)
    report = HomSearchReport(
        total=total,
        nontrivial=nontrivial,
        sample_nontrivial=sample,
        nodes=nodes,
        seconds=time.monotonic() - start,
        target=target.name,
    )
    return report


def _shift(images: List[int]) -> List[int]:
    # eval_word indexes images by generator-1; the search keeps them 1-based.
    return images[1:]


def _eval_with(target, relator, g, x, images) -> int:
    images[g] = x
    return target.eval_word(relator, _shift(images))


def trivial_quotients_up_to(
    pres: Presentation, K: int, budget: Optional[Budget] = None
) -> Tuple[bool, List[HomSearchReport]]:
    """True iff there is no nontrivial homomorphism into any S_k, 2 <= k <= K."""
    from .finitegroups import symmetric_group

    if K < 2:
        raise ValueError("K must be at least 2")
    reports = []
    trivial = True
    for k in range(2, K + 1):
        report = enumerate_homs(pres, symmetric_group(k), budget)
        reports.append(report)
        if report.nontrivial:
            trivial = False
    return trivial, reports
