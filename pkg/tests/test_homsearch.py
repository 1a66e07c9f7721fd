import random

import pytest

from grouporder.errors import BudgetExhausted
from grouporder.finitegroups import symmetric_group
from grouporder.homsearch import (
    Budget,
    count_homs_brute,
    enumerate_homs,
    trivial_quotients_up_to,
)
from grouporder.presentations import Presentation, higman, lemma41


def test_free_rank_one_into_s3():
    pres = Presentation(("a",), ())
    report = enumerate_homs(pres, symmetric_group(3))
    assert report.total == 6
    assert report.nontrivial == 5
    assert report.sample_nontrivial is not None


def test_z2_into_s3():
    pres = Presentation(("a", "b"), ((1, 2, -1, -2),))
    report = enumerate_homs(pres, symmetric_group(3))
    # pairs of commuting permutations in S3: 18
    assert report.total == 18
    assert report.nontrivial == 17


def test_single_generator_relator_filter():
    # <a | a^2> into S3: identity plus the three transpositions
    pres = Presentation(("a",), ((1, 1),))
    report = enumerate_homs(pres, symmetric_group(3))
    assert report.total == 4
    assert report.nontrivial == 3


def test_wide_relator():
    # <a,b,c | abc> into S3: a,b free, c determined
    pres = Presentation(("a", "b", "c"), ((1, 2, 3),))
    report = enumerate_homs(pres, symmetric_group(3))
    assert report.total == 36


def test_matches_brute_force():
    rng = random.Random(71)
    targets = [symmetric_group(2), symmetric_group(3)]
    for _ in range(25):
        ngens = rng.randint(1, 3)
        gens = tuple(f"g{i}" for i in range(ngens))
        relators = tuple(
            tuple(rng.choice((1, -1)) * rng.randint(1, ngens)
                  for _ in range(rng.randint(1, 5)))
            for _ in range(rng.randint(0, 3))
        )
        pres = Presentation(gens, relators)
        for target in targets:
            assert enumerate_homs(pres, target).total == count_homs_brute(pres, target)


def test_redundant_relator_invariance():
    # Adding a consequence of existing relators must not change the count.
    base = Presentation(("a", "b"), ((1, 2, -1, -2),))
    conj = Presentation(("a", "b"), ((1, 2, -1, -2), (2, 1, 2, -1, -2, -2)))
    squared = Presentation(("a", "b"), ((1, 2, -1, -2), (1, 1, 2, -1, -1, -2)))
    target = symmetric_group(3)
    expected = enumerate_homs(base, target).total
    assert enumerate_homs(conj, target).total == expected
    assert enumerate_homs(squared, target).total == expected


@pytest.mark.parametrize("pres", [higman(), lemma41()], ids=["higman", "lemma41"])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_fixtures_only_trivial_into_small_symmetric(pres, k):
    report = enumerate_homs(pres, symmetric_group(k))
    assert report.total == 1
    assert report.nontrivial == 0
    assert report.sample_nontrivial is None


def test_trivial_quotients_up_to():
    ok, reports = trivial_quotients_up_to(higman(), 4)
    assert ok
    assert [r.target for r in reports] == ["S2", "S3", "S4"]
    ok, reports = trivial_quotients_up_to(Presentation(("a",), ()), 3)
    assert not ok
    with pytest.raises(ValueError):
        trivial_quotients_up_to(higman(), 1)


def test_budget_nodes():
    pres = Presentation(("a", "b", "c"), ())
    with pytest.raises(BudgetExhausted) as info:
        enumerate_homs(pres, symmetric_group(3), Budget(max_nodes=10))
    assert info.value.nodes == 11
    assert info.value.total_so_far >= 0


def test_budget_roomy_enough_has_no_effect():
    pres = higman()
    unbudgeted = enumerate_homs(pres, symmetric_group(3))
    budgeted = enumerate_homs(pres, symmetric_group(3), Budget(max_nodes=10**6))
    assert (budgeted.total, budgeted.nontrivial, budgeted.nodes) == (
        unbudgeted.total,
        unbudgeted.nontrivial,
        unbudgeted.nodes,
    )


def test_deterministic_nodes():
    pres = lemma41()
    r1 = enumerate_homs(pres, symmetric_group(4))
    r2 = enumerate_homs(pres, symmetric_group(4))
    assert r1.nodes == r2.nodes
