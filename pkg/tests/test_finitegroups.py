import math

import pytest

from grouporder.finitegroups import (
    FiniteGroupTable,
    parse_table,
    symmetric_group,
    target_from_spec,
)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_symmetric_group_axioms(n):
    G = symmetric_group(n)
    assert G.order == math.factorial(n)
    assert G.identity == 0  # identity permutation is lexicographically first
    for a in range(G.order):
        assert G.mul[a][G.inv[a]] == G.identity


def test_s3_structure():
    G = symmetric_group(3)
    # count elements of each order
    orders = []
    for a in range(6):
        k, x = 1, a
        while x != G.identity:
            x = G.mul[x][a]
            k += 1
        orders.append(k)
    assert sorted(orders) == [1, 2, 2, 2, 3, 3]
    # non-abelian
    assert any(G.mul[a][b] != G.mul[b][a] for a in range(6) for b in range(6))


def test_eval_word():
    G = symmetric_group(3)
    a, b = 1, 2  # two arbitrary non-identity elements
    assert G.eval_word((1, 2), (a, b)) == G.mul[a][b]
    assert G.eval_word((-1, 1), (a, b)) == G.identity
    assert G.eval_word((), (a, b)) == G.identity
    assert G.eval_word((2, 2, 2), (a, b)) == G.mul[G.mul[b][b]][b]


def test_table_validation():
    # Z/2 works
    FiniteGroupTable("Z2", 2, [[0, 1], [1, 0]], 0, [0, 1])
    # broken identity row
    with pytest.raises(ValueError):
        FiniteGroupTable("bad", 2, [[1, 0], [0, 1]], 0, [0, 1])
    # non-associative magma on 3 elements
    mul = [[0, 1, 2], [1, 0, 0], [2, 0, 0]]
    with pytest.raises(ValueError):
        FiniteGroupTable("bad", 3, mul, 0, [0, 1, 2])


def test_parse_table():
    text = "order=2\n0 1\n1 0\n"
    G = parse_table(text, name="Z2")
    assert G.order == 2 and G.identity == 0 and G.inv == [0, 1]
    with pytest.raises(ValueError):
        parse_table("0 1\n1 0\n")
    with pytest.raises(ValueError):
        parse_table("order=3\n0 1\n1 0\n")


def test_target_from_spec(tmp_path):
    assert target_from_spec("S3").order == 6
    path = tmp_path / "z2.txt"
    path.write_text("order=2\n0 1\n1 0\n")
    assert target_from_spec(str(path)).order == 2
