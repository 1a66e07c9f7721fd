import random

import pytest

from grouporder import fiber
from grouporder.errors import NotInFiber
from grouporder.magnus import kreduce
from grouporder.oracles import BSOracle, ZnLexOracle
from grouporder.rs import substitute, tau
from grouporder.words import embed_free, mixed_mul, mixed_normalize

ORACLES = [ZnLexOracle(2), BSOracle(2), BSOracle(-1)]


def _ids(oracle):
    return oracle.name


@pytest.fixture
def z2():
    return ZnLexOracle(2)


def test_make_examples(z2):
    assert fiber.make((), (), z2) == fiber.identity(z2)
    p = fiber.make(embed_free((1,)), (1,), z2)  # pi1(s1) = t1 = pi2(s1)
    assert p.u == embed_free((1,)) and p.v == (1,)
    with pytest.raises(NotInFiber) as info:
        fiber.make(embed_free((1,)), (), z2)
    assert info.value.pi1_literal == "1,0"
    assert info.value.pi2_literal == "0,0"


def test_group_laws(z2):
    rng = random.Random(61)
    ball = z2.ball(2)

    def rand_elem():
        k = kreduce([(rng.choice(ball), rng.randint(1, 2), rng.choice((1, -1)))
                     for _ in range(3)])
        v = tuple(rng.choice((1, -1)) * rng.randint(1, 2) for _ in range(3))
        return fiber.compose(k, v, z2)

    e = fiber.identity(z2)
    for _ in range(200):
        p, q = rand_elem(), rand_elem()
        assert fiber.mul(p, e) == p
        assert fiber.mul(e, p) == p
        assert fiber.inv(fiber.inv(p)) == p
        assert fiber.mul(p, fiber.inv(p)) == e
        assert fiber.inv(fiber.mul(p, q)) == fiber.mul(fiber.inv(q), fiber.inv(p))


def test_decompose_examples(z2):
    assert fiber.decompose(fiber.identity(z2)) == ((), ())
    one = z2.identity()
    t1 = z2.generators()[0]
    u = mixed_normalize([("f", (1,)), ("g", z2.inv(t1))], z2)
    p = fiber.make(u, (), z2)
    assert fiber.decompose(p) == (((one, 1, 1),), ())
    q = fiber.make(embed_free((1,)), (1,), z2)
    assert fiber.decompose(q) == ((), (1,))


@pytest.mark.parametrize("oracle", ORACLES, ids=_ids)
def test_decompose_compose_inverse(oracle):
    rng = random.Random(62)
    ball = oracle.ball(3)
    for _ in range(200):
        k = kreduce([(rng.choice(ball), rng.randint(1, 2), rng.choice((1, -1)))
                     for _ in range(4)])
        v = tuple(rng.choice((1, -1)) * rng.randint(1, 2) for _ in range(4))
        p = fiber.compose(k, v, oracle)
        kk, vv = fiber.decompose(p)
        assert (kk, vv) == (k, fiber_reduce(v))
        assert fiber.compose(kk, vv, oracle) == p


def fiber_reduce(v):
    from grouporder.words import reduce_word

    return reduce_word(v)


@pytest.mark.parametrize("oracle", ORACLES, ids=_ids)
def test_act_letter_formulas(oracle):
    rng = random.Random(63)
    one = oracle.identity()
    for _ in range(100):
        g = oracle.sample(rng, 3)
        i, j = rng.randint(1, 2), rng.randint(1, 2)
        t = oracle.generators()[i - 1]
        # s_i . x_{g,j} = x_{1,i} x_{tg,j} x_{1,i}^-1
        assert fiber.act_letter(i, 1, ((g, j, 1),), oracle) == kreduce(
            [(one, i, 1), (oracle.mul(t, g), j, 1), (one, i, -1)]
        )
        # s_i^-1 . x_{g,j} = x_{t^-1,i}^-1 x_{t^-1 g,j} x_{t^-1,i}
        tinv = oracle.inv(t)
        assert fiber.act_letter(i, -1, ((g, j, 1),), oracle) == kreduce(
            [(tinv, i, -1), (oracle.mul(tinv, g), j, 1), (tinv, i, 1)]
        )
    assert fiber.act_letter(1, 1, (), oracle) == ()


@pytest.mark.parametrize("oracle", ORACLES, ids=_ids)
def test_act_letter_matches_conjugate_then_tau(oracle):
    rng = random.Random(64)
    ball = oracle.ball(4)
    for _ in range(100):
        g = rng.choice(ball)
        i, j = rng.randint(1, 2), rng.randint(1, 2)
        sign_s, sign_x = rng.choice((1, -1)), rng.choice((1, -1))
        letter = ((g, j, sign_x),)
        conjugated = mixed_mul(
            mixed_mul(embed_free((sign_s * i,)), substitute(letter, oracle), oracle),
            embed_free((-sign_s * i,)),
            oracle,
        )
        assert fiber.act_letter(i, sign_s, letter, oracle) == tau(conjugated, oracle)


@pytest.mark.parametrize("oracle", ORACLES, ids=_ids)
def test_act_is_group_action(oracle):
    rng = random.Random(65)
    ball = oracle.ball(2)
    for _ in range(150):
        k = kreduce([(rng.choice(ball), rng.randint(1, 2), rng.choice((1, -1)))
                     for _ in range(3)])
        w1 = tuple(rng.choice((1, -1)) * rng.randint(1, 2) for _ in range(2))
        w2 = tuple(rng.choice((1, -1)) * rng.randint(1, 2) for _ in range(2))
        assert fiber.act((), k, oracle) == k
        assert fiber.act((1, -1), k, oracle) == k
        assert fiber.act(w1 + w2, k, oracle) == fiber.act(
            w1, fiber.act(w2, k, oracle), oracle
        )


@pytest.mark.parametrize("oracle", ORACLES, ids=_ids)
def test_act_letter_is_automorphism(oracle):
    rng = random.Random(66)
    ball = oracle.ball(2)
    for _ in range(150):
        k1 = kreduce([(rng.choice(ball), rng.randint(1, 2), rng.choice((1, -1)))
                      for _ in range(3)])
        k2 = kreduce([(rng.choice(ball), rng.randint(1, 2), rng.choice((1, -1)))
                      for _ in range(3)])
        i, sign = rng.randint(1, 2), rng.choice((1, -1))
        lhs = fiber.act_letter(i, sign, kreduce(k1 + k2), oracle)
        rhs = kreduce(
            fiber.act_letter(i, sign, k1, oracle) + fiber.act_letter(i, sign, k2, oracle)
        )
        assert lhs == rhs


def test_cmp_examples(z2):
    e = fiber.identity(z2)
    p = fiber.make(embed_free((1,)), (1,), z2)
    assert fiber.fiber_cmp_level(p, e) == (1, fiber.LEVEL_QUOTIENT)
    one = z2.identity()
    t1 = z2.generators()[0]
    u = mixed_normalize([("f", (1,)), ("g", z2.inv(t1))], z2)
    q = fiber.make(u, (), z2)
    assert fiber.fiber_cmp_level(q, e) == (1, fiber.LEVEL_KERNEL)
    assert fiber.fiber_cmp(q, q) == 0
    assert fiber.fiber_is_positive(p) and fiber.fiber_is_positive(q)
    assert not fiber.fiber_is_positive(e)


def test_oracle_mismatch():
    from grouporder.errors import OracleMismatch

    p = fiber.identity(ZnLexOracle(2))
    q = fiber.identity(BSOracle(2))
    with pytest.raises(OracleMismatch):
        fiber.mul(p, q)
