"""Seeded invariant suite.

Each check draws its own deterministic RNG from the given seed, runs a batch
of randomized property assertions, and reports one pass/fail line.  The
acceptance tests call these functions with the full batch sizes; the CLI
``selftest`` subcommand runs them with the same defaults (or scaled-down
counts with ``--quick``).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, List, Optional

from . import fiber
from .fiber import act, act_letter, compose, fiber_cmp
from .gentorsion import GenTorsionCertificate, search_certificate, verify_certificate
from .homology import abelianization
from .homsearch import count_homs_brute, enumerate_homs
from .magnus import expand, free_to_kernel, is_positive, kinv, kmul, kreduce, magnus_cmp
from .ncseries import mul_trunc
from .oracles import BSOracle, ZnLexOracle
from .presentations import Presentation, fixture
from .finitegroups import symmetric_group
from .rs import substitute, tau
from .words import embed_free, mixed_mul, mul_words, reduce_word


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _timed(name: str, fn: Callable[[], str]) -> CheckResult:
    start = time.monotonic()
    try:
        detail = fn()
        ok = True
    except AssertionError as exc:
        detail = str(exc) or "assertion failed"
        ok = False
    return CheckResult(name, ok, detail, time.monotonic() - start)


def random_free_word(rng: random.Random, rank: int, max_len: int):
    length = rng.randint(0, max_len)
    return reduce_word(
        [rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(length)]
    )


def random_kernel_word(rng: random.Random, ball: list, rank: int, max_len: int):
    length = rng.randint(0, max_len)
    return kreduce(
        [
            (rng.choice(ball), rng.randint(1, rank), rng.choice((1, -1)))
            for _ in range(length)
        ]
    )


def _default_oracles():
    return [ZnLexOracle(2), BSOracle(2), BSOracle(-1)]


# ---------------------------------------------------------------------------
# Criterion 1: the Magnus order on F_3 is a total bi-order.

def check_magnus_biorder(seed: int, triples: int = 10_000, rank: int = 3,
                         max_len: int = 8) -> CheckResult:
    def run() -> str:
        rng = random.Random(seed)
        for trial in range(triples):
            a, b, c = (random_free_word(rng, rank, max_len) for _ in range(3))
            ka, kb, kc = map(free_to_kernel, (a, b, c))
            ab, ba = magnus_cmp(ka, kb), magnus_cmp(kb, ka)
            assert ab == -ba, f"antisymmetry broken at trial {trial}"
            assert (ab == 0) == (a == b), f"equality/trichotomy broken at trial {trial}"
            bc, ac = magnus_cmp(kb, kc), magnus_cmp(ka, kc)
            if ab <= 0 and bc <= 0:
                assert ac <= 0, f"transitivity broken at trial {trial}"
                if ab < 0 or bc < 0:
                    assert ac < 0, f"strict transitivity broken at trial {trial}"
            w = random_free_word(rng, rank, max_len)
            left = magnus_cmp(
                free_to_kernel(mul_words(w, a)), free_to_kernel(mul_words(w, b))
            )
            right = magnus_cmp(
                free_to_kernel(mul_words(a, w)), free_to_kernel(mul_words(b, w))
            )
            assert left == ab, f"left invariance broken at trial {trial}"
            assert right == ab, f"right invariance broken at trial {trial}"
        return f"{triples} random triples in F_{rank}, zero violations"

    return _timed("magnus-biorder", run)


# Criterion 2: the embedding is a homomorphism into units.

def check_expand_homomorphism(seed: int, pairs: int = 1_000, rank: int = 3,
                              max_len: int = 6) -> CheckResult:
    def run() -> str:
        rng = random.Random(seed + 1)
        for trial in range(pairs):
            u = free_to_kernel(random_free_word(rng, rank, max_len))
            v = free_to_kernel(random_free_word(rng, rank, max_len))
            for cap in (2, 3, 4):
                lhs = expand(kmul(u, v), cap)
                rhs = mul_trunc(expand(u, cap), expand(v, cap))
                assert lhs == rhs, f"not a homomorphism at trial {trial}, cap {cap}"
        return f"{pairs} random pairs at caps 2..4, exact equality"

    return _timed("magnus-embedding-homomorphism", run)


# Criterion 3: rewriting and substitution are mutually inverse.

def check_rs_roundtrips(seed: int, words: int = 1_000, max_len: int = 8,
                        radius: int = 4) -> CheckResult:
    def run() -> str:
        rng = random.Random(seed + 2)
        for oracle in _default_oracles():
            ball = oracle.ball(radius)
            for trial in range(words):
                k = random_kernel_word(rng, ball, oracle.rank(), max_len)
                back = tau(substitute(k, oracle), oracle)
                assert back == k, f"tau(substitute) != id on {oracle.name} at {trial}"
            for trial in range(words):
                k = random_kernel_word(rng, ball, oracle.rank(), max_len // 2)
                conj = random_free_word(rng, oracle.rank(), 2)
                w = mixed_mul(
                    mixed_mul(embed_free(conj), substitute(k, oracle), oracle),
                    embed_free(tuple(-l for l in reversed(conj))),
                    oracle,
                )
                assert substitute(tau(w, oracle), oracle) == w, (
                    f"substitute(tau) != id on {oracle.name} at {trial}"
                )
        return f"{words} kernel words per direction per oracle, zero failures"

    return _timed("rs-roundtrips", run)


# Criterion 4: the closed conjugation formulas equal conjugate-then-rewrite.

def check_conjugation_formulas(seed: int, samples: int = 200,
                               radius: int = 4) -> CheckResult:
    def run() -> str:
        rng = random.Random(seed + 3)
        for oracle in _default_oracles():
            ball = oracle.ball(radius)
            for _ in range(samples):
                g = rng.choice(ball)
                i, j = rng.randint(1, 2), rng.randint(1, 2)
                sign_s, sign_x = rng.choice((1, -1)), rng.choice((1, -1))
                letter = ((g, j, sign_x),)
                direct = act_letter(i, sign_s, letter, oracle)
                s_word = (i,) if sign_s > 0 else (-i,)
                conjugated = mixed_mul(
                    mixed_mul(embed_free(s_word), substitute(letter, oracle), oracle),
                    embed_free((-s_word[0],)),
                    oracle,
                )
                rewritten = tau(conjugated, oracle)
                assert direct == rewritten, (
                    f"formula mismatch on {oracle.name} at g={oracle.key(g)}, "
                    f"i={i}, j={j}, signs=({sign_s},{sign_x})"
                )
        return f"{samples} random conjugations per oracle, zero mismatches"

    return _timed("conjugation-formulas", run)


# Criterion 5: the kernel cone is invariant under the quotient action.

def check_cone_invariance(seed: int, pairs: int = 2_000, k_len: int = 6,
                          w_len: int = 4, radius: int = 3) -> CheckResult:
    def run() -> str:
        rng = random.Random(seed + 4)
        oracles = [ZnLexOracle(2), BSOracle(2)]
        for oracle in oracles:
            ball = oracle.ball(radius)
            done = 0
            while done < pairs:
                k = random_kernel_word(rng, ball, oracle.rank(), k_len)
                if not k:
                    continue
                if not is_positive(k, oracle.cmp):
                    k = kinv(k)
                w = random_free_word(rng, oracle.rank(), w_len)
                assert is_positive(act(w, k, oracle), oracle.cmp), (
                    f"cone invariance broken on {oracle.name}"
                )
                done += 1
        return f"{pairs} positive kernel words per oracle stay positive"

    return _timed("cone-invariance", run)


# Criterion 6: the fiber order is a total bi-order.

def check_fiber_biorder(seed: int, triples: int = 2_000, radius: int = 2) -> CheckResult:
    def run() -> str:
        rng = random.Random(seed + 5)
        oracle = ZnLexOracle(2)
        ball = oracle.ball(radius)

        def random_element():
            k = random_kernel_word(rng, ball, oracle.rank(), 3)
            v = random_free_word(rng, oracle.rank(), 3)
            return compose(k, v, oracle)

        for trial in range(triples):
            p, q, r = (random_element() for _ in range(3))
            pq, qp = fiber_cmp(p, q), fiber_cmp(q, p)
            assert pq == -qp, f"antisymmetry broken at trial {trial}"
            assert (pq == 0) == (fiber.decompose(p) == fiber.decompose(q)), (
                f"equality broken at trial {trial}"
            )
            qr, pr = fiber_cmp(q, r), fiber_cmp(p, r)
            if pq <= 0 and qr <= 0:
                assert pr <= 0, f"transitivity broken at trial {trial}"
            s = random_element()
            rp_s = fiber.mul(fiber.mul(r, p), s)
            rq_s = fiber.mul(fiber.mul(r, q), s)
            assert fiber_cmp(rp_s, rq_s) == pq, (
                f"two-sided invariance broken at trial {trial}"
            )
        return f"{triples} random triples over Z^2, zero violations"

    return _timed("fiber-biorder", run)


# Criterion 7: no nontrivial finite quotients at desk scale.

def check_quotient_triviality(max_sym: int = 4) -> CheckResult:
    def run() -> str:
        details = []
        for name in ("higman", "lemma41"):
            pres = fixture(name)
            for k in range(2, max_sym + 1):
                report = enumerate_homs(pres, symmetric_group(k))
                assert report.total == 1 and report.nontrivial == 0, (
                    f"{name} -> S{k}: total={report.total}, "
                    f"nontrivial={report.nontrivial}"
                )
                details.append(f"{name}->S{k}:1")
        return "only the trivial homomorphism: " + " ".join(details)

    return _timed("finite-quotient-triviality", run)


def check_quotient_triviality_s5() -> CheckResult:
    """Stretch tier: the 4-generator fixture into S_5."""
    def run() -> str:
        report = enumerate_homs(fixture("higman"), symmetric_group(5))
        assert report.total == 1 and report.nontrivial == 0, (
            f"higman -> S5: total={report.total}, nontrivial={report.nontrivial}"
        )
        return f"higman->S5 total=1 in {report.nodes} nodes"

    return _timed("finite-quotient-triviality-s5", run)


# Criterion 8: trivial first homology of the balanced fixtures.

def check_homology() -> CheckResult:
    def run() -> str:
        result = abelianization(fixture("lemma41"))
        assert result.is_trivial() and result.balanced, f"lemma41: {result}"
        for m in (1, 2, 3):
            r = abelianization(fixture(f"lemma41:m={m}"))
            assert r.is_trivial(), f"lemma41:m={m}: {r}"
        return "trivial H1 and balanced for lemma41 and m=1,2,3"

    return _timed("homology", run)


# Criterion 9: generalized torsion in BS(1,-1) but not BS(1,2).

def check_gentorsion() -> CheckResult:
    def run() -> str:
        bs_neg = BSOracle(-1)
        cert = GenTorsionCertificate(base=(1,), conjugators=((), (2,)))
        assert verify_certificate(bs_neg, cert), "hand certificate rejected"
        found = search_certificate(bs_neg, (1,), max_k=2, radius=1)
        assert found is not None, "search missed the certificate in BS(1,-1)"
        assert verify_certificate(bs_neg, found)
        absent = search_certificate(BSOracle(2), (1,), max_k=2, radius=1)
        assert absent is None, f"spurious certificate in BS(1,2): {absent}"
        return (
            "certificate (b; 1, t) verified in BS(1,-1); "
            "search finds it there and comes back empty in BS(1,2)"
        )

    return _timed("generalized-torsion", run)


# Criterion 10: the search engine agrees with brute force.

def check_homcount_oracle() -> CheckResult:
    def run() -> str:
        z2 = Presentation(("a", "b"), ((1, 2, -1, -2),))
        s3 = symmetric_group(3)
        engine = enumerate_homs(z2, s3).total
        brute = count_homs_brute(z2, s3)
        assert engine == brute == 18, f"engine={engine}, brute={brute}"
        return "|Hom(Z^2, S3)| = 18 by both routes"

    return _timed("homcount-oracle", run)


def run_all(seed: int, quick: bool = False,
            stretch: bool = False) -> List[CheckResult]:
    scale = 10 if quick else 1
    results = [
        check_magnus_biorder(seed, triples=10_000 // scale),
        check_expand_homomorphism(seed, pairs=1_000 // scale),
        check_rs_roundtrips(seed, words=1_000 // scale),
        check_conjugation_formulas(seed, samples=200 // scale),
        check_cone_invariance(seed, pairs=2_000 // scale),
        check_fiber_biorder(seed, triples=2_000 // scale),
        check_quotient_triviality(),
        check_homology(),
        check_gentorsion(),
        check_homcount_oracle(),
    ]
    if stretch:
        results.append(check_quotient_triviality_s5())
    return results
