"""Command-line entry point.

All output is line-oriented ``key=value`` text, byte-stable for identical
inputs and seeds.  Exit codes: 0 success, 1 domain error (NotInKernel,
NotInFiber, failed selftest), 2 usage error, 3 exhausted search budget.
"""

from __future__ import annotations

import sys

import click

from . import fiber as fiber_mod
from . import magnus as magnus_mod
from .errors import BudgetExhausted, GroupOrderError, NotInFiber, NotInKernel
from .finitegroups import target_from_spec
from .gentorsion import GenTorsionCertificate, search_certificate, verify_certificate
from .homology import abelianization
from .homsearch import Budget, enumerate_homs, trivial_quotients_up_to
from .ncseries import render_series, sorted_terms, var_key
from .oracles import FreeMagnusOracle, oracle_from_spec
from .presentations import load as load_presentation
from .rs import tau
from .selftest import run_all
from .syntax import (
    ParseError,
    format_free_word,
    format_kernel_word,
    format_mixed_word,
    parse_free_word,
    parse_kernel_word,
    parse_mixed_word,
)

_ORDER_NAMES = {-1: "LESS", 0: "EQUAL", 1: "GREATER"}


def _oracle(spec: str):
    try:
        return oracle_from_spec(spec)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _usage_guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except (ParseError, ValueError) as exc:
        raise click.UsageError(str(exc))


@click.group()
def cli():
    """Ordered-group computations: Magnus orders, kernel rewriting, fiber
    products, and finite-quotient checks."""


@cli.group()
def order():
    """Comparisons in a group oracle's left order."""


@order.command("cmp")
@click.option("--group", "spec", required=True, help="Oracle spec, e.g. F2, Z^2, BS(1,2).")
@click.argument("w1")
@click.argument("w2")
def order_cmp(spec, w1, w2):
    oracle = _oracle(spec)
    e1 = _usage_guard(oracle.decode, w1)
    e2 = _usage_guard(oracle.decode, w2)
    if isinstance(oracle, FreeMagnusOracle):
        result, cap = magnus_mod.magnus_cmp_cap(
            magnus_mod.free_to_kernel(e1), magnus_mod.free_to_kernel(e2)
        )
        click.echo(f"result={_ORDER_NAMES[result]}")
        if cap is not None:
            click.echo(f"cap={cap}")
    else:
        click.echo(f"result={_ORDER_NAMES[oracle.cmp(e1, e2)]}")


@cli.group("magnus")
def magnus_group():
    """The Magnus embedding into non-commuting power series."""


@magnus_group.command("expand")
@click.option("--deg", "deg", type=int, required=True, help="Truncation degree.")
@click.argument("word")
def magnus_expand(deg, word):
    if deg < 1:
        raise click.UsageError("--deg must be at least 1")
    w = _usage_guard(parse_free_word, word, None, "x")
    series = magnus_mod.expand(magnus_mod.free_to_kernel(w), deg)
    fmt = lambda g, i: f"X{{{i}}}"
    click.echo(f"cap={deg}")
    click.echo(f"series={render_series(series, fmt)}")
    for mono, coeff in sorted_terms(series):
        name = "".join(fmt(*var_key(v)) for v in mono) or "1"
        click.echo(f"term:{name}={coeff}")


@cli.group()
def rs():
    """Rewriting between the kernel of the retraction and its free basis."""


@rs.command("rewrite")
@click.option("--group", "spec", required=True)
@click.argument("word")
def rs_rewrite(spec, word):
    oracle = _oracle(spec)
    u = _usage_guard(parse_mixed_word, word, oracle)
    try:
        k = tau(u, oracle)
    except NotInKernel as exc:
        click.echo("error=NotInKernel")
        click.echo(f"residual={exc.residual_literal}")
        sys.exit(1)
    click.echo(f"kernel={format_kernel_word(k, oracle)}")


@cli.group("fiber")
def fiber_group():
    """The fiber product of the two epimorphisms onto the oracle."""


def _parse_fiber_element(oracle, u_text, v_text):
    u = _usage_guard(parse_mixed_word, u_text, oracle)
    v = _usage_guard(parse_free_word, v_text, oracle.rank())
    try:
        return fiber_mod.make(u, v, oracle)
    except NotInFiber as exc:
        click.echo("error=NotInFiber")
        click.echo(f"pi1={exc.pi1_literal}")
        click.echo(f"pi2={exc.pi2_literal}")
        sys.exit(1)


@fiber_group.command("make")
@click.option("--group", "spec", required=True)
@click.argument("u")
@click.argument("v")
def fiber_make(spec, u, v):
    oracle = _oracle(spec)
    p = _parse_fiber_element(oracle, u, v)
    click.echo("ok=true")
    click.echo(f"u={format_mixed_word(p.u, oracle)}")
    click.echo(f"v={format_free_word(p.v)}")


@fiber_group.command("mul")
@click.option("--group", "spec", required=True)
@click.argument("u1")
@click.argument("v1")
@click.argument("u2")
@click.argument("v2")
def fiber_mul(spec, u1, v1, u2, v2):
    oracle = _oracle(spec)
    p = _parse_fiber_element(oracle, u1, v1)
    q = _parse_fiber_element(oracle, u2, v2)
    product = fiber_mod.mul(p, q)
    click.echo(f"u={format_mixed_word(product.u, oracle)}")
    click.echo(f"v={format_free_word(product.v)}")


@fiber_group.command("cmp")
@click.option("--group", "spec", required=True)
@click.argument("u1")
@click.argument("v1")
@click.argument("u2")
@click.argument("v2")
def fiber_cmp_cmd(spec, u1, v1, u2, v2):
    oracle = _oracle(spec)
    p = _parse_fiber_element(oracle, u1, v1)
    q = _parse_fiber_element(oracle, u2, v2)
    result, level = fiber_mod.fiber_cmp_level(p, q)
    click.echo(f"result={_ORDER_NAMES[result]}")
    click.echo(f"level={level or 'none'}")


@fiber_group.command("act")
@click.option("--group", "spec", required=True)
@click.argument("w")
@click.argument("kernel")
def fiber_act(spec, w, kernel):
    oracle = _oracle(spec)
    word = _usage_guard(parse_free_word, w, oracle.rank())
    k = _usage_guard(parse_kernel_word, kernel, oracle)
    click.echo(f"kernel={format_kernel_word(fiber_mod.act(word, k, oracle), oracle)}")


@cli.group()
def quotients():
    """Homomorphism counts into finite targets."""


def _budget(max_nodes, max_seconds):
    if max_nodes is None and max_seconds is None:
        return None
    return Budget(max_nodes=max_nodes, max_seconds=max_seconds)


@quotients.command("count")
@click.option("--target", "target_spec", required=True, help="S<k> or a table file.")
@click.option("--max-nodes", type=int, default=None)
@click.option("--max-seconds", type=float, default=None)
@click.argument("source")
def quotients_count(target_spec, max_nodes, max_seconds, source):
    pres = _usage_guard(load_presentation, source)
    target = _usage_guard(target_from_spec, target_spec)
    try:
        report = enumerate_homs(pres, target, _budget(max_nodes, max_seconds))
    except BudgetExhausted as exc:
        click.echo("error=BudgetExhausted")
        click.echo(f"nodes={exc.nodes}")
        click.echo(f"total_so_far={exc.total_so_far}")
        sys.exit(3)
    click.echo(f"target={target.name}")
    click.echo(f"total={report.total}")
    click.echo(f"nontrivial={report.nontrivial}")
    click.echo(f"nodes={report.nodes}")


@quotients.command("trivial-upto")
@click.option("--K", "k_max", type=int, required=True)
@click.option("--max-nodes", type=int, default=None)
@click.option("--max-seconds", type=float, default=None)
@click.argument("source")
def quotients_trivial_upto(k_max, max_nodes, max_seconds, source):
    pres = _usage_guard(load_presentation, source)
    try:
        trivial, reports = trivial_quotients_up_to(
            pres, k_max, _budget(max_nodes, max_seconds)
        )
    except BudgetExhausted as exc:
        click.echo("error=BudgetExhausted")
        click.echo(f"nodes={exc.nodes}")
        sys.exit(3)
    for report in reports:
        click.echo(
            f"{report.target}:total={report.total} nontrivial={report.nontrivial}"
        )
    click.echo(f"trivial_upto={'true' if trivial else 'false'}")


@cli.command("abelianize")
@click.argument("source")
def abelianize_cmd(source):
    pres = _usage_guard(load_presentation, source)
    result = abelianization(pres)
    factors = ",".join(str(d) for d in result.invariant_factors)
    balanced = "true" if result.balanced else "false"
    click.echo(
        f"invariant_factors={factors} free_rank={result.free_rank} balanced={balanced}"
    )


@cli.group()
def gentorsion():
    """Generalized-torsion certificates in oracle groups."""


@gentorsion.command("verify")
@click.option("--group", "spec", required=True)
@click.option("--base", required=True, help="Base word in s-tokens.")
@click.option("--conj", "conjs", multiple=True, required=True,
              help="Conjugator word; repeat for each conjugator.")
def gentorsion_verify(spec, base, conjs):
    oracle = _oracle(spec)
    base_word = _usage_guard(parse_free_word, base, oracle.rank())
    conj_words = tuple(
        _usage_guard(parse_free_word, c, oracle.rank()) for c in conjs
    )
    cert = GenTorsionCertificate(base_word, conj_words)
    valid = verify_certificate(oracle, cert)
    click.echo(f"valid={'true' if valid else 'false'}")


@gentorsion.command("search")
@click.option("--group", "spec", required=True)
@click.option("--base", required=True)
@click.option("--max-k", "max_k", type=int, default=2, show_default=True)
@click.option("--radius", type=int, default=1, show_default=True)
def gentorsion_search(spec, base, max_k, radius):
    oracle = _oracle(spec)
    base_word = _usage_guard(parse_free_word, base, oracle.rank())
    cert = _usage_guard(search_certificate, oracle, base_word, max_k, radius)
    if cert is None:
        click.echo("found=false")
        return
    click.echo("found=true")
    click.echo(f"base={format_free_word(cert.base)}")
    for conj in cert.conjugators:
        click.echo(f"conj={format_free_word(conj)}")


@cli.command("selftest")
@click.option("--seed", type=int, default=20260823, show_default=True)
@click.option("--quick", is_flag=True, help="Scale randomized batch sizes down 10x.")
@click.option("--stretch", is_flag=True, help="Include the S5 quotient search.")
def selftest_cmd(seed, quick, stretch):
    results = run_all(seed, quick=quick, stretch=stretch)
    for result in results:
        click.echo(result.line())
    if not all(r.ok for r in results):
        sys.exit(1)


def main():
    try:
        cli(standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        sys.exit(2)
    except click.ClickException as exc:
        exc.show()
        sys.exit(exc.exit_code)
    except click.exceptions.Abort:
        sys.exit(2)
    except BudgetExhausted as exc:
        click.echo("error=BudgetExhausted", err=True)
        sys.exit(3)
    except GroupOrderError as exc:
        click.echo(f"error={type(exc).__name__}", err=True)
        click.echo(str(exc), err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
