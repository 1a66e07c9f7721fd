"""HTTP surface over the core package.

A stateless FastAPI app: every endpoint parses its inputs with the same text
grammar as the CLI, runs the corresponding pure operation, and returns JSON.
Domain errors come back as 409 with a structured body; malformed words or
specs as 422.

Run with ``uvicorn grouporder.service:app``.
"""

from __future__ import annotations

from typing import List, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import fiber as fiber_mod
from . import magnus as magnus_mod
from .errors import BudgetExhausted, GroupOrderError
from .finitegroups import target_from_spec
from .gentorsion import GenTorsionCertificate, search_certificate, verify_certificate
from .homology import abelianization
from .homsearch import Budget, enumerate_homs
from .ncseries import render_series, sorted_terms, var_key
from .oracles import FreeMagnusOracle, oracle_from_spec
from .presentations import fixture, parse_presentation
from .rs import tau
from .syntax import (
    ParseError,
    format_free_word,
    format_kernel_word,
    format_mixed_word,
    parse_free_word,
    parse_kernel_word,
    parse_mixed_word,
)

app = FastAPI(
    title="grouporder",
    description="Magnus orders, kernel rewriting, fiber products, and "
    "finite-quotient checks over left-orderable group oracles.",
)

_ORDER_NAMES = {-1: "LESS", 0: "EQUAL", 1: "GREATER"}


def _oracle(spec: str):
    try:
        return oracle_from_spec(spec)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


def _parse(fn, *args):
    try:
        return fn(*args)
    except (ParseError, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))


def _domain(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except BudgetExhausted as exc:
        raise HTTPException(
            status_code=409,
            detail={"error": "BudgetExhausted", "nodes": exc.nodes},
        )
    except GroupOrderError as exc:
        raise HTTPException(
            status_code=409,
            detail={"error": type(exc).__name__, "message": str(exc)},
        )


def _presentation(source: str, inline: Optional[str]):
    if inline is not None:
        return _parse(parse_presentation, inline)
    try:
        return fixture(source)
    except KeyError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


class OrderCmpRequest(BaseModel):
    group: str = Field(examples=["F2", "Z^2", "BS(1,-1)"])
    w1: str
    w2: str


class OrderCmpResponse(BaseModel):
    result: str
    cap: Optional[int] = None


@app.post("/order/cmp", response_model=OrderCmpResponse)
def order_cmp(req: OrderCmpRequest):
    oracle = _oracle(req.group)
    e1 = _parse(oracle.decode, req.w1)
    e2 = _parse(oracle.decode, req.w2)
    if isinstance(oracle, FreeMagnusOracle):
        result, cap = magnus_mod.magnus_cmp_cap(
            magnus_mod.free_to_kernel(e1), magnus_mod.free_to_kernel(e2)
        )
        return OrderCmpResponse(result=_ORDER_NAMES[result], cap=cap)
    return OrderCmpResponse(result=_ORDER_NAMES[oracle.cmp(e1, e2)])


class ExpandRequest(BaseModel):
    word: str = Field(description="Word in x-tokens, e.g. 'x1 x2^-1'.")
    degree: int = Field(ge=1)


class SeriesTerm(BaseModel):
    monomial: List[int]
    coefficient: int


class ExpandResponse(BaseModel):
    cap: int
    text: str
    terms: List[SeriesTerm]


@app.post("/magnus/expand", response_model=ExpandResponse)
def magnus_expand(req: ExpandRequest):
    w = _parse(parse_free_word, req.word, None, "x")
    series = magnus_mod.expand(magnus_mod.free_to_kernel(w), req.degree)
    terms = [
        SeriesTerm(monomial=[var_key(v)[1] for v in mono], coefficient=coeff)
        for mono, coeff in sorted_terms(series)
    ]
    text = render_series(series, lambda g, i: f"X{{{i}}}")
    return ExpandResponse(cap=req.degree, text=text, terms=terms)


class RewriteRequest(BaseModel):
    group: str
    word: str = Field(description="Mixed word, e.g. 'g{0,1} s1 g{-1,-1}'.")


class RewriteResponse(BaseModel):
    kernel: str


@app.post("/rs/rewrite", response_model=RewriteResponse)
def rs_rewrite(req: RewriteRequest):
    oracle = _oracle(req.group)
    u = _parse(parse_mixed_word, req.word, oracle)
    k = _domain(tau, u, oracle)
    return RewriteResponse(kernel=format_kernel_word(k, oracle))


class FiberPair(BaseModel):
    u: str
    v: str


class FiberCmpRequest(BaseModel):
    group: str
    p: FiberPair
    q: FiberPair


class FiberCmpResponse(BaseModel):
    result: str
    level: Optional[str]


def _fiber_element(oracle, pair: FiberPair):
    u = _parse(parse_mixed_word, pair.u, oracle)
    v = _parse(parse_free_word, pair.v, oracle.rank())
    return _domain(fiber_mod.make, u, v, oracle)


@app.post("/fiber/cmp", response_model=FiberCmpResponse)
def fiber_cmp(req: FiberCmpRequest):
    oracle = _oracle(req.group)
    p = _fiber_element(oracle, req.p)
    q = _fiber_element(oracle, req.q)
    result, level = fiber_mod.fiber_cmp_level(p, q)
    return FiberCmpResponse(result=_ORDER_NAMES[result], level=level)


class FiberMulRequest(BaseModel):
    group: str
    p: FiberPair
    q: FiberPair


class FiberElementResponse(BaseModel):
    u: str
    v: str


@app.post("/fiber/mul", response_model=FiberElementResponse)
def fiber_mul(req: FiberMulRequest):
    oracle = _oracle(req.group)
    product = fiber_mod.mul(
        _fiber_element(oracle, req.p), _fiber_element(oracle, req.q)
    )
    return FiberElementResponse(
        u=format_mixed_word(product.u, oracle), v=format_free_word(product.v)
    )


class FiberActRequest(BaseModel):
    group: str
    w: str = Field(description="Acting free word in s-tokens.")
    kernel: str = Field(description="Kernel word in x-tokens.")


@app.post("/fiber/act", response_model=RewriteResponse)
def fiber_act(req: FiberActRequest):
    oracle = _oracle(req.group)
    w = _parse(parse_free_word, req.w, oracle.rank())
    k = _parse(parse_kernel_word, req.kernel, oracle)
    return RewriteResponse(
        kernel=format_kernel_word(fiber_mod.act(w, k, oracle), oracle)
    )


class QuotientsRequest(BaseModel):
    presentation: str = Field(
        default="", description="Fixture name, e.g. 'higman' or 'lemma41:m=2'."
    )
    presentation_text: Optional[str] = Field(
        default=None, description="Inline presentation file content."
    )
    target: str = Field(examples=["S4"])
    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None


class QuotientsResponse(BaseModel):
    target: str
    total: int
    nontrivial: int
    nodes: int
    seconds: float


@app.post("/quotients/count", response_model=QuotientsResponse)
def quotients_count(req: QuotientsRequest):
    pres = _presentation(req.presentation, req.presentation_text)
    target = _parse(target_from_spec, req.target)
    budget = None
    if req.max_nodes is not None or req.max_seconds is not None:
        budget = Budget(max_nodes=req.max_nodes, max_seconds=req.max_seconds)
    report = _domain(enumerate_homs, pres, target, budget)
    return QuotientsResponse(
        target=target.name,
        total=report.total,
        nontrivial=report.nontrivial,
        nodes=report.nodes,
        seconds=report.seconds,
    )


class AbelianizeRequest(BaseModel):
    presentation: str = ""
    presentation_text: Optional[str] = None


class AbelianizeResponse(BaseModel):
    invariant_factors: List[int]
    free_rank: int
    balanced: bool


@app.post("/abelianize", response_model=AbelianizeResponse)
def abelianize_endpoint(req: AbelianizeRequest):
    pres = _presentation(req.presentation, req.presentation_text)
    result = abelianization(pres)
    return AbelianizeResponse(
        invariant_factors=list(result.invariant_factors),
        free_rank=result.free_rank,
        balanced=result.balanced,
    )


class GenTorsionVerifyRequest(BaseModel):
    group: str
    base: str
    conjugators: List[str] = Field(min_length=1)


class GenTorsionVerifyResponse(BaseModel):
    valid: bool


@app.post("/gentorsion/verify", response_model=GenTorsionVerifyResponse)
def gentorsion_verify(req: GenTorsionVerifyRequest):
    oracle = _oracle(req.group)
    cert = GenTorsionCertificate(
        _parse(parse_free_word, req.base, oracle.rank()),
        tuple(_parse(parse_free_word, c, oracle.rank()) for c in req.conjugators),
    )
    return GenTorsionVerifyResponse(valid=verify_certificate(oracle, cert))


class GenTorsionSearchRequest(BaseModel):
    group: str
    base: str
    max_k: int = Field(default=2, le=3, ge=1)
    radius: int = Field(default=1, le=3, ge=0)


class GenTorsionSearchResponse(BaseModel):
    found: bool
    base: Optional[str] = None
    conjugators: Optional[List[str]] = None


@app.post("/gentorsion/search", response_model=GenTorsionSearchResponse)
def gentorsion_search(req: GenTorsionSearchRequest):
    oracle = _oracle(req.group)
    base = _parse(parse_free_word, req.base, oracle.rank())
    cert = search_certificate(oracle, base, req.max_k, req.radius)
    if cert is None:
        return GenTorsionSearchResponse(found=False)
    return GenTorsionSearchResponse(
        found=True,
        base=format_free_word(cert.base),
        conjugators=[format_free_word(c) for c in cert.conjugators],
    )
