"""Text grammar for words.

Tokens are whitespace-separated: ``s1``, ``s2^-1``, ``s1^3`` for free-group
letters (exponents expand before reduction), ``g{<literal>}`` for oracle
elements, ``x{<g-literal>,<i>}`` for kernel generators.  The empty word prints
as ``1``.  Formatting and parsing round-trip bit-exactly.
"""

from __future__ import annotations

import re

from .magnus import KernelWord, kreduce
from .words import FreeWord, MixedWord, mixed_normalize, reduce_word

_LETTER_RE = re.compile(r"^([A-Za-z]+)(\d+)(?:\^(-?\d+))?$")
_BRACE_RE = re.compile(r"^([gx])\{(.*)\}(?:\^(-?\d+))?$")


class ParseError(ValueError):
    pass


def _tokens(text: str) -> list[str]:
    # Brace groups may contain spaces (free-oracle literals), so split by hand.
    out: list[str] = []
    buf: list[str] = []
    depth = 0
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced braces in {text!r}")
        if ch.isspace() and depth == 0:
            if buf:
                out.append("".join(buf))
                buf = []
        else:
            buf.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced braces in {text!r}")
    if buf:
        out.append("".join(buf))
    return out


def _letter_token(token: str, letter: str) -> tuple[int, int]:
    match = _LETTER_RE.match(token)
    if not match or match.group(1) != letter:
        raise ParseError(f"bad {letter}-token {token!r}")
    index = int(match.group(2))
    if index < 1:
        raise ParseError(f"generator index must be >= 1 in {token!r}")
    power = int(match.group(3)) if match.group(3) is not None else 1
    return index, power


def parse_free_word(text: str, rank: int | None = None, letter: str = "s") -> FreeWord:
    tokens = _tokens(text)
    if tokens == ["1"]:
        return ()
    raw: list[int] = []
    for token in tokens:
        index, power = _letter_token(token, letter)
        sign = 1 if power > 0 else -1
        raw.extend([sign * index] * abs(power))
    try:
        return reduce_word(raw, rank)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_free_word(w: FreeWord, letter: str = "s") -> str:
    if not w:
        return "1"
    pieces: list[str] = []
    run_letter, run_count = w[0], 1
    for current in list(w[1:]) + [0]:
        if current == run_letter:
            run_count += 1
            continue
        index = abs(run_letter)
        power = run_count if run_letter > 0 else -run_count
        pieces.append(f"{letter}{index}" if power == 1 else f"{letter}{index}^{power}")
        run_letter, run_count = current, 1
    return " ".join(pieces)


def parse_mixed_word(text: str, oracle) -> MixedWord:
    syllables = []
    for token in _tokens(text):
        if token == "1":
            continue
        match = _BRACE_RE.match(token)
        if match:
            kind, literal, exp = match.groups()
            if kind != "g":
                raise ParseError(f"kernel letter {token!r} is not a mixed-word token")
            element = oracle.decode(literal)
            power = int(exp) if exp is not None else 1
            if power < 0:
                element = oracle.inv(element)
                power = -power
            for _ in range(power):
                syllables.append(("g", element))
        else:
            index, power = _letter_token(token, "s")
            sign = 1 if power > 0 else -1
            syllables.append(("f", tuple([sign * index] * abs(power))))
    return mixed_normalize(syllables, oracle)


def format_mixed_word(u: MixedWord, oracle) -> str:
    if not u:
        return "1"
    pieces: list[str] = []
    for kind, value in u:
        if kind == "f":
            pieces.append(format_free_word(value))
        else:
            pieces.append(f"g{{{oracle.key(value)}}}")
    return " ".join(pieces)


def parse_kernel_word(text: str, oracle) -> KernelWord:
    tokens = _tokens(text)
    if tokens == ["1"]:
        return ()
    letters = []
    for token in tokens:
        match = _BRACE_RE.match(token)
        if not match or match.group(1) != "x":
            raise ParseError(f"bad kernel token {token!r}")
        body, exp = match.group(2), match.group(3)
        glit, comma, itext = body.rpartition(",")
        if not comma or not itext.strip().isdigit():
            raise ParseError(f"kernel token {token!r} lacks a generator index")
        index = int(itext)
        if not 1 <= index <= oracle.rank():
            raise ParseError(f"generator index {index} out of range in {token!r}")
        element = oracle.decode(glit)
        power = int(exp) if exp is not None else 1
        sign = 1 if power > 0 else -1
        letters.extend([(element, index, sign)] * abs(power))
    return kreduce(letters)


def format_kernel_word(k: KernelWord, oracle) -> str:
    if not k:
        return "1"
    pieces: list[str] = []
    run, run_count = k[0], 1
    for current in list(k[1:]) + [None]:
        if current == run:
            run_count += 1
            continue
        g, index, sign = run
        power = run_count if sign > 0 else -run_count
        body = f"x{{{oracle.key(g)},{index}}}"
        pieces.append(body if power == 1 else f"{body}^{power}")
        run, run_count = current, 1
    return " ".join(pieces)
