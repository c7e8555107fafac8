"""Group words and relations: ``a^9``, ``c*a*c^-1 = a*b^-1``, ``[[a,b],a]``.

Names are a letter followed by optional digits, so ``cac^{-1}`` reads as
``c a c^-1``.  Juxtaposition and ``*`` both mean multiplication; ``[a, b]``
is ``a^-1 b^-1 a b``.  Exponents may be written ``^k``, ``^-k``, ``^{-k}``
or ``^(k)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from ..errors import ExpressionError

_TOKEN = re.compile(r"\s*(?:([A-Za-z][0-9_]*)|(-?\d+)|(.))")


@dataclass(frozen=True)
class Word:
    kind: str  # gen | mul | pow | comm | one
    args: tuple = ()


def _tokens(text: str) -> list[str]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        out.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    return [t for t in out if t and not t.isspace()]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        t = self.peek()
        if t is None or (expected is not None and t != expected):
            raise ExpressionError(f"expected {expected or 'token'} at position {self.i} in {self.text!r}")
        self.i += 1
        return t

    def word(self) -> Word:
        factors = [self.factor()]
        while True:
            t = self.peek()
            if t == "*":
                self.take()
                factors.append(self.factor())
            elif t is not None and (t[0].isalpha() or t in ("(", "[")):
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Word("mul", tuple(factors))

    def factor(self) -> Word:
        base = self.atom()
        while self.peek() == "^":
            self.take()
            base = Word("pow", (base, self.exponent()))
        return base

    def exponent(self) -> int:
        t = self.peek()
        if t in ("{", "("):
            close = "}" if t == "{" else ")"
            self.take()
            k = self.exponent()
            self.take(close)
            return k
        if t == "-":
            self.take()
            return -self.exponent()
        tok = self.take()
        try:
            return int(tok)
        except ValueError:
            raise ExpressionError(f"bad exponent {tok!r} in {self.text!r}") from None

    def atom(self) -> Word:
        t = self.take()
        if t == "(":
            w = self.word()
            self.take(")")
            return w
        if t == "[":
            a = self.word()
            self.take(",")
            b = self.word()
            self.take("]")
            return Word("comm", (a, b))
        if t == "1":
            return Word("one")
        if t[0].isalpha():
            return Word("gen", (t,))
        raise ExpressionError(f"unexpected {t!r} in {self.text!r}")


def parse_word(text: str) -> Word:
    p = _Parser(text)
    w = p.word()
    if p.peek() is not None:
        raise ExpressionError(f"trailing input in {text!r}")
    return w


def parse_relation(text: str) -> tuple[Word, Word]:
    """``lhs = rhs`` or a bare relator (meaning ``= 1``)."""
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        return parse_word(lhs), parse_word(rhs)
    return parse_word(text), Word("one")


def generator_names(w: Word) -> list[str]:
    if w.kind == "gen":
        return [w.args[0]]
    out: list[str] = []
    for a in w.args:
        if isinstance(a, Word):
            for n in generator_names(a):
                if n not in out:
                    out.append(n)
    return out


def evaluate(w: Word, env: dict, mul: Callable, inv: Callable, identity, power: Callable | None = None):
    """Evaluate a word with the given group operations."""
    if w.kind == "gen":
        name = w.args[0]
        if name not in env:
            raise ExpressionError(f"no image for generator {name!r}")
        return env[name]
    if w.kind == "one":
        return identity
    if w.kind == "mul":
        acc = identity
        for f in w.args:
            acc = mul(acc, evaluate(f, env, mul, inv, identity, power))
        return acc
    if w.kind == "pow":
        base = evaluate(w.args[0], env, mul, inv, identity, power)
        k = w.args[1]
        if power is not None:
            return power(base, k)
        if k < 0:
            base, k = inv(base), -k
        acc = identity
        for _ in range(k):
            acc = mul(acc, base)
        return acc
    if w.kind == "comm":
        a = evaluate(w.args[0], env, mul, inv, identity, power)
        b = evaluate(w.args[1], env, mul, inv, identity, power)
        return mul(mul(inv(a), inv(b)), mul(a, b))
    raise ExpressionError(f"unknown word node {w.kind}")
