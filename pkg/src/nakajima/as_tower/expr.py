"""A small expression language for tower relations and map images.

Grammar: numbers, the base variable, generator names, named constants
(c, a, omega, ...), ``+ - * /``, ``^`` (or ``**``) with an integer exponent,
and parentheses.  Parsing goes through :mod:`ast` after ``^`` -> ``**``.
"""

from __future__ import annotations

import ast

from ..errors import ExpressionError, NonTriangularRelation
from ..field_core.gf import FqElem
from ..field_core.ratfunc import RatFunc
from .tower import TowerElem, TowerField


def parse_in_tower(T: TowerField, text: str, params: dict | None = None, max_gen: int | None = None) -> TowerElem:
    """Evaluate ``text`` as an element of ``T``.

    ``max_gen`` restricts which generators may appear (those with index
    below it); using a later one raises NonTriangularRelation.
    """
    params = params or {}
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {text!r}: {exc.msg}") from None
    names = {T.var: T.x()}
    limit = T.m if max_gen is None else max_gen
    for i, n in enumerate(T.names):
        alias = f"t{i + 1}"
        if i < limit:
            names[n] = T.gen(i)
            names.setdefault(alias, T.gen(i))
        else:
            names.setdefault(n, _Forbidden(n))
            names.setdefault(alias, _Forbidden(alias))
    for k, v in params.items():
        if k in names:
            continue
        names[k] = T.from_ratfunc(RatFunc.const(T.F, param_value(T.F, v)))
    return _Evaluator(T, names, text).visit(tree.body)


class _Forbidden:
    def __init__(self, name: str):
        self.name = name


class _Evaluator:
    def __init__(self, T: TowerField, names: dict, text: str):
        self.T = T
        self.names = names
        self.text = text

    def fail(self, msg: str):
        raise ExpressionError(f"{msg} in {self.text!r}")

    def visit(self, node):
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                base = self.visit(node.left)
                return base ** self.exponent(node.right)
            left, right = self.visit(node.left), self.visit(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                return left / right
            self.fail(f"unsupported operator {type(node.op).__name__}")
        if isinstance(node, ast.UnaryOp):
            v = self.visit(node.operand)
            if isinstance(node.op, ast.USub):
                return -v
            if isinstance(node.op, ast.UAdd):
                return v
            self.fail("unsupported unary operator")
        if isinstance(node, ast.Constant):
            if isinstance(node.value, int) and not isinstance(node.value, bool):
                return self.T.const(node.value)
            self.fail(f"unsupported literal {node.value!r}")
        if isinstance(node, ast.Name):
            v = self.names.get(node.id)
            if v is None:
                self.fail(f"unknown name {node.id!r}")
            if isinstance(v, _Forbidden):
                raise NonTriangularRelation(f"{v.name} is not available in {self.text!r}")
            return v
        self.fail(f"unsupported syntax {type(node).__name__}")

    def exponent(self, node) -> int:
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -self.exponent(node.operand)
        self.fail("exponents must be integer literals")


def param_value(F, v):
    """Encode a parameter (int, coefficient list, or FqElem) into F."""
    if isinstance(v, FqElem):
        return v.value
    if isinstance(v, int):
        return F.from_int(v)
    return F.from_coeffs(v)
