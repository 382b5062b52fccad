"""Parse expressions such as ``"v^-1 + 2*v"`` or ``"(v+1)/(v-1)"``.

Accepted grammar: integers, the symbol ``v``, ``+ - * /`` and powers written
``^`` or ``**`` with integer exponents.  Everything is evaluated exactly
in Q(v).
"""

from __future__ import annotations

import ast

from .laurent import LaurentPoly
from .ratfunc import RationalFunction

_BINOPS = {ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow}


def _int_exponent(node) -> int:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        k = _int_exponent(node.operand)
        return -k if isinstance(node.op, ast.USub) else k
    raise ValueError("exponents must be integer literals")


def _eval(node) -> RationalFunction:
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return RationalFunction.coerce(node.value)
    if isinstance(node, ast.Name) and node.id == "v":
        return RationalFunction.coerce(LaurentPoly.v())
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        x = _eval(node.operand)
        return -x if isinstance(node.op, ast.USub) else x
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        if isinstance(node.op, ast.Pow):
            return _eval(node.left) ** _int_exponent(node.right)
        a, b = _eval(node.left), _eval(node.right)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        return a / b
    raise ValueError(f"unsupported syntax in expression: {ast.dump(node)}")


def parse_ratfunc(text: str) -> RationalFunction:
    """
    >>> parse_ratfunc("v^-1 + v")
    v^-1 + v
    >>> parse_ratfunc("(v^2 - 1)/(v - 1)")
    1 + v
    """
    text = text.replace("^", "**")
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}") from exc
    return _eval(tree)


def parse_laurent(text: str) -> LaurentPoly:
    return parse_ratfunc(text).as_laurent()
