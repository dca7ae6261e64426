"""Parser, renderer and evaluator for the formula DSL.

Surface syntax is ASCII only.  Grammar (see docs/grammar.ebnf):

    expr    = term { ("+" | "-") term } ;
    term    = unary { ("*" | "/") unary } ;
    unary   = "-" unary | power ;
    power   = atom { "^" exponent } ;
    atom    = INTEGER | NAME | NAME "(" NAME "," expr ")" | "(" expr ")" ;
    exponent = INTEGER | "-" INTEGER | "(" ["-"] INTEGER ")" ;

Power binds tighter than unary minus, so "-2*Z1^3" is -(2*(Z1^3)).
The only call form is apply(map_name, expr).  Names resolve at eval
time to the built-in constants (zeta, i, sqrt2, sqrtm2), an ambient
variable, or a named environment element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactfield import (CycloElement, SQRT2, SQRTM1, SQRTM2, ZETA)
from .multipoly import Poly, VarSet
from .ratfunc import RatFunc


class ExprSyntaxError(ValueError):
    def __init__(self, message, line, col):
        super().__init__("%s at %d:%d" % (message, line, col))
        self.line = line
        self.col = col


class EvalError(ValueError):
    pass


# -- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Bin:
    op: str  # one of + - * /
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Apply:
    map_name: str
    arg: object


# -- tokenizer ----------------------------------------------------------------

_PUNCT = set("+-*/^(),")


def _tokenize(src: str):
    tokens = []
    line, col = 1, 1
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(("int", int(src[i:j]), line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(("name", src[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            tokens.append(("punct", ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ExprSyntaxError("unexpected character %r" % ch, line, start_col)
    tokens.append(("end", None, line, col))
    return tokens


# -- parser ---------------------------------------------------------------------

class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_punct(self, ch):
        kind, value, line, col = self.next()
        if kind != "punct" or value != ch:
            raise ExprSyntaxError("expected %r" % ch, line, col)

    def fail(self, message):
        _, _, line, col = self.peek()
        raise ExprSyntaxError(message, line, col)

    def parse(self):
        e = self.expr()
        kind, _, line, col = self.peek()
        if kind != "end":
            raise ExprSyntaxError("trailing input", line, col)
        return e

    def expr(self):
        left = self.term()
        while True:
            kind, value, _, _ = self.peek()
            if kind == "punct" and value in "+-":
                self.next()
                left = Bin(value, left, self.term())
            else:
                return left

    def term(self):
        left = self.unary()
        while True:
            kind, value, _, _ = self.peek()
            if kind == "punct" and value in "*/":
                self.next()
                left = Bin(value, left, self.unary())
            else:
                return left

    def unary(self):
        kind, value, _, _ = self.peek()
        if kind == "punct" and value == "-":
            self.next()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        while True:
            kind, value, _, _ = self.peek()
            if kind == "punct" and value == "^":
                self.next()
                base = Pow(base, self.exponent())
            else:
                return base

    def exponent(self) -> int:
        kind, value, line, col = self.next()
        if kind == "int":
            return value
        if kind == "punct" and value == "-":
            kind2, value2, line2, col2 = self.next()
            if kind2 != "int":
                raise ExprSyntaxError("expected integer exponent", line2, col2)
            return -value2
        if kind == "punct" and value == "(":
            e = self.exponent()
            self.expect_punct(")")
            return e
        raise ExprSyntaxError("expected integer exponent", line, col)

    def atom(self):
        kind, value, line, col = self.next()
        if kind == "int":
            return Lit(value)
        if kind == "name":
            nxt_kind, nxt_val, _, _ = self.peek()
            if nxt_kind == "punct" and nxt_val == "(":
                if value != "apply":
                    raise ExprSyntaxError("only apply(...) may be called", line, col)
                self.next()
                mk, mv, ml, mc = self.next()
                if mk != "name":
                    raise ExprSyntaxError("expected map name", ml, mc)
                self.expect_punct(",")
                arg = self.expr()
                self.expect_punct(")")
                return Apply(mv, arg)
            return Name(value)
        if kind == "punct" and value == "(":
            e = self.expr()
            self.expect_punct(")")
            return e
        raise ExprSyntaxError("expected a value", line, col)


def parse(src: str):
    """Parse DSL text into an Expr tree."""
    return _Parser(src).parse()


# -- rendering -------------------------------------------------------------------

# Binding strength used to decide parenthesization when rendering.
_PREC_ADD, _PREC_MUL, _PREC_NEG, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4, 5


def _prec(e) -> int:
    if isinstance(e, Bin):
        return _PREC_ADD if e.op in "+-" else _PREC_MUL
    if isinstance(e, Neg):
        return _PREC_NEG
    if isinstance(e, Pow):
        return _PREC_POW
    return _PREC_ATOM


def render(e) -> str:
    """Canonical text; parse(render(e)) is structurally e."""
    if isinstance(e, Lit):
        return str(e.value)
    if isinstance(e, Name):
        return e.name
    if isinstance(e, Apply):
        return "apply(%s, %s)" % (e.map_name, render(e.arg))
    if isinstance(e, Neg):
        inner = render(e.arg)
        if _prec(e.arg) < _PREC_NEG:
            inner = "(%s)" % inner
        return "-" + inner
    if isinstance(e, Pow):
        base = render(e.base)
        if _prec(e.base) < _PREC_ATOM:
            base = "(%s)" % base
        if e.exponent < 0:
            return "%s^(%d)" % (base, e.exponent)
        return "%s^%d" % (base, e.exponent)
    if isinstance(e, Bin):
        mine = _prec(e)
        left = render(e.left)
        if _prec(e.left) < mine:
            left = "(%s)" % left
        right = render(e.right)
        # Left-associative: equal precedence on the right needs parens.
        if _prec(e.right) <= mine:
            right = "(%s)" % right
        return "%s %s %s" % (left, e.op, right)
    raise TypeError("not an Expr node: %r" % (e,))


# -- evaluation --------------------------------------------------------------------

_CONSTANTS = {
    "zeta": ZETA,
    "i": SQRTM1,
    "sqrt2": SQRT2,
    "sqrtm2": SQRTM2,
}


def evaluate(e, vars: VarSet, env=None, maps=None) -> RatFunc:
    """Evaluate an Expr to a RatFunc over `vars`.

    Resolution order for a Name: built-in constant, then `env`.  Ambient
    variables are expected to be present in env (bound to themselves).
    """
    env = env or {}
    maps = maps or {}

    def go(node) -> RatFunc:
        if isinstance(node, Lit):
            return RatFunc.const(vars, node.value)
        if isinstance(node, Name):
            if node.name in _CONSTANTS:
                return RatFunc.const(vars, _CONSTANTS[node.name])
            if node.name in env:
                return env[node.name]
            if node.name in vars:
                return RatFunc.variable(vars, node.name)
            raise EvalError("unknown name %r" % node.name)
        if isinstance(node, Neg):
            return -go(node.arg)
        if isinstance(node, Pow):
            return go(node.base) ** node.exponent
        if isinstance(node, Bin):
            left = go(node.left)
            right = go(node.right)
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            if node.op == "*":
                return left * right
            if left.vars != right.vars:
                raise EvalError("operands over different variable sets")
            if right.is_zero():
                raise ZeroDivisionError("division by the zero function")
            return left / right
        if isinstance(node, Apply):
            if node.map_name not in maps:
                raise EvalError("unknown map %r" % node.map_name)
            return maps[node.map_name].apply(go(node.arg))
        raise TypeError("not an Expr node: %r" % (node,))

    return go(e)


def eval_text(src: str, vars: VarSet, env=None, maps=None) -> RatFunc:
    return evaluate(parse(src), vars, env=env, maps=maps)


def referenced_names(e) -> set:
    """All Name identifiers in the tree (excluding map names)."""
    out = set()

    def walk(node):
        if isinstance(node, Name):
            out.add(node.name)
        elif isinstance(node, Neg):
            walk(node.arg)
        elif isinstance(node, Pow):
            walk(node.base)
        elif isinstance(node, Bin):
            walk(node.left)
            walk(node.right)
        elif isinstance(node, Apply):
            walk(node.arg)

    walk(e)
    return out


def parse_cyclo(src: str) -> CycloElement:
    """Parse the canonical coefficient form "c0 + c1*z + c2*z^2 + c3*z^3".

    Accepts "z" or "zeta" for the field generator and rationals "p/q".
    """
    tree = parse(src)
    vars = VarSet(("z",))
    env = {"z": RatFunc.const(vars, ZETA), "zeta": RatFunc.const(vars, ZETA)}
    value = evaluate(tree, vars, env=env)
    if not value.is_constant():
        raise EvalError("not a coefficient expression: %r" % src)
    return value.constant_value()
