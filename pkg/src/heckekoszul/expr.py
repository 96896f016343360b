"""A small expression language for Hecke algebra elements.

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^-1']
    atom   := INT | 'v' ['^' SINT] | 'theta[' ints ']' | 'T[' ints ']'
            | IDENT '(' expr ')' | '(' expr ')' | '-' atom

Morphism strings for ``--spec`` are either a preset name or ``;``-separated
rules ``T->expr``, ``T[i]->expr``, ``theta->expr`` and ``v->v`` / ``v->-v``;
inside a rule a bare ``T`` or ``theta`` stands for the generator being mapped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import hecke
from .hecke import AlgebraMorphismSpec, HeckeElt
from .laurent import LaurentPoly
from .rootdata import RootDatum

FUNCTIONS = ("IM", "iota", "KIM")


class ParseError(ValueError):
    def __init__(self, message: str, src: str, offset: int):
        line = src.count("\n", 0, offset) + 1
        col = offset - (src.rfind("\n", 0, offset) + 1) + 1
        super().__init__(f"syntax error at offset {offset} (line {line}, column {col}): {message}")
        self.offset = offset
        self.line = line
        self.column = col


class EvalError(ValueError):
    pass


# AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class VPow:
    k: int


@dataclass(frozen=True)
class ThetaNode:
    coords: tuple[int, ...]


@dataclass(frozen=True)
class TNode:
    indices: tuple[int, ...]


@dataclass(frozen=True)
class GenRef:
    """A bare ``T`` or ``theta`` inside a morphism rule."""

    kind: str


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Inv:
    arg: object


@dataclass(frozen=True)
class Apply:
    name: str
    arg: object


# lexer ----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(->|[-+*^\[\](),;]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # INT, IDENT, OP, END
    text: str
    pos: int


def _lex(src: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos >= len(src):
            toks.append(_Tok("END", "", len(src)))
            return toks
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {src[pos]!r}", src, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(_Tok("INT", m.group(1), start))
        elif m.group(2):
            toks.append(_Tok("IDENT", m.group(2), start))
        else:
            toks.append(_Tok("OP", m.group(3), start))
        pos = m.end()


class _Parser:
    def __init__(self, src: str, d: RootDatum, allow_genref: bool = False):
        self.src = src
        self.d = d
        self.toks = _lex(src)
        self.i = 0
        self.allow_genref = allow_genref

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, self.src, tok.pos)

    def expect(self, text: str) -> _Tok:
        t = self.peek()
        if t.kind != "OP" or t.text != text:
            self.error(f"expected {text!r}" + (" but input ended" if t.kind == "END" else f", found {t.text!r}"))
        return self.next()

    def is_op(self, text: str) -> bool:
        t = self.peek()
        return t.kind == "OP" and t.text == text

    def parse(self):
        node = self.expr()
        if self.peek().kind != "END":
            self.error(f"unexpected {self.peek().text!r}")
        return node

    def expr(self):
        node = self.term()
        while self.is_op("+") or self.is_op("-"):
            op = self.next().text
            rhs = self.term()
            node = Add(node, rhs if op == "+" else Neg(rhs))
        return node

    def term(self):
        node = self.factor()
        while self.is_op("*"):
            self.next()
            node = Mul(node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.is_op("^"):
            caret = self.next()
            if not self.is_op("-"):
                self.error("only the exponent -1 is allowed here", caret)
            self.next()
            t = self.peek()
            if t.kind != "INT" or t.text != "1":
                self.error("only the exponent -1 is allowed here")
            self.next()
            node = Inv(node)
        return node

    def sint(self) -> int:
        sign = 1
        if self.is_op("-"):
            self.next()
            sign = -1
        elif self.is_op("+"):
            self.next()
        t = self.peek()
        if t.kind != "INT":
            self.error("expected integer" + (" but input ended" if t.kind == "END" else ""))
        self.next()
        return sign * int(t.text)

    def ints(self) -> tuple[int, ...]:
        self.expect("[")
        out: list[int] = []
        if self.is_op("]"):
            self.next()
            return ()
        out.append(self.sint())
        while self.is_op(","):
            self.next()
            out.append(self.sint())
        self.expect("]")
        return tuple(out)

    def atom(self):
        t = self.peek()
        if t.kind == "INT":
            self.next()
            return IntLit(int(t.text))
        if t.kind == "OP" and t.text == "-":
            self.next()
            return Neg(self.atom())
        if t.kind == "OP" and t.text == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        if t.kind == "IDENT":
            name = t.text
            if name == "v":
                self.next()
                if self.is_op("^"):
                    # v^-1 is a power of v, not a generic inverse
                    self.next()
                    return VPow(self.sint())
                return VPow(1)
            if name == "theta":
                self.next()
                if not self.is_op("["):
                    if self.allow_genref:
                        return GenRef("theta")
                    self.error("expected '[' after theta")
                start = self.peek()
                coords = self.ints()
                if len(coords) != self.d.rank:
                    self.error(f"theta needs {self.d.rank} coordinates, got {len(coords)}", start)
                return ThetaNode(coords)
            if name == "T":
                self.next()
                if not self.is_op("["):
                    if self.allow_genref:
                        return GenRef("T")
                    self.error("expected '[' after T")
                start = self.peek()
                idx = self.ints()
                for i in idx:
                    if not 1 <= i <= self.d.rank:
                        self.error(f"simple reflection index {i} out of range 1..{self.d.rank}", start)
                return TNode(idx)
            if name in FUNCTIONS:
                self.next()
                self.expect("(")
                node = self.expr()
                self.expect(")")
                return Apply(name, node)
            self.error(f"unknown identifier {name!r}")
        if t.kind == "END":
            self.error("unexpected end of input")
        self.error(f"unexpected {t.text!r}")


def parse_hecke_expr(src: str, d: RootDatum):
    return _Parser(src, d).parse()


_APPLY = {"IM": hecke.im, "iota": hecke.iota, "KIM": hecke.k_im}


def eval_expr(ast, d: RootDatum, bindings: dict[str, HeckeElt] | None = None) -> HeckeElt:
    def ev(node) -> HeckeElt:
        if isinstance(node, IntLit):
            return hecke.scalar(d, node.value)
        if isinstance(node, VPow):
            return hecke.scalar(d, LaurentPoly.monomial(node.k))
        if isinstance(node, ThetaNode):
            return hecke.theta(d, node.coords)
        if isinstance(node, TNode):
            return hecke.t_word(d, node.indices)
        if isinstance(node, GenRef):
            if not bindings or node.kind not in bindings:
                raise EvalError(f"bare {node.kind} is only meaningful inside a morphism rule")
            return bindings[node.kind]
        if isinstance(node, Add):
            return ev(node.left) + ev(node.right)
        if isinstance(node, Mul):
            return ev(node.left) * ev(node.right)
        if isinstance(node, Neg):
            return -ev(node.arg)
        if isinstance(node, Inv):
            val = ev(node.arg)
            try:
                return hecke.inverse(val)
            except ZeroDivisionError as exc:
                raise EvalError(str(exc)) from None
        if isinstance(node, Apply):
            return _APPLY[node.name](ev(node.arg))
        raise EvalError(f"unknown node {node!r}")

    return ev(ast)


def evaluate(src: str, d: RootDatum) -> HeckeElt:
    return eval_expr(parse_hecke_expr(src, d), d)


# morphism strings -----------------------------------------------------------

_PRESETS = {
    "identity": hecke.identity_spec,
    "IM": hecke.im_spec,
    "iota": hecke.iota_spec,
    "KIM": hecke.k_im_spec,
}


def parse_morphism_spec(src: str, d: RootDatum) -> AlgebraMorphismSpec:
    """Build a generator assignment from a preset name or rule string.

    Unmentioned generators keep their identity images.
    """
    text = src.strip()
    if text in _PRESETS:
        return _PRESETS[text](d)
    spec = hecke.identity_spec(d)
    images_T = dict(spec.image_of_T)
    images_theta = dict(spec.image_of_theta)
    twist = "identity"
    offset = 0
    for raw in src.split(";"):
        rule = raw.strip()
        start = offset + (len(raw) - len(raw.lstrip()))
        offset += len(raw) + 1
        if not rule:
            continue
        if "->" not in rule:
            raise ParseError("expected a rule of the form lhs->rhs", src, start)
        lhs, rhs = rule.split("->", 1)
        lhs = lhs.strip()
        rhs_off = start + rule.index("->") + 2
        if lhs == "v":
            r = rhs.strip()
            if r == "v":
                twist = "identity"
            elif r == "-v":
                twist = "neg_v"
            else:
                raise ParseError("v can only map to v or -v", src, rhs_off)
            continue
        try:
            ast = _Parser(rhs, d, allow_genref=True).parse()
        except ParseError as exc:
            raise ParseError(str(exc).split(": ", 1)[1], src, rhs_off + exc.offset) from None
        m = re.fullmatch(r"T\[(\d+)\]", lhs)
        if lhs == "T" or m:
            targets = [int(m.group(1))] if m else list(range(1, d.rank + 1))
            for i in targets:
                if not 1 <= i <= d.rank:
                    raise ParseError(f"simple reflection index {i} out of range", src, start)
                images_T[i] = eval_expr(ast, d, {"T": hecke.t_alpha(d, i)})
        elif lhs == "theta":
            for g in list(images_theta):
                images_theta[g] = eval_expr(ast, d, {"theta": hecke.theta(d, g)})
        else:
            raise ParseError(f"unknown rule target {lhs!r}", src, start)
    return AlgebraMorphismSpec(d, images_T, images_theta, twist, src.strip())
