"""Text formats for schemes and access formulas.

Scheme:   node  := "threshold" "(" "k" "=" INT ")" "{" child* "}" | "leaf" ID
          child := ["crucial" | "redundant" "(" GID ")"] node
Formula:  f     := ID | "and" "(" f ("," f)* ")" | "or" "(" f ("," f)* ")"
                 | "thr" "(" INT ";" f ("," f)* ")"

`#` starts a comment that runs to the end of the line.
"""
import re
from dataclasses import dataclass
from typing import List, Union

from shardkit.access.formula import AccessFormula, And, Literal, Or, ThresholdGate
from shardkit.errors import ParameterError, SchemeParseError
from shardkit.sharing.scheme import Child, Leaf, SchemeNode, SlotKind, Threshold

_TOKEN = re.compile(
    r"(?P<space>[ \t\r\n]+)|(?P<comment>#[^\n]*)|(?P<int>\d+)"
    r"|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(){}=,;])"
)

SCHEME_KEYWORDS = ("threshold", "leaf")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos, line = 0, 1
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise SchemeParseError(f"line {line}: unexpected character {text[pos]!r}")
        kind = match.lastgroup
        if kind not in ("space", "comment"):
            tokens.append(Token(kind, match.group(), line))
        line += match.group().count("\n")
        pos = match.end()
    return tokens


class _Parser:

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self, offset: int = 0) -> Union[Token, None]:
        index = self.pos + offset
        return self.tokens[index] if index < len(self.tokens) else None

    def fail(self, expected: str):
        token = self.peek()
        if token is None:
            raise SchemeParseError(f"unexpected end of input, expected {expected}")
        raise SchemeParseError(f"line {token.line}: expected {expected}, got {token.text!r}")

    def take(self, text: str = None, kind: str = None) -> Token:
        token = self.peek()
        if token is None or (text is not None and token.text != text) or (kind is not None and token.kind != kind):
            self.fail(repr(text) if text is not None else kind)
        self.pos += 1
        return token

    def at(self, text: str) -> bool:
        token = self.peek()
        return token is not None and token.text == text

    def done(self):
        if self.peek() is not None:
            self.fail("end of input")

    # scheme

    def node(self) -> SchemeNode:
        if self.at("leaf"):
            self.take("leaf")
            return Leaf(self.take(kind="id").text)
        self.take("threshold")
        self.take("(")
        self.take("k")
        self.take("=")
        k = int(self.take(kind="int").text)
        self.take(")")
        self.take("{")
        children = []
        while not self.at("}"):
            children.append(self.child())
        self.take("}")
        return Threshold(k, tuple(children))

    def child(self) -> Child:
        if self.at("crucial"):
            self.take("crucial")
            return Child(self.node(), SlotKind.CRUCIAL)
        if self.at("redundant"):
            self.take("redundant")
            self.take("(")
            token = self.peek()
            if token is None or token.kind not in ("id", "int"):
                self.fail("group id")
            self.pos += 1
            self.take(")")
            return Child(self.node(), SlotKind.REDUNDANT, token.text)
        return Child(self.node())

    # formula

    def formula(self) -> AccessFormula:
        token = self.take(kind="id")
        if token.text not in ("and", "or", "thr") or not self.at("("):
            return Literal(token.text)
        self.take("(")
        k = None
        if token.text == "thr":
            k = int(self.take(kind="int").text)
            self.take(";")
        operands = [self.formula()]
        while self.at(","):
            self.take(",")
            operands.append(self.formula())
        self.take(")")
        try:
            if token.text == "and":
                return And(tuple(operands))
            if token.text == "or":
                return Or(tuple(operands))
            return ThresholdGate(k, tuple(operands))
        except ParameterError as exc:
            raise SchemeParseError(f"line {token.line}: {exc}") from exc


def is_scheme_text(text: str) -> bool:
    tokens = tokenize(text)
    return bool(tokens) and tokens[0].text in SCHEME_KEYWORDS


def parse_scheme(text: str) -> SchemeNode:
    parser = _Parser(text)
    node = parser.node()
    parser.done()
    return node


def parse_formula(text: str) -> AccessFormula:
    parser = _Parser(text)
    f = parser.formula()
    parser.done()
    return f


def format_scheme(node: SchemeNode, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(node, Leaf):
        return f"{pad}leaf {node.holder}"
    lines = [f"{pad}threshold(k={node.k}) {{"]
    for child in node.children:
        body = format_scheme(child.node, indent + 1)
        if child.kind is SlotKind.CRUCIAL:
            body = f"{'  ' * (indent + 1)}crucial {body.lstrip()}"
        elif child.kind is SlotKind.REDUNDANT:
            body = f"{'  ' * (indent + 1)}redundant({child.group}) {body.lstrip()}"
        lines.append(body)
    lines.append(f"{pad}}}")
    return "\n".join(lines)


def format_formula(f: AccessFormula) -> str:
    if isinstance(f, Literal):
        return f.holder
    operands = ", ".join(format_formula(c) for c in f.children)
    if isinstance(f, And):
        return f"and({operands})"
    if isinstance(f, Or):
        return f"or({operands})"
    return f"thr({f.k}; {operands})"
