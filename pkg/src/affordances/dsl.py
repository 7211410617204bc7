"""Text syntax for operator expressions.

Grammar, LL(1), parsed by recursive descent with one token of lookahead:

    expr     := term { ("|" | "&" | "\\") term }        left-associative
    term     := opCall | approx | "!" "(" expr ")" "@" sort
              | setRef | "(" expr ")"
    opCall   := opName "[" sort [";" selector] [";" "mask=" digits] "]"
                "(" expr "," expr ")"
    approx   := ("up" | "low") "(" expr ")" "@" sort
    setRef   := ident [ "@" sort ]
    opName   := "poss" | "suff" | "nec" | "dusuff" | "suffstar" | "necu"
              | "possu" | "alpha_up" | "alpha_low" | "cyl"
    selector := "raw" | "upper" | "lower"
    sort     := "A" | "O" | "E"

"|" is union, "&" intersection, "\\" difference; the three share one
precedence level. Approximation and complement nodes carry an explicit
sort tag because approximations are partition-relative; the tag stops a
query from silently approximating against the wrong table.

One deviation from the production above: "cyl" names a projection that
takes no set arguments, so it is written without an argument list, as in
``cyl[E; upper]``. Its value is a set of pairs over the two remaining
sorts in fixed order.

Defaults: selector "raw"; mask "123" for alpha_up. A mask on any other
operator is rejected. Operator names plus "up" and "low" are reserved
and cannot name sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from . import operators as ops
from . import rough
from .affordance import AffordanceStructure, Sort
from .errors import QuerySyntaxError, SortMismatch, UnknownOperatorName, \
    UnknownSetName
from .operators import FULL_MASK, RelationSelector
from .storage import NamedSet

_OP_NAMES = ("poss", "suff", "nec", "dusuff", "suffstar", "necu", "possu",
             "alpha_up", "alpha_low", "cyl")
_SELECTORS = {"raw": RelationSelector.RAW,
              "upper": RelationSelector.UPPER,
              "lower": RelationSelector.LOWER}
_SORTS = {"A": Sort.A, "O": Sort.O, "E": Sort.E}
_RESERVED = set(_OP_NAMES) | {"up", "low"}


# --- AST ----------------------------------------------------------------


@dataclass(frozen=True)
class SetName:
    name: str
    tag: Sort | None = None


@dataclass(frozen=True)
class Union:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Intersect:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Diff:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Complement:
    child: "Expr"
    sort: Sort


@dataclass(frozen=True)
class UpperApprox:
    child: "Expr"
    sort: Sort


@dataclass(frozen=True)
class LowerApprox:
    child: "Expr"
    sort: Sort


@dataclass(frozen=True)
class OpCall:
    op: str
    coordinate: Sort
    arg1: "Expr"
    arg2: "Expr"
    selector: RelationSelector = RelationSelector.RAW
    mask: frozenset[int] | None = None


@dataclass(frozen=True)
class Cylindrify:
    coordinate: Sort
    selector: RelationSelector = RelationSelector.RAW


Expr = (SetName | Union | Intersect | Diff | Complement
        | UpperApprox | LowerApprox | OpCall | Cylindrify)

PairSort = tuple[Sort, Sort]


# --- lexer --------------------------------------------------------------

_PUNCT = {"[": "LBRACK", "]": "RBRACK", "(": "LPAREN", ")": "RPAREN",
          ";": "SEMI", ",": "COMMA", "@": "AT", "|": "PIPE", "&": "AMP",
          "\\": "BACKSLASH", "!": "BANG", "=": "EQUALS"}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _lex(text: str) -> Iterator[_Token]:
    line, column = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch in " \t\r":
            column += 1
            i += 1
            continue
        if ch in _PUNCT:
            yield _Token(_PUNCT[ch], ch, line, column)
            column += 1
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            yield _Token("NUMBER", text[start:i], line, column)
            column += i - start
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            yield _Token("IDENT", text[start:i], line, column)
            column += i - start
            continue
        raise QuerySyntaxError(line, column, f"stray character {ch!r}")
    yield _Token("EOF", "", line, column)


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(_lex(text))
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        if token.kind != "EOF":
            self.pos += 1
        return token

    def fail(self, token: _Token, message: str,
             expected: tuple[str, ...] = ()) -> QuerySyntaxError:
        return QuerySyntaxError(token.line, token.column, message, expected)

    def expect(self, kind: str, label: str) -> _Token:
        token = self.peek()
        if token.kind != kind:
            found = repr(token.text) if token.kind != "EOF" else "end of input"
            raise self.fail(token, f"unexpected {found}", (label,))
        return self.advance()

    def parse(self) -> Expr:
        expr = self.expr()
        token = self.peek()
        if token.kind != "EOF":
            raise self.fail(token, f"unexpected trailing {token.text!r}",
                            ("'|'", "'&'", "'\\'", "end of input"))
        return expr

    def expr(self) -> Expr:
        node = self.term()
        builders = {"PIPE": Union, "AMP": Intersect, "BACKSLASH": Diff}
        while self.peek().kind in builders:
            builder = builders[self.advance().kind]
            node = builder(node, self.term())
        return node

    def term(self) -> Expr:
        token = self.peek()
        if token.kind == "BANG":
            self.advance()
            self.expect("LPAREN", "'('")
            child = self.expr()
            self.expect("RPAREN", "')'")
            self.expect("AT", "'@'")
            return Complement(child, self.sort())
        if token.kind == "LPAREN":
            self.advance()
            child = self.expr()
            self.expect("RPAREN", "')'")
            return child
        if token.kind == "IDENT":
            if token.text in ("up", "low"):
                return self.approx()
            if token.text in _OP_NAMES:
                return self.op_call()
            if self.tokens[self.pos + 1].kind == "LBRACK":
                raise UnknownOperatorName(token.line, token.column, token.text)
            return self.set_ref()
        found = repr(token.text) if token.kind != "EOF" else "end of input"
        raise self.fail(token, f"unexpected {found}",
                        ("set name", "operator call", "'('", "'!'"))

    def approx(self) -> Expr:
        word = self.advance()
        self.expect("LPAREN", "'('")
        child = self.expr()
        self.expect("RPAREN", "')'")
        self.expect("AT", "'@'")
        builder = UpperApprox if word.text == "up" else LowerApprox
        return builder(child, self.sort())

    def op_call(self) -> Expr:
        name = self.advance()
        self.expect("LBRACK", "'['")
        coordinate = self.sort()
        selector = RelationSelector.RAW
        mask: frozenset[int] | None = None
        if self.peek().kind == "SEMI":
            self.advance()
            token = self.peek()
            if token.kind == "IDENT" and token.text in _SELECTORS:
                selector = _SELECTORS[self.advance().text]
                if self.peek().kind == "SEMI":
                    self.advance()
                    mask = self.mask(name)
            elif token.kind == "IDENT" and token.text == "mask":
                mask = self.mask(name)
            else:
                raise self.fail(token, f"unexpected {token.text!r}",
                                ("'raw'", "'upper'", "'lower'", "'mask='"))
        self.expect("RBRACK", "']'")
        if name.text == "cyl":
            return Cylindrify(coordinate, selector)
        if name.text == "alpha_up" and mask is None:
            mask = FULL_MASK
        self.expect("LPAREN", "'('")
        arg1 = self.expr()
        self.expect("COMMA", "','")
        arg2 = self.expr()
        self.expect("RPAREN", "')'")
        return OpCall(name.text, coordinate, arg1, arg2, selector, mask)

    def mask(self, op_token: _Token) -> frozenset[int]:
        keyword = self.expect("IDENT", "'mask='")
        if keyword.text != "mask":
            raise self.fail(keyword, f"unexpected {keyword.text!r}", ("'mask='",))
        if op_token.text != "alpha_up":
            raise self.fail(keyword,
                            f"mask applies only to alpha_up, not {op_token.text}")
        self.expect("EQUALS", "'='")
        digits = self.expect("NUMBER", "mask digits")
        seen: list[int] = []
        for ch in digits.text:
            if ch not in "123":
                raise self.fail(digits, f"mask digit {ch!r} outside 1..3")
            if int(ch) in seen:
                raise self.fail(digits, f"repeated mask digit {ch!r}")
            seen.append(int(ch))
        return frozenset(seen)

    def sort(self) -> Sort:
        token = self.peek()
        if token.kind == "IDENT" and token.text in _SORTS:
            self.advance()
            return _SORTS[token.text]
        found = repr(token.text) if token.kind != "EOF" else "end of input"
        raise self.fail(token, f"unexpected {found}", ("'A'", "'O'", "'E'"))

    def set_ref(self) -> Expr:
        name = self.advance()
        if name.text in _RESERVED:
            raise self.fail(name, f"{name.text!r} is a reserved word")
        tag = None
        if self.peek().kind == "AT":
            self.advance()
            tag = self.sort()
        return SetName(name.text, tag)


def parse(text: str) -> Expr:
    """Parse one query. Raises QuerySyntaxError with a 1-based position."""
    return _Parser(text).parse()


# --- sort checking ------------------------------------------------------


def _show_sort(sort: Sort | PairSort) -> str:
    if isinstance(sort, Sort):
        return sort.value
    return f"{sort[0].value}x{sort[1].value}"


def check_sorts(expr: Expr, declared: Mapping[str, Sort]) -> Sort | PairSort:
    """Infer the sort of every node, or raise on the first conflict.

    declared maps set names to their sorts. The result is the root's
    sort: a single Sort for id sets, a pair of sorts for cylindrified
    relations. SortMismatch names the offending node by its path from
    the root, like "query.arg1.left".
    """
    return _sort_of(expr, declared, "query")


def _sort_of(expr: Expr, declared: Mapping[str, Sort],
             path: str) -> Sort | PairSort:
    if isinstance(expr, SetName):
        if expr.name not in declared:
            raise UnknownSetName(expr.name, where=path)
        sort = declared[expr.name]
        if expr.tag is not None and expr.tag is not sort:
            raise SortMismatch(path, expr.tag.value, sort.value)
        return sort
    if isinstance(expr, (Union, Intersect, Diff)):
        left = _sort_of(expr.left, declared, path + ".left")
        right = _sort_of(expr.right, declared, path + ".right")
        if left != right:
            raise SortMismatch(path, _show_sort(left), _show_sort(right))
        return left
    if isinstance(expr, (Complement, UpperApprox, LowerApprox)):
        child = _sort_of(expr.child, declared, path + ".child")
        if child != expr.sort:
            raise SortMismatch(path, expr.sort.value, _show_sort(child))
        return expr.sort
    if isinstance(expr, OpCall):
        expected1, expected2 = ops.ARGUMENT_SORTS[expr.coordinate]
        found1 = _sort_of(expr.arg1, declared, path + ".arg1")
        if found1 != expected1:
            raise SortMismatch(path + ".arg1", expected1.value,
                               _show_sort(found1))
        found2 = _sort_of(expr.arg2, declared, path + ".arg2")
        if found2 != expected2:
            raise SortMismatch(path + ".arg2", expected2.value,
                               _show_sort(found2))
        return expr.coordinate
    return ops.ARGUMENT_SORTS[expr.coordinate]


# --- evaluation ---------------------------------------------------------

_PLAIN_OPS = {"poss": ops.poss, "suff": ops.suff, "nec": ops.nec,
              "dusuff": ops.dusuff, "suffstar": ops.suff_star,
              "necu": ops.nec_u, "possu": ops.poss_u}


def evaluate(expr: Expr, structure: AffordanceStructure,
             sets: Mapping[str, NamedSet]):
    """Evaluate a sort-checked query against a structure.

    Returns a frozenset of ids, or of id pairs for cylindrified nodes.
    """
    check_sorts(expr, {name: ns.sort for name, ns in sets.items()})
    return frozenset(_eval(expr, structure, sets))


def _eval(expr: Expr, s: AffordanceStructure, sets: Mapping[str, NamedSet]):
    if isinstance(expr, SetName):
        return set(sets[expr.name].members)
    if isinstance(expr, Union):
        return _eval(expr.left, s, sets) | _eval(expr.right, s, sets)
    if isinstance(expr, Intersect):
        return _eval(expr.left, s, sets) & _eval(expr.right, s, sets)
    if isinstance(expr, Diff):
        return _eval(expr.left, s, sets) - _eval(expr.right, s, sets)
    if isinstance(expr, Complement):
        return set(s.sort_ids(expr.sort)) - _eval(expr.child, s, sets)
    if isinstance(expr, UpperApprox):
        return rough.upper(s.partition(expr.sort), _eval(expr.child, s, sets))
    if isinstance(expr, LowerApprox):
        return rough.lower(s.partition(expr.sort), _eval(expr.child, s, sets))
    if isinstance(expr, Cylindrify):
        return ops.cylindrify(s, expr.selector, expr.coordinate)
    arg1 = _eval(expr.arg1, s, sets)
    arg2 = _eval(expr.arg2, s, sets)
    if expr.op == "alpha_up":
        return ops.alpha_upper(s, expr.coordinate, expr.mask, arg1, arg2,
                               sel=expr.selector)
    if expr.op == "alpha_low":
        return ops.alpha_lower(s, expr.coordinate, arg1, arg2,
                               sel=expr.selector)
    return _PLAIN_OPS[expr.op](s, expr.selector, expr.coordinate, arg1, arg2)


# --- printing -----------------------------------------------------------

_BINARY = {Union: "|", Intersect: "&", Diff: "\\"}


def print_query(expr: Expr) -> str:
    """Canonical text for an expression; parse(print_query(e)) == e.

    Defaults are omitted: no "; raw", no "; mask=123" on alpha_up. Mask
    digits print in ascending order, commas carry one trailing space.
    """
    if isinstance(expr, SetName):
        return expr.name + (f"@{expr.tag.value}" if expr.tag else "")
    if type(expr) in _BINARY:
        left = print_query(expr.left)
        right = print_query(expr.right)
        if type(expr.right) in _BINARY:
            right = f"({right})"
        return f"{left} {_BINARY[type(expr)]} {right}"
    if isinstance(expr, Complement):
        return f"!({print_query(expr.child)})@{expr.sort.value}"
    if isinstance(expr, UpperApprox):
        return f"up({print_query(expr.child)})@{expr.sort.value}"
    if isinstance(expr, LowerApprox):
        return f"low({print_query(expr.child)})@{expr.sort.value}"
    if isinstance(expr, Cylindrify):
        return f"cyl[{_bracket(expr.coordinate, expr.selector, None, 'cyl')}]"
    head = _bracket(expr.coordinate, expr.selector, expr.mask, expr.op)
    return (f"{expr.op}[{head}]"
            f"({print_query(expr.arg1)}, {print_query(expr.arg2)})")


def _bracket(coordinate: Sort, selector: RelationSelector,
             mask: frozenset[int] | None, op: str) -> str:
    parts = [coordinate.value]
    if selector is not RelationSelector.RAW:
        parts.append(selector.value)
    if op == "alpha_up" and mask is not None and mask != FULL_MASK:
        parts.append("mask=" + "".join(str(d) for d in sorted(mask)))
    return "; ".join(parts)
