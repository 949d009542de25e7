"""Tiny classical propositional calculus: parse, evaluate, compare by truth
table.  Connectives: not, and, or, implies (material), implied-by, iff."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Union

from .errors import InputError

NOT, AND, OR, IMPLIES, IMPLIED_BY, IFF = "not", "and", "or", "implies", "implied-by", "iff"


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Not, BinOp]


def atoms_of(formula: Formula) -> tuple[str, ...]:
    """Atom names occurring in the formula, sorted."""
    found: set[str] = set()

    def walk(f: Formula) -> None:
        if isinstance(f, Atom):
            found.add(f.name)
        elif isinstance(f, Not):
            walk(f.operand)
        else:
            walk(f.left)
            walk(f.right)

    walk(formula)
    return tuple(sorted(found))


def eval_formula(formula: Formula, assignment: Mapping[str, bool]) -> bool:
    """Classical semantics; every atom of the formula must be assigned."""
    if isinstance(formula, Atom):
        try:
            return bool(assignment[formula.name])
        except KeyError:
            raise InputError(f"atom {formula.name!r} has no assigned truth value") from None
    if isinstance(formula, Not):
        return not eval_formula(formula.operand, assignment)
    a = eval_formula(formula.left, assignment)
    b = eval_formula(formula.right, assignment)
    if formula.op == AND:
        return a and b
    if formula.op == OR:
        return a or b
    if formula.op == IMPLIES:
        return (not a) or b
    if formula.op == IMPLIED_BY:
        return a or (not b)
    if formula.op == IFF:
        return a == b
    raise AssertionError(f"unknown connective {formula.op!r}")


_MAX_ATOMS = 20


def equivalent(f: Formula, g: Formula) -> tuple[bool, Optional[dict[str, bool]]]:
    """Exhaustive truth-table comparison over the union of atoms.

    Returns (True, None) or (False, first differing assignment).  Assignments
    are scanned starting from all-true, flipping the last atom fastest.
    """
    names = tuple(sorted(set(atoms_of(f)) | set(atoms_of(g))))
    if len(names) > _MAX_ATOMS:
        raise InputError(f"more than {_MAX_ATOMS} atoms; refusing exhaustive comparison")
    k = len(names)
    for code in range((1 << k) - 1, -1, -1):
        assignment = {names[j]: bool(code >> (k - 1 - j) & 1) for j in range(k)}
        if eval_formula(f, assignment) != eval_formula(g, assignment):
            return False, assignment
    return True, None


# ---------------------------------------------------------------------------
# parser: infix grammar with explicit parentheses for chained arrows


class ParseError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"position {position}: {message}")
        self.position = position


_UNARY = {"¬": NOT, "~": NOT, "!": NOT, "not": NOT}
_BINARY = {
    "∧": AND, "&": AND, "and": AND,
    "∨": OR, "|": OR, "or": OR,
    "⇒": IMPLIES, "=>": IMPLIES, "->": IMPLIES, "implies": IMPLIES,
    "⇐": IMPLIED_BY, "<=": IMPLIED_BY, "<-": IMPLIED_BY,
    "⇔": IFF, "<=>": IFF, "<->": IFF, "iff": IFF,
}
_SYMBOLS = ("<=>", "<->", "=>", "->", "<=", "<-", "¬", "~", "!", "∧", "&", "∨", "|", "⇒", "⇐", "⇔", "(", ")")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        matched = next((s for s in _SYMBOLS if text.startswith(s, i)), None)
        if matched is not None:
            kind = "paren" if matched in "()" else "op"
            tokens.append((kind, matched, i))
            i += len(matched)
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word in _UNARY or word in _BINARY:
                tokens.append(("op", word, i))
            else:
                tokens.append(("atom", word, i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of formula", len(self.text))
        self.pos += 1
        return tok

    def parse(self) -> Formula:
        f = self.parse_iff()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return f

    def parse_iff(self) -> Formula:
        left = self.parse_arrow()
        tok = self.peek()
        if tok and tok[0] == "op" and _BINARY.get(tok[1]) == IFF:
            self.take()
            right = self.parse_arrow()
            nxt = self.peek()
            if nxt and nxt[0] == "op" and _BINARY.get(nxt[1]) == IFF:
                raise ParseError("chained 'iff' needs explicit parentheses", nxt[2])
            return BinOp(IFF, left, right)
        return left

    def parse_arrow(self) -> Formula:
        left = self.parse_or()
        tok = self.peek()
        if tok and tok[0] == "op" and _BINARY.get(tok[1]) in (IMPLIES, IMPLIED_BY):
            op = _BINARY[self.take()[1]]
            right = self.parse_or()
            nxt = self.peek()
            if nxt and nxt[0] == "op" and _BINARY.get(nxt[1]) in (IMPLIES, IMPLIED_BY):
                raise ParseError("chained implications need explicit parentheses", nxt[2])
            return BinOp(op, left, right)
        return left

    def parse_or(self) -> Formula:
        f = self.parse_and()
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and _BINARY.get(tok[1]) == OR:
                self.take()
                f = BinOp(OR, f, self.parse_and())
            else:
                return f

    def parse_and(self) -> Formula:
        f = self.parse_unary()
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and _BINARY.get(tok[1]) == AND:
                self.take()
                f = BinOp(AND, f, self.parse_unary())
            else:
                return f

    def parse_unary(self) -> Formula:
        tok = self.take()
        kind, text, pos = tok
        if kind == "op" and text in _UNARY:
            return Not(self.parse_unary())
        if kind == "paren" and text == "(":
            f = self.parse_iff()
            closing = self.take()
            if closing[1] != ")":
                raise ParseError("expected ')'", closing[2])
            return f
        if kind == "atom":
            return Atom(text)
        raise ParseError(f"unexpected {text!r}", pos)


def parse_formula(text: str) -> Formula:
    """Parse infix text like ``(A & !B) -> (A & !A)`` into a formula tree."""
    if not text.strip():
        raise ParseError("empty formula", 0)
    return _Parser(text).parse()


def format_formula(formula: Formula) -> str:
    """Render with unicode connectives and parentheses around binary ops."""
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Not):
        inner = format_formula(formula.operand)
        if isinstance(formula.operand, (Atom, Not)):
            return f"¬{inner}"
        return f"¬({inner})"
    sym = {AND: "∧", OR: "∨", IMPLIES: "⇒", IMPLIED_BY: "⇐", IFF: "⇔"}[formula.op]

    def side(f: Formula) -> str:
        text = format_formula(f)
        return text if isinstance(f, (Atom, Not)) else f"({text})"

    return f"{side(formula.left)} {sym} {side(formula.right)}"


# ---------------------------------------------------------------------------
# reference truth tables (printed by the CLI in false-first row order)

FIRST_TABLE = ("A", "B", "¬B", "A ⇒ B", "¬(A ⇒ B)", "A ⇐ B", "A ⇔ B", "A ∨ ¬B", "A ∧ B", "A ∨ B")
SECOND_TABLE = ("A", "B", "¬A", "¬B", "¬A ⇒ ¬B", "A ∨ ¬B", "¬A ⇐ ¬B", "¬A ∨ B", "A ∧ ¬B", "¬A ⇔ ¬B")

REFERENCE_EQUIVALENCES = (
    ("¬A ⇐ ¬B", "¬A ∨ B"),
    ("A ⇒ B", "¬B ⇒ ¬A"),
    ("¬(A ⇒ B)", "A ∧ ¬B"),
    ("(A ∧ ¬B) ⇒ (A ∧ ¬A)", "A ⇒ B"),
)


def table_rows(columns: tuple[str, ...]) -> list[list[bool]]:
    """Evaluate each column formula on assignments (F,F), (F,T), (T,F), (T,T)."""
    formulas = [parse_formula(c) for c in columns]
    rows = []
    for a in (False, True):
        for b in (False, True):
            env = {"A": a, "B": b}
            rows.append([eval_formula(f, env) for f in formulas])
    return rows


def render_table(columns: tuple[str, ...]) -> str:
    rows = table_rows(columns)
    widths = [len(c) for c in columns]
    lines = ["  ".join(columns)]
    lines.append("-" * len(lines[0]))
    for row in rows:
        cells = "  ".join(("T" if v else "F").center(w) for v, w in zip(row, widths))
        lines.append(cells.rstrip())
    return "\n".join(lines)
