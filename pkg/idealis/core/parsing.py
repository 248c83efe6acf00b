"""Recursive-descent parsers for ring, element and ideal text.

    ring    := atom ( "x" atom )*
    atom    := "Z" [ "/" int ] | "GF(" int ")[x]" [ "/(" poly ")" ]
    element := int | poly | "[" element ( "," element )* "]"
    ideal   := "(" element ( "," element )* ")"
             | "(" "[" element,... "]" ( "," "[" element,... "]" )* ")"   (products)

Product ideals list one bracketed generator list per component.
"""

import re

from ..arith import is_prime, parse_poly
from ..arith.polynomials import MAX_CHARACTERISTIC
from ..errors import ArithmeticOverflowError, ParseError
from .ideals import Ideal, generated_ideal
from .rings import (
    Integers,
    IntegersMod,
    PolyQuotient,
    PolyRing,
    Product,
    RingElement,
    RingSpec,
    make_product,
    normalize_element,
)

_INT = re.compile(r"[+-]?\d+")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos, self.text)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            found = self.peek() or "end of input"
            raise self.error(f"expected {token!r}, found {found!r}")

    def read_int(self) -> int:
        self.skip_ws()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def read_balanced(self) -> tuple[str, int]:
        """Read up to the ')' closing an already-consumed '('."""
        start, depth = self.pos, 1
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    body = self.text[start : self.pos]
                    self.pos += 1
                    return body, start
            self.pos += 1
        raise self.error("unbalanced parenthesis")


def _parse_atom(cur: _Cursor) -> RingSpec:
    cur.skip_ws()
    start = cur.pos
    if cur.accept("GF("):
        p = cur.read_int()
        if not is_prime(p) or p > MAX_CHARACTERISTIC:
            cur.pos = start
            raise cur.error(f"GF({p}) needs a prime characteristic <= {MAX_CHARACTERISTIC}")
        cur.expect(")")
        cur.expect("[x]")
        if cur.accept("/"):
            cur.expect("(")
            body, offset = cur.read_balanced()
            f = parse_poly(p, body, offset)
            if f.degree < 1:
                raise ParseError("quotient modulus must have degree >= 1", offset, cur.text)
            return PolyQuotient(p, f.monic())
        return PolyRing(p)
    if cur.accept("Z"):
        if cur.accept("/"):
            n = cur.read_int()
            if n < 2:
                cur.pos = start
                raise cur.error(f"modulus must be >= 2, got {n}")
            try:
                return IntegersMod(n)
            except ArithmeticOverflowError as e:
                raise ParseError(str(e), start, cur.text) from e
        return Integers()
    raise cur.error(f"expected 'Z' or 'GF(', found {cur.peek() or 'end of input'!r}")


def parse_ring(text: str) -> RingSpec:
    cur = _Cursor(text)
    rings = [_parse_atom(cur)]
    while not cur.at_end():
        if not (cur.accept("x") or cur.accept("×")):
            raise cur.error(f"expected 'x' between product factors, found {cur.peek()!r}")
        rings.append(_parse_atom(cur))
    return rings[0] if len(rings) == 1 else make_product(*rings)


def _split_top(text: str, offset: int) -> list[tuple[str, int]]:
    """Split on commas outside brackets and parentheses, keeping offsets."""
    parts, depth, start = [], 0, 0
    for k, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((text[start:k], offset + start))
            start = k + 1
    parts.append((text[start:], offset + start))
    return parts


def _strip(text: str, offset: int) -> tuple[str, int]:
    lead = len(text) - len(text.lstrip())
    return text.strip(), offset + lead


def _unwrap(text: str, offset: int, open_: str, close: str, whole: str) -> tuple[str, int]:
    body, offset = _strip(text, offset)
    if not (body.startswith(open_) and body.endswith(close)):
        raise ParseError(f"expected {open_}...{close}", offset, whole)
    return body[1:-1], offset + 1


def parse_element(ring: RingSpec, text: str, offset: int = 0, whole: str | None = None) -> RingElement:
    whole = text if whole is None else whole
    body, offset = _strip(text, offset)
    if not body:
        raise ParseError("empty element", offset, whole)
    match ring:
        case Integers() | IntegersMod():
            if not _INT.fullmatch(body):
                raise ParseError(f"expected an integer, found {body!r}", offset, whole)
            try:
                return normalize_element(ring, int(body))
            except ArithmeticOverflowError as e:
                raise ParseError(str(e), offset, whole) from e
        case PolyRing(p=p) | PolyQuotient(p=p):
            return normalize_element(ring, parse_poly(p, body, offset))
        case Product(components=cs):
            inner, inner_off = _unwrap(body, offset, "[", "]", whole)
            items = _split_top(inner, inner_off)
            if len(items) != len(cs):
                raise ParseError(
                    f"element has {len(items)} components, ring has {len(cs)}", offset, whole
                )
            return tuple(parse_element(c, t, o, whole) for c, (t, o) in zip(cs, items))
    raise TypeError(f"not a ring descriptor: {ring!r}")


def parse_ideal(ring: RingSpec, text: str) -> Ideal:
    inner, offset = _unwrap(text, 0, "(", ")", text)
    items = _split_top(inner, offset)
    if isinstance(ring, Product):
        form = "(" + ",".join("[g,...]" for _ in ring.components) + ")"
        if len(items) != len(ring.components):
            raise ParseError(
                f"ideal lists {len(items)} components, ring has {len(ring.components)}; "
                f"write one bracketed generator list per component: {form}",
                offset,
                text,
            )
        comps = []
        for c, (t, o) in zip(ring.components, items):
            body, start = _strip(t, o)
            if not (body.startswith("[") and body.endswith("]")):
                raise ParseError(f"expected a bracketed generator list per component: {form}", start, text)
            gens = [parse_element(c, g, go, text) for g, go in _split_top(body[1:-1], start + 1)]
            comps.append(generated_ideal(c, gens))
        return Ideal(ring, tuple(comps))
    return generated_ideal(ring, [parse_element(ring, t, o, text) for t, o in items])
