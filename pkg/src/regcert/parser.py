"""Text format for ideals and parametrisations, with a canonical printer.

    ring x1 x2 x3 ; char 32003 ; order lex ; gens: x1^2 + x2*x3, x3^2
    param n=3 m=2 d=2 ; f: y1^2, y1*y2, y2^2

The char and order clauses are optional (defaults: 32003, lex).  The
printer emits the canonical normalized form; parsing its output and
printing again is byte-identical.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .rings import (BlockOrder, DegRevLexOrder, LexOrder, Polynomial,
                    make_ring)
from .scalars import DEFAULT_PRIME, PrimeField


class ParseError(ValueError):
    def __init__(self, message, line, col):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, column {col}: {message}")


@dataclass(frozen=True)
class Parametrisation:
    """n homogeneous degree-d forms in K[y_1..y_m]."""

    n: int
    m: int
    d: int
    f: tuple  # polynomials in the y-ring
    ring: object

    def __post_init__(self):
        from .rings import is_homogeneous
        if self.n < 1 or self.m < 1 or self.d < 1:
            raise ValueError("n, m, d must be positive")
        if len(self.f) != self.n:
            raise ValueError("expected n image polynomials")
        if all(g.is_zero() for g in self.f):
            raise ValueError("parametrisation must not be identically zero")
        for g in self.f:
            flag, deg = is_homogeneous(g)
            if g.is_zero() or not flag or deg != self.d:
                raise ValueError("each image must be homogeneous of degree d")


_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<nat>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<sym>[;:,+\-*^/=])
""", re.VERBOSE)


def _tokenize(text):
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        val = m.group()
        if kind != "ws":
            tokens.append((kind, val, line, col))
        for ch in val:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
        pos = m.end()
    tokens.append(("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.tokens[min(self.i, len(self.tokens) - 1)]
        raise ParseError(msg, tok[2], tok[3])

    def expect(self, kind, value=None):
        tok = self.next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            self.error(f"expected {want!r}, found {tok[1] or 'end of input'!r}",
                       tok)
        return tok

    def accept(self, kind, value=None):
        tok = self.peek()
        if tok[0] == kind and (value is None or tok[1] == value):
            self.i += 1
            return tok
        return None

    def at_keyword(self, word):
        tok = self.peek()
        return tok[0] == "ident" and tok[1] == word

    # -- clauses ------------------------------------------------------------

    def parse_file(self):
        if self.at_keyword("ring"):
            return self.parse_ideal()
        if self.at_keyword("param"):
            return self.parse_param()
        self.error("file must start with 'ring' or 'param'")

    def parse_ideal(self):
        self.expect("ident", "ring")
        names = []
        while self.peek()[0] == "ident":
            names.append(self.next()[1])
        if not names:
            self.error("expected at least one variable name")
        self.expect("sym", ";")
        char = DEFAULT_PRIME
        order = LexOrder()
        kept = len(names)
        while True:
            if self.at_keyword("char"):
                self.next()
                char = int(self.expect("nat")[1])
                if char != 0 and not _probable_prime(char):
                    self.error("characteristic must be 0 or prime")
                self.expect("sym", ";")
            elif self.at_keyword("order"):
                self.next()
                tok = self.expect("ident")
                if tok[1] == "lex":
                    order = LexOrder()
                elif tok[1] == "degrevlex":
                    order = DegRevLexOrder()
                elif tok[1] == "elim":
                    k = int(self.expect("nat")[1])
                    if not 0 <= k <= len(names):
                        self.error("elimination split out of range", tok)
                    order = BlockOrder(k)
                    kept = k
                else:
                    self.error(f"unknown order {tok[1]!r}", tok)
                self.expect("sym", ";")
            else:
                break
        self.expect("ident", "gens")
        self.expect("sym", ":")
        ring = make_ring(names, kept=kept, char=char)
        polys = [self.parse_poly(ring, order)]
        while self.accept("sym", ","):
            polys.append(self.parse_poly(ring, order))
        self.expect("eof")
        from .groebner import IdealPresentation
        return ring, IdealPresentation.from_polynomials(ring, polys), order

    def parse_param(self):
        self.expect("ident", "param")
        vals = {}
        for key in ("n", "m", "d"):
            self.expect("ident", key)
            self.expect("sym", "=")
            vals[key] = int(self.expect("nat")[1])
        self.expect("sym", ";")
        char = DEFAULT_PRIME
        if self.at_keyword("char"):
            self.next()
            char = int(self.expect("nat")[1])
            self.expect("sym", ";")
        self.expect("ident", "f")
        self.expect("sym", ":")
        ring = make_ring([f"y{i + 1}" for i in range(vals["m"])], char=char)
        order = LexOrder()
        polys = [self.parse_poly(ring, order)]
        while self.accept("sym", ","):
            polys.append(self.parse_poly(ring, order))
        self.expect("eof")
        if len(polys) != vals["n"]:
            self.error(f"expected {vals['n']} image polynomials, "
                       f"found {len(polys)}")
        param = Parametrisation(vals["n"], vals["m"], vals["d"],
                                tuple(polys), ring)
        return ring, param, order

    # -- polynomials ---------------------------------------------------------

    def parse_poly(self, ring, order):
        terms = []
        sign = 1
        if self.accept("sym", "-"):
            sign = -1
        terms.append(self.parse_term(ring, sign))
        while True:
            if self.accept("sym", "+"):
                sign = 1
            elif self.accept("sym", "-"):
                sign = -1
            else:
                break
            terms.append(self.parse_term(ring, sign))
        return Polynomial.from_terms(ring, order, terms)

    def parse_term(self, ring, sign):
        K = ring.field
        coeff = None
        exps = [0] * ring.nvars
        saw_var = False
        tok = self.peek()
        if tok[0] == "nat":
            self.next()
            num = int(tok[1])
            if self.accept("sym", "/"):
                den = int(self.expect("nat")[1])
                if isinstance(K, PrimeField):
                    coeff = K.div(K.from_int(num), K.from_int(den))
                else:
                    coeff = Fraction(num, den)
            else:
                coeff = K.from_int(num)
            if not self.accept("sym", "*"):
                if self.peek()[0] == "ident":
                    self.error("missing '*' between coefficient and variable")
                return (K.mul(coeff, K.from_int(sign)) if sign < 0 else coeff,
                        tuple(exps))
        while True:
            tok = self.peek()
            if tok[0] != "ident":
                if saw_var:
                    break
                self.error(f"expected a term, found "
                           f"{tok[1] or 'end of input'!r}")
            self.next()
            if tok[1] not in ring.names:
                self.error(f"unknown variable {tok[1]!r}", tok)
            idx = ring.names.index(tok[1])
            power = 1
            if self.accept("sym", "^"):
                power = int(self.expect("nat")[1])
            exps[idx] += power
            saw_var = True
            if not self.accept("sym", "*"):
                break
        if coeff is None:
            coeff = K.one
        if sign < 0:
            coeff = K.neg(coeff)
        return coeff, tuple(exps)


def _probable_prime(p):
    from .scalars import _is_prime
    return _is_prime(p)


def parse_ideal_file(text):
    """Parse an ideal or parametrisation file.

    Returns (ring, IdealPresentation | Parametrisation, order)."""
    return _Parser(text).parse_file()


# ---------------------------------------------------------------------------
# canonical printer

def _format_coeff(c):
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_monomial(ring, m):
    parts = []
    for name, e in zip(ring.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f):
    if f.is_zero():
        return "0"
    chunks = []
    for idx, (c, m) in enumerate(f.terms):
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        mono = format_monomial(f.ring, m)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if idx == 0:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(chunks)


def _format_order(order):
    if isinstance(order, LexOrder):
        return "lex"
    if isinstance(order, DegRevLexOrder):
        return "degrevlex"
    if isinstance(order, BlockOrder):
        return f"elim {order.keep}"
    raise ValueError(f"unknown order {order!r}")


def format_ideal_file(ring, ideal, order):
    gens = ", ".join(format_polynomial(g) for g in ideal.generators)
    return (f"ring {' '.join(ring.names)} ; char {ring.char} ; "
            f"order {_format_order(order)} ; gens: {gens}")


def format_param_file(param):
    forms = ", ".join(format_polynomial(g) for g in param.f)
    return (f"param n={param.n} m={param.m} d={param.d} ; "
            f"char {param.ring.char} ; f: {forms}")


def format_file(ring, obj, order):
    if isinstance(obj, Parametrisation):
        return format_param_file(obj)
    return format_ideal_file(ring, obj, order)
