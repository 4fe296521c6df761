"""Text rendering and parsing for scalars, algebra expressions and chart
polynomials.

The scalar grammar covers rational literals and the symbols q, L, lambda, t,
mu with ``+ - * / ^``.  The algebra grammar adds the generators ``E(i,j)``,
``F(i,j)``, ``TE(i,j)``, ``K(c1,...,cn)`` and the quasi-commutator
``qbr(x, y; a)``.  The chart grammar adds the coordinates ``zt1..ztn`` and
``om1..omn``.  Rendering is deterministic and parses back.
"""

from __future__ import annotations

from fractions import Fraction

from .exactalg import LAURENT, VAR_INDEX, VARS, MPoly, RatFun, rf, var


class ParseError(ValueError):
    pass


# -- rendering ---------------------------------------------------------------


def _render_exp(e) -> str:
    if isinstance(e, Fraction):
        return "^(%s)" % e
    if e == 1:
        return ""
    return "^%d" % e


def _render_term(key, coeff: Fraction) -> str:
    parts = []
    for i, e in enumerate(key):
        if e != 0:
            parts.append(VARS[i] + _render_exp(e))
    if not parts:
        return str(coeff)
    body = "*".join(parts)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return "%s*%s" % (coeff, body)


def render_mpoly(p: MPoly) -> str:
    if p.is_zero():
        return "0"
    chunks = []
    for key, c in p.sorted_terms():
        term = _render_term(key, c)
        if not chunks:
            chunks.append(term)
        elif term.startswith("-"):
            chunks.append(" - " + term[1:])
        else:
            chunks.append(" + " + term)
    return "".join(chunks)


def _paren(s: str, needed: bool) -> str:
    return "(%s)" % s if needed else s


def render_ratfun(f: RatFun) -> str:
    num = render_mpoly(f.num)
    if f.den.is_const() and f.den.const_value() == 1:
        return num
    den = render_mpoly(f.den)
    return "%s/%s" % (
        _paren(num, len(f.num.terms) > 1),
        _paren(den, len(f.den.terms) > 1),
    )


def _is_neg_leading(f: RatFun) -> bool:
    if f.is_zero():
        return False
    return f.num.terms[f.num.leading_key()] < 0


def _coeff_prefix(c: RatFun) -> str:
    """Coefficient ready to prefix a '*var...' tail; '' means 1."""
    if c.is_one():
        return ""
    num_simple = len(c.num.terms) == 1
    den_one = c.den.is_const() and c.den.const_value() == 1
    s = render_ratfun(c)
    if den_one and num_simple:
        return s
    return "(%s)" % s


def render_terms(items) -> str:
    """items: iterable of (varbody: str, coeff: RatFun); '' varbody = constant."""
    chunks = []
    for body, coeff in items:
        neg = _is_neg_leading(coeff)
        c = -coeff if neg else coeff
        if body:
            pre = _coeff_prefix(c)
            term = pre + "*" + body if pre else body
        else:
            term = render_ratfun(c)
        if not chunks:
            chunks.append("-" + term if neg else term)
        else:
            chunks.append((" - " if neg else " + ") + term)
    return "".join(chunks) if chunks else "0"


def render_weight(w) -> str:
    return "K(%s)" % ",".join(str(Fraction(x)) for x in w)


def render_algelt(x) -> str:
    from .qea import _group

    items = []
    for (f, w, e), c in x.sorted_terms():
        parts = []
        for r, m in _group(f):
            parts.append("F(%d,%d)%s" % (r[0], r[1], _render_exp(m)))
        if any(w):
            parts.append(render_weight(w))
        for r, m in _group(e):
            parts.append("E(%d,%d)%s" % (r[0], r[1], _render_exp(m)))
        items.append(("*".join(parts), c))
    return render_terms(items)


def render_chartpoly(p) -> str:
    ring = p.ring
    items = []
    for key, c in p.sorted_terms():
        parts = []
        for i, e in enumerate(key):
            if e:
                parts.append(ring.names[i] + _render_exp(e))
        items.append(("*".join(parts), c))
    return render_terms(items)


# -- tokenizer ---------------------------------------------------------------

_PUNCT = "+-*/^(),;"


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise ParseError("unexpected character %r at position %d" % (ch, i))
    return tokens


class _Parser:
    """Recursive-descent parser shared by the scalar, algebra and chart modes."""

    def __init__(self, text: str, mode: str, n: int | None = None, ring=None):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.mode = mode
        self.n = n
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None, -1)

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError("expected %r, got %r" % (kind, tok[1]))
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError("empty input")
        out = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError("trailing input at token %r" % (self.peek()[1],))
        return out

    # expr := term (('+'|'-') term)*
    def expr(self):
        out = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            out = self._add(out, rhs) if op == "+" else self._sub(out, rhs)
        return out

    # term := factor (('*'|'/') factor)*
    def term(self):
        out = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.next()[0]
            rhs = self.factor()
            out = self._mul(out, rhs) if op == "*" else self._div(out, rhs)
        return out

    # factor := ('-'|'+') factor | power
    def factor(self):
        k = self.peek()[0]
        if k == "-":
            self.next()
            return self._neg(self.factor())
        if k == "+":
            self.next()
            return self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.next()
            exp = self._exponent()
            return self._pow(base, exp)
        return base

    def _exponent(self):
        if self.peek()[0] == "(":
            self.next()
            val = self._signed_rational()
            self.expect(")")
            return val
        sign = 1
        while self.peek()[0] == "-":
            self.next()
            sign = -sign
        tok = self.expect("int")
        return sign * tok[1]

    def _signed_rational(self) -> Fraction:
        sign = 1
        while self.peek()[0] == "-":
            self.next()
            sign = -sign
        num = self.expect("int")[1]
        if self.peek()[0] == "/":
            self.next()
            den = self.expect("int")[1]
            if den == 0:
                raise ParseError("zero denominator in rational literal")
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def atom(self):
        kind, val, pos = self.next()
        if kind == "int":
            return self._scalar(rf(val))
        if kind == "(":
            out = self.expr()
            self.expect(")")
            return out
        if kind != "name":
            raise ParseError("unexpected token %r" % (val,))
        if val in VAR_INDEX:
            return self._scalar(var(val))
        if self.mode == "algebra" and val in ("E", "F", "TE"):
            i, j = self._int_pair()
            from . import qea

            cls = {"E": qea.EGen, "F": qea.FGen, "TE": qea.TEGen}[val]
            return cls(i, j)
        if self.mode == "algebra" and val == "K":
            coords = self._rational_args()
            if self.n is not None and len(coords) != self.n:
                raise ParseError(
                    "K takes %d coordinates at rank %d" % (self.n, self.n)
                )
            from .qea import KGen

            return KGen(tuple(coords))
        if self.mode == "algebra" and val == "qbr":
            from .qea import QBr, Scalar

            self.expect("(")
            x = self.expr()
            self.expect(",")
            y = self.expr()
            self.expect(";")
            a = self.expr()
            self.expect(")")
            if not isinstance(a, Scalar):
                a = self._as_scalar(a)
            return QBr(x, y, a.value if isinstance(a, Scalar) else a)
        if self.mode == "chart" and self.ring is not None and val in self.ring.index:
            return self.ring.gen(val)
        raise ParseError("unknown symbol %r at position %d" % (val, pos))

    def _int_pair(self):
        self.expect("(")
        i = self.expect("int")[1]
        self.expect(",")
        j = self.expect("int")[1]
        self.expect(")")
        return i, j

    def _rational_args(self):
        self.expect("(")
        out = [self._signed_rational()]
        while self.peek()[0] == ",":
            self.next()
            out.append(self._signed_rational())
        self.expect(")")
        return out

    # -- mode-specific arithmetic  -----------------------------------------

    def _scalar(self, value: RatFun):
        if self.mode == "algebra":
            from .qea import Scalar

            return Scalar(value)
        if self.mode == "chart":
            return self.ring.const(value)
        return value

    def _is_scalar(self, x) -> bool:
        if self.mode == "algebra":
            from .qea import Scalar

            return isinstance(x, Scalar)
        return True

    def _as_scalar(self, x):
        from .qea import Scalar

        if isinstance(x, Scalar):
            return x
        raise ParseError("expected a scalar expression")

    def _add(self, a, b):
        if self.mode == "algebra":
            from .qea import Scalar, Sum

            if isinstance(a, Scalar) and isinstance(b, Scalar):
                return Scalar(a.value + b.value)
            return Sum((a, b))
        return a + b

    def _sub(self, a, b):
        return self._add(a, self._neg(b))

    def _neg(self, a):
        if self.mode == "algebra":
            from .qea import Prod, Scalar

            if isinstance(a, Scalar):
                return Scalar(-a.value)
            return Prod((Scalar(rf(-1)), a))
        return -a

    def _mul(self, a, b):
        if self.mode == "algebra":
            from .qea import Prod, Scalar

            if isinstance(a, Scalar) and isinstance(b, Scalar):
                return Scalar(a.value * b.value)
            return Prod((a, b))
        if self.mode == "chart":
            return a * b
        return a * b

    def _div(self, a, b):
        if self.mode == "algebra":
            from .qea import Prod, Scalar

            if not isinstance(b, Scalar):
                raise ParseError("can only divide by scalars")
            if b.value.is_zero():
                raise ParseError("division by zero")
            if isinstance(a, Scalar):
                return Scalar(a.value / b.value)
            return Prod((Scalar(b.value.inv()), a))
        if self.mode == "chart":
            return a.scale_div(b)
        if b.is_zero():
            raise ParseError("division by zero")
        return a / b

    def _pow(self, a, exp):
        if isinstance(exp, Fraction) and exp.denominator != 1:
            sc = a
            if self.mode == "algebra":
                from .qea import Scalar

                if not isinstance(a, Scalar):
                    raise ParseError("fractional powers only apply to q or L")
                sc = a.value
            elif self.mode == "chart":
                raise ParseError("fractional powers only apply to q or L")
            name = _single_laurent_var(sc)
            if name is None:
                raise ParseError("fractional powers only apply to q or L")
            out = var(name, exp)
            return self._scalar(out)
        exp = int(exp)
        if self.mode == "algebra":
            from .qea import Prod, Scalar

            if isinstance(a, Scalar):
                return Scalar(a.value ** exp)
            if exp < 0:
                raise ParseError("negative powers of algebra elements")
            if exp == 0:
                return Scalar(rf(1))
            return Prod(tuple([a] * exp))
        if self.mode == "chart":
            if exp < 0:
                raise ParseError("negative powers of chart coordinates")
            return a ** exp
        return a ** exp


def _single_laurent_var(f: RatFun):
    if not (f.den.is_const() and f.den.const_value() == 1):
        return None
    if len(f.num.terms) != 1:
        return None
    (key, c), = f.num.terms.items()
    if c != 1:
        return None
    hot = [i for i, e in enumerate(key) if e != 0]
    if len(hot) != 1 or key[hot[0]] != 1 or not LAURENT[hot[0]]:
        return None
    return VARS[hot[0]]


def parse_ratfun(text: str) -> RatFun:
    return _Parser(text, "scalar").parse()


def parse_algebra_expr(text: str, n: int):
    return _Parser(text, "algebra", n=n).parse()


def parse_chart_poly(text: str, ring):
    return _Parser(text, "chart", ring=ring).parse()
