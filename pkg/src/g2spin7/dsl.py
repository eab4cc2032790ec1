"""A tiny expression language for forms, with a canonical printer.

Grammar::

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor (['^'] factor)*          # juxtaposition wedges too
    factor   := RATIONAL | MONOMIAL | '(' expr ')'
    RATIONAL := INT ['/' INT]
    MONOMIAL := 'e' DIGIT+                      # e136 = e^1 ^ e^3 ^ e^6

Indices are single digits 1..n (n <= 8), so ``e136`` is unambiguous.
A repeated index inside a monomial and mixed grades across '+'/'-' terms
are parse-time errors.  Every error carries the byte position.

The printer is canonical: terms sorted by increasing blade index tuple,
unit coefficients elided, and ``parse_form(print_form(f)) == f``.
"""

from __future__ import annotations

from fractions import Fraction

from .exterior import ExteriorError, KForm, Q, Vector, sharp


class ParseError(ExteriorError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.i = 0

    def error(self, msg: str, pos: int | None = None):
        raise ParseError(msg, self.i if pos is None else pos)

    def skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def parse(self) -> KForm:
        form = self.parse_expr()
        self.skip_ws()
        if self.i < len(self.text):
            self.error(f"unexpected {self.text[self.i]!r}")
        return form

    def parse_expr(self) -> KForm:
        neg = False
        if self.peek() == "-":
            self.i += 1
            neg = True
        pos0 = self.i
        acc = self.parse_term()
        if neg:
            acc = -acc
        while True:
            ch = self.peek()
            if not ch or ch not in "+-":
                break
            self.i += 1
            pos = self.i
            t = self.parse_term()
            if ch == "-":
                t = -t
            if not acc.is_zero() and not t.is_zero() and acc.k != t.k:
                self.error(
                    f"grade mismatch: term of grade {t.k} added to grade {acc.k}",
                    pos,
                )
            acc = acc + t
        del pos0
        return acc

    def parse_term(self) -> KForm:
        acc = self.parse_factor()
        while True:
            ch = self.peek()
            if ch == "^":
                self.i += 1
                f = self.parse_factor()
            elif ch == "e" or ch == "(" or ch.isdigit():
                f = self.parse_factor()
            else:
                break
            acc = _wedge_or_scale(acc, f)
        return acc

    def parse_factor(self) -> KForm:
        ch = self.peek()
        if ch == "(":
            self.i += 1
            inner = self.parse_expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.i += 1
            return inner
        if ch == "e":
            return self.parse_monomial()
        if ch.isdigit():
            return KForm.scalar(self.n, self.parse_rational())
        self.error("expected a rational, a monomial like e136, or '('")

    def parse_monomial(self) -> KForm:
        start = self.i
        self.i += 1  # consume 'e'
        digits = []
        while self.i < len(self.text) and self.text[self.i].isdigit():
            digits.append(self.text[self.i])
            self.i += 1
        if not digits:
            self.error("monomial needs at least one index digit", start)
        idx = []
        for off, d in enumerate(digits):
            v = int(d)
            if not 1 <= v <= self.n:
                self.error(f"index {v} out of range 1..{self.n}", start + 1 + off)
            if v in idx:
                self.error(f"repeated index {v} in monomial", start + 1 + off)
            idx.append(v)
        form = KForm.blade(self.n, (idx[0],))
        for v in idx[1:]:
            nxt = KForm.blade(self.n, (v,))
            from .exterior import wedge

            form = wedge(form, nxt)
        return form

    def parse_rational(self) -> Fraction:
        start = self.i
        num = self._int()
        if self.i < len(self.text) and self.text[self.i] == "/":
            self.i += 1
            if not (self.i < len(self.text) and self.text[self.i].isdigit()):
                self.error("expected denominator digits")
            den = self._int()
            if den == 0:
                self.error("zero denominator", start)
            return Fraction(num, den)
        return Fraction(num)

    def _int(self) -> int:
        j = self.i
        while j < len(self.text) and self.text[j].isdigit():
            j += 1
        val = int(self.text[self.i : j])
        self.i = j
        return val


def _wedge_or_scale(a: KForm, b: KForm) -> KForm:
    from .exterior import wedge

    if a.k == 0:
        return b.scale(a.c.get(0, Q(0)))
    if b.k == 0:
        return a.scale(b.c.get(0, Q(0)))
    return wedge(a, b)


def parse_form(text: str, n: int) -> KForm:
    """Parse DSL text into a k-form on R^n.  Raises ParseError on bad input."""
    if n not in (7, 8):
        raise ExteriorError(f"dimension must be 7 or 8, got {n}")
    return _Parser(text, n).parse()


def parse_vector(text: str, n: int) -> Vector:
    """Parse a 1-form expression (e.g. 'e7' or '3/5 e3 + 4/5 e5') as a vector."""
    form = parse_form(text, n)
    if form.k != 1 and not form.is_zero():
        raise ParseError(f"expected a vector (grade-1) expression, got grade {form.k}", 0)
    if form.is_zero():
        return Vector.zero(n)
    return sharp(form)


def _coeff_str(v: Fraction) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def print_form(f: KForm) -> str:
    """Canonical text: blade tuples ascending, unit coefficients elided."""
    if f.is_zero():
        return "0"
    if f.k == 0:
        return _coeff_str(f.c[0])
    parts = []
    for idx, v in f.terms():
        mono = "e" + "".join(str(i) for i in idx)
        if v == 1:
            body = mono
        elif v == -1:
            body = mono
        else:
            body = f"{_coeff_str(abs(v))} {mono}"
        if not parts:
            parts.append(body if v > 0 else "-" + body)
        else:
            parts.append(("+ " if v > 0 else "- ") + body)
    return " ".join(parts)


def print_vector(v: Vector) -> str:
    from .exterior import flat

    return print_form(flat(v))
