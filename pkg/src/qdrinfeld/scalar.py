"""Coefficient scalars: Laurent polynomials in named parameters over Q(zeta_m).

A ``Scalar`` maps integer exponent vectors (one slot per declared parameter)
to nonzero cyclotomic coefficients.  Units are exactly the one-term scalars,
which is what the deformation data needs: every q entry and every character
value must be invertible, while coefficients of the bracket may be arbitrary.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicNumber
from .errors import NotAUnit, ParseError, SpecError


@dataclass(frozen=True)
class ScalarContext:
    """Conductor and parameter names shared by all scalars of one spec."""

    conductor: int
    params: tuple[str, ...] = ()

    def __post_init__(self):
        if self.conductor < 1:
            raise SpecError(f"conductor must be >= 1, got {self.conductor}")
        seen = set()
        for name in self.params:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise SpecError(f"bad parameter name {name!r}")
            if name == "zeta" or re.fullmatch(r"[vg][0-9]*", name):
                raise SpecError(f"parameter name {name!r} is reserved")
            if name in seen:
                raise SpecError(f"duplicate parameter name {name!r}")
            seen.add(name)

    @property
    def rank(self) -> int:
        return len(self.params)


class Scalar:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: ScalarContext, terms: dict) -> None:
        self.ctx = ctx
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ctx: ScalarContext) -> Scalar:
        return cls(ctx, {})

    @classmethod
    def one(cls, ctx: ScalarContext) -> Scalar:
        return cls.rational(ctx, 1)

    @classmethod
    def rational(cls, ctx: ScalarContext, value) -> Scalar:
        coeff = CyclotomicNumber.from_rational(ctx.conductor, Fraction(value))
        return cls(ctx, {(0,) * ctx.rank: coeff})

    @classmethod
    def from_cyclotomic(cls, ctx: ScalarContext, value: CyclotomicNumber) -> Scalar:
        if value.m != ctx.conductor:
            raise SpecError(f"conductor mismatch: {value.m} vs {ctx.conductor}")
        return cls(ctx, {(0,) * ctx.rank: value})

    @classmethod
    def zeta(cls, ctx: ScalarContext, d: int, power: int = 1) -> Scalar:
        value = CyclotomicNumber.root_of_unity(ctx.conductor, d, power)
        return cls(ctx, {(0,) * ctx.rank: value})

    @classmethod
    def param(cls, ctx: ScalarContext, name: str, power: int = 1) -> Scalar:
        if name not in ctx.params:
            raise SpecError(f"unknown parameter {name!r}")
        exps = [0] * ctx.rank
        exps[ctx.params.index(name)] = power
        return cls(ctx, {tuple(exps): CyclotomicNumber.one(ctx.conductor)})

    # -- ring operations ------------------------------------------------------

    def _check(self, other: Scalar) -> None:
        if self.ctx != other.ctx:
            raise SpecError(f"scalar context mismatch: {self.ctx} vs {other.ctx}")

    def __add__(self, other: Scalar) -> Scalar:
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            out[e] = c if cur is None else cur + c
        return Scalar(self.ctx, out)

    def __sub__(self, other: Scalar) -> Scalar:
        return self + (-other)

    def __neg__(self) -> Scalar:
        return Scalar(self.ctx, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: Scalar) -> Scalar:
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                cur = out.get(e)
                out[e] = c if cur is None else cur + c
        return Scalar(self.ctx, out)

    def __pow__(self, k: int) -> Scalar:
        if k < 0:
            return self.inv() ** (-k)
        result = Scalar.one(self.ctx)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inv(self) -> Scalar:
        """Invert a unit; only Laurent monomials qualify."""
        if len(self.terms) != 1:
            raise NotAUnit(f"{self} is not a unit (needs exactly one term)")
        (exps, coeff), = self.terms.items()
        return Scalar(self.ctx, {tuple(-e for e in exps): coeff.inverse()})

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self == Scalar.one(self.ctx)

    def is_unit(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> CyclotomicNumber:
        if self.is_zero():
            return CyclotomicNumber.zero(self.ctx.conductor)
        if not self.is_constant():
            raise SpecError(f"{self} has free parameters")
        return next(iter(self.terms.values()))

    def factor_str(self) -> str:
        """Render so the result can be dropped into a larger product."""
        s = str(self)
        if len(self.terms) > 1:
            return f"({s})"
        if len(self.terms) == 1:
            exps, coeff = next(iter(self.terms.items()))
            if coeff.term_count() > 1 and not any(exps):
                return f"({s})"
        return s

    def __eq__(self, other) -> bool:
        return isinstance(other, Scalar) and self.ctx == other.ctx and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    # -- substitution ---------------------------------------------------------

    def substitute(self, values: dict[str, Scalar], target: ScalarContext) -> Scalar:
        """Replace parameters by scalars of ``target``; unnamed parameters keep
        their slot only if ``target`` still declares them."""
        out = Scalar.zero(target)
        for exps, coeff in self.terms.items():
            term = Scalar.from_cyclotomic(target, coeff)
            for name, e in zip(self.ctx.params, exps):
                if e == 0:
                    continue
                if name in values:
                    term = term * values[name] ** e
                else:
                    term = term * Scalar.param(target, name, e)
            out = out + term
        return out

    # -- canonical text -------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps in sorted(self.terms):
            pieces.append(_format_term(self.ctx, exps, self.terms[exps]))
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"Scalar({self})"


def _format_term(ctx: ScalarContext, exps, coeff: CyclotomicNumber) -> str:
    mono = "*".join(
        name if e == 1 else f"{name}^{e}"
        for name, e in zip(ctx.params, exps)
        if e != 0
    )
    if not mono:
        return str(coeff)
    if coeff == CyclotomicNumber.one(ctx.conductor):
        return mono
    if coeff == -CyclotomicNumber.one(ctx.conductor):
        return f"-{mono}"
    cs = str(coeff)
    if coeff.term_count() > 1:
        cs = f"({cs})"
    return f"{cs}*{mono}"


# ---------------------------------------------------------------------------
# parsing
#
#   expr   := term (('+' | '-') term)*
#   term   := factor ('*' factor)*
#   factor := atom ('^' ['-'] INT)?
#   atom   := INT ('/' INT)? | 'zeta' '(' INT ')' | IDENT | '(' expr ')' | '-' factor
#
# A bare '/' between anything but two integer literals is rejected: the
# coefficient ring has Laurent monomial units only, not general fractions.

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^(),]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match or match.end() == match.start():
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} in {text!r}")
        pos = match.end()
        if match.group("int") is not None:
            tokens.append(("int", int(match.group("int"))))
        elif match.group("name") is not None:
            tokens.append(("name", match.group("name")))
        else:
            tokens.append(("op", match.group("op")))
    return tokens


class _ScalarParser:
    def __init__(self, ctx: ScalarContext, tokens, source: str) -> None:
        self.ctx = ctx
        self.tokens = tokens
        self.pos = 0
        self.source = source

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, value = self.take()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r} in {self.source!r}")

    def parse(self) -> Scalar:
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input in {self.source!r}")
        return value

    def expr(self) -> Scalar:
        value = self.term()
        while True:
            kind, op = self.peek()
            if kind == "op" and op in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if op == "+" else value - rhs
            else:
                return value

    def term(self) -> Scalar:
        value = self.factor()
        while True:
            kind, op = self.peek()
            if kind == "op" and op == "*":
                self.take()
                value = value * self.factor()
            elif kind == "op" and op == "/":
                raise ParseError(f"general division is not supported in {self.source!r}")
            else:
                return value

    def factor(self) -> Scalar:
        value = self.atom()
        kind, op = self.peek()
        if kind == "op" and op == "^":
            self.take()
            value = value ** self.signed_int()
        return value

    def signed_int(self) -> int:
        kind, value = self.take()
        sign = 1
        if kind == "op" and value == "-":
            sign = -1
            kind, value = self.take()
        if kind != "int":
            raise ParseError(f"expected integer exponent in {self.source!r}")
        return sign * value

    def atom(self) -> Scalar:
        kind, value = self.take()
        if kind == "int":
            nxt_kind, nxt = self.peek()
            if nxt_kind == "op" and nxt == "/":
                self.take()
                dkind, denom = self.take()
                if dkind != "int" or denom == 0:
                    raise ParseError(f"bad rational literal in {self.source!r}")
                return Scalar.rational(self.ctx, Fraction(value, denom))
            return Scalar.rational(self.ctx, value)
        if kind == "name":
            if value == "zeta":
                self.expect_op("(")
                dkind, d = self.take()
                if dkind != "int":
                    raise ParseError(f"zeta needs an integer order in {self.source!r}")
                self.expect_op(")")
                if d < 1 or self.ctx.conductor % d != 0:
                    raise ParseError(
                        f"zeta({d}) does not exist at conductor {self.ctx.conductor}"
                    )
                return Scalar.zeta(self.ctx, d)
            if value in self.ctx.params:
                return Scalar.param(self.ctx, value)
            raise ParseError(f"unknown identifier {value!r} in {self.source!r}")
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "op" and value == "-":
            return -self.factor()
        raise ParseError(f"unexpected token in {self.source!r}")


def parse_scalar(text: str, ctx: ScalarContext) -> Scalar:
    return _ScalarParser(ctx, _tokenize(text), text).parse()
