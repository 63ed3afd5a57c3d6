"""Reading and writing the .qdo spec-file format.

A file declares either an algebra presentation (sections [field], [group],
[action], [q], [kappa]) or a standalone color Lie ring ([field] plus
[generic-lie]).  The format is line-oriented; '#' starts a comment.  The
formatter emits a canonical form: parsing its output reproduces the same
object, and formatting is idempotent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from math import lcm
from pathlib import Path

from .algebra import AlgebraSpec, NCElement
from .errors import ParseError, SpecError
from .groups import AbelianGroup, ADegree, Character, GroupElement
from .scalar import Scalar, ScalarContext, _tokenize, parse_scalar

_ALGEBRA_SECTIONS = {"field", "group", "action", "q", "kappa"}
_GENERIC_SECTIONS = {"field", "generic-lie"}
_KNOWN_SECTIONS = _ALGEBRA_SECTIONS | _GENERIC_SECTIONS


@dataclass
class GenericLieData:
    """Raw description of a user-supplied color Lie ring.

    The grading group is Z^free_rank x (product of cyclic groups).  The
    pairing is given on the group's generators; brackets are stored for
    index pairs (a, b) with a <= b, the rest follow by antisymmetry.
    """

    ctx: ScalarContext
    free_rank: int
    torsion: AbelianGroup
    basis: tuple[str, ...]
    degrees: tuple[ADegree, ...]
    epsilon_table: dict[tuple[int, int], Scalar]
    brackets: dict[tuple[int, int], tuple[tuple[int, Scalar], ...]]
    name: str = ""

    @property
    def gen_count(self) -> int:
        return self.free_rank + self.torsion.rank


def _strip(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def _split_sections(text: str) -> dict[str, list[tuple[int, str]]]:
    sections: dict[str, list[tuple[int, str]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if name not in _KNOWN_SECTIONS:
                raise ParseError(f"unknown section [{name}]", lineno)
            if name in sections:
                raise ParseError(f"duplicate section [{name}]", lineno)
            sections[name] = []
            current = name
        elif current is None:
            raise ParseError("content before any section header", lineno)
        else:
            sections[current].append((lineno, line))
    return sections


def _key_values(lines, allowed) -> dict[str, tuple[int, str]]:
    out: dict[str, tuple[int, str]] = {}
    for lineno, line in lines:
        if "=" not in line:
            raise ParseError(f"expected 'key = value', got {line!r}", lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in allowed:
            raise ParseError(f"unknown key {key!r}", lineno)
        if key in out:
            raise ParseError(f"duplicate key {key!r}", lineno)
        out[key] = (lineno, value.strip())
    return out


def _parse_int(value: str, lineno: int, minimum: int) -> int:
    try:
        n = int(value)
    except ValueError:
        raise ParseError(f"expected an integer, got {value!r}", lineno) from None
    if n < minimum:
        raise ParseError(f"value {n} below minimum {minimum}", lineno)
    return n


def _parse_json_list(value: str, lineno: int, what: str):
    try:
        data = json.loads(value)
    except json.JSONDecodeError:
        raise ParseError(f"{what} must be a JSON list, got {value!r}", lineno) from None
    if not isinstance(data, list):
        raise ParseError(f"{what} must be a JSON list", lineno)
    return data


def _int_row(row, lineno: int, what: str) -> list[int]:
    if not isinstance(row, list) or not all(isinstance(x, int) for x in row):
        raise ParseError(f"{what} must be a list of integers", lineno)
    return row


def _parse_params(value: str, lineno: int) -> tuple[str, ...]:
    if not value:
        return ()
    names = [p.strip() for p in value.split(",")]
    if any(not p for p in names):
        raise ParseError("empty parameter name", lineno)
    return tuple(names)


def _build_context(field_kv, default_conductor: int) -> ScalarContext:
    conductor = default_conductor
    if "conductor" in field_kv:
        lineno, value = field_kv["conductor"]
        conductor = _parse_int(value, lineno, 1)
        if conductor % default_conductor != 0:
            raise ParseError(
                f"conductor {conductor} is not a multiple of the group exponent "
                f"{default_conductor}",
                lineno,
            )
    params: tuple[str, ...] = ()
    if "params" in field_kv:
        lineno, value = field_kv["params"]
        params = _parse_params(value, lineno)
    try:
        return ScalarContext(conductor, params)
    except SpecError as exc:
        raise ParseError(str(exc), field_kv.get("params", (0, ""))[0]) from None


def _scalar(text: str, ctx: ScalarContext, lineno: int) -> Scalar:
    try:
        return parse_scalar(text, ctx)
    except ParseError as exc:
        raise ParseError(exc.message, lineno) from None


def _group_element(group: AbelianGroup, text: str, lineno: int) -> GroupElement:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ParseError(f"expected group exponents '(e1,...)', got {text!r}", lineno)
    inner = body[1:-1].strip()
    parts = [p.strip() for p in inner.split(",")] if inner else []
    if len(parts) != group.rank:
        raise ParseError(
            f"group element needs {group.rank} exponents, got {len(parts)}", lineno
        )
    try:
        exps = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer group exponent in {text!r}", lineno) from None
    return group.element(exps)


def _parse_algebra(sections, name: str) -> AlgebraSpec:
    for required in ("group", "action"):
        if required not in sections:
            raise ParseError(f"missing section [{required}]", 0)
    field_kv = _key_values(sections.get("field", []), {"conductor", "params"})
    group_kv = _key_values(sections["group"], {"orders"})
    action_kv = _key_values(sections["action"], {"characters"})

    if "orders" not in group_kv:
        raise ParseError("missing 'orders' in [group]", 0)
    lineno, value = group_kv["orders"]
    orders = _int_row(_parse_json_list(value, lineno, "orders"), lineno, "orders")
    if not orders or any(m < 1 for m in orders):
        raise ParseError("orders must be positive integers", lineno)
    group = AbelianGroup(orders)

    ctx = _build_context(field_kv, group.exponent)

    if "characters" not in action_kv:
        raise ParseError("missing 'characters' in [action]", 0)
    lineno, value = action_kv["characters"]
    rows = _parse_json_list(value, lineno, "characters")
    if not rows:
        raise ParseError("at least one character row is required", lineno)
    chars = []
    for row in rows:
        exps = _int_row(row, lineno, "character row")
        if len(exps) != group.rank:
            raise ParseError(
                f"character row needs {group.rank} entries, got {len(exps)}", lineno
            )
        chars.append(Character(group, exps))
    n = len(chars)

    q_entries: dict[tuple[int, int], Scalar] = {}
    q_lines: dict[tuple[int, int], int] = {}
    for lineno, line in sections.get("q", []):
        head, eq, expr = line.partition("=")
        parts = head.split()
        if eq != "=" or len(parts) != 2:
            raise ParseError(f"expected 'i j = expr', got {line!r}", lineno)
        i = _parse_int(parts[0], lineno, 1) - 1
        j = _parse_int(parts[1], lineno, 1) - 1
        if i >= n or j >= n:
            raise ParseError(f"q index out of range ({i + 1}, {j + 1})", lineno)
        if (i, j) in q_entries:
            raise ParseError(f"duplicate q entry ({i + 1}, {j + 1})", lineno)
        q_entries[(i, j)] = _scalar(expr.strip(), ctx, lineno)
        q_lines[(i, j)] = lineno

    kappa_raw: dict[tuple[int, int], tuple[int, list]] = {}
    for lineno, line in sections.get("kappa", []):
        head, arrow, rhs = line.partition("->")
        parts = head.split()
        if arrow != "->" or len(parts) != 2:
            raise ParseError(f"expected 'i j -> terms', got {line!r}", lineno)
        i = _parse_int(parts[0], lineno, 1) - 1
        j = _parse_int(parts[1], lineno, 1) - 1
        if i >= n or j >= n:
            raise ParseError(f"kappa index out of range ({i + 1}, {j + 1})", lineno)
        if i == j:
            raise ParseError(
                f"kappa(v{i + 1}, v{i + 1}) must vanish by quantum antisymmetry",
                lineno,
            )
        if (i, j) in kappa_raw:
            raise ParseError(f"duplicate kappa entry ({i + 1}, {j + 1})", lineno)
        terms = []
        for chunk in rhs.split(";"):
            chunk = chunk.strip()
            if not chunk:
                raise ParseError("empty kappa term", lineno)
            bits = chunk.split(None, 1)
            if len(bits) != 2 or "(" not in bits[1]:
                raise ParseError(f"expected 'r (exps) expr', got {chunk!r}", lineno)
            r = _parse_int(bits[0], lineno, 1) - 1
            if r >= n:
                raise ParseError(f"kappa target v{r + 1} out of range", lineno)
            rest = bits[1].strip()
            close = rest.index(")")
            g = _group_element(group, rest[: close + 1], lineno)
            coeff = _scalar(rest[close + 1 :].strip(), ctx, lineno)
            terms.append((r, g, coeff))
        kappa_raw[(i, j)] = (lineno, terms)

    # Resolve transposed kappa entries through quantum antisymmetry before
    # handing over to AlgebraSpec, which stores only i < j.  Invariant
    # violations surface as SpecError, grammar problems as ParseError.
    probe = AlgebraSpec(ctx, group, chars, dict(q_entries), {}, name=name)

    kappa: dict[tuple[int, int], tuple] = {}
    for (i, j), (lineno, terms) in sorted(kappa_raw.items()):
        if i < j:
            key, resolved = (i, j), terms
        else:
            factor = -probe.q_scalar(j, i)
            key = (j, i)
            resolved = [(r, g, factor * c) for r, g, c in terms]
        if key in kappa:
            stored = _normalize_kappa_terms(kappa[key])
            incoming = _normalize_kappa_terms(resolved)
            if stored != incoming:
                raise SpecError(
                    f"kappa({key[0] + 1},{key[1] + 1}) given twice with values "
                    "that violate quantum antisymmetry"
                )
        else:
            kappa[key] = tuple(resolved)

    return AlgebraSpec(ctx, group, chars, q_entries, kappa, name=name)


def _normalize_kappa_terms(terms):
    merged: dict[tuple[int, tuple[int, ...]], Scalar] = {}
    for r, g, c in terms:
        key = (r, g.exps)
        merged[key] = merged[key] + c if key in merged else c
    return {k: v for k, v in merged.items() if not v.is_zero()}


def _parse_generic(sections, name: str) -> GenericLieData:
    keys = {"free_rank", "orders", "basis", "degrees"}
    kv_lines = []
    epsilon_lines = []
    bracket_lines = []
    for lineno, line in sections["generic-lie"]:
        head = line.split(None, 1)[0]
        if head == "epsilon":
            epsilon_lines.append((lineno, line))
        elif head == "bracket":
            bracket_lines.append((lineno, line))
        else:
            kv_lines.append((lineno, line))
    kv = _key_values(kv_lines, keys)

    free_rank = 0
    if "free_rank" in kv:
        lineno, value = kv["free_rank"]
        free_rank = _parse_int(value, lineno, 0)
    orders: list[int] = []
    if "orders" in kv:
        lineno, value = kv["orders"]
        orders = _int_row(_parse_json_list(value, lineno, "orders"), lineno, "orders")
        if any(m < 1 for m in orders):
            raise ParseError("orders must be positive integers", lineno)
    torsion = AbelianGroup(orders)
    gen_count = free_rank + torsion.rank
    if gen_count == 0:
        raise ParseError("the grading group needs at least one generator", 0)

    field_kv = _key_values(sections.get("field", []), {"conductor", "params"})
    ctx = _build_context(field_kv, lcm(*orders) if orders else 1)

    if "basis" not in kv:
        raise ParseError("missing 'basis' in [generic-lie]", 0)
    lineno, value = kv["basis"]
    basis = _parse_params(value, lineno)
    if not basis or len(set(basis)) != len(basis):
        raise ParseError("basis labels must be nonempty and distinct", lineno)
    if set(basis) & set(ctx.params):
        raise ParseError("basis labels collide with scalar parameters", lineno)

    if "degrees" not in kv:
        raise ParseError("missing 'degrees' in [generic-lie]", 0)
    lineno, value = kv["degrees"]
    rows = _parse_json_list(value, lineno, "degrees")
    if len(rows) != len(basis):
        raise ParseError("one degree row per basis label is required", lineno)
    degrees = []
    for row in rows:
        exps = _int_row(row, lineno, "degree row")
        if len(exps) != gen_count:
            raise ParseError(
                f"degree row needs {gen_count} entries, got {len(exps)}", lineno
            )
        degrees.append(
            ADegree(exps[:free_rank], torsion.element(exps[free_rank:]))
        )

    epsilon_table: dict[tuple[int, int], Scalar] = {}
    for lineno, line in epsilon_lines:
        head, eq, expr = line.partition("=")
        parts = head.split()
        if eq != "=" or len(parts) != 3:
            raise ParseError(f"expected 'epsilon s t = expr', got {line!r}", lineno)
        s = _parse_int(parts[1], lineno, 1) - 1
        t = _parse_int(parts[2], lineno, 1) - 1
        if s >= gen_count or t >= gen_count:
            raise ParseError(f"epsilon index out of range ({s + 1}, {t + 1})", lineno)
        if (s, t) in epsilon_table:
            raise ParseError(f"duplicate epsilon entry ({s + 1}, {t + 1})", lineno)
        epsilon_table[(s, t)] = _scalar(expr.strip(), ctx, lineno)

    label_index = {label: a for a, label in enumerate(basis)}
    brackets: dict[tuple[int, int], tuple[tuple[int, Scalar], ...]] = {}
    for lineno, line in bracket_lines:
        head, eq, rhs = line.partition("=")
        parts = head.split()
        if eq != "=" or len(parts) != 3:
            raise ParseError(f"expected 'bracket X Y = combo', got {line!r}", lineno)
        for label in parts[1:3]:
            if label not in label_index:
                raise ParseError(f"unknown basis label {label!r}", lineno)
        a, b = label_index[parts[1]], label_index[parts[2]]
        if (a, b) in brackets:
            raise ParseError(f"duplicate bracket ({parts[1]}, {parts[2]})", lineno)
        brackets[(a, b)] = _parse_combination(rhs.strip(), ctx, label_index, lineno)

    return GenericLieData(
        ctx=ctx,
        free_rank=free_rank,
        torsion=torsion,
        basis=basis,
        degrees=tuple(degrees),
        epsilon_table=epsilon_table,
        brackets=brackets,
        name=name,
    )


def _parse_combination(text, ctx, label_index, lineno):
    """Parse 'c1*X + c2*Y - Z' into ((index, Scalar), ...)."""
    try:
        tokens = _tokenize(text)
    except ParseError as exc:
        raise ParseError(exc.message, lineno) from None
    parser = _ComboParser(ctx, tokens, label_index, lineno)
    acc: dict[int, Scalar] = {}
    for index, coeff in parser.parse():
        acc[index] = acc[index] + coeff if index in acc else coeff
    return tuple(
        (index, coeff) for index, coeff in sorted(acc.items()) if not coeff.is_zero()
    )


class _ComboParser:
    """Sum of products where each product holds at most one basis label."""

    def __init__(self, ctx, tokens, label_index, lineno) -> None:
        self.ctx = ctx
        self.tokens = tokens
        self.pos = 0
        self.labels = label_index
        self.lineno = lineno

    def error(self, message):
        raise ParseError(message, self.lineno)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of bracket expression")
        self.pos += 1
        return tok

    def parse(self):
        terms = [self.term()]
        while True:
            tok = self.peek()
            if tok is None:
                break
            if tok == ("op", "+"):
                self.take()
                terms.append(self.term())
            elif tok == ("op", "-"):
                self.take()
                index, coeff = self.term()
                terms.append((index, -coeff))
            else:
                self.error(f"unexpected token {tok[1]!r}")
        out = []
        for index, coeff in terms:
            if index is None:
                if not coeff.is_zero():
                    self.error("a bracket term needs exactly one basis label")
                continue
            out.append((index, coeff))
        return out

    def term(self):
        sign = Scalar.one(self.ctx)
        while self.peek() == ("op", "-"):
            self.take()
            sign = -sign
        index, coeff = self.factor()
        coeff = sign * coeff
        while self.peek() == ("op", "*"):
            self.take()
            index2, coeff2 = self.factor()
            if index is not None and index2 is not None:
                self.error("a bracket term may hold only one basis label")
            index = index if index is not None else index2
            coeff = coeff * coeff2
        return index, coeff

    def factor(self):
        tok = self.peek()
        if tok is not None and tok[0] == "name" and tok[1] in self.labels:
            self.take()
            return self.labels[tok[1]], Scalar.one(self.ctx)
        # fall back to a scalar factor: delegate a minimal slice to the
        # scalar parser by consuming a balanced token run
        start = self.pos
        depth = 0
        while self.pos < len(self.tokens):
            kind, value = self.tokens[self.pos]
            if kind == "op" and value == "(":
                depth += 1
            elif kind == "op" and value == ")":
                if depth == 0:
                    break
                depth -= 1
            elif kind == "op" and value in "+-*" and depth == 0 and self.pos > start:
                # a '-' directly after '^' is a negative exponent, not a sum
                if not (value == "-" and self.tokens[self.pos - 1] == ("op", "^")):
                    break
            elif kind == "name" and value in self.labels and depth == 0:
                break
            self.pos += 1
        if self.pos == start:
            self.error("expected a scalar factor or basis label")
        piece = self.tokens[start : self.pos]
        return None, _scalar_from_tokens(piece, self.ctx, self.lineno)


def _scalar_from_tokens(tokens, ctx, lineno):
    from .scalar import _ScalarParser

    parser = _ScalarParser(ctx, tokens, "")
    try:
        return parser.parse()
    except ParseError as exc:
        raise ParseError(exc.message, lineno) from None


def parse_spec_text(text: str, name: str = ""):
    sections = _split_sections(text)
    has_generic = "generic-lie" in sections
    has_algebra = bool(set(sections) & {"group", "action", "q", "kappa"})
    if has_generic and has_algebra:
        raise ParseError("a file declares either an algebra or a generic ring", 0)
    if has_generic:
        return _parse_generic(sections, name)
    if has_algebra:
        return _parse_algebra(sections, name)
    raise ParseError("no algebra or generic ring sections found", 0)


def parse_spec_file(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", 0) from None
    return parse_spec_text(text, name=path.stem)


# ---------------------------------------------------------------------------
# canonical output


def format_spec(obj) -> str:
    if isinstance(obj, AlgebraSpec):
        return _format_algebra(obj)
    if isinstance(obj, GenericLieData):
        return _format_generic(obj)
    raise SpecError(f"cannot format {type(obj).__name__}")


def _field_lines(ctx: ScalarContext) -> list[str]:
    lines = ["[field]", f"conductor = {ctx.conductor}"]
    if ctx.params:
        lines.append("params = " + ", ".join(ctx.params))
    return lines


def _format_algebra(spec: AlgebraSpec) -> str:
    lines = _field_lines(spec.ctx)
    lines += ["", "[group]", f"orders = {json.dumps(list(spec.group.orders))}"]
    rows = [list(chi.exps) for chi in spec.chars]
    lines += ["", "[action]", f"characters = {json.dumps(rows)}"]
    lines += ["", "[q]"]
    for i in range(spec.n):
        for j in range(i + 1, spec.n):
            lines.append(f"{i + 1} {j + 1} = {spec.q_scalar(i, j)}")
    support = spec.kappa_support()
    if support:
        lines += ["", "[kappa]"]
        for i, j in support:
            terms = sorted(spec.kappa_pairs(i, j), key=lambda t: (t[0], t[1].exps))
            rendered = " ; ".join(
                f"{r + 1} ({','.join(str(e) for e in g.exps)}) {c}"
                for r, g, c in terms
            )
            lines.append(f"{i + 1} {j + 1} -> {rendered}")
    return "\n".join(lines) + "\n"


def _format_generic(data: GenericLieData) -> str:
    lines = _field_lines(data.ctx)
    lines += ["", "[generic-lie]"]
    lines.append(f"free_rank = {data.free_rank}")
    lines.append(f"orders = {json.dumps(list(data.torsion.orders))}")
    lines.append("basis = " + ", ".join(data.basis))
    rows = [deg.as_int_vector() for deg in data.degrees]
    lines.append(f"degrees = {json.dumps(rows)}")
    for (s, t), value in sorted(data.epsilon_table.items()):
        lines.append(f"epsilon {s + 1} {t + 1} = {value}")
    for (a, b), terms in sorted(data.brackets.items()):
        if not terms:
            continue
        pieces = []
        for index, coeff in terms:
            cs = coeff.factor_str()
            if cs == "1":
                pieces.append(data.basis[index])
            elif cs == "-1":
                pieces.append("-" + data.basis[index])
            else:
                pieces.append(f"{cs}*{data.basis[index]}")
        rhs = pieces[0]
        for piece in pieces[1:]:
            rhs += " - " + piece[1:] if piece.startswith("-") else " + " + piece
        lines.append(f"bracket {data.basis[a]} {data.basis[b]} = {rhs}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# free element expressions (the normal-form command)


def parse_nc_expression(text: str, spec: AlgebraSpec) -> NCElement:
    tokens = _tokenize(text)
    parser = _NCParser(spec, tokens, text)
    return parser.parse()


class _NCParser:
    """Grammar: sums of products of factors; a factor is a generator 'vK',
    a group letter 'g(e1,...)', a scalar atom, or a parenthesized expression,
    optionally raised to a nonnegative power with '^'."""

    def __init__(self, spec: AlgebraSpec, tokens, source: str) -> None:
        self.spec = spec
        self.tokens = tokens
        self.pos = 0
        self.source = source

    def error(self, message: str):
        raise ParseError(f"{message} in {self.source!r}")

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of expression")
        self.pos += 1
        return tok

    def parse(self) -> NCElement:
        value = self.expr()
        if self.peek() is not None:
            self.error(f"trailing input at {self.peek()[1]!r}")
        return value

    def expr(self) -> NCElement:
        value = self.term()
        while True:
            tok = self.peek()
            if tok == ("op", "+"):
                self.take()
                value = value + self.term()
            elif tok == ("op", "-"):
                self.take()
                value = value - self.term()
            else:
                return value

    def term(self) -> NCElement:
        value = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            value = value * self.factor()
        return value

    def factor(self) -> NCElement:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.error("exponent must be a nonnegative integer")
            power = int(tok[1])
            out = NCElement.monomial(self.spec, ())
            for _ in range(power):
                out = out * base
            return out
        return base

    def atom(self) -> NCElement:
        tok = self.take()
        kind, value = tok
        if kind == "op" and value == "-":
            return -self.factor()
        if kind == "op" and value == "(":
            inner = self.expr()
            if self.take() != ("op", ")"):
                self.error("expected ')'")
            return inner
        if kind == "name" and value.startswith("v") and value[1:].isdigit():
            index = int(value[1:]) - 1
            if not (0 <= index < self.spec.n):
                self.error(f"generator {value!r} out of range")
            return NCElement.monomial(self.spec, (index,))
        if kind == "name" and value == "g" and self.peek() == ("op", "("):
            exps = self.group_exps()
            return NCElement.group_unit(self.spec, self.spec.group.element(exps))
        # anything else must be a scalar atom (rational, zeta, parameter)
        self.pos -= 1
        scalar = self.scalar_atom()
        return NCElement.monomial(self.spec, (), coeff=scalar)

    def group_exps(self) -> list[int]:
        self.take()  # '('
        exps = []
        group_rank = self.spec.group.rank
        while True:
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            tok = self.take()
            if tok[0] != "int":
                self.error("group exponents must be integers")
            exps.append(sign * int(tok[1]))
            tok = self.take()
            if tok == ("op", ")"):
                break
            if tok != ("op", ","):
                self.error("expected ',' or ')' in group element")
        if len(exps) != group_rank:
            self.error(f"group element needs {group_rank} exponents")
        return exps

    def scalar_atom(self) -> Scalar:
        tok = self.take()
        kind, value = tok
        ctx = self.spec.ctx
        if kind == "int":
            if self.peek() == ("op", "/"):
                self.take()
                den = self.take()
                if den[0] != "int" or int(den[1]) == 0:
                    self.error("expected a nonzero integer denominator")
                from fractions import Fraction

                base = Scalar.rational(ctx, Fraction(int(value), int(den[1])))
            else:
                base = Scalar.rational(ctx, int(value))
        elif kind == "name" and value == "zeta":
            if self.take() != ("op", "("):
                self.error("expected '(' after zeta")
            d = self.take()
            if d[0] != "int":
                self.error("expected an integer order in zeta(...)")
            if self.take() != ("op", ")"):
                self.error("expected ')' after zeta order")
            try:
                base = Scalar.zeta(ctx, int(d[1]))
            except SpecError as exc:
                self.error(str(exc))
        elif kind == "name" and value in ctx.params:
            base = Scalar.param(ctx, value)
        else:
            self.error(f"unknown symbol {value!r}")
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            tok = self.take()
            if tok[0] != "int":
                self.error("exponent must be an integer")
            base = base ** (sign * int(tok[1]))
        return base


# ---------------------------------------------------------------------------
# bundled fixtures

_FIXTURE_NAMES = ("ex1", "ex2", "ex3", "ex4", "gl11", "zero-kappa")


def fixture_names() -> tuple[str, ...]:
    return _FIXTURE_NAMES


def fixture_path(name: str) -> Path:
    if name not in _FIXTURE_NAMES:
        raise SpecError(f"unknown fixture {name!r}; choose from {_FIXTURE_NAMES}")
    return Path(str(resources.files("qdrinfeld") / "fixtures" / f"{name}.qdo"))


def load_fixture(name: str):
    return parse_spec_file(fixture_path(name))


def fixture_corpus() -> dict[str, object]:
    return {name: load_fixture(name) for name in _FIXTURE_NAMES}


__all__ = [
    "GenericLieData",
    "parse_spec_text",
    "parse_spec_file",
    "format_spec",
    "parse_nc_expression",
    "fixture_names",
    "fixture_path",
    "load_fixture",
    "fixture_corpus",
]
