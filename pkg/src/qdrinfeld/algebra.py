"""Filtered quotients of skew group algebras for diagonal abelian actions.

An :class:`AlgebraSpec` packages the raw data: a scalar context, a finite
abelian group acting diagonally through characters, a matrix of commutation
units q_ij, and a bilinear map kappa landing in V tensor kG.  Elements are
kept with all group letters pushed to the right, so a term is a triple
(word, group element, scalar) and multiplication only needs character
values.  The normal form sorts words by repeatedly rewriting descending
adjacent pairs through the defining relations.
"""

from __future__ import annotations

import itertools

from .errors import SpecError
from .groups import AbelianGroup, Character, GroupElement, char_eval
from .scalar import Scalar, ScalarContext

KappaTerm = tuple[int, GroupElement, Scalar]


class AlgebraSpec:
    """Immutable description of one algebra.

    q is given as a dict on ordered pairs; missing off-diagonal entries
    default to 1 and the transposes are derived as inverses.  kappa maps
    ordered pairs (i, j) with i < j to tuples of (r, g, coefficient).
    """

    def __init__(
        self,
        ctx: ScalarContext,
        group: AbelianGroup,
        chars,
        q: dict[tuple[int, int], Scalar],
        kappa: dict[tuple[int, int], tuple[KappaTerm, ...]],
        name: str = "",
    ) -> None:
        self.ctx = ctx
        self.group = group
        self.chars = tuple(chars)
        self.name = name
        n = len(self.chars)
        if n == 0:
            raise SpecError("at least one generator is required")
        for chi in self.chars:
            if not isinstance(chi, Character) or chi.group != group:
                raise SpecError("every generator needs a character of the acting group")
        self._q = self._build_q(n, q)
        self._kappa = self._build_kappa(n, kappa)
        self._char_cache: dict[tuple[int, tuple[int, ...]], Scalar] = {}

    def _build_q(self, n: int, q_in) -> dict[tuple[int, int], Scalar]:
        one = Scalar.one(self.ctx)
        q = {}
        for (i, j), val in q_in.items():
            if not (0 <= i < n and 0 <= j < n):
                raise SpecError(f"q index out of range: ({i + 1}, {j + 1})")
            if val.ctx != self.ctx:
                raise SpecError("q entry from a different scalar context")
            if i == j:
                if val != one:
                    raise SpecError(f"q_{i + 1}{i + 1} must equal 1")
                continue
            if not val.is_unit():
                raise SpecError(f"q_{i + 1}{j + 1} = {val} is not a unit")
            q[(i, j)] = val
        for i in range(n):
            for j in range(n):
                if i == j:
                    q[(i, j)] = one
                elif (i, j) not in q:
                    q[(i, j)] = q[(j, i)].inv() if (j, i) in q else one
        for i in range(n):
            for j in range(n):
                if q[(i, j)] * q[(j, i)] != one:
                    raise SpecError(
                        f"q_{i + 1}{j + 1} and q_{j + 1}{i + 1} are not inverse"
                    )
        return q

    def _build_kappa(self, n: int, kappa_in) -> dict[tuple[int, int], tuple[KappaTerm, ...]]:
        out = {}
        for (i, j), terms in kappa_in.items():
            if not (0 <= i < j < n):
                raise SpecError(
                    f"kappa pairs must be ordered with i < j, got ({i + 1}, {j + 1})"
                )
            kept = []
            for r, g, coeff in terms:
                if not (0 <= r < n):
                    raise SpecError(f"kappa target v{r + 1} out of range")
                if not isinstance(g, GroupElement) or g.group != self.group:
                    raise SpecError("kappa group part is not in the acting group")
                if coeff.ctx != self.ctx:
                    raise SpecError("kappa coefficient from a different scalar context")
                if not coeff.is_zero():
                    kept.append((r, g, coeff))
            if kept:
                out[(i, j)] = tuple(kept)
        return out

    @property
    def n(self) -> int:
        return len(self.chars)

    def q_scalar(self, i: int, j: int) -> Scalar:
        return self._q[(i, j)]

    def kappa_pairs(self, i: int, j: int) -> tuple[KappaTerm, ...]:
        """kappa(v_i, v_j) for any pair, transposes derived by antisymmetry."""
        if i == j:
            return ()
        if i < j:
            return self._kappa.get((i, j), ())
        factor = -self.q_scalar(i, j)
        return tuple(
            (r, g, factor * c) for r, g, c in self._kappa.get((j, i), ())
        )

    def kappa_support(self):
        """Ordered pairs (i, j), i < j, on which kappa is nonzero."""
        return sorted(self._kappa)

    def char_value(self, j: int, g: GroupElement) -> Scalar:
        key = (j, g.exps)
        val = self._char_cache.get(key)
        if val is None:
            val = char_eval(self.chars[j], g, self.ctx)
            self._char_cache[key] = val
        return val

    def word_char(self, word, g: GroupElement) -> Scalar:
        """Product of chi_j(g) over the letters j of the word."""
        val = Scalar.one(self.ctx)
        for j in word:
            val = val * self.char_value(j, g)
        return val

    def has_kappa(self) -> bool:
        return bool(self._kappa)

    def __repr__(self) -> str:
        return f"AlgebraSpec(n={self.n}, group={self.group!r}, name={self.name!r})"


class NCElement:
    """A finite sum of terms coeff * v_word * g with the group on the right."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: AlgebraSpec, terms) -> None:
        self.spec = spec
        clean: dict[tuple[tuple[int, ...], GroupElement], Scalar] = {}
        for key, coeff in terms.items():
            if not coeff.is_zero():
                clean[key] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, spec: AlgebraSpec) -> NCElement:
        return cls(spec, {})

    @classmethod
    def monomial(cls, spec, word, g=None, coeff=None) -> NCElement:
        word = tuple(word)
        for j in word:
            if not (0 <= j < spec.n):
                raise SpecError(f"generator index v{j + 1} out of range")
        if g is None:
            g = spec.group.identity()
        if coeff is None:
            coeff = Scalar.one(spec.ctx)
        return cls(spec, {(word, g): coeff})

    @classmethod
    def group_unit(cls, spec, g: GroupElement) -> NCElement:
        return cls.monomial(spec, (), g)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: NCElement) -> NCElement:
        self._check(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = terms.get(key)
            terms[key] = coeff if acc is None else acc + coeff
        return NCElement(self.spec, terms)

    def __sub__(self, other: NCElement) -> NCElement:
        return self + (-other)

    def __neg__(self) -> NCElement:
        return NCElement(self.spec, {k: -c for k, c in self.terms.items()})

    def scale(self, s: Scalar) -> NCElement:
        return NCElement(self.spec, {k: s * c for k, c in self.terms.items()})

    def __mul__(self, other: NCElement) -> NCElement:
        """Product in the free skew algebra: group letters hop over words."""
        self._check(other)
        spec = self.spec
        terms: dict[tuple[tuple[int, ...], GroupElement], Scalar] = {}
        for (u, g), cu in self.terms.items():
            for (w, h), cw in other.terms.items():
                coeff = cu * cw * spec.word_char(w, g)
                key = (u + w, g * h)
                acc = terms.get(key)
                terms[key] = coeff if acc is None else acc + coeff
        return NCElement(spec, terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NCElement)
            and self.spec is other.spec
            and self.terms == other.terms
        )

    __hash__ = None

    def _check(self, other: NCElement) -> None:
        if self.spec is not other.spec:
            raise SpecError("elements belong to different algebras")

    def max_degree(self) -> int:
        return max((len(w) for (w, _g) in self.terms), default=0)

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (len(kv[0][0]), kv[0][0], kv[0][1].sort_key()),
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (word, g), coeff in self.sorted_terms():
            factors = [f"v{j + 1}" for j in word]
            if not g.is_identity():
                factors.append(str(g))
            body = "*".join(factors)
            cs = coeff.factor_str()
            if not body:
                piece = cs
            elif cs == "1":
                piece = body
            elif cs == "-1":
                piece = "-" + body
            else:
                piece = f"{cs}*{body}"
            pieces.append(piece)
        out = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    __repr__ = __str__


def inversions(word) -> int:
    word = tuple(word)
    return sum(
        1
        for p in range(len(word))
        for s in range(p + 1, len(word))
        if word[p] > word[s]
    )


def _descent_position(word, strategy: str):
    if strategy == "leftmost":
        indices = range(len(word) - 1)
    elif strategy == "rightmost":
        indices = range(len(word) - 2, -1, -1)
    else:
        raise SpecError(f"unknown rewrite strategy {strategy!r}")
    for p in indices:
        if word[p] > word[p + 1]:
            return p
    return None


def normal_form(element: NCElement, strategy: str = "leftmost") -> NCElement:
    """Rewrite to the spanning set of nondecreasing words times group letters.

    Each step replaces one descending adjacent pair v_a v_b (a > b) by
    q_ab v_b v_a + kappa(v_a, v_b), pushing any group letter produced by
    kappa across the tail of the word.  The pair (word length, inversion
    count) drops strictly, so the loop terminates for any strategy.
    """
    spec = element.spec
    done: dict[tuple[tuple[int, ...], GroupElement], Scalar] = {}
    work = [(word, g, coeff) for (word, g), coeff in element.terms.items()]
    while work:
        word, g, coeff = work.pop()
        if coeff.is_zero():
            continue
        p = _descent_position(word, strategy)
        if p is None:
            acc = done.get((word, g))
            done[(word, g)] = coeff if acc is None else acc + coeff
            continue
        a, b = word[p], word[p + 1]
        head, tail = word[:p], word[p + 2 :]
        work.append((head + (b, a) + tail, g, coeff * spec.q_scalar(a, b)))
        for r, h, c in spec.kappa_pairs(a, b):
            work.append((head + (r,) + tail, h * g, coeff * c * spec.word_char(tail, h)))
    return NCElement(spec, done)


def h_multiply(x: NCElement, y: NCElement, strategy: str = "leftmost") -> NCElement:
    """Multiply two elements and return the normal form of the product."""
    return normal_form(x * y, strategy)


def defining_relation(spec: AlgebraSpec, j: int, i: int) -> NCElement:
    """v_j v_i - q_ji v_i v_j - kappa(v_j, v_i) for j > i, as a free element."""
    if not (0 <= i < j < spec.n):
        raise SpecError("defining relations are indexed by j > i")
    e = spec.group.identity()
    terms = {((j, i), e): Scalar.one(spec.ctx), ((i, j), e): -spec.q_scalar(j, i)}
    for r, h, c in spec.kappa_pairs(j, i):
        key = ((r,), h)
        acc = terms.get(key)
        terms[key] = -c if acc is None else acc - c
    return NCElement(spec, terms)


def extended_kappa(spec: AlgebraSpec, i: int, g: GroupElement, j: int, h: GroupElement) -> NCElement:
    """kappa on mixed arguments v_i g and v_j h.

    The group letter of the left argument acts on v_j before kappa is
    applied, and both trailing letters collect on the right: the result is
    chi_j(g) * sum c * v_r * (w g h) over the terms c * v_r w of
    kappa(v_i, v_j).
    """
    factor = spec.char_value(j, g)
    terms: dict[tuple[tuple[int, ...], GroupElement], Scalar] = {}
    for r, w, c in spec.kappa_pairs(i, j):
        key = ((r,), w * g * h)
        acc = terms.get(key)
        val = factor * c
        terms[key] = val if acc is None else acc + val
    return NCElement(spec, terms)


def pbw_words(n: int, max_degree: int):
    """All nondecreasing words in n letters of length <= max_degree."""
    for d in range(max_degree + 1):
        yield from itertools.combinations_with_replacement(range(n), d)


def all_words(n: int, max_degree: int):
    """All words in n letters of length <= max_degree."""
    for d in range(max_degree + 1):
        yield from itertools.product(range(n), repeat=d)


def pbw_monomial_count(spec: AlgebraSpec, max_degree: int) -> int:
    n = spec.n
    total = 0
    for d in range(max_degree + 1):
        total += _binomial(n + d - 1, d)
    return total * len(spec.group)


def _binomial(a: int, b: int) -> int:
    if b < 0 or b > a:
        return 0
    out = 1
    for t in range(b):
        out = out * (a - t) // (t + 1)
    return out


__all__ = [
    "AlgebraSpec",
    "NCElement",
    "KappaTerm",
    "normal_form",
    "h_multiply",
    "defining_relation",
    "extended_kappa",
    "inversions",
    "pbw_words",
    "all_words",
    "pbw_monomial_count",
]
