"""Enveloping algebras of bracket rings and the reverse construction.

The enveloping algebra of a bracket ring imposes u*v - eps(|u|,|v|) v*u =
[u, v] on the tensor algebra of the ring.  For rings whose basis is indexed
by generator/group-letter pairs the group letters can be pushed to the
right of every word, which turns the enveloping algebra into the same
word-times-letter calculus used for the deformations themselves; reduction
is then delegated to the normal-form routine over a derived spec.  Generic
rings (no group structure) get a small standalone rewriting engine instead.

The reverse direction recovers a deformation spec from a purely positive
ring: commutation scalars from the degree pairing, correction terms from
the brackets of identity-letter basis elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlgebraSpec,
    NCElement,
    all_words,
    defining_relation,
    normal_form,
    pbw_monomial_count,
)
from .colorlie import Combo, ColorLieRing, check_color_axioms, split_parts
from .errors import AxiomsFailed, NotPurelyPositive, NonUnitEpsilon, SpecError, SymbolicParameter
from .groups import ADegree
from .pbw import check_invariance, check_jacobi_sum, check_pbw, check_vanishing
from .scalar import Scalar, ScalarContext


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class UEAPresentation:
    """Rewrite rules for the enveloping algebra of a bracket ring.

    base is "group-algebra" when the ring carries a group-labelled basis
    and the rules live in the skew-group calculus of engine_spec, and
    "field" for generic rings, where swap_rules and square_rules drive a
    word rewriting engine over the ring's own basis indices.
    """

    ring: ColorLieRing
    base: str
    pair_count: int
    engine_spec: AlgebraSpec | None
    swap_rules: dict[tuple[int, int], tuple[Scalar, Combo]]
    square_rules: dict[int, Combo]

    def reduce(self, terms: dict[tuple[int, ...], Scalar]) -> dict[tuple[int, ...], Scalar]:
        """Normal form of a sum of words in the ring's basis (generic mode)."""
        if self.base != "field":
            raise SpecError("reduce() works on generic presentations; use the engine spec otherwise")
        return _generic_normal_form(self, terms)


def _generic_descent(pres: UEAPresentation, word: tuple[int, ...]) -> int:
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        if a > b or (a == b and a in pres.square_rules):
            return p
    return -1


def _generic_normal_form(pres, terms):
    ctx = pres.ring.epsilon.ctx
    result: dict[tuple[int, ...], Scalar] = {}
    work = [(word, coeff) for word, coeff in terms.items()]
    while work:
        word, coeff = work.pop()
        if coeff.is_zero():
            continue
        p = _generic_descent(pres, word)
        if p < 0:
            acc = result.get(word)
            total = coeff if acc is None else acc + coeff
            if total.is_zero():
                result.pop(word, None)
            else:
                result[word] = total
            continue
        head, tail = word[:p], word[p + 2:]
        a, b = word[p], word[p + 1]
        if a == b:
            for u, c in pres.square_rules[a].items():
                work.append((head + (u,) + tail, coeff * c))
        else:
            factor, bracket = pres.swap_rules[(a, b)]
            work.append((head + (b, a) + tail, coeff * factor))
            for u, c in bracket.items():
                work.append((head + (u,) + tail, coeff * c))
    return result


def _spec_from_ring(ring: ColorLieRing, epsilon=None) -> AlgebraSpec:
    """Deformation data read off a group-labelled ring.

    Commutation scalars are the pairings of generator degrees and the
    correction map is the bracket on identity-letter basis elements; no
    compatibility conditions are checked here.
    """
    if ring.mode != "from_spec" or ring.spec is None:
        raise SpecError("this construction needs a ring with a group-labelled basis")
    eps = ring.epsilon if epsilon is None else epsilon
    base = ring.spec
    n = base.n
    identity = base.group.identity()
    gen_degrees = [ADegree.generator_degree(n, i, base.group) for i in range(n)]
    q: dict[tuple[int, int], Scalar] = {}
    for i in range(n):
        for j in range(i + 1, n):
            value = eps.eval(gen_degrees[i], gen_degrees[j])
            if not value.is_unit():
                raise NonUnitEpsilon(
                    f"pairing of generators {i + 1} and {j + 1} is {value}, not a unit"
                )
            q[(i, j)] = value
    kappa: dict[tuple[int, int], tuple] = {}
    for i in range(n):
        for j in range(i + 1, n):
            combo = ring.bracket(ring.index_of((i, identity)), ring.index_of((j, identity)))
            terms = tuple(
                (ring.labels[u][0], ring.labels[u][1], c) for u, c in sorted(combo.items())
            )
            if terms:
                kappa[(i, j)] = terms
    return AlgebraSpec(base.ctx, base.group, base.chars, q, kappa, name=base.name)


def build_uea(ring: ColorLieRing, epsilon=None) -> UEAPresentation:
    """Presentation of the enveloping algebra, one rule per basis pair.

    Raises AxiomsFailed when the ring does not satisfy the bracket axioms.
    Negative generators of generic rings get the self-rule v*v -> [v,v]/2.
    """
    report = check_color_axioms(ring)
    if not report.passed:
        raise AxiomsFailed(
            "the enveloping algebra needs a ring satisfying the bracket axioms; "
            f"first violation: {report.certificates[0] if report.certificates else 'unknown'}"
        )
    eps = ring.epsilon if epsilon is None else epsilon
    size = ring.size
    pair_count = size * (size - 1) // 2
    if ring.mode == "from_spec":
        return UEAPresentation(ring, "group-algebra", pair_count, _spec_from_ring(ring, eps), {}, {})
    ctx = eps.ctx
    half = Scalar.rational(ctx, Fraction(1, 2))
    swap_rules: dict[tuple[int, int], tuple[Scalar, Combo]] = {}
    for s in range(size):
        for t in range(s):
            factor = eps.eval(ring.degrees[s], ring.degrees[t])
            swap_rules[(s, t)] = (factor, dict(ring.bracket(s, t)))
    square_rules: dict[int, Combo] = {}
    for s in split_parts(ring).negative:
        square_rules[s] = {u: half * c for u, c in ring.bracket(s, s).items()}
    return UEAPresentation(ring, "field", pair_count, None, swap_rules, square_rules)


# ---------------------------------------------------------------------------
# the comparison map


def j_generator_image(spec: AlgebraSpec, ring: ColorLieRing, s: int, t: int) -> NCElement:
    """Image in the deformation of the pair relation for basis elements s, t.

    The comparison map sends the basis element v_i (x) g to the product
    v_i * g, so a tensor v_i g (x) v_j h lands on chi_j(g) v_i v_j * gh.
    The returned element is not reduced.
    """
    i, g = ring.labels[s]
    j, h = ring.labels[t]
    factor = ring.epsilon.eval(ring.degrees[s], ring.degrees[t])
    terms: dict[tuple[tuple[int, ...], object], Scalar] = {}

    def stack(word, letter, coeff):
        key = (word, letter)
        acc = terms.get(key)
        total = coeff if acc is None else acc + coeff
        if total.is_zero():
            terms.pop(key, None)
        else:
            terms[key] = total

    stack((i, j), g * h, spec.char_value(j, g))
    stack((j, i), h * g, -(factor * spec.char_value(i, h)))
    for u, c in ring.bracket(s, t).items():
        r, w = ring.labels[u]
        stack((r,), w, -c)
    return NCElement(spec, terms)


def iso_check(spec: AlgebraSpec, ring: ColorLieRing):
    """Reduce the comparison map's defining data in both directions.

    Forward, every pair relation of the ring is pushed into the
    deformation and reduced there; backward, every defining relation of
    the deformation is rewritten in the enveloping algebra's own calculus.
    Returns (all residues vanish, certificates for the ones that do not).
    """
    certificates = []
    engine = _spec_from_ring(ring)
    for s in range(ring.size):
        for t in range(ring.size):
            residue = normal_form(j_generator_image(spec, ring, s, t))
            if not residue.is_zero():
                certificates.append(
                    {
                        "direction": "ring to deformation",
                        "left": ring.label_str(s),
                        "right": ring.label_str(t),
                        "residue": str(residue),
                    }
                )
    for i in range(spec.n):
        for j in range(i + 1, spec.n):
            relation = defining_relation(spec, j, i)
            residue = normal_form(NCElement(engine, dict(relation.terms)))
            if not residue.is_zero():
                certificates.append(
                    {
                        "direction": "deformation to enveloping algebra",
                        "i": i + 1,
                        "j": j + 1,
                        "residue": str(residue),
                    }
                )
    return not certificates, certificates


# ---------------------------------------------------------------------------
# graded dimension counts


def default_instantiation(ctx: ScalarContext, target: ScalarContext) -> dict[str, Scalar]:
    """Concrete values for free parameters: roots of unity for the
    commutation parameters q and p, 1 for every other coefficient."""
    values = {}
    for name in ctx.params:
        if name in ("q", "p"):
            values[name] = Scalar.zeta(target, ctx.conductor, 1)
        else:
            values[name] = Scalar.one(target)
    return values


def instantiate_spec(spec: AlgebraSpec, values: dict[str, Scalar] | None = None) -> AlgebraSpec:
    """Copy of the spec with every parameter replaced by a concrete scalar.

    Entries of ``values`` override the defaults.  Raises SymbolicParameter
    when an override itself still contains a free parameter.
    """
    if not spec.ctx.params:
        return spec
    target = ScalarContext(spec.ctx.conductor)
    table = default_instantiation(spec.ctx, target)
    for name, value in (values or {}).items():
        if name not in spec.ctx.params:
            raise SpecError(f"unknown parameter {name!r}")
        if not value.is_constant():
            raise SymbolicParameter(
                f"instantiation for {name!r} is {value}, which still has free parameters"
            )
        table[name] = value.substitute({}, target)
    q = {}
    for i in range(spec.n):
        for j in range(i + 1, spec.n):
            q[(i, j)] = spec.q_scalar(i, j).substitute(table, target)
    kappa = {}
    for i, j in spec.kappa_support():
        terms = tuple(
            (r, g, c.substitute(table, target)) for r, g, c in spec.kappa_pairs(i, j)
        )
        kappa[(i, j)] = terms
    return AlgebraSpec(target, spec.group, spec.chars, q, kappa, name=spec.name)


def _rank(rows) -> int:
    """Rank of sparse rows over the cyclotomics, forward elimination only."""
    pivots = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                inv = row[col].inverse()
                pivots[col] = {c: v * inv for c, v in row.items()}
                rank += 1
                break
            factor = row.pop(col)
            for c, pv in pivot.items():
                if c == col:
                    continue
                acc = row.get(c)
                value = -(factor * pv) if acc is None else acc - factor * pv
                if value.is_zero():
                    row.pop(c, None)
                else:
                    row[c] = value
    return rank


def dimension_oracle(spec: AlgebraSpec, d: int, instantiate: dict[str, Scalar] | None = None):
    """Count monomials two ways in filtration degree <= d.

    pbw_count is the closed-form count of sorted monomials times group
    letters.  quotient_dim spans the full degree bound with free words,
    imposes every product (word, letter) * relation * (word, letter) that
    stays inside the bound, and returns the corank from exact elimination.
    """
    if d < 0:
        raise SpecError("the degree bound must be nonnegative")
    inst = instantiate_spec(spec, instantiate)
    n = inst.n
    columns = {}
    for word in all_words(n, d):
        for g in inst.group:
            columns[(word, g)] = len(columns)
    relations = [
        defining_relation(inst, j, i) for i in range(n) for j in range(i + 1, n)
    ]
    rows = []
    flank = d - 2
    for relation in relations:
        for lu in range(flank + 1):
            for u in _words_of_length(n, lu):
                for lw in range(flank - lu + 1):
                    for w in _words_of_length(n, lw):
                        for g1 in inst.group:
                            left = NCElement.monomial(inst, u, g1)
                            middle = left * relation
                            for g2 in inst.group:
                                product = middle * NCElement.monomial(inst, w, g2)
                                row = {
                                    columns[key]: coeff.constant_value()
                                    for key, coeff in product.terms.items()
                                }
                                if row:
                                    rows.append(row)
    return pbw_monomial_count(inst, d), len(columns) - _rank(rows)


def _words_of_length(n: int, length: int):
    return itertools.product(range(n), repeat=length)


# ---------------------------------------------------------------------------
# the reverse construction


def converse_construct(ring: ColorLieRing, epsilon=None) -> AlgebraSpec:
    """Deformation spec recovered from a purely positive ring.

    Commutation scalars come from the degree pairing and correction terms
    from identity-letter brackets.  The compatibility conditions that make
    the recovered spec well behaved (action invariance, the character
    identity on correction terms, and the cyclic sum) are consequences of
    the bracket axioms, so they are asserted after the rebuild.
    """
    parts = split_parts(ring)
    if parts.negative:
        labels = ", ".join(ring.label_str(s) for s in parts.negative)
        raise NotPurelyPositive(f"basis elements with self-pairing -1: {labels}")
    rebuilt = _spec_from_ring(ring, epsilon)
    invariant, _ = check_invariance(rebuilt)
    vanishing, _ = check_vanishing(rebuilt)
    cyclic, _ = check_jacobi_sum(rebuilt)
    if not (invariant and vanishing and cyclic):
        raise AssertionError(
            "the rebuilt spec must inherit the compatibility conditions from "
            f"the bracket axioms on {ring!r}"
        )
    return rebuilt


def pbw_for_uea(ring: ColorLieRing, epsilon=None) -> bool:
    """PBW verdict for the enveloping algebra of a purely positive ring."""
    report = check_color_axioms(ring)
    if not report.passed:
        raise AxiomsFailed(
            "the enveloping algebra needs a ring satisfying the bracket axioms; "
            f"first violation: {report.certificates[0] if report.certificates else 'unknown'}"
        )
    return check_pbw(converse_construct(ring, epsilon)).verdict


__all__ = [
    "UEAPresentation",
    "build_uea",
    "j_generator_image",
    "iso_check",
    "default_instantiation",
    "instantiate_spec",
    "dimension_oracle",
    "converse_construct",
    "pbw_for_uea",
]
