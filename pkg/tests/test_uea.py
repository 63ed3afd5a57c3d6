"""Enveloping-algebra presentations, the comparison map, and dimension counts."""

import pytest

from qdrinfeld.colorlie import ColorLieRing, build_color_lie_ring, generic_color_lie_ring
from qdrinfeld.errors import (
    AxiomsFailed,
    NotPurelyPositive,
    SpecError,
    SymbolicParameter,
)
from qdrinfeld.pbw import check_pbw
from qdrinfeld.scalar import Scalar, parse_scalar
from qdrinfeld.specfile import format_spec, load_fixture, parse_spec_text
from qdrinfeld.uea import (
    build_uea,
    converse_construct,
    dimension_oracle,
    instantiate_spec,
    iso_check,
    j_generator_image,
    pbw_for_uea,
)
from qdrinfeld.algebra import normal_form


def test_gl11_presentation_reduces_words():
    ring = generic_color_lie_ring(load_fixture("gl11"))
    pres = build_uea(ring)
    assert pres.base == "field"
    one = Scalar.one(ring.epsilon.ctx)
    m = ring.index_of("E21")
    # E21 is odd so E21^2 rewrites to [E21, E21]/2 = 0, but E21 itself
    # survives: the square is the only thing that dies.
    assert pres.reduce({(m, m): one}) == {}
    assert pres.reduce({(m,): one}) == {(m,): one}
    e11, e22, e12 = ring.index_of("E11"), ring.index_of("E22"), ring.index_of("E12")
    assert pres.reduce({(m, e12): one}) == {
        (e12, m): -one,
        (e11,): one,
        (e22,): one,
    }


def test_presentation_sorts_a_commuting_basis():
    text = """\
[field]
conductor = 2

[generic-lie]
free_rank = 0
orders = [2]
basis = x, y
degrees = [[0], [0]]
"""
    ring = generic_color_lie_ring(parse_spec_text(text))
    pres = build_uea(ring)
    one = Scalar.one(ring.epsilon.ctx)
    assert pres.reduce({(1, 0): one}) == {(0, 1): one}
    assert pres.square_rules == {}


def test_group_labelled_rings_use_the_skew_engine():
    spec = load_fixture("ex2")
    pres = build_uea(build_color_lie_ring(spec))
    assert pres.base == "group-algebra"
    assert pres.engine_spec is not None
    size = spec.n * len(spec.group)
    assert pres.pair_count == size * (size - 1) // 2
    with pytest.raises(SpecError):
        pres.reduce({(0,): Scalar.one(spec.ctx)})


def test_iso_check_passes_on_fixture_rings():
    for name in ("ex1", "ex2", "ex3", "ex4"):
        spec = load_fixture(name)
        ok, certificates = iso_check(spec, build_color_lie_ring(spec))
        assert ok and not certificates, name


def test_iso_check_residues_are_stable_under_reduction():
    spec = load_fixture("ex3")
    ring = build_color_lie_ring(spec)
    image = j_generator_image(spec, ring, 0, 1)
    reduced = normal_form(image)
    assert normal_form(reduced) == reduced


def perturbed_ring(spec):
    """Scale one identity-letter bracket by 2, leaving the rest alone."""
    ring = build_color_lie_ring(spec)
    table = {key: dict(combo) for key, combo in ring.table.items()}
    e = spec.group.identity()
    s, t = ring.index_of((0, e)), ring.index_of((1, e))
    two = Scalar.one(spec.ctx) + Scalar.one(spec.ctx)
    table[(s, t)] = {u: c * two for u, c in table[(s, t)].items()}
    table[(t, s)] = {u: c * two for u, c in table[(t, s)].items()}
    return ColorLieRing("from_spec", ring.labels, ring.degrees, table, ring.epsilon, spec=spec)


def test_iso_check_flags_a_perturbed_ring():
    spec = load_fixture("ex2")
    ok, certificates = iso_check(spec, perturbed_ring(spec))
    assert not ok
    directions = {cert["direction"] for cert in certificates}
    assert "ring to deformation" in directions
    assert "deformation to enveloping algebra" in directions
    assert all(cert["residue"] != "0" for cert in certificates)


def test_perturbed_ring_fails_the_axioms_gate():
    spec = load_fixture("ex2")
    bent = perturbed_ring(spec)
    with pytest.raises(AxiomsFailed):
        build_uea(bent)
    with pytest.raises(AxiomsFailed):
        pbw_for_uea(bent)


def test_dimension_counts_match_on_fixtures():
    for name, d, expected in (("ex2", 3, 40), ("ex3", 3, 60), ("ex1", 2, 90)):
        spec = load_fixture(name)
        pbw_count, quotient_dim = dimension_oracle(spec, d)
        assert (pbw_count, quotient_dim) == (expected, expected), name


def test_dimension_collapse_when_the_verdict_fails():
    text = format_spec(load_fixture("ex2")).replace(
        "1 2 -> 3 (1) lam", "1 2 -> 3 (1) lam\n1 3 -> 3 (1) lam"
    )
    broken = parse_spec_text(text, name="broken")
    assert not check_pbw(broken).verdict
    assert dimension_oracle(broken, 3) == (40, 32)


def test_instantiation_overrides():
    spec = load_fixture("ex2")
    five = parse_scalar("5", spec.ctx)
    assert dimension_oracle(spec, 3, {"lam": five}) == (40, 40)
    inst = instantiate_spec(spec, {"lam": five})
    assert not inst.ctx.params
    with pytest.raises(SpecError):
        instantiate_spec(spec, {"mu": five})
    with pytest.raises(SymbolicParameter):
        instantiate_spec(spec, {"lam": parse_scalar("q*lam", spec.ctx)})


def test_converse_recovers_the_fixture_specs():
    for name in ("ex1", "ex2", "ex3", "ex4", "zero-kappa"):
        spec = load_fixture(name)
        rebuilt = converse_construct(build_color_lie_ring(spec))
        assert format_spec(rebuilt) == format_spec(spec), name


def test_converse_requires_a_positive_basis():
    ring = generic_color_lie_ring(load_fixture("gl11"))
    with pytest.raises(NotPurelyPositive) as info:
        converse_construct(ring)
    assert "E12" in str(info.value) and "E21" in str(info.value)


def test_pbw_for_uea_on_fixture_rings():
    for name in ("ex1", "ex2", "ex3", "ex4"):
        spec = load_fixture(name)
        assert pbw_for_uea(build_color_lie_ring(spec)) is True, name
