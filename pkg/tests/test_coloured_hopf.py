import numpy as np
import pytest

from colouredhopf.coefficients import ParamPoint, colour_norm, draw_colours, sample_params
from colouredhopf.coloured_hopf import (
    ColouredMapContext,
    antipode,
    coproduct,
    counit,
    default_probes,
    standard_antipode,
    standard_coproduct,
    standard_counit,
    verify_antipode_axiom,
    verify_bialgebra,
    verify_coassociativity,
    verify_colour_transformations,
    verify_counit_axiom,
    verify_relation_preservation,
)
from colouredhopf.pbw_algebra import (
    PBWMonomial,
    UNIT_MONOMIAL,
    AlgebraElement,
    Home,
    TensorElement,
    equal_upto_tol,
    generators,
    h_gen,
    psi_minus,
    psi_plus,
    residual_between,
    unit,
    z_gen,
)

P = ParamPoint(2.0, 1.5)
PC = ParamPoint(0.7 + 0.9j, 1.1 - 0.4j)


def test_coproduct_of_z_scales_by_colour_ratios():
    ctx = ColouredMapContext(P, 2.0, 3.0, 6.0)
    out = coproduct(ctx, z_gen(Home(P, 6.0)))
    homes = ctx.out_homes
    expected = TensorElement(homes, {
        (PBWMonomial(1, 0, 0j, 0j, 0, 0), UNIT_MONOMIAL): 1.0 / 3.0,
        (UNIT_MONOMIAL, PBWMonomial(1, 0, 0j, 0j, 0, 0)): 0.5,
    })
    ok, res = equal_upto_tol(out, expected, 1e-14)
    assert ok, res


def test_coproduct_of_h_is_primitive():
    nu = 1.3 - 0.8j
    ctx = ColouredMapContext(P, nu, nu, nu)
    out = coproduct(ctx, h_gen(Home(P, nu)))
    homes = ctx.out_homes
    expected = TensorElement(homes, {
        (PBWMonomial(0, 1, 0j, 0j, 0, 0), UNIT_MONOMIAL): 1.0 + 0j,
        (UNIT_MONOMIAL, PBWMonomial(0, 1, 0j, 0j, 0, 0)): 1.0 + 0j,
    })
    ok, res = equal_upto_tol(out, expected, 1e-14)
    assert ok, res


def test_coproduct_respects_defining_relation():
    for point, (c1, c2, c3) in sample_params(41, 10):
        report = verify_relation_preservation(point, (c1.value, c2.value, c3.value))
        assert report.max_residual <= 1e-11


def test_counit_values():
    nu = 1.1 + 0.4j
    ctx = ColouredMapContext(P, 2.0, 0.5, nu)
    home = Home(P, nu)
    assert counit(ctx, h_gen(home)) == 0
    assert counit(ctx, z_gen(home)) == 0
    assert counit(ctx, psi_plus(home)) == 0
    assert counit(ctx, unit(home)) == 1
    exp_elem = AlgebraElement(home, {PBWMonomial(0, 0, 0.7 + 0.1j, 0j, 0, 0): 1.0})
    assert counit(ctx, exp_elem) == 1


def test_antipode_generator_values():
    ctx = ColouredMapContext(P, 2.0, 3.0, 6.0)
    home = Home(P, 6.0)
    out = antipode(ctx, z_gen(home))
    ok, res = equal_upto_tol(out, z_gen(Home(P, 3.0)).scaled(-0.5), 1e-14)
    assert ok, res

    ok, res = equal_upto_tol(antipode(ctx, unit(home)), unit(Home(P, 3.0)), 1e-14)
    assert ok, res

    out = antipode(ctx, psi_plus(home))
    scale = -colour_norm(P.q, 3.0) / colour_norm(P.q, 6.0)
    expected = AlgebraElement(Home(P, 3.0), {
        PBWMonomial(0, 0, -3.0 + 0j, 0j, 1, 0): scale})
    ok, res = equal_upto_tol(out, expected, 1e-13)
    assert ok, res


def test_colour_transformation_identity_case():
    nu = 1.2 - 0.3j
    probes = default_probes(PC, nu, rng=np.random.default_rng(0), n_random=3)
    # alpha = lam, beta = mu makes the left transformation the identity
    report = verify_colour_transformations(
        PC, (1.4 + 0.2j, 0.9j, 1.4 + 0.2j, 0.9j, 0.7, nu), probes)
    assert report.details["coproduct_left"] <= 1e-13


def test_colour_transformations_random():
    rng = np.random.default_rng(43)
    for point, (c1, c2, c3) in sample_params(47, 10):
        extra = [c.value for c in draw_colours(rng, point.q, 3)]
        probes = default_probes(point, c3.value, rng=rng, n_random=5)
        report = verify_colour_transformations(
            point, (extra[0], extra[1], c1.value, c2.value, extra[2], c3.value), probes)
        assert report.max_residual <= 1e-11


def test_coassociativity_reduces_to_ordinary():
    probes = default_probes(P, 1.0, rng=np.random.default_rng(1), n_random=5)
    report = verify_coassociativity(P, (1.0,) * 8, probes)
    assert report.max_residual <= 1e-11


def test_coassociativity_random_colours():
    rng = np.random.default_rng(53)
    for point, (c1, c2, c3) in sample_params(59, 10):
        extra = [c.value for c in draw_colours(rng, point.q, 5)]
        home = Home(point, c3.value)
        probes = [z_gen(home), psi_plus(home)]
        report = verify_coassociativity(
            point, (c1.value, c2.value, extra[0], extra[1], extra[2],
                    extra[3], extra[4], c3.value), probes)
        assert report.max_residual <= 1e-11


def test_counit_axiom_examples():
    nu = 0.9 + 0.2j
    colours = (1.3, 0.8 + 0.5j, 1.7, 0.6 - 0.4j, 1.1 + 0.9j, nu)
    home = Home(PC, nu)
    report = verify_counit_axiom(PC, colours, [h_gen(home), unit(home), psi_minus(home)])
    assert report.max_residual <= 1e-11


def test_antipode_axiom_h_cancels():
    nu = 1.4 - 0.6j
    colours = (0.8, 1.2 + 0.3j, 0.9, 1.5 - 0.2j, 0.7 + 0.8j, nu)
    home = Home(PC, nu)
    report = verify_antipode_axiom(PC, colours, [h_gen(home), unit(home), psi_plus(home)])
    assert report.max_residual <= 1e-11


def test_antipode_axiom_random():
    rng = np.random.default_rng(61)
    for point, (c1, c2, c3) in sample_params(67, 10):
        extra = [c.value for c in draw_colours(rng, point.q, 3)]
        probes = default_probes(point, c3.value, rng=rng, n_random=5)
        report = verify_antipode_axiom(
            point, (extra[0], c1.value, c2.value, extra[1], extra[2], c3.value), probes)
        assert report.max_residual <= 1e-11


def test_bialgebra_on_generator_pairs():
    nu = 1.1 + 0.2j
    home = Home(PC, nu)
    gens = generators(home)
    report = verify_bialgebra(
        PC, (0.9 - 0.3j, 1.4 + 0.5j, nu),
        [(gens["psi+"], gens["psi-"]), (gens["H"], gens["Z"]), (gens["psi+"], gens["psi+"])])
    assert report.max_residual <= 1e-11
    # even probes have no sign subtleties at all
    even_only = verify_bialgebra(
        PC, (0.9 - 0.3j, 1.4 + 0.5j, nu), [(gens["H"], gens["Z"])])
    assert even_only.max_residual <= 1e-12


def test_bialgebra_nilpotent_pair_vanishes():
    nu = 1.1 + 0.2j
    home = Home(PC, nu)
    ctx = ColouredMapContext(PC, 0.9 - 0.3j, 1.4 + 0.5j, nu)
    prod = coproduct(ctx, AlgebraElement(home, {}) + psi_plus(home))
    square = verify_bialgebra(PC, (0.9 - 0.3j, 1.4 + 0.5j, nu),
                              [(psi_plus(home), psi_plus(home))])
    assert square.max_residual <= 1e-12
    assert prod.max_abs_coeff() > 0  # sanity: the coproduct itself is not zero


def test_bialgebra_wrong_twist_sign_fails():
    nu = 1.1 + 0.2j
    home = Home(PC, nu)
    report = verify_bialgebra(
        PC, (0.9 - 0.3j, 1.4 + 0.5j, nu),
        [(psi_plus(home), psi_minus(home))], twist_sign="self")
    assert report.max_residual > 1e-3


def test_reduction_to_standard_structure():
    ctx = ColouredMapContext(P, 1.0, 1.0, 1.0)
    probes = default_probes(P, 1.0, rng=np.random.default_rng(3), n_random=10)
    for x in probes:
        assert residual_between(coproduct(ctx, x), standard_coproduct(P, x)) <= 1e-12
        assert residual_between(antipode(ctx, x), standard_antipode(P, x)) <= 1e-12
        assert abs(counit(ctx, x) - standard_counit(P, x)) <= 1e-12


def test_coproduct_rejects_foreign_elements():
    ctx = ColouredMapContext(P, 1.0, 1.0, 2.0)
    with pytest.raises(ValueError):
        coproduct(ctx, h_gen(Home(P, 1.0)))  # wrong colour
    with pytest.raises(ValueError):
        coproduct(ColouredMapContext(PC, 1.0, 1.0, 1.0), h_gen(Home(P)))
