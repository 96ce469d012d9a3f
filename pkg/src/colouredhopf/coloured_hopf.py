"""Coloured comultiplication, counit and antipode, with axiom verifiers.

The coloured maps conjugate the standard structure maps of the algebra by
colour-group elements: the comultiplication out of the copy with colour nu
lands in the tensor square of the copies with colours lambda and mu, and the
antipode lands in the copy with colour mu.  On generators,

    D(H)    = H ox 1 + 1 ox H
    D(Z)    = (lam/nu) Z ox 1 + (mu/nu) 1 ox Z
    D(psi+-) = (a_lam/a_nu) psi+- ox s^(-+ mu Z/2) q^(mu Z)
             + (a_mu/a_nu) s^(+- lam Z/2) ox psi+-
    eps(X)  = 0 on all four generators
    S(H)    = -H,  S(Z) = -(mu/nu) Z,
    S(psi+-) = -(a_mu/a_nu) q^(-mu Z) psi+-

with a_c the colour normalisation at the root.  The comultiplication
extends as an algebra map into the graded tensor square, the counit
multiplicatively, and the antipode as a graded anti-homomorphism
S(xy) = (-1)**(deg x deg y) S(y) S(x).  Exponential factors are group-like:
their exponents rescale by (slot colour)/nu under D, and by -mu/nu under S.

The verifiers compute both routes of each generalized axiom with the same
engine primitives and report the normalised residual; they are the
arbiters for every convention choice made above.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .coefficients import ParamPoint, as_colour, colour_norm
from .colour_group import sigma_pair
from .pbw_algebra import (
    UNIT_MONOMIAL,
    AlgebraElement,
    Home,
    PBWMonomial,
    TensorElement,
    generators,
    graded_twist,
    multiply,
    residual_between,
    tensor_concat,
    tensor_multiply,
    tensor_unit,
    unit,
)
from .reporting import ResidualReport


@dataclass(frozen=True)
class ColouredMapContext:
    """Parameter point plus the colour labels (lam, mu) out / nu in."""

    p: ParamPoint
    lam: complex
    mu: complex
    nu: complex

    def __post_init__(self):
        object.__setattr__(self, "lam", as_colour(self.lam))
        object.__setattr__(self, "mu", as_colour(self.mu))
        object.__setattr__(self, "nu", as_colour(self.nu))

    @property
    def out_homes(self) -> tuple[Home, Home]:
        return (Home(self.p, self.lam), Home(self.p, self.mu))

    @property
    def in_home(self) -> Home:
        return Home(self.p, self.nu)


def _check_input_home(ctx: ColouredMapContext, x: AlgebraElement, what: str):
    home = x.home
    if home.point.q != ctx.p.q or home.point.s != ctx.p.s:
        raise ValueError(f"{what}: element belongs to a different parameter point")
    if abs(home.colour - ctx.nu) > 1e-9 * max(1.0, abs(ctx.nu)):
        raise ValueError(
            f"{what}: element lives at colour {home.colour}, context expects {ctx.nu}"
        )


@lru_cache(maxsize=2048)
def _coproduct_factors(ctx: ColouredMapContext):
    """Tensor-square images of the four generators for this context."""
    lam, mu, nu = ctx.lam, ctx.mu, ctx.nu
    q = ctx.p.q
    homes = ctx.out_homes
    rl = lam / nu
    rm = mu / nu
    a_l = colour_norm(q, lam) / colour_norm(q, nu)
    a_m = colour_norm(q, mu) / colour_norm(q, nu)

    z_img = TensorElement(homes, {
        (PBWMonomial(1, 0, 0j, 0j, 0, 0), UNIT_MONOMIAL): rl,
        (UNIT_MONOMIAL, PBWMonomial(1, 0, 0j, 0j, 0, 0)): rm,
    })
    h_img = TensorElement(homes, {
        (PBWMonomial(0, 1, 0j, 0j, 0, 0), UNIT_MONOMIAL): 1.0 + 0j,
        (UNIT_MONOMIAL, PBWMonomial(0, 1, 0j, 0j, 0, 0)): 1.0 + 0j,
    })
    plus_img = TensorElement(homes, {
        (PBWMonomial(0, 0, 0j, 0j, 1, 0), PBWMonomial(0, 0, mu, -mu / 2.0, 0, 0)): a_l,
        (PBWMonomial(0, 0, 0j, lam / 2.0, 0, 0), PBWMonomial(0, 0, 0j, 0j, 1, 0)): a_m,
    })
    minus_img = TensorElement(homes, {
        (PBWMonomial(0, 0, 0j, 0j, 0, 1), PBWMonomial(0, 0, mu, mu / 2.0, 0, 0)): a_l,
        (PBWMonomial(0, 0, 0j, -lam / 2.0, 0, 0), PBWMonomial(0, 0, 0j, 0j, 0, 1)): a_m,
    })
    return z_img, h_img, plus_img, minus_img, rl, rm


def coproduct(ctx: ColouredMapContext, x: AlgebraElement) -> TensorElement:
    """Coloured comultiplication, extended multiplicatively over PBW factors."""
    _check_input_home(ctx, x, "coproduct")
    z_img, h_img, plus_img, minus_img, rl, rm = _coproduct_factors(ctx)
    homes = z_img.homes
    acc: dict[tuple[PBWMonomial, ...], complex] = {}
    for m, coeff in x.terms.items():
        factors = []
        factors.extend([z_img] * m.z_deg)
        factors.extend([h_img] * m.h_deg)
        if m.q_exp != 0 or m.s_exp != 0:
            factors.append(TensorElement(homes, {(
                PBWMonomial(0, 0, m.q_exp * rl, m.s_exp * rl, 0, 0),
                PBWMonomial(0, 0, m.q_exp * rm, m.s_exp * rm, 0, 0),
            ): 1.0 + 0j}))
        if m.plus:
            factors.append(plus_img)
        if m.minus:
            factors.append(minus_img)
        if not factors:
            key = (UNIT_MONOMIAL, UNIT_MONOMIAL)
            acc[key] = acc.get(key, 0j) + coeff
            continue
        term = factors[0]
        for f in factors[1:]:
            term = tensor_multiply(term, f)
        for key, c in term.terms.items():
            acc[key] = acc.get(key, 0j) + coeff * c
    return TensorElement(homes, acc)


def counit(ctx: ColouredMapContext, x: AlgebraElement) -> complex:
    """Coloured counit: kills the generators, sends exponentials to 1."""
    _check_input_home(ctx, x, "counit")
    total = 0j
    for m, coeff in x.terms.items():
        if m.z_deg == 0 and m.h_deg == 0 and not m.plus and not m.minus:
            total += coeff
    return total


def antipode(ctx: ColouredMapContext, x: AlgebraElement) -> AlgebraElement:
    """Coloured antipode, extended as a graded anti-homomorphism."""
    _check_input_home(ctx, x, "antipode")
    mu, nu = ctx.mu, ctx.nu
    q = ctx.p.q
    out_home = Home(ctx.p, mu)
    ratio = -mu / nu
    a_ratio = colour_norm(q, mu) / colour_norm(q, nu)
    psi_scale = -a_ratio

    acc = AlgebraElement(out_home)
    for m, coeff in x.terms.items():
        # S(m) = (-1)^(eps delta) S(psi-)^d S(psi+)^e S(exp) S(H^b) S(Z^a)
        sign = -1.0 if (m.plus and m.minus) else 1.0
        even_img = AlgebraElement(out_home, {
            PBWMonomial(m.z_deg, m.h_deg, -m.q_exp * mu / nu, -m.s_exp * mu / nu, 0, 0):
            sign * coeff * ratio ** m.z_deg * (-1.0) ** m.h_deg
        })
        term = even_img
        if m.plus:
            s_plus = AlgebraElement(out_home, {
                PBWMonomial(0, 0, -mu, 0j, 1, 0): psi_scale})
            term = multiply(s_plus, term)
        if m.minus:
            s_minus = AlgebraElement(out_home, {
                PBWMonomial(0, 0, -mu, 0j, 0, 1): psi_scale})
            term = multiply(s_minus, term)
        acc = acc + term
    return acc


# ---------------------------------------------------------------------------
# standard (one-colour) structure maps, kept as an independent reduction oracle
# ---------------------------------------------------------------------------

def standard_coproduct(p: ParamPoint, x: AlgebraElement) -> TensorElement:
    """The one-colour comultiplication of the root copy, written directly."""
    homes = (Home(p), Home(p))
    acc = TensorElement(homes)
    z_img = TensorElement(homes, {
        (PBWMonomial(1, 0, 0j, 0j, 0, 0), UNIT_MONOMIAL): 1.0 + 0j,
        (UNIT_MONOMIAL, PBWMonomial(1, 0, 0j, 0j, 0, 0)): 1.0 + 0j,
    })
    h_img = TensorElement(homes, {
        (PBWMonomial(0, 1, 0j, 0j, 0, 0), UNIT_MONOMIAL): 1.0 + 0j,
        (UNIT_MONOMIAL, PBWMonomial(0, 1, 0j, 0j, 0, 0)): 1.0 + 0j,
    })
    plus_img = TensorElement(homes, {
        (PBWMonomial(0, 0, 0j, 0j, 1, 0), PBWMonomial(0, 0, 1.0 + 0j, -0.5 + 0j, 0, 0)): 1.0 + 0j,
        (PBWMonomial(0, 0, 0j, 0.5 + 0j, 0, 0), PBWMonomial(0, 0, 0j, 0j, 1, 0)): 1.0 + 0j,
    })
    minus_img = TensorElement(homes, {
        (PBWMonomial(0, 0, 0j, 0j, 0, 1), PBWMonomial(0, 0, 1.0 + 0j, 0.5 + 0j, 0, 0)): 1.0 + 0j,
        (PBWMonomial(0, 0, 0j, -0.5 + 0j, 0, 0), PBWMonomial(0, 0, 0j, 0j, 0, 1)): 1.0 + 0j,
    })
    for m, coeff in x.terms.items():
        term = tensor_unit(homes).scaled(coeff)
        for _ in range(m.z_deg):
            term = tensor_multiply(term, z_img)
        for _ in range(m.h_deg):
            term = tensor_multiply(term, h_img)
        if m.q_exp != 0 or m.s_exp != 0:
            term = tensor_multiply(term, TensorElement(homes, {(
                PBWMonomial(0, 0, m.q_exp, m.s_exp, 0, 0),
                PBWMonomial(0, 0, m.q_exp, m.s_exp, 0, 0)): 1.0 + 0j}))
        if m.plus:
            term = tensor_multiply(term, plus_img)
        if m.minus:
            term = tensor_multiply(term, minus_img)
        acc = acc + term
    return acc


def standard_counit(p: ParamPoint, x: AlgebraElement) -> complex:
    total = 0j
    for m, coeff in x.terms.items():
        if m.z_deg == 0 and m.h_deg == 0 and not m.plus and not m.minus:
            total += coeff
    return total


def standard_antipode(p: ParamPoint, x: AlgebraElement) -> AlgebraElement:
    home = Home(p)
    acc = AlgebraElement(home)
    for m, coeff in x.terms.items():
        sign = -1.0 if (m.plus and m.minus) else 1.0
        term = AlgebraElement(home, {
            PBWMonomial(m.z_deg, m.h_deg, -m.q_exp, -m.s_exp, 0, 0):
            sign * coeff * (-1.0) ** (m.z_deg + m.h_deg)})
        if m.plus:
            term = multiply(AlgebraElement(home, {
                PBWMonomial(0, 0, -1.0 + 0j, 0j, 1, 0): -1.0 + 0j}), term)
        if m.minus:
            term = multiply(AlgebraElement(home, {
                PBWMonomial(0, 0, -1.0 + 0j, 0j, 0, 1): -1.0 + 0j}), term)
        acc = acc + term
    return acc


# ---------------------------------------------------------------------------
# slot application helpers
# ---------------------------------------------------------------------------

def _single(home: Home, mono: PBWMonomial) -> AlgebraElement:
    return AlgebraElement(home, {mono: 1.0 + 0j})


def _apply_slot_map(t: TensorElement, slot: int, fn) -> TensorElement:
    """Apply an even linear map to one slot; same tensor order."""
    out_terms: dict[tuple[PBWMonomial, ...], complex] = {}
    out_homes = None
    for key, coeff in t.terms.items():
        image = fn(_single(t.homes[slot], key[slot]))
        if out_homes is None:
            out_homes = tuple(
                image.home if i == slot else h for i, h in enumerate(t.homes))
        for mono, c in image.terms.items():
            new_key = key[:slot] + (mono,) + key[slot + 1:]
            out_terms[new_key] = out_terms.get(new_key, 0j) + coeff * c
    if out_homes is None:
        raise ValueError("_apply_slot_map: cannot infer homes of an empty tensor")
    return TensorElement(out_homes, out_terms)


def _apply_slot_coproduct(t: TensorElement, slot: int, ctx: ColouredMapContext) -> TensorElement:
    """Apply a coloured comultiplication to one slot; order grows by one."""
    if t.order != 2:
        raise ValueError("_apply_slot_coproduct: start from an order-2 tensor")
    out_terms: dict[tuple[PBWMonomial, ...], complex] = {}
    for key, coeff in t.terms.items():
        image = coproduct(ctx, _single(t.homes[slot], key[slot]))
        for pair, c in image.terms.items():
            new_key = key[:slot] + pair + key[slot + 1:]
            out_terms[new_key] = out_terms.get(new_key, 0j) + coeff * c
    homes = t.homes[:slot] + ctx.out_homes + t.homes[slot + 1:]
    return TensorElement(homes, out_terms)


def _contract_counit_slot(t: TensorElement, slot: int, ctx: ColouredMapContext) -> AlgebraElement:
    """Contract one slot of an order-2 tensor with the coloured counit."""
    other = 1 - slot
    acc: dict[PBWMonomial, complex] = {}
    for key, coeff in t.terms.items():
        scal = counit(ctx, _single(t.homes[slot], key[slot]))
        if scal != 0:
            mono = key[other]
            acc[mono] = acc.get(mono, 0j) + coeff * scal
    return AlgebraElement(t.homes[other], acc)


# ---------------------------------------------------------------------------
# probe generation
# ---------------------------------------------------------------------------

_DEGREE2_SHAPES = [
    (z, h, e, d)
    for z in range(3) for h in range(3) for e in range(2) for d in range(2)
    if 0 < z + h + e + d <= 2
]


def random_probe(rng: np.random.Generator, home: Home, n_terms: int = 3) -> AlgebraElement:
    """A random element of degree <= 2, possibly with exponential factors."""
    terms: dict[PBWMonomial, complex] = {}
    for _ in range(n_terms):
        z, h, e, d = _DEGREE2_SHAPES[rng.integers(0, len(_DEGREE2_SHAPES))]
        if rng.random() < 0.5:
            qe = complex(rng.normal(0, 0.5), rng.normal(0, 0.5))
            se = complex(rng.normal(0, 0.5), rng.normal(0, 0.5))
        else:
            qe = se = 0j
        mono = PBWMonomial(z, h, qe, se, e, d)
        coeff = complex(rng.normal(), rng.normal())
        terms[mono] = terms.get(mono, 0j) + coeff
    return AlgebraElement(home, terms)


def default_probes(p: ParamPoint, nu: complex, rng: np.random.Generator | None = None,
                   n_random: int = 20) -> list[AlgebraElement]:
    """Four generators, the unit, and random degree-<=2 elements at colour nu."""
    home = Home(p, as_colour(nu))
    probes = [unit(home)] + list(generators(home).values())
    if rng is None:
        rng = np.random.default_rng(0)
    probes.extend(random_probe(rng, home) for _ in range(n_random))
    return probes


# ---------------------------------------------------------------------------
# verifiers for the generalized axioms
# ---------------------------------------------------------------------------

def verify_colour_transformations(
    p: ParamPoint,
    colours: tuple[complex, complex, complex, complex, complex, complex],
    probes: list[AlgebraElement] | None = None,
) -> ResidualReport:
    """Transformation of the coloured maps under the colour group.

    colours = (lam, mu, alpha, beta, gamma, nu); checks
      (s^lam_alpha ox s^mu_beta) o D^{alpha,beta}_nu = D^{lam,mu}_nu
                                                     = D^{lam,mu}_gamma o s^gamma_nu
      eps_alpha o s^alpha_nu = eps_nu
      s^mu_alpha o S^alpha_nu = S^mu_nu = S^mu_beta o s^beta_nu
    """
    lam, mu, alpha, beta, gamma, nu = (as_colour(c) for c in colours)
    if probes is None:
        probes = default_probes(p, nu)
    report = ResidualReport("colour_transformations", 0.0)
    for x in probes:
        direct = coproduct(ColouredMapContext(p, lam, mu, nu), x)

        inner = coproduct(ColouredMapContext(p, alpha, beta, nu), x)
        lhs = _apply_slot_map(inner, 0, lambda e: sigma_pair(lam, alpha, e))
        lhs = _apply_slot_map(lhs, 1, lambda e: sigma_pair(mu, beta, e))
        report.merge("coproduct_left", residual_between(lhs, direct))

        shifted = sigma_pair(gamma, nu, x)
        rhs = coproduct(ColouredMapContext(p, lam, mu, gamma), shifted)
        report.merge("coproduct_right", residual_between(rhs, direct))

        e_direct = counit(ColouredMapContext(p, lam, mu, nu), x)
        e_via = counit(ColouredMapContext(p, lam, mu, alpha), sigma_pair(alpha, nu, x))
        scale = max(1.0, abs(e_direct), abs(e_via))
        report.merge("counit", abs(e_direct - e_via) / scale)

        s_direct = antipode(ColouredMapContext(p, lam, mu, nu), x)
        s_left = sigma_pair(mu, alpha, antipode(ColouredMapContext(p, lam, alpha, nu), x))
        report.merge("antipode_left", residual_between(s_left, s_direct))
        s_right = antipode(ColouredMapContext(p, lam, mu, beta), sigma_pair(beta, nu, x))
        report.merge("antipode_right", residual_between(s_right, s_direct))
    return report


def verify_coassociativity(
    p: ParamPoint,
    colours: tuple[complex, ...],
    probes: list[AlgebraElement] | None = None,
) -> ResidualReport:
    """Generalized coassociativity.

    colours = (alpha, beta, gamma, lam, mu, lam2, mu2, nu); checks
      (D^{alpha,beta}_lam ox s^gamma_mu) o D^{lam,mu}_nu
        = (s^alpha_lam2 ox D^{beta,gamma}_mu2) o D^{lam2,mu2}_nu
    """
    alpha, beta, gamma, lam, mu, lam2, mu2, nu = (as_colour(c) for c in colours)
    if probes is None:
        probes = default_probes(p, nu)
    report = ResidualReport("coassociativity", 0.0)
    for x in probes:
        left_inner = coproduct(ColouredMapContext(p, lam, mu, nu), x)
        lhs = _apply_slot_coproduct(left_inner, 0, ColouredMapContext(p, alpha, beta, lam))
        lhs = _apply_slot_map(lhs, 2, lambda e: sigma_pair(gamma, mu, e))

        right_inner = coproduct(ColouredMapContext(p, lam2, mu2, nu), x)
        rhs = _apply_slot_coproduct(right_inner, 1, ColouredMapContext(p, beta, gamma, mu2))
        rhs = _apply_slot_map(rhs, 0, lambda e: sigma_pair(alpha, lam2, e))

        report.merge("coassociativity", residual_between(lhs, rhs))
    return report


def verify_counit_axiom(
    p: ParamPoint,
    colours: tuple[complex, ...],
    probes: list[AlgebraElement] | None = None,
) -> ResidualReport:
    """Generalized counit axiom.

    colours = (alpha, lam, mu, lam2, mu2, nu); checks
      (eps_lam ox s^alpha_mu) o D^{lam,mu}_nu
        = (s^alpha_lam2 ox eps_mu2) o D^{lam2,mu2}_nu = s^alpha_nu
    """
    alpha, lam, mu, lam2, mu2, nu = (as_colour(c) for c in colours)
    if probes is None:
        probes = default_probes(p, nu)
    report = ResidualReport("counit_axiom", 0.0)
    for x in probes:
        target = sigma_pair(alpha, nu, x)

        t1 = coproduct(ColouredMapContext(p, lam, mu, nu), x)
        left = _contract_counit_slot(t1, 0, ColouredMapContext(p, lam, mu, lam))
        left = sigma_pair(alpha, mu, left)
        report.merge("left_contraction", residual_between(left, target))

        t2 = coproduct(ColouredMapContext(p, lam2, mu2, nu), x)
        right = _contract_counit_slot(t2, 1, ColouredMapContext(p, lam2, mu2, mu2))
        right = sigma_pair(alpha, lam2, right)
        report.merge("right_contraction", residual_between(right, target))
    return report


def verify_antipode_axiom(
    p: ParamPoint,
    colours: tuple[complex, ...],
    probes: list[AlgebraElement] | None = None,
) -> ResidualReport:
    """Generalized antipode axiom.

    colours = (alpha, lam, mu, lam2, mu2, nu); checks both convolutions
      m o (S^alpha_lam ox s^alpha_mu) o D^{lam,mu}_nu
        = m o (s^alpha_lam2 ox S^alpha_mu2) o D^{lam2,mu2}_nu
        = unit * eps_nu
    """
    alpha, lam, mu, lam2, mu2, nu = (as_colour(c) for c in colours)
    if probes is None:
        probes = default_probes(p, nu)
    report = ResidualReport("antipode_axiom", 0.0)
    out_home = Home(p, alpha)
    for x in probes:
        target = unit(out_home).scaled(counit(ColouredMapContext(p, lam, mu, nu), x))

        t1 = coproduct(ColouredMapContext(p, lam, mu, nu), x)
        conv1 = AlgebraElement(out_home)
        for (m1, m2), coeff in t1.terms.items():
            a = antipode(ColouredMapContext(p, alpha, alpha, lam), _single(t1.homes[0], m1))
            b = sigma_pair(alpha, mu, _single(t1.homes[1], m2))
            conv1 = conv1 + multiply(a, b).scaled(coeff)
        report.merge("left_convolution", residual_between(conv1, target))

        t2 = coproduct(ColouredMapContext(p, lam2, mu2, nu), x)
        conv2 = AlgebraElement(out_home)
        for (m1, m2), coeff in t2.terms.items():
            a = sigma_pair(alpha, lam2, _single(t2.homes[0], m1))
            b = antipode(ColouredMapContext(p, alpha, alpha, mu2), _single(t2.homes[1], m2))
            conv2 = conv2 + multiply(a, b).scaled(coeff)
        report.merge("right_convolution", residual_between(conv2, target))
    return report


def verify_bialgebra(
    p: ParamPoint,
    colours: tuple[complex, complex, complex],
    probe_pairs: list[tuple[AlgebraElement, AlgebraElement]] | None = None,
    twist_sign: str = "product",
) -> ResidualReport:
    """Generalized bialgebra axioms on homogeneous probe pairs.

    Checks D o m = (m ox m) o (id ox tau ox id) o (D ox D) with the graded
    twist tau in the middle, plus D(1) = 1 ox 1, eps o m = eps ox eps and
    eps(1) = 1.  ``twist_sign`` selects the twist's sign exponent and exists
    so the suite can demonstrate that (deg a)(deg a) breaks the axiom.
    """
    lam, mu, nu = (as_colour(c) for c in colours)
    ctx = ColouredMapContext(p, lam, mu, nu)
    if probe_pairs is None:
        rng = np.random.default_rng(1)
        gens = list(generators(Home(p, nu)).values())
        probe_pairs = [(a, b) for a in gens for b in gens]
        probe_pairs += [(random_probe(rng, Home(p, nu)), random_probe(rng, Home(p, nu)))
                        for _ in range(4)]
    report = ResidualReport("bialgebra", 0.0)
    homes = ctx.out_homes

    one = unit(ctx.in_home)
    report.merge("unit_coproduct", residual_between(coproduct(ctx, one), tensor_unit(homes)))
    report.merge("unit_counit", abs(counit(ctx, one) - 1.0))

    for x, y in probe_pairs:
        xy = multiply(x, y)
        lhs = coproduct(ctx, xy)

        dx = coproduct(ctx, x)
        dy = coproduct(ctx, y)
        rhs = TensorElement(homes)
        for (x1, x2), cx in dx.terms.items():
            for (y1, y2), cy in dy.terms.items():
                middle = TensorElement((homes[1], homes[0]), {(x2, y1): 1.0 + 0j})
                twisted = graded_twist(middle, sign_rule=twist_sign)
                for (y1t, x2t), sgn in twisted.terms.items():
                    left = multiply(_single(homes[0], x1), _single(homes[0], y1t))
                    right = multiply(_single(homes[1], x2t), _single(homes[1], y2))
                    rhs = rhs + tensor_concat(left, right).scaled(cx * cy * sgn)
        report.merge("coproduct_of_product", residual_between(lhs, rhs))

        e_lhs = counit(ctx, xy)
        e_rhs = counit(ctx, x) * counit(ctx, y)
        scale = max(1.0, abs(e_lhs), abs(e_rhs))
        report.merge("counit_of_product", abs(e_lhs - e_rhs) / scale)
    return report


def verify_relation_preservation(p: ParamPoint, colours: tuple[complex, complex, complex]) -> ResidualReport:
    """The comultiplication respects the defining anticommutator.

    D(psi+) D(psi-) + D(psi-) D(psi+) must equal the comultiplication of
    (q_nu**(2Z) - 1)/(q_nu**2 - 1); this pins down the group-like rule for
    exponential factors.
    """
    lam, mu, nu = (as_colour(c) for c in colours)
    ctx = ColouredMapContext(p, lam, mu, nu)
    home = ctx.in_home
    gens = generators(home)
    dplus = coproduct(ctx, gens["psi+"])
    dminus = coproduct(ctx, gens["psi-"])
    lhs = tensor_multiply(dplus, dminus) + tensor_multiply(dminus, dplus)

    from .pbw_algebra import relation_element

    rhs = coproduct(ctx, relation_element(home))
    report = ResidualReport("relation_preservation", 0.0)
    report.merge("coproduct_route", residual_between(lhs, rhs))
    return report
