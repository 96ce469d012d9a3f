"""The colour group acting on the parameter-shifted copies of the algebra.

The map with colour ``nu`` fixes H, scales Z by nu, rescales the odd
generators by the colour normalisation, and replaces the copy's deformation
parameter q_c by q_c**nu (s is untouched).  Composition of colours is
complex multiplication, so the group is GL(1, C).

Branch policy: the normalisation of a map applied to the copy with colour c
is the single principal square root ((q**(2 c nu) - 1)/(q**(2c) - 1))**(1/2),
faithful to the intrinsic definition on that copy.  Composites through the
root copy (`sigma_pair`) instead use the ratio of root normalisations, which
composes exactly.  The two conventions can differ by a sign on odd
generators; `check_group_laws` measures both rather than assuming either.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coefficients import (
    Colour,
    ParamPoint,
    SingularParameterError,
    as_colour,
    colour_norm,
    cpow,
    effective_q_squared,
)
from .pbw_algebra import (
    AlgebraElement,
    Home,
    PBWMonomial,
    generators,
    grading_automorphism,
    multiply,
    residual_between,
    unit,
)

_A_RATIO_FLOOR = 1e-9


@dataclass(frozen=True)
class ColourMap:
    """Bookkeeping record for one colour map between two parameter points."""

    nu: complex
    source: ParamPoint
    target: ParamPoint


def colour_map(p: ParamPoint, nu: Colour | complex) -> ColourMap:
    """The map with colour nu out of the copy at ``p`` (q -> q**nu, s fixed)."""
    nu_val = as_colour(nu)
    target = ParamPoint(cpow(p.q, nu_val), p.s, p.guard)
    return ColourMap(nu_val, p, target)


def _local_scale(q: complex, source_colour: complex, factor: complex) -> complex:
    """Odd-generator scale of the colour map with ``factor`` out of the copy
    with colour ``source_colour`` (one principal square root)."""
    denom = effective_q_squared(q, source_colour) - 1.0
    if abs(denom) < _A_RATIO_FLOOR:
        raise SingularParameterError(
            "colour map: source copy too close to the q**2 == 1 singularity"
        )
    num = effective_q_squared(q, source_colour * factor) - 1.0
    return cpow(num / denom, 0.5)


def _map_monomials(x: AlgebraElement, z_scale: complex, odd_scale: complex,
                   exp_scale: complex, new_home: Home) -> AlgebraElement:
    out: dict[PBWMonomial, complex] = {}
    for m, c in x.terms.items():
        coeff = c
        if m.z_deg:
            coeff *= z_scale ** m.z_deg
        n_odd = m.plus + m.minus
        if n_odd:
            coeff *= odd_scale ** n_odd
        key = PBWMonomial(m.z_deg, m.h_deg, m.q_exp * exp_scale,
                          m.s_exp * exp_scale, m.plus, m.minus)
        out[key] = out.get(key, 0j) + coeff
    return AlgebraElement(new_home, out)


def sigma(nu: Colour | complex, x: AlgebraElement) -> AlgebraElement:
    """Apply the colour map with parameter nu to an element of its home copy."""
    nu_val = as_colour(nu)
    home = x.home
    scale = _local_scale(home.point.q, home.colour, nu_val)
    return _map_monomials(x, nu_val, scale, nu_val, home.shifted(nu_val))


def sigma_inverse(nu: Colour | complex, x: AlgebraElement) -> AlgebraElement:
    """The exact inverse of ``sigma(nu, .)`` landing on x's home."""
    nu_val = as_colour(nu)
    home = x.home
    source_colour = home.colour / nu_val
    scale = _local_scale(home.point.q, source_colour, nu_val)
    inv_nu = 1.0 / nu_val
    return _map_monomials(x, inv_nu, 1.0 / scale, inv_nu, home.shifted(inv_nu))


def sigma_pair(lam: Colour | complex, mu: Colour | complex,
               x: AlgebraElement) -> AlgebraElement:
    """The composite map from the copy with colour mu to the one with colour
    lam, routed through the root copy (ratio of root normalisations)."""
    lam_val = as_colour(lam)
    mu_val = as_colour(mu)
    home = x.home
    if abs(home.colour - mu_val) > 1e-9 * max(1.0, abs(mu_val)):
        raise ValueError(
            f"sigma_pair: element lives at colour {home.colour}, expected {mu_val}"
        )
    ratio = lam_val / mu_val
    if lam_val == mu_val:
        odd = 1.0 + 0j
    else:
        odd = colour_norm(home.point.q, lam_val) / colour_norm(home.point.q, mu_val)
    return _map_monomials(x, ratio, odd, ratio, Home(home.point, lam_val))


def _flip_residual(lhs: AlgebraElement, rhs: AlgebraElement) -> tuple[float, float]:
    """Residual of lhs vs rhs, and vs rhs with its odd terms sign-flipped."""
    signed = residual_between(lhs, rhs)
    flipped = residual_between(lhs, grading_automorphism(rhs))
    return signed, min(signed, flipped)


@dataclass
class GroupLawReport:
    """Residuals of the colour-group laws on a probe set.

    ``composition_signed`` can be order one when the two principal square
    roots entering the composed route pick up the opposite sign from the
    direct route; ``composition`` quotients out that global sign on odd
    generators and is the quantity the suite asserts.
    """

    composition_signed: float
    composition: float
    identity: float
    inverse_signed: float
    inverse: float
    inverse_exact: float
    grading: float
    isomorphism: float
    branch_flip_detected: bool

    @property
    def max_asserted(self) -> float:
        return max(self.composition, self.identity, self.inverse,
                   self.inverse_exact, self.grading, self.isomorphism)


def default_probes(p: ParamPoint) -> list[AlgebraElement]:
    home = Home(p)
    probes = [unit(home)] + list(generators(home).values())
    gens = generators(home)
    probes.append(multiply(gens["psi+"], gens["psi-"]))
    probes.append(gens["H"] + 0.5 * gens["psi-"])
    return probes


def check_group_laws(p: ParamPoint, nu: Colour | complex, nu2: Colour | complex,
                     probes: list[AlgebraElement] | None = None) -> GroupLawReport:
    """Measure composition, identity, inverse and grading compatibility.

    ``nu2 o nu`` composes as the complex product; grading compatibility is
    the requirement that the maps commute with the grading automorphism.
    """
    nu_val = as_colour(nu)
    nu2_val = as_colour(nu2)
    if probes is None:
        probes = default_probes(p)

    comp_signed = comp = ident = inv_signed = inv = inv_exact = grad = iso = 0.0
    for x in probes:
        via = sigma(nu2_val, sigma(nu_val, x))
        direct = sigma(nu2_val * nu_val, x)
        a, b = _flip_residual(via, direct)
        comp_signed, comp = max(comp_signed, a), max(comp, b)

        ident = max(ident, residual_between(sigma(1.0, x), x))

        back = sigma(1.0 / nu_val, sigma(nu_val, x))
        a, b = _flip_residual(back, x)
        inv_signed, inv = max(inv_signed, a), max(inv, b)

        inv_exact = max(inv_exact, residual_between(
            sigma_inverse(nu_val, sigma(nu_val, x)), x))

        grad = max(grad, residual_between(
            sigma(nu_val, grading_automorphism(x)),
            grading_automorphism(sigma(nu_val, x))))

    # algebra-isomorphism law on generator pairs
    home = Home(p)
    gens = list(generators(home).values())
    for x in gens:
        for y in gens:
            lhs = sigma(nu_val, multiply(x, y))
            rhs = multiply(sigma(nu_val, x), sigma(nu_val, y))
            iso = max(iso, residual_between(lhs, rhs))

    return GroupLawReport(
        composition_signed=comp_signed,
        composition=comp,
        identity=ident,
        inverse_signed=inv_signed,
        inverse=inv,
        inverse_exact=inv_exact,
        grading=grad,
        isomorphism=iso,
        branch_flip_detected=(comp_signed > 100 * max(comp, 1e-300)) or
                             (inv_signed > 100 * max(inv, 1e-300)),
    )
