"""Complex scalar arithmetic, colour normalisation and parameter sampling.

Every fractional power taken anywhere in the package is routed through
:func:`cpow`, so a single principal-branch convention governs all modules.
The deformation parameters live on ``ParamPoint`` and the colour parameters
on ``Colour``; both are immutable value objects.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

#: default lower bound on |q**2 - 1|; the defining anticommutator divides by it
DEFAULT_GUARD = 0.1

#: coefficients with modulus at or below this are dropped from element maps
PRUNE_TOL = 1e-14


class SingularParameterError(ValueError):
    """A deformation parameter sits too close to the q**2 == 1 singularity."""


def cpow(base: complex, exponent: complex) -> complex:
    """Principal-branch complex power exp(exponent * Log(base)).

    Log is the principal logarithm (imaginary part in (-pi, pi]).  A zero
    base is rejected: the colour and deformation parameters are drawn from
    the punctured plane, so a vanishing base always signals a usage error.
    """
    b = complex(base)
    if b == 0:
        raise ValueError("cpow: base must be nonzero")
    return cmath.exp(complex(exponent) * cmath.log(b))


def effective_q_squared(q: complex, colour: complex = 1.0) -> complex:
    """The square of the deformation parameter of the colour-shifted copy.

    Exponents are accumulated at the root base, i.e. the copy with colour
    ``c`` has squared parameter q**(2c) under one global branch choice.
    """
    return cpow(q, 2.0 * complex(colour))


@lru_cache(maxsize=4096)
def _colour_norm_cached(q: complex, nu: complex) -> complex:
    denom = effective_q_squared(q) - 1.0
    if abs(denom) < DEFAULT_GUARD:
        raise SingularParameterError(
            f"colour_norm: |q**2 - 1| = {abs(denom):.3g} below guard {DEFAULT_GUARD}"
        )
    return cpow((effective_q_squared(q, nu) - 1.0) / denom, 0.5)


def colour_norm(q: complex, nu: "Colour | complex") -> complex:
    """Normalisation ((q**(2 nu) - 1) / (q**2 - 1))**(1/2), principal branch.

    This is the factor by which the odd generators rescale under the colour
    map with parameter ``nu``.  Raises :class:`SingularParameterError` when
    q**2 is too close to 1 for the quotient to be well conditioned.
    """
    return _colour_norm_cached(complex(q), as_colour(nu))


@dataclass(frozen=True)
class ParamPoint:
    """A point (q, s) in deformation-parameter space.

    Both parameters are nonzero complex numbers and q must keep its distance
    from the q**2 == 1 singularity (the defining relations divide by
    q**2 - 1).  The guard is carried along so colour-shifted copies can be
    validated against the same threshold.
    """

    q: complex
    s: complex
    guard: float = field(default=DEFAULT_GUARD, compare=False, repr=False)

    def __post_init__(self):
        q = complex(self.q)
        s = complex(self.s)
        if q == 0 or s == 0:
            raise ValueError("ParamPoint: q and s must be nonzero")
        if abs(q * q - 1.0) < self.guard:
            raise SingularParameterError(
                f"ParamPoint: |q**2 - 1| = {abs(q * q - 1.0):.3g} below guard {self.guard}"
            )
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "s", s)


@dataclass(frozen=True)
class Colour:
    """A colour parameter: a nonzero complex number."""

    value: complex

    def __post_init__(self):
        v = complex(self.value)
        if v == 0:
            raise ValueError("Colour: value must be nonzero")
        object.__setattr__(self, "value", v)


def as_colour(nu: Colour | complex) -> complex:
    """Coerce a colour argument to a validated nonzero complex number."""
    if isinstance(nu, Colour):
        return nu.value
    v = complex(nu)
    if v == 0:
        raise ValueError("colour value must be nonzero")
    return v


def _draw_unit_annulus(rng: np.random.Generator, lo: float = 0.5, hi: float = 2.0) -> complex:
    r = rng.uniform(lo, hi)
    phi = rng.uniform(-np.pi, np.pi)
    return complex(r * np.cos(phi), r * np.sin(phi))


def draw_colours(
    rng: np.random.Generator,
    q: complex,
    count: int,
    guard: float = DEFAULT_GUARD,
) -> tuple[Colour, ...]:
    """Draw admissible colours: the shifted copy q**(2c) must avoid 1.

    Operations inside the copy with colour ``c`` divide by q**(2c) - 1, so
    a colour is redrawn until that quotient is well conditioned.
    """
    out = []
    while len(out) < count:
        c = _draw_unit_annulus(rng)
        if abs(effective_q_squared(q, c) - 1.0) >= guard:
            out.append(Colour(c))
    return tuple(out)


def sample_params(
    seed: int,
    count: int,
    guard: float = DEFAULT_GUARD,
    colours_per_draw: int = 3,
) -> list[tuple[ParamPoint, tuple[Colour, ...]]]:
    """Deterministic admissible draws of (q, s) points and colour tuples.

    Moduli of q, s and of the colours are uniform in [0.5, 2] with uniform
    angles.  Any q violating |q**2 - 1| >= guard is redrawn, as is any
    colour whose shifted copy violates the same bound.  Equal seeds yield
    identical sequences.
    """
    if count < 1:
        raise ValueError("sample_params: count must be >= 1")
    rng = np.random.default_rng(seed)
    draws = []
    for _ in range(count):
        while True:
            q = _draw_unit_annulus(rng)
            if abs(q * q - 1.0) >= guard:
                break
        s = _draw_unit_annulus(rng)
        point = ParamPoint(q, s, guard)
        draws.append((point, draw_colours(rng, q, colours_per_draw, guard)))
    return draws
