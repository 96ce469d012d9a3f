"""Normal-ordered elements of the two-parameter quantum superalgebra of gl(1/1).

The algebra has two even generators H, Z and two odd ones psi+ and psi-,
subject to

    [H, psi+-] = +-2 psi+-,   [Z, .] = 0,
    {psi+, psi-} = (q**(2Z) - 1) / (q**2 - 1),   (psi+-)**2 = 0.

A basis word is Z**a H**b q**(alpha Z) s**(beta Z) (psi+)**eps (psi-)**delta
with eps, delta in {0, 1}.  The exponential factors are first-class monomial
data (complex exponents relative to the root parameters q, s), which keeps
the anticommutator target and all colour-map images inside the basis.

Elements carry a home tag: the root parameter point together with the colour
of the copy they live in.  The copy with colour c has effective squared
deformation parameter q**(2c), with exponents always accumulated at the root
base so that colour composition acts multiplicatively on monomial data.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .coefficients import (
    PRUNE_TOL,
    ParamPoint,
    SingularParameterError,
    effective_q_squared,
)

#: keys whose exponents differ by less than this (abs + rel) are one monomial
_KEY_MERGE_TOL = 1e-8

#: hard floor protecting the 1/(q**(2c) - 1) division inside multiply
_MULTIPLY_FLOOR = 1e-9


class PBWMonomial(NamedTuple):
    """A normal-ordered basis word Z^a H^b q^(aZ) s^(bZ) (psi+)^e (psi-)^d."""

    z_deg: int
    h_deg: int
    q_exp: complex
    s_exp: complex
    plus: int
    minus: int

    @property
    def parity(self) -> int:
        return (self.plus + self.minus) & 1

    @property
    def degree(self) -> int:
        return self.z_deg + self.h_deg + self.plus + self.minus

    def __str__(self):
        parts = []
        if self.z_deg:
            parts.append("Z" if self.z_deg == 1 else f"Z^{self.z_deg}")
        if self.h_deg:
            parts.append("H" if self.h_deg == 1 else f"H^{self.h_deg}")
        if self.q_exp != 0:
            parts.append(f"q^({self.q_exp:g}Z)")
        if self.s_exp != 0:
            parts.append(f"s^({self.s_exp:g}Z)")
        if self.plus:
            parts.append("psi+")
        if self.minus:
            parts.append("psi-")
        return " ".join(parts) if parts else "1"


UNIT_MONOMIAL = PBWMonomial(0, 0, 0j, 0j, 0, 0)
Z_MONOMIAL = PBWMonomial(1, 0, 0j, 0j, 0, 0)
H_MONOMIAL = PBWMonomial(0, 1, 0j, 0j, 0, 0)
PSI_PLUS_MONOMIAL = PBWMonomial(0, 0, 0j, 0j, 1, 0)
PSI_MINUS_MONOMIAL = PBWMonomial(0, 0, 0j, 0j, 0, 1)


@dataclass(frozen=True)
class Home:
    """Which copy of the algebra an element lives in.

    ``point`` is the root parameter point and ``colour`` the accumulated
    colour of the copy, so the copy's nominal deformation parameter is
    q**colour (while s is shared by all copies).
    """

    point: ParamPoint
    colour: complex = 1.0 + 0j

    def effective_q_squared(self) -> complex:
        return effective_q_squared(self.point.q, self.colour)

    def shifted(self, factor: complex) -> "Home":
        return Home(self.point, self.colour * complex(factor))


def homes_close(a: Home, b: Home, rtol: float = 1e-9) -> bool:
    if a is b:
        return True
    if a.point.q != b.point.q or a.point.s != b.point.s:
        return False
    return abs(a.colour - b.colour) <= rtol * max(1.0, abs(a.colour), abs(b.colour))


def _require_same_home(a: Home, b: Home, what: str):
    if not homes_close(a, b):
        raise ValueError(f"{what}: operands live in different copies ({a} vs {b})")


class AlgebraElement:
    """A finite complex-linear combination of PBW monomials.

    Term maps are pruned at ``PRUNE_TOL`` on construction; addition and
    scalar multiplication are componentwise.  Instances are treated as
    immutable values.
    """

    __slots__ = ("home", "terms")

    def __init__(self, home: Home, terms: dict[PBWMonomial, complex] | None = None):
        self.home = home
        self.terms: dict[PBWMonomial, complex] = {}
        if terms:
            for mono, coeff in terms.items():
                if abs(coeff) > PRUNE_TOL:
                    self.terms[mono] = coeff

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _require_same_home(self.home, other.home, "add")
        acc = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc[mono] = acc.get(mono, 0j) + coeff
        return AlgebraElement(self.home, acc)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return self.scaled(-1.0)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scaled(other)

    def __rmul__(self, scalar) -> "AlgebraElement":
        return self.scaled(scalar)

    def scaled(self, scalar: complex) -> "AlgebraElement":
        c = complex(scalar)
        return AlgebraElement(self.home, {m: c * v for m, v in self.terms.items()})

    def max_abs_coeff(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def is_zero(self, tol: float = PRUNE_TOL) -> bool:
        return self.max_abs_coeff() <= tol

    def __repr__(self):
        if not self.terms:
            return "<0>"
        bits = [f"({c:.6g})*{m}" for m, c in sorted(self.terms.items(), key=lambda kv: str(kv[0]))]
        return "<" + " + ".join(bits) + ">"


def unit(home: Home) -> AlgebraElement:
    return AlgebraElement(home, {UNIT_MONOMIAL: 1.0 + 0j})

def z_gen(home: Home) -> AlgebraElement:
    return AlgebraElement(home, {Z_MONOMIAL: 1.0 + 0j})

def h_gen(home: Home) -> AlgebraElement:
    return AlgebraElement(home, {H_MONOMIAL: 1.0 + 0j})

def psi_plus(home: Home) -> AlgebraElement:
    return AlgebraElement(home, {PSI_PLUS_MONOMIAL: 1.0 + 0j})

def psi_minus(home: Home) -> AlgebraElement:
    return AlgebraElement(home, {PSI_MINUS_MONOMIAL: 1.0 + 0j})

def exponential_factor(home: Home, q_exp: complex, s_exp: complex) -> AlgebraElement:
    return AlgebraElement(home, {PBWMonomial(0, 0, complex(q_exp), complex(s_exp), 0, 0): 1.0 + 0j})

def generators(home: Home) -> dict[str, AlgebraElement]:
    return {
        "H": h_gen(home),
        "Z": z_gen(home),
        "psi+": psi_plus(home),
        "psi-": psi_minus(home),
    }

def relation_element(home: Home) -> AlgebraElement:
    """The anticommutator target (q_c**(2Z) - 1) / (q_c**2 - 1) of the copy."""
    eff = home.effective_q_squared()
    inv = 1.0 / (eff - 1.0)
    two_c = 2.0 * home.colour
    return AlgebraElement(home, {
        PBWMonomial(0, 0, two_c, 0j, 0, 0): inv,
        UNIT_MONOMIAL: -inv,
    })


def _mono_mul(m1: PBWMonomial, m2: PBWMonomial, two_colour: complex,
              inv_denom: complex | None) -> list[tuple[PBWMonomial, complex]]:
    """Straighten the concatenation of two basis words into normal form.

    ``inv_denom`` is 1/(q**(2c) - 1) for the home copy, or None when the
    copy is too singular for the anticommutator rewrite (only an error if
    that rewrite is actually needed).
    """
    e1, d1 = m1.plus, m1.minus
    e2, d2 = m2.plus, m2.minus

    # psi word (psi+)^e1 (psi-)^d1 (psi+)^e2 (psi-)^d2 -> normal form
    if d1 == 0:
        if e1 and e2:
            return []
        psi_terms = [(e1 | e2, d2, 0j, 1.0 + 0j)]
    elif e2 == 0:
        if d2:
            return []
        psi_terms = [(e1, 1, 0j, 1.0 + 0j)]
    else:
        # psi- psi+ = (q_c**(2Z) - 1)/(q_c**2 - 1) - psi+ psi-
        if inv_denom is None:
            raise SingularParameterError(
                "multiply: anticommutator rewrite needs |q**(2c) - 1| bounded away from 0"
            )
        psi_terms = [(e1, d2, two_colour, inv_denom), (e1, d2, 0j, -inv_denom)]
        if e1 == 0 and d2 == 0:
            psi_terms.append((1, 1, 0j, -1.0 + 0j))

    # moving H^b2 left past m1's psi part shifts H by 2(d1 - e1)
    shift = 2 * (d1 - e1)
    b2 = m2.h_deg
    if shift == 0 or b2 == 0:
        h_terms = [(m1.h_deg + b2, 1.0 + 0j)]
    else:
        h_terms = [
            (m1.h_deg + k, complex(math.comb(b2, k) * shift ** (b2 - k)))
            for k in range(b2 + 1)
        ]

    z = m1.z_deg + m2.z_deg
    qe = m1.q_exp + m2.q_exp
    se = m1.s_exp + m2.s_exp
    return [
        (PBWMonomial(z, h, qe + extra_q, se, pl, mi), hc * pc)
        for h, hc in h_terms
        for pl, mi, extra_q, pc in psi_terms
    ]


@lru_cache(maxsize=4096)
def _home_mul_data(home: Home) -> tuple[complex, complex | None]:
    eff = home.effective_q_squared()
    denom = eff - 1.0
    inv = None if abs(denom) < _MULTIPLY_FLOOR else 1.0 / denom
    return 2.0 * home.colour, inv


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Product in the home copy, straightened to PBW normal form."""
    _require_same_home(x.home, y.home, "multiply")
    two_c, inv = _home_mul_data(x.home)
    acc: dict[PBWMonomial, complex] = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            c12 = c1 * c2
            for mono, coeff in _mono_mul(m1, m2, two_c, inv):
                acc[mono] = acc.get(mono, 0j) + c12 * coeff
    return AlgebraElement(x.home, acc)


def grading_automorphism(x: AlgebraElement) -> AlgebraElement:
    """Scale each homogeneous term by (-1)**parity."""
    return AlgebraElement(
        x.home, {m: (-c if m.parity else c) for m, c in x.terms.items()}
    )


class TensorElement:
    """A finite combination of n-fold monomial tensors (n = 2 or 3).

    Each slot carries its own home; products follow the super convention
    (a ox b)(c ox d) = (-1)**(deg b * deg c) ac ox bd, extended to three
    slots by associativity.
    """

    __slots__ = ("homes", "terms")

    def __init__(self, homes: tuple[Home, ...],
                 terms: dict[tuple[PBWMonomial, ...], complex] | None = None):
        if len(homes) not in (2, 3):
            raise ValueError("TensorElement: order must be 2 or 3")
        self.homes = tuple(homes)
        self.terms: dict[tuple[PBWMonomial, ...], complex] = {}
        if terms:
            for key, coeff in terms.items():
                if abs(coeff) > PRUNE_TOL:
                    self.terms[key] = coeff

    @property
    def order(self) -> int:
        return len(self.homes)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check_compatible(other, "add")
        acc = dict(self.terms)
        for key, coeff in other.terms.items():
            acc[key] = acc.get(key, 0j) + coeff
        return TensorElement(self.homes, acc)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scaled(-1.0)

    def __neg__(self):
        return self.scaled(-1.0)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_multiply(self, other)
        return self.scaled(other)

    def __rmul__(self, scalar):
        return self.scaled(scalar)

    def scaled(self, scalar: complex) -> "TensorElement":
        c = complex(scalar)
        return TensorElement(self.homes, {k: c * v for k, v in self.terms.items()})

    def max_abs_coeff(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def _check_compatible(self, other: "TensorElement", what: str):
        if self.homes is other.homes:
            return
        if self.order != other.order:
            raise ValueError(f"{what}: tensor order mismatch")
        for a, b in zip(self.homes, other.homes):
            _require_same_home(a, b, what)

    def __repr__(self):
        if not self.terms:
            return "<0 (x)>"
        bits = [
            "(%s)*%s" % (format(c, ".6g"), " (x) ".join(str(m) for m in key))
            for key, c in sorted(self.terms.items(), key=lambda kv: str(kv[0]))
        ]
        return "<" + " + ".join(bits) + ">"


def tensor_concat(*parts: AlgebraElement | TensorElement) -> TensorElement:
    """Juxtapose factors into a pure tensor (no products, hence no signs)."""
    homes: list[Home] = []
    for p in parts:
        homes.extend(p.homes if isinstance(p, TensorElement) else (p.home,))
    out: dict[tuple[PBWMonomial, ...], complex] = {}
    keys_coeffs = [
        list(p.terms.items()) if isinstance(p, TensorElement) else
        [((m,), c) for m, c in p.terms.items()]
        for p in parts
    ]
    for combo in itertools.product(*keys_coeffs):
        key = tuple(itertools.chain.from_iterable(k for k, _ in combo))
        coeff = 1.0 + 0j
        for _, c in combo:
            coeff *= c
        out[key] = out.get(key, 0j) + coeff
    return TensorElement(tuple(homes), out)


def tensor_unit(homes: tuple[Home, ...]) -> TensorElement:
    return TensorElement(homes, {(UNIT_MONOMIAL,) * len(homes): 1.0 + 0j})


def tensor_multiply(u: TensorElement, v: TensorElement) -> TensorElement:
    """Graded product; odd factors crossing odd factors contribute -1."""
    u._check_compatible(v, "tensor_multiply")
    slot_data = [_home_mul_data(h) for h in u.homes]
    acc: dict[tuple[PBWMonomial, ...], complex] = {}
    for mk, cu in u.terms.items():
        for nk, cv in v.terms.items():
            # sign: each factor of v crosses the u factors to its slot's right
            if u.order == 2:
                sign_exp = nk[0].parity * mk[1].parity
            else:
                sign_exp = (
                    nk[0].parity * (mk[1].parity + mk[2].parity)
                    + nk[1].parity * mk[2].parity
                )
            coeff = cu * cv * (-1.0 if sign_exp & 1 else 1.0)
            slot_products = [
                _mono_mul(m, n, *slot_data[i]) for i, (m, n) in enumerate(zip(mk, nk))
            ]
            for combo in itertools.product(*slot_products):
                key = tuple(m for m, _ in combo)
                c = coeff
                for _, f in combo:
                    c *= f
                acc[key] = acc.get(key, 0j) + c
    return TensorElement(u.homes, acc)


def graded_twist(u: TensorElement, sign_rule: str = "product") -> TensorElement:
    """Swap the two slots with the super sign.

    ``sign_rule='product'`` uses the Koszul exponent (deg a)(deg b);
    ``sign_rule='self'`` uses (deg a)(deg a), which is available so that the
    verification suite can demonstrate that it breaks the bialgebra
    compatibility.
    """
    if u.order != 2:
        raise ValueError("graded_twist: order-2 tensors only")
    if sign_rule not in ("product", "self"):
        raise ValueError(f"graded_twist: unknown sign rule {sign_rule!r}")
    out: dict[tuple[PBWMonomial, ...], complex] = {}
    for (a, b), coeff in u.terms.items():
        exp = a.parity * b.parity if sign_rule == "product" else a.parity
        out[(b, a)] = out.get((b, a), 0j) + (-coeff if exp & 1 else coeff)
    return TensorElement((u.homes[1], u.homes[0]), out)


# ---------------------------------------------------------------------------
# tolerance-based comparison
# ---------------------------------------------------------------------------

def _as_term_tuples(x) -> dict[tuple[PBWMonomial, ...], complex]:
    if isinstance(x, AlgebraElement):
        return {(m,): c for m, c in x.terms.items()}
    return dict(x.terms)


def _discrete_signature(key: tuple[PBWMonomial, ...]):
    return tuple((m.z_deg, m.h_deg, m.plus, m.minus) for m in key)


def _exp_vector(key: tuple[PBWMonomial, ...]) -> tuple[complex, ...]:
    return tuple(itertools.chain.from_iterable((m.q_exp, m.s_exp) for m in key))


def _vectors_close(a: tuple[complex, ...], b: tuple[complex, ...]) -> bool:
    for x, y in zip(a, b):
        if abs(x - y) > _KEY_MERGE_TOL * (1.0 + max(abs(x), abs(y))):
            return False
    return True


def _cluster_max(diff: dict[tuple[PBWMonomial, ...], complex]) -> float:
    """Largest coefficient after merging keys that differ only by float noise
    in their exponents.  Two runs of the same computation may produce the
    exponent of one true monomial via different arithmetic orderings."""
    groups: dict[tuple, list[list]] = {}
    for key, coeff in diff.items():
        sig = _discrete_signature(key)
        vec = _exp_vector(key)
        clusters = groups.setdefault(sig, [])
        for cluster in clusters:
            if _vectors_close(cluster[0], vec):
                cluster[1] += coeff
                break
        else:
            clusters.append([vec, coeff])
    worst = 0.0
    for clusters in groups.values():
        for _, total in clusters:
            worst = max(worst, abs(total))
    return worst


def residual_between(x, y) -> float:
    """Normalised distance between two elements of the same kind.

    Max coefficient of the clustered difference divided by
    max(1, largest coefficient modulus of either operand).
    """
    tx = _as_term_tuples(x)
    ty = _as_term_tuples(y)
    diff = dict(tx)
    for key, coeff in ty.items():
        diff[key] = diff.get(key, 0j) - coeff
    scale = max(
        1.0,
        max((abs(c) for c in tx.values()), default=0.0),
        max((abs(c) for c in ty.values()), default=0.0),
    )
    return _cluster_max(diff) / scale


def equal_upto_tol(x, y, tol: float) -> tuple[bool, float]:
    """Compare two elements (or tensors) of the same kind and order."""
    if isinstance(x, AlgebraElement) != isinstance(y, AlgebraElement):
        raise ValueError("equal_upto_tol: mixed kinds")
    if isinstance(x, TensorElement) and x.order != y.order:
        raise ValueError("equal_upto_tol: tensor order mismatch")
    res = residual_between(x, y)
    return res <= tol, res
