"""Two-dimensional representation, coloured R-matrices and matrix-level checks.

The defining representation acts on a Z2-graded two-dimensional space with
basis parities (even, odd):

    D(Z) = I,  D(H) = diag(1, -1),  D(psi+) = E12,  D(psi-) = E21.

Tensor products of operators act with the super sign
(a ox b)(v ox w) = (-1)**(deg b * deg v) a v ox b w, and analogously with
cumulative parities on three factors.  Everything in this module funnels
through that one rule: `rep_tensor` realises it for symbolic tensors, and
`embed` realises it entrywise for numeric 4x4 matrices placed into three
tensor slots.

The coloured R-matrix is built twice: from its closed 4x4 form and from the
factorised universal expression

    R = q**((mu H ox Z + lam Z ox H)/2) s**((mu H ox Z - lam Z ox H)/2)
        * (1 ox 1 - (q**2 - 1) a_lam a_mu
           (s**(-lam Z/2) psi+) ox (s**(-mu Z/2) q**(-mu Z) psi-)),

with the off-diagonal coefficient written as (q**2 - 1) a_lam a_mu so both
routes share one branch choice.  Their agreement is the cross-validation
oracle; the coloured graded Yang-Baxter equation, the intertwining property
of the comultiplication, the hexagon identities and the nilpotent
closed-form inverse are checked numerically on top.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coefficients import Colour, ParamPoint, as_colour, colour_norm, cpow
from .coloured_hopf import ColouredMapContext, coproduct
from .colour_group import sigma_pair
from .pbw_algebra import (
    AlgebraElement,
    Home,
    PBWMonomial,
    TensorElement,
    generators,
    graded_twist,
    tensor_concat,
)

_E12 = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
_E21 = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)
_PSI_MATS = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): _E12,
    (0, 1): _E21,
    (1, 1): np.diag([1.0 + 0j, 0.0 + 0j]),
}

PARITIES_2 = (0, 1)
PARITIES_4 = (0, 1, 1, 0)
PARITIES_8 = tuple((i + j + k) & 1 for i in (0, 1) for j in (0, 1) for k in (0, 1))


@dataclass
class GradedMatrix:
    """A dense complex matrix over a parity-labelled basis."""

    entries: np.ndarray
    parities: tuple[int, ...]

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=complex)
        if self.entries.shape != (len(self.parities), len(self.parities)):
            raise ValueError("GradedMatrix: shape does not match parity labels")

    @property
    def dim(self) -> int:
        return len(self.parities)

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        if self.parities != other.parities:
            raise ValueError("GradedMatrix: parity mismatch in product")
        return GradedMatrix(self.entries @ other.entries, self.parities)


def frobenius_residual(a: np.ndarray, b: np.ndarray) -> float:
    """||a - b||_F normalised by max(1, ||a||_F)."""
    return float(np.linalg.norm(a - b) / max(1.0, np.linalg.norm(a)))


def _mono_matrix(m: PBWMonomial, q: complex, s: complex) -> np.ndarray:
    scalar = 1.0 + 0j
    if m.q_exp != 0:
        scalar *= cpow(q, m.q_exp)
    if m.s_exp != 0:
        scalar *= cpow(s, m.s_exp)
    mat = _PSI_MATS[(m.plus, m.minus)]
    if m.h_deg & 1:
        mat = mat.copy()
        mat[1, :] = -mat[1, :]
    return scalar * mat


def rep(x: AlgebraElement) -> GradedMatrix:
    """Represent an element on the graded two-dimensional module."""
    q, s = x.home.point.q, x.home.point.s
    out = np.zeros((2, 2), dtype=complex)
    for m, coeff in x.terms.items():
        out += coeff * _mono_matrix(m, q, s)
    return GradedMatrix(out, PARITIES_2)


_COL_I2 = np.array([0, 0, 1, 1])          # first-slot basis parity per column, dim 4
_COL_I3 = np.repeat([0, 1], 4)            # dim 8 column first-slot parity
_COL_J3 = np.tile(np.repeat([0, 1], 2), 2)


def rep_tensor(u: TensorElement) -> GradedMatrix:
    """Represent an order-2 or order-3 tensor with the super action signs."""
    q, s = u.homes[0].point.q, u.homes[0].point.s
    dim = 2 ** u.order
    out = np.zeros((dim, dim), dtype=complex)
    for key, coeff in u.terms.items():
        mats = [_mono_matrix(m, q, s) for m in key]
        kron = np.kron(mats[0], mats[1])
        if u.order == 3:
            kron = np.kron(kron, mats[2])
            sign_exp = key[1].parity * _COL_I3 + key[2].parity * (_COL_I3 + _COL_J3)
        else:
            sign_exp = key[1].parity * _COL_I2
        signs = np.where(sign_exp & 1, -1.0, 1.0)
        out += coeff * kron * signs[np.newaxis, :]
    return GradedMatrix(out, PARITIES_4 if u.order == 2 else PARITIES_8)


def coloured_R_closed_form(p: ParamPoint, lam: Colour | complex,
                           mu: Colour | complex) -> GradedMatrix:
    """The explicit 4x4 coloured R-matrix."""
    q, s = p.q, p.s
    lv, mv = as_colour(lam), as_colour(mu)
    out = np.zeros((4, 4), dtype=complex)
    out[0, 0] = cpow(q, (lv + mv) / 2) * cpow(s, (mv - lv) / 2)
    out[1, 1] = cpow(q, (mv - lv) / 2) * cpow(s, (lv + mv) / 2)
    out[2, 2] = cpow(q, (lv - mv) / 2) * cpow(s, -(lv + mv) / 2)
    out[3, 3] = cpow(q, -(lv + mv) / 2) * cpow(s, (lv - mv) / 2)
    out[1, 2] = ((q * q - 1.0) * colour_norm(q, lv) * colour_norm(q, mv)
                 * cpow(q, -(lv + mv) / 2))
    return GradedMatrix(out, PARITIES_4)


def _graded_kron2(a: np.ndarray, b: np.ndarray, parity_b: int) -> np.ndarray:
    """Order-2 operator tensor of 2x2 matrices with the super sign."""
    kron = np.kron(a, b)
    if parity_b & 1:
        signs = np.where(_COL_I2 & 1, -1.0, 1.0)
        kron = kron * signs[np.newaxis, :]
    return kron


@dataclass
class RFactorisation:
    """Diagonal exponential prefactor times a unipotent bracket.

    matrix() returns diag @ (1 + coefficient * odd_left ox odd_right); the
    bracket's nilpotent part squares to zero, so the inverse is closed form.
    """

    diagonal_factor: GradedMatrix
    odd_left: GradedMatrix
    odd_right: GradedMatrix
    coefficient: complex

    def bracket_matrix(self) -> np.ndarray:
        t = self.coefficient * _graded_kron2(
            self.odd_left.entries, self.odd_right.entries, 1)
        return np.eye(4, dtype=complex) + t

    def matrix(self) -> GradedMatrix:
        return GradedMatrix(self.diagonal_factor.entries @ self.bracket_matrix(),
                            PARITIES_4)

    def inverse_matrix(self) -> GradedMatrix:
        t = self.coefficient * _graded_kron2(
            self.odd_left.entries, self.odd_right.entries, 1)
        inv_diag = np.diag(1.0 / np.diag(self.diagonal_factor.entries))
        return GradedMatrix((np.eye(4, dtype=complex) - t) @ inv_diag, PARITIES_4)


_H_DIAG = np.array([1.0, -1.0])
_HZ_4 = np.repeat(_H_DIAG, 2)    # H ox Z eigenvalues on the tensor square
_ZH_4 = np.tile(_H_DIAG, 2)      # Z ox H eigenvalues


def r_bracket_factors(p: ParamPoint, lam: complex, mu: complex
                      ) -> tuple[complex, AlgebraElement, AlgebraElement]:
    """Coefficient and algebra factors of the R-matrix bracket term."""
    q = p.q
    coeff = -(q * q - 1.0) * colour_norm(q, lam) * colour_norm(q, mu)
    left = AlgebraElement(Home(p, lam),
                          {PBWMonomial(0, 0, 0j, -lam / 2.0, 1, 0): 1.0 + 0j})
    right = AlgebraElement(Home(p, mu),
                           {PBWMonomial(0, 0, -mu, -mu / 2.0, 0, 1): 1.0 + 0j})
    return coeff, left, right


def r_factorisation(p: ParamPoint, lam: Colour | complex,
                    mu: Colour | complex) -> RFactorisation:
    """Build the universal-route factorisation of the coloured R-matrix."""
    q, s = p.q, p.s
    lv, mv = as_colour(lam), as_colour(mu)
    nq = (mv * _HZ_4 + lv * _ZH_4) / 2.0
    ns = (mv * _HZ_4 - lv * _ZH_4) / 2.0
    diag = np.diag([cpow(q, nq[i]) * cpow(s, ns[i]) for i in range(4)])
    coeff, left, right = r_bracket_factors(p, lv, mv)
    return RFactorisation(
        diagonal_factor=GradedMatrix(diag, PARITIES_4),
        odd_left=rep(left),
        odd_right=rep(right),
        coefficient=coeff,
    )


def coloured_R_from_universal(p: ParamPoint, lam: Colour | complex,
                              mu: Colour | complex) -> GradedMatrix:
    """Represent the factorised universal R-matrix on the tensor square."""
    return r_factorisation(p, lam, mu).matrix()


def crossval_residual(p: ParamPoint, lam: Colour | complex,
                      mu: Colour | complex) -> float:
    """Disagreement between the universal route and the closed form."""
    closed = coloured_R_closed_form(p, lam, mu).entries
    universal = coloured_R_from_universal(p, lam, mu).entries
    return frobenius_residual(closed, universal)


# ---------------------------------------------------------------------------
# graded three-slot embeddings
# ---------------------------------------------------------------------------

def embed(m: GradedMatrix, slot: int | str) -> GradedMatrix:
    """Place a 4x4 operator into two of three graded tensor slots.

    The input must act on the graded tensor square (dim 4); each entry is a
    matrix element of a homogeneous operator pair, whose parities are read
    off entrywise, so sums of homogeneous pairs embed correctly.
    """
    slot = str(slot)
    if m.dim != 4:
        raise ValueError("embed: expected a 4x4 matrix")
    M = m.entries
    if slot == "12":
        out = np.kron(M, np.eye(2, dtype=complex))
        return GradedMatrix(out, PARITIES_8)

    T = M.reshape(2, 2, 2, 2)  # [r1, r2, c1, c2]
    out = np.zeros((2, 2, 2, 2, 2, 2), dtype=complex)
    r1, r2, c1, c2 = np.indices((2, 2, 2, 2))
    if slot == "13":
        # second-factor operator parity c_par = r2 + c2 (here axes are k', k)
        odd = (r2 + c2) & 1
        for j in (0, 1):
            sign = np.where((odd * j) & 1, -1.0, 1.0)
            out[:, j, :, :, j, :] = T * sign
    elif slot == "23":
        pair_parity = (r1 + r2 + c1 + c2) & 1
        for i in (0, 1):
            sign = np.where((pair_parity * i) & 1, -1.0, 1.0)
            out[i, :, :, i, :, :] = T * sign
    else:
        raise ValueError(f"embed: unknown slot {slot!r}")
    return GradedMatrix(out.reshape(8, 8), PARITIES_8)


# ---------------------------------------------------------------------------
# matrix-level checks
# ---------------------------------------------------------------------------

def check_coloured_graded_ybe(p: ParamPoint, lam: Colour | complex,
                              mu: Colour | complex, nu: Colour | complex,
                              perturb: float = 0.0) -> float:
    """Residual of R12 R13 R23 = R23 R13 R12 with graded embeddings.

    ``perturb`` scales the off-diagonal entry of the (lam, mu) matrix by
    (1 + perturb); a nonzero value is the negative control establishing
    that the check has power.
    """
    lv, mv, nv = as_colour(lam), as_colour(mu), as_colour(nu)
    r_lm = coloured_R_closed_form(p, lv, mv)
    if perturb:
        entries = r_lm.entries.copy()
        entries[1, 2] *= (1.0 + perturb)
        r_lm = GradedMatrix(entries, PARITIES_4)
    r_ln = coloured_R_closed_form(p, lv, nv)
    r_mn = coloured_R_closed_form(p, mv, nv)
    a = embed(r_lm, "12").entries
    b = embed(r_ln, "13").entries
    c = embed(r_mn, "23").entries
    lhs = a @ b @ c
    rhs = c @ b @ a
    return frobenius_residual(lhs, rhs)


def check_intertwiner(p: ParamPoint, lam: Colour | complex, mu: Colour | complex,
                      nu: Colour | complex, probe: str) -> float:
    """The R-matrix conjugates the comultiplication into its graded flip."""
    lv, mv, nv = as_colour(lam), as_colour(mu), as_colour(nu)
    x = generators(Home(p, nv))[probe]
    flipped = graded_twist(coproduct(ColouredMapContext(p, mv, lv, nv), x))
    lhs = rep_tensor(flipped).entries
    fac = r_factorisation(p, lv, mv)
    dmat = rep_tensor(coproduct(ColouredMapContext(p, lv, mv, nv), x)).entries
    rhs = fac.matrix().entries @ dmat @ fac.inverse_matrix().entries
    return frobenius_residual(lhs, rhs)


def _prefactor_8(p: ParamPoint, coef_pair: np.ndarray, coef_last: np.ndarray) -> np.ndarray:
    """Diagonal 8x8 exponential with q-exponent (coef_pair . h terms)/2 etc.

    coef_pair/coef_last are length-2 arrays (q-part, s-part) multiplying
    (h_i + h_j) and h_k respectively; h are the H eigenvalues +-1.
    """
    q, s = p.q, p.s
    out = np.zeros((8, 8), dtype=complex)
    idx = 0
    for i in (0, 1):
        for j in (0, 1):
            for k in (0, 1):
                hi, hj, hk = 1 - 2 * i, 1 - 2 * j, 1 - 2 * k
                nq = (coef_pair[0] * (hi + hj) + coef_last[0] * hk) / 2.0
                ns = (coef_pair[1] * (hi + hj) + coef_last[1] * hk) / 2.0
                out[idx, idx] = cpow(q, nq) * cpow(s, ns)
                idx += 1
    return out


def check_hexagons(p: ParamPoint, alpha: Colour | complex, beta: Colour | complex,
                   gamma: Colour | complex, lam: Colour | complex,
                   mu: Colour | complex) -> tuple[float, float]:
    """Residuals of the two quasitriangularity hexagons on 8x8 matrices.

      (D^{alpha,beta}_lam ox s^gamma_mu)(R^{lam,mu}) = R^{alpha,gamma}_13 R^{beta,gamma}_23
      (s^alpha_lam ox D^{beta,gamma}_mu)(R^{lam,mu}) = R^{alpha,gamma}_13 R^{alpha,beta}_12
    """
    av, bv, gv, lv, mv = (as_colour(c) for c in (alpha, beta, gamma, lam, mu))
    coeff, u_left, v_right = r_bracket_factors(p, lv, mv)
    eye8 = np.eye(8, dtype=complex)

    # first hexagon: comultiply the first leg
    pre1 = _prefactor_8(p, np.array([gv, gv]), np.array([av + bv, -(av + bv)]))
    du = coproduct(ColouredMapContext(p, av, bv, lv), u_left)
    sv = sigma_pair(gv, mv, v_right)
    bracket1 = eye8 + coeff * rep_tensor(tensor_concat(du, sv)).entries
    lhs1 = pre1 @ bracket1
    rhs1 = (embed(coloured_R_closed_form(p, av, gv), "13").entries
            @ embed(coloured_R_closed_form(p, bv, gv), "23").entries)
    res1 = frobenius_residual(lhs1, rhs1)

    # second hexagon: comultiply the second leg
    # exponents: ((beta+gamma) h_i +- alpha (h_j + h_k))/2 for q and s
    out2 = np.zeros((8, 8), dtype=complex)
    idx = 0
    for i in (0, 1):
        for j in (0, 1):
            for k in (0, 1):
                hi, hj, hk = 1 - 2 * i, 1 - 2 * j, 1 - 2 * k
                nq = ((bv + gv) * hi + av * (hj + hk)) / 2.0
                ns = ((bv + gv) * hi - av * (hj + hk)) / 2.0
                out2[idx, idx] = cpow(p.q, nq) * cpow(p.s, ns)
                idx += 1
    su = sigma_pair(av, lv, u_left)
    dv = coproduct(ColouredMapContext(p, bv, gv, mv), v_right)
    bracket2 = eye8 + coeff * rep_tensor(tensor_concat(su, dv)).entries
    lhs2 = out2 @ bracket2
    rhs2 = (embed(coloured_R_closed_form(p, av, gv), "13").entries
            @ embed(coloured_R_closed_form(p, av, bv), "12").entries)
    res2 = frobenius_residual(lhs2, rhs2)
    return res1, res2


def check_r_inverse(p: ParamPoint, lam: Colour | complex,
                    mu: Colour | complex) -> float:
    """Closed-form nilpotent inverse against the numeric matrix inverse."""
    fac = r_factorisation(p, lam, mu)
    closed = fac.inverse_matrix().entries
    numeric = np.linalg.inv(fac.matrix().entries)
    return frobenius_residual(numeric, closed)
