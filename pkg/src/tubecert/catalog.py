"""Constructors for every named object the certificate suite works with.

Families built here:

* the quartic graph family gamma(alpha): x4 = x1 x2 + x3^2 + x1^2 x3 + alpha x1^4,
  its tube hypersurface in C^4, the domains on each side, the four affine
  symmetry generators, and the closed-form transitivity solver;
* the quartic models M_plus / M_minus (Re z4 = z1 zb2 + z2 zb1 + |z3|^2 +- |z1|^4),
  their 13-parameter holomorphic symmetry group with its algebraic constraint,
  composition/inversion with exact parameter recovery, and the isotropy
  matrices of the linear parts;
* the normalizing equivalences carrying each tube onto its model (printed
  form with irrational scalings on the floating tower, plus a rationally
  conjugated exact form);
* the quadric models over Hermitian forms H_{p,n}, their transitive affine
  action, and the tube realisation;
* the Cayley tube x3 = x1 x2 + x1^3 and its equivalence with the (1,1) quadric;
* the one-parameter degree-4 family of graphs in R^7 used for signature
  consistency checks.

All constants are entered as printed in their source displays; simplification
only ever happens inside the certified pipeline, so transcription errors are
caught by certificates instead of being hidden by hand algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ClosureViolation, ConstraintError, DomainError
from .geometry import Hypersurface, SidedDomain
from .maps import (
    AffineMapR,
    HoloPolyMap,
    compose,
    pullback_diagonal_quartic,
)
from .poly import HermitianPolynomial, RealPolynomial, VariableSpace
from .scalars import (
    GaussianRational,
    UnimodularPhase,
    as_rational,
    fourth_root_exact,
    nth_root_float,
    phase_from_parameter,
    sqrt_exact,
)

SPACE3 = VariableSpace(3)
SPACE4 = VariableSpace(4)


def _var(space, i, exact=True):
    return HermitianPolynomial.variable(space, i, exact)


def _re(space, i):
    return HermitianPolynomial.re_variable(space, i)


# ---------------------------------------------------------------------------
# gamma family: graphs, tubes, generators, transitivity
# ---------------------------------------------------------------------------


def gamma_graph(alpha) -> RealPolynomial:
    """The graph function f(x1,x2,x3) = x1 x2 + x3^2 + x1^2 x3 + alpha x1^4."""
    alpha = as_rational(alpha)
    x1, x2, x3 = (_var(SPACE3, i) for i in range(3))
    return RealPolynomial(x1 * x2 + x3**2 + x1**2 * x3 + x1**4 * alpha)


def make_gamma(alpha) -> Hypersurface:
    """Tube hypersurface over the gamma(alpha) graph: rho = Re z4 - f(Re z')."""
    alpha = as_rational(alpha)
    x1, x2, x3 = (_re(SPACE4, i) for i in range(3))
    f = x1 * x2 + x3**2 + x1**2 * x3 + x1**4 * alpha
    return Hypersurface(_re(SPACE4, 3) - f)


def make_omega(alpha, side: str) -> SidedDomain:
    """Tube domain over one side of gamma(alpha); side is '>' or '<'."""
    return SidedDomain(make_gamma(alpha), +1 if side == ">" else -1)


def make_generator(kind: str, alpha, param) -> AffineMapR:
    """One of the four affine symmetry generators of the gamma(alpha) sides.

    kind 'phi' is the weighted scaling (param q != 0, determinant q^10);
    'psi', 'mu', 'nu' are the unipotent generators (determinant 1).
    """
    alpha = as_rational(alpha)
    p = as_rational(param)
    zero, one = Fraction(0), Fraction(1)
    if kind == "phi":
        if p == 0:
            raise DomainError("phi generator needs a nonzero scale")
        q = p
        return AffineMapR(
            [
                [q, zero, zero, zero],
                [zero, q**3, zero, zero],
                [zero, zero, q**2, zero],
                [zero, zero, zero, q**4],
            ],
            [zero] * 4,
        )
    if kind == "psi":
        r = p
        a = alpha
        c = 4 * a - 1
        return AffineMapR(
            [
                [one, zero, zero, zero],
                [-4 * a * c * r**2, one, 2 * c * r, zero],
                [-4 * a * r, zero, one, zero],
                [-Fraction(4, 3) * a * c * r**3, r, c * r**2, one],
            ],
            [
                r,
                -Fraction(4, 3) * a * c * r**3,
                -2 * a * r**2,
                -Fraction(1, 3) * a * c * r**4,
            ],
        )
    if kind == "mu":
        s = p
        return AffineMapR(
            [
                [one, zero, zero, zero],
                [zero, one, zero, zero],
                [zero, zero, one, zero],
                [s, zero, zero, one],
            ],
            [zero, s, zero, zero],
        )
    if kind == "nu":
        t = p
        return AffineMapR(
            [
                [one, zero, zero, zero],
                [-t, one, zero, zero],
                [zero, zero, one, zero],
                [zero, zero, 2 * t, one],
            ],
            [zero, zero, t, t**2],
        )
    raise DomainError(f"unknown generator kind {kind!r}")


GENERATOR_FACTORS = {"phi": lambda q: as_rational(q) ** 4, "psi": lambda r: Fraction(1),
                     "mu": lambda s: Fraction(1), "nu": lambda t: Fraction(1)}


def composed_generator(alpha, q, s, t, r) -> AffineMapR:
    """The transitive composite: scaling after shear after the two translations."""
    return (
        make_generator("phi", alpha, q)
        .compose(make_generator("mu", alpha, s))
        .compose(make_generator("nu", alpha, t))
        .compose(make_generator("psi", alpha, r))
    )


BASE_POINT = (Fraction(0), Fraction(0), Fraction(0), Fraction(1))


@dataclass(frozen=True)
class TransitivityResult:
    q: object
    r: object
    s: object
    t: object
    exact: bool

    def as_tuple(self):
        return (self.q, self.r, self.s, self.t)


def transitive_params_omega(alpha, target) -> TransitivityResult:
    """Parameters (q, r, s, t) moving the base point (0,0,0,1) to the target.

    The target must lie strictly on the '>' side of gamma(alpha).  The path is
    exact when the graph defect at the target is a perfect fourth power of a
    rational; otherwise the parameters come back as floats (sup-norm error of
    the reproduced target below 1e-9).
    """
    alpha = as_rational(alpha)
    exact_in = all(isinstance(x, (int, Fraction)) for x in target)
    if exact_in:
        x1, x2, x3, x4 = (as_rational(x) for x in target)
        rad = x4 - x1 * x2 - x3**2 - x1**2 * x3 - alpha * x1**4
        if rad <= 0:
            raise DomainError("target is not strictly above the graph")
        q = fourth_root_exact(rad)
        if q is not None:
            r = x1 / q
            s = (x2 + Fraction(4, 3) * alpha * (4 * alpha - 1) * x1**3 + x1 * x3
                 + 2 * alpha * x1**3) / q**3
            t = (x3 + 2 * alpha * x1**2) / q**2
            return TransitivityResult(q, r, s, t, True)
        x1f, x2f, x3f, x4f = (float(x) for x in (x1, x2, x3, x4))
        radf = float(rad)
    else:
        x1f, x2f, x3f, x4f = (float(x) for x in target)
        af = float(alpha)
        radf = x4f - x1f * x2f - x3f**2 - x1f**2 * x3f - af * x1f**4
        if radf <= 0:
            raise DomainError("target is not strictly above the graph")
    af = float(alpha)
    qf = nth_root_float(radf, 4)
    rf = x1f / qf
    sf = (x2f + 4.0 / 3.0 * af * (4 * af - 1) * x1f**3 + x1f * x3f
          + 2 * af * x1f**3) / qf**3
    tf = (x3f + 2 * af * x1f**2) / qf**2
    return TransitivityResult(qf, rf, sf, tf, False)


# ---------------------------------------------------------------------------
# quartic models M_plus / M_minus and their symmetry group
# ---------------------------------------------------------------------------


def pairing_hermitian_part() -> HermitianPolynomial:
    """z1 zb2 + z2 zb1 + z3 zb3 inside C^4."""
    z1, z2, z3 = (_var(SPACE4, i) for i in range(3))
    zb1, zb2, zb3 = (_var(SPACE4, 4 + i) for i in range(3))
    return z1 * zb2 + z2 * zb1 + z3 * zb3


def model_surface(sign: str) -> Hypersurface:
    """M_plus / M_minus: rho = Re z4 - (z1 zb2 + z2 zb1 + |z3|^2 +- |z1|^4)."""
    eps = _sign_to_eps(sign)
    z1 = _var(SPACE4, 0)
    zb1 = _var(SPACE4, 4)
    quartic = z1**2 * zb1**2
    return Hypersurface(_re(SPACE4, 3) - pairing_hermitian_part() - quartic * eps)


def model_domain(sign: str, side: str) -> SidedDomain:
    return SidedDomain(model_surface(sign), +1 if side == ">" else -1)


def _sign_to_eps(sign: str) -> int:
    if sign == "+":
        return 1
    if sign == "-":
        return -1
    raise DomainError(f"sign must be '+' or '-', got {sign!r}")


@dataclass(frozen=True)
class PParams:
    """The 13 real parameters of a quartic-model symmetry, with their constraint.

    Exact elements carry Fractions / GaussianRationals / UnimodularPhases;
    floating elements carry floats / complex.  The constraint ties |d|^2 to
    q, the first phase, and b:

        |d|^2 = -2 q^3 Re(phase_phi * conj(b)),  Re(phase_phi * conj(b)) <= 0.

    d is stored explicitly: the constraint fixes only |d|, and d's phase is a
    genuine parameter direction.
    """

    sign: str
    q: object
    phi_phase: object
    psi_phase: object
    u: object
    rho: object
    sigma: object
    tau: object
    b: object
    d: object

    @property
    def exact(self) -> bool:
        return isinstance(self.q, Fraction)

    def validate(self, tol: float = 1e-9):
        _sign_to_eps(self.sign)
        if self.exact:
            if self.q <= 0:
                raise ConstraintError("scale parameter q must be positive")
            w = self.phi_phase.value * self.b.conjugate()
            if w.re > 0:
                raise ConstraintError("Re(phase * conj(b)) must be <= 0")
            if self.d.abs2() != -2 * self.q**3 * w.re:
                raise ConstraintError(
                    f"|d|^2 = {self.d.abs2()} != -2 q^3 Re(phase*conj(b)) = {-2 * self.q ** 3 * w.re}"
                )
        else:
            if self.q <= 0:
                raise ConstraintError("scale parameter q must be positive")
            w = complex(self.phi_phase) * complex(self.b).conjugate()
            lhs = abs(complex(self.d)) ** 2
            rhs = -2 * float(self.q) ** 3 * w.real
            if w.real > tol or abs(lhs - rhs) > tol * max(1.0, abs(lhs)):
                raise ConstraintError(f"constraint violated: |d|^2={lhs}, -2q^3 Re={rhs}")
        return self


def identity_p_params(sign: str) -> PParams:
    one = UnimodularPhase(GaussianRational(1))
    zero = GaussianRational(0)
    return PParams(sign, Fraction(1), one, one, Fraction(0), zero, zero, zero, zero, zero)


def make_p_element(params: PParams, check: bool = True, misread_phase: bool = False) -> HoloPolyMap:
    """The degree-2 holomorphic symmetry of the quartic model with the given parameters.

    ``check=False`` skips the constraint (used to build negative controls).
    ``misread_phase=True`` swaps the second phase for the first in the single
    z3-coefficient of the last component; with distinct phases and tau != 0
    this breaks invariance, which is how the suite pins down the correct
    reading of that coefficient.
    """
    if check:
        params.validate()
    eps = _sign_to_eps(params.sign)
    if params.exact:
        return _p_element_exact(params, eps, misread_phase)
    return _p_element_float(params, eps, misread_phase)


def _p_element_exact(p: PParams, eps: int, misread_phase: bool) -> HoloPolyMap:
    q = GaussianRational(p.q)
    phi = p.phi_phase.value
    psi = p.psi_phase.value
    rho, sigma, tau, b, d = p.rho, p.sigma, p.tau, p.b, p.d
    z1, z2, z3, z4 = (_var(SPACE4, i) for i in range(4))
    rho_bar = rho.conjugate()
    tau_bar = tau.conjugate()
    sigma_bar = sigma.conjugate()
    d_bar = d.conjugate()
    phipsi = phi * psi
    rho2 = GaussianRational(rho.abs2())

    c1 = z1 * (q * phi) + HermitianPolynomial.constant(SPACE4, rho)

    c2 = (
        z1 * (rho2 * (q * phi) * (-2 * eps) + q * q * b)
        + z2 * (q**3 * phi)
        + z3 * (q * d)
        + z1**2 * (rho_bar * q * q * phi * phi * (-2 * eps))
        + HermitianPolynomial.constant(SPACE4, sigma)
    )

    c3 = (
        z1 * (d_bar * phipsi * -1)
        + z3 * (q * q * psi)
        + HermitianPolynomial.constant(SPACE4, tau)
    )

    z3_phase = phi if misread_phase else psi
    const4 = (
        rho * sigma_bar
        + sigma * rho_bar
        + GaussianRational(tau.abs2())
        + GaussianRational(rho.abs2() ** 2) * eps
        + GaussianRational(0, p.u)
    )
    c4 = (
        z1 * (sigma_bar * (q * phi) * 2 + rho_bar * q * q * b * 2 - tau_bar * d_bar * phipsi * 2)
        + z2 * (rho_bar * q**3 * phi * 2)
        + z3 * (rho_bar * q * d * 2 + tau_bar * q * q * z3_phase * 2)
        + z4 * q**4
        + z1**2 * (rho_bar * rho_bar * q * q * phi * phi * (-2 * eps))
        + HermitianPolynomial.constant(SPACE4, const4)
    )
    return HoloPolyMap(SPACE4, SPACE4, [c1, c2, c3, c4])


def _p_element_float(p: PParams, eps: int, misread_phase: bool) -> HoloPolyMap:
    q = float(p.q)
    phi = complex(p.phi_phase)
    psi = complex(p.psi_phase)
    rho, sigma, tau = complex(p.rho), complex(p.sigma), complex(p.tau)
    b, d = complex(p.b), complex(p.d)
    u = float(p.u)
    z1, z2, z3, z4 = (_var(SPACE4, i, exact=False) for i in range(4))
    const = HermitianPolynomial.constant

    c1 = z1 * (q * phi) + const(SPACE4, rho, exact=False)
    c2 = (
        z1 * (-2 * eps * abs(rho) ** 2 * q * phi + q * q * b)
        + z2 * (q**3 * phi)
        + z3 * (q * d)
        + z1**2 * (-2 * eps * rho.conjugate() * q * q * phi * phi)
        + const(SPACE4, sigma, exact=False)
    )
    c3 = (
        z1 * (-d.conjugate() * phi * psi)
        + z3 * (q * q * psi)
        + const(SPACE4, tau, exact=False)
    )
    z3_phase = phi if misread_phase else psi
    c4 = (
        z1 * (2 * sigma.conjugate() * q * phi + 2 * rho.conjugate() * q * q * b
              - 2 * tau.conjugate() * d.conjugate() * phi * psi)
        + z2 * (2 * rho.conjugate() * q**3 * phi)
        + z3 * (2 * rho.conjugate() * q * d + 2 * tau.conjugate() * q * q * z3_phase)
        + z4 * q**4
        + z1**2 * (-2 * eps * rho.conjugate() ** 2 * q * q * phi * phi)
        + const(
            SPACE4,
            rho * sigma.conjugate() + sigma * rho.conjugate()
            + abs(tau) ** 2 + eps * abs(rho) ** 4 + 1j * u,
            exact=False,
        )
    )
    return HoloPolyMap(SPACE4, SPACE4, [c1, c2, c3, c4])


def _mono(space, **powers):
    exps = [0] * (2 * space.n)
    names = space.names
    for name, k in powers.items():
        exps[names.index(name)] = k
    return tuple(exps)


def p_params_from_map(f: HoloPolyMap, sign: str) -> PParams:
    """Recover the 13 parameters from an expanded symmetry map (exact tower).

    Raises ClosureViolation when the map is not of the group's shape or the
    recovered parameters fail to regenerate it exactly; that never happens
    for genuine compositions or inverses of group elements.
    """
    if not f.exact:
        raise ClosureViolation("parameter recovery runs on the exact tower")
    eps = _sign_to_eps(sign)
    c1, c2, c3, c4 = f.components
    zero_exps = (0,) * 8

    a1 = c1.coefficient(_mono(SPACE4, z1=1))
    q = sqrt_exact(a1.abs2())
    if q is None or q == 0:
        raise ClosureViolation("|z1-coefficient|^2 is not a perfect rational square")
    try:
        phi = UnimodularPhase(a1 / GaussianRational(q))
    except DomainError as exc:
        raise ClosureViolation(str(exc)) from None
    rho = c1.coefficient(zero_exps)

    c33 = c3.coefficient(_mono(SPACE4, z3=1))
    try:
        psi = UnimodularPhase(c33 / GaussianRational(q * q))
    except DomainError as exc:
        raise ClosureViolation(str(exc)) from None
    tau = c3.coefficient(zero_exps)
    c31 = c3.coefficient(_mono(SPACE4, z1=1))
    d = (-(c31) / (phi.value * psi.value)).conjugate()

    sigma = c2.coefficient(zero_exps)
    c21 = c2.coefficient(_mono(SPACE4, z1=1))
    b = (c21 + GaussianRational(rho.abs2()) * phi.value * GaussianRational(q) * (2 * eps)) / GaussianRational(q * q)

    const4 = c4.coefficient(zero_exps)
    core = (
        rho * sigma.conjugate()
        + sigma * rho.conjugate()
        + GaussianRational(tau.abs2())
        + GaussianRational(rho.abs2() ** 2) * eps
    )
    iu = const4 - core
    if iu.re != 0:
        raise ClosureViolation("translation constant has a stray real part")
    u = iu.im

    params = PParams(sign, q, phi, psi, u, rho, sigma, tau, b, d)
    try:
        params.validate()
    except ConstraintError as exc:
        raise ClosureViolation(f"recovered parameters violate the constraint: {exc}") from None
    if make_p_element(params) != f:
        raise ClosureViolation("recovered parameters do not regenerate the map")
    return params


def p_compose(a: PParams, b: PParams) -> PParams:
    """Parameters of the composite (a after b), recovered exactly."""
    if a.sign != b.sign:
        raise DomainError("cannot compose symmetries of different models")
    fa, fb = make_p_element(a), make_p_element(b)
    return p_params_from_map(compose(fa, fb), a.sign)


def p_inverse(a: PParams) -> PParams:
    """Parameters of the inverse element, via exact triangular inversion."""
    f = make_p_element(a)
    g = invert_p_map(f)
    params = p_params_from_map(g, a.sign)
    if compose(f, make_p_element(params)) != HoloPolyMap.identity(SPACE4):
        raise ClosureViolation("inverse recovery failed to produce a two-sided inverse")
    return params


def invert_p_map(f: HoloPolyMap) -> HoloPolyMap:
    """Invert a symmetry map exactly.

    The components are triangular: z1 enters alone, z3 through (z1, z3), z2
    through (z1, z2, z3) with the only nonlinearity a z1^2 term, and z4
    linearly on top of those, so back-substitution stays polynomial.
    """
    c1, c2, c3, c4 = f.components
    zero_exps = (0,) * 8
    w1, w2, w3, w4 = (_var(SPACE4, i) for i in range(4))

    a1 = c1.coefficient(_mono(SPACE4, z1=1))
    Z1 = (w1 - HermitianPolynomial.constant(SPACE4, c1.coefficient(zero_exps))) * (1 / a1)

    c33 = c3.coefficient(_mono(SPACE4, z3=1))
    Z3 = (
        w3
        - HermitianPolynomial.constant(SPACE4, c3.coefficient(zero_exps))
        - Z1 * c3.coefficient(_mono(SPACE4, z1=1))
    ) * (1 / c33)

    c22 = c2.coefficient(_mono(SPACE4, z2=1))
    Z2 = (
        w2
        - HermitianPolynomial.constant(SPACE4, c2.coefficient(zero_exps))
        - Z1 * c2.coefficient(_mono(SPACE4, z1=1))
        - Z3 * c2.coefficient(_mono(SPACE4, z3=1))
        - Z1**2 * c2.coefficient(_mono(SPACE4, z1=2))
    ) * (1 / c22)

    c44 = c4.coefficient(_mono(SPACE4, z4=1))
    Z4 = (
        w4
        - HermitianPolynomial.constant(SPACE4, c4.coefficient(zero_exps))
        - Z1 * c4.coefficient(_mono(SPACE4, z1=1))
        - Z2 * c4.coefficient(_mono(SPACE4, z2=1))
        - Z3 * c4.coefficient(_mono(SPACE4, z3=1))
        - Z1**2 * c4.coefficient(_mono(SPACE4, z1=2))
    ) * (1 / c44)
    return HoloPolyMap(SPACE4, SPACE4, [Z1, Z2, Z3, Z4])


PAIRING_FORM_ROWS = (
    (GaussianRational(0), GaussianRational(1), GaussianRational(0)),
    (GaussianRational(1), GaussianRational(0), GaussianRational(0)),
    (GaussianRational(0), GaussianRational(0), GaussianRational(1)),
)


def make_isotropy_matrix(params: PParams):
    """3x3 matrix of the linear isotropy action of a translation-free symmetry.

    Requires rho = sigma = tau = 0 and u = 0.  The matrix preserves the
    pairing form rows [[0,1,0],[1,0,0],[0,0,1]] in the sense U^t H conj(U) = H.
    """
    if not params.exact:
        raise DomainError("isotropy matrices are built on the exact tower")
    if not (params.rho.is_zero() and params.sigma.is_zero() and params.tau.is_zero()) or params.u != 0:
        raise DomainError("isotropy matrices need translation-free parameters")
    params.validate()
    q = GaussianRational(params.q)
    phi = params.phi_phase.value
    psi = params.psi_phase.value
    b, d = params.b, params.d
    zero = GaussianRational(0)
    return (
        (phi / q, zero, zero),
        (b, q * phi, d / q),
        (-(d.conjugate() / (q * q)) * phi * psi, zero, psi),
    )


def pseudo_unitarity_residual(U, H=PAIRING_FORM_ROWS):
    """U^t H conj(U) - H, exactly; the zero matrix certifies form preservation."""
    n = len(U)
    res = []
    for i in range(n):
        row = []
        for j in range(n):
            s = GaussianRational(0)
            for k in range(n):
                for l in range(n):
                    s = s + U[k][i] * H[k][l] * U[l][j].conjugate()
            row.append(s - H[i][j])
        res.append(tuple(row))
    return tuple(res)


# -- randomized draws --------------------------------------------------------


def random_fraction(rng, lo=-3, hi=3, den=4) -> Fraction:
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_positive_fraction(rng, hi=3, den=4) -> Fraction:
    return Fraction(rng.randint(1, hi * den), den)


def random_gaussian(rng, lo=-2, hi=2, den=4) -> GaussianRational:
    return GaussianRational(random_fraction(rng, lo, hi, den), random_fraction(rng, lo, hi, den))


def random_phase(rng) -> UnimodularPhase:
    return phase_from_parameter(random_fraction(rng, -3, 3, 5))


def random_p_params(rng, sign: str) -> PParams:
    """A random exact group element: draw d first, then solve for b's real slope."""
    q = random_positive_fraction(rng)
    phi = random_phase(rng)
    psi = random_phase(rng)
    u = random_fraction(rng)
    rho = random_gaussian(rng)
    sigma = random_gaussian(rng)
    tau = random_gaussian(rng)
    d = random_gaussian(rng)
    m = d.abs2() / (2 * q**3)
    y = random_fraction(rng)
    # Re(phi * conj(b)) = -m with free imaginary part y.
    b = (phi.value.conjugate() * GaussianRational(-m, y)).conjugate()
    return PParams(sign, q, phi, psi, u, rho, sigma, tau, b, d).validate()


# -- floating parameter chart and its Jacobian --------------------------------


def p_chart_float(theta, sign: str) -> PParams:
    """13-real-parameter chart around the identity, smooth there.

    Coordinates: q, angle_phi, angle_psi, u, Re/Im rho, Re/Im sigma,
    Re/Im tau, Im b, Re/Im d.  Re b is eliminated by the constraint
    (the modulus of d is free in this chart; b's real slope follows).
    """
    q, aphi, apsi, u = (float(theta[i]) for i in range(4))
    rho = complex(theta[4], theta[5])
    sigma = complex(theta[6], theta[7])
    tau = complex(theta[8], theta[9])
    b_im = float(theta[10])
    d = complex(theta[11], theta[12])
    m = abs(d) ** 2 / (2 * q**3)
    b_re = (-m - math.sin(aphi) * b_im) / math.cos(aphi)
    return PParams(
        sign,
        q,
        complex(math.cos(aphi), math.sin(aphi)),
        complex(math.cos(apsi), math.sin(apsi)),
        u,
        rho,
        sigma,
        tau,
        complex(b_re, b_im),
        d,
    )


_P_COEFF_MONOS = None


def _p_coeff_monomials():
    global _P_COEFF_MONOS
    if _P_COEFF_MONOS is None:
        _P_COEFF_MONOS = [
            (0,) * 8,
            _mono(SPACE4, z1=1),
            _mono(SPACE4, z2=1),
            _mono(SPACE4, z3=1),
            _mono(SPACE4, z4=1),
            _mono(SPACE4, z1=2),
        ]
    return _P_COEFF_MONOS


def p_map_coefficient_vector(params: PParams) -> np.ndarray:
    """Flatten a symmetry map to the fixed real coefficient vector used by the rank check."""
    f = make_p_element(params, check=False)
    out = []
    for comp in f.components:
        for mono in _p_coeff_monomials():
            c = comp.coefficient(mono)
            c = complex(c)
            out.extend((c.real, c.imag))
    return np.array(out, dtype=float)


def p_jacobian_rank_at_identity(sign: str, step: float = 1e-6, cutoff: float = 1e-8) -> int:
    """Numerical rank of the chart-to-coefficients Jacobian at the identity.

    Central finite differences with the given step; rank is the number of
    singular values above the cutoff.  The group's dimension shows up as 13.
    """
    theta0 = np.zeros(13)
    theta0[0] = 1.0
    cols = []
    for i in range(13):
        tp = theta0.copy()
        tm = theta0.copy()
        tp[i] += step
        tm[i] -= step
        fp = p_map_coefficient_vector(p_chart_float(tp, sign))
        fm = p_map_coefficient_vector(p_chart_float(tm, sign))
        cols.append((fp - fm) / (2 * step))
    jac = np.column_stack(cols)
    svals = np.linalg.svd(jac, compute_uv=False)
    return int(np.sum(svals > cutoff))


# ---------------------------------------------------------------------------
# normalizing equivalences
# ---------------------------------------------------------------------------


def normalizer_strength(alpha) -> Fraction:
    """The signed quartic coefficient (12*alpha - 1)/8 of the conjugated model."""
    return (12 * as_rational(alpha) - 1) / 8


def make_normalizer(alpha) -> HoloPolyMap:
    """The printed normalizing map of the gamma(alpha) tube (floating tower).

    For alpha != 1/12 the target is the quartic model (plus variant above
    1/12, minus variant below); at alpha = 1/12 it is the signature-(2,1)
    quadric model.  The z1/z2/z3 scalings are irrational, so the printed map
    lives on floats; see :func:`make_normalizer_rational` for the exact form.
    """
    alpha = as_rational(alpha)
    af = float(alpha)
    z1, z2, z3, z4 = (_var(SPACE4, i, exact=False) for i in range(4))
    c4 = z4 * 4.0 - z1 * z2 * 2.0 - z3**2 * 2.0 - z1**2 * z3 - z1**4 * (af / 2.0)
    if alpha == Fraction(1, 12):
        s = math.sqrt(2.0)
        core = z1 + z2 + z1 * z3 + z1**3 * (1.0 / 12.0)
        anti = z1 - z2 - z1 * z3 - z1**3 * (1.0 / 12.0)
        return HoloPolyMap(
            SPACE4, SPACE4, [core * (1.0 / s), (z3 + z1**2 * 0.25) * s, anti * (1.0 / s), c4]
        )
    lam = nth_root_float(abs(float(normalizer_strength(alpha))), 4)
    s = math.sqrt(2.0)
    return HoloPolyMap(
        SPACE4,
        SPACE4,
        [
            z1 * lam,
            (z2 + z1 * z3 + z1**3 * af) * (1.0 / lam),
            (z3 + z1**2 * 0.25) * s,
            c4,
        ],
    )


@dataclass(frozen=True)
class RationalizedEquivalence:
    """A printed map split as (diagonal scaling) o (rational map).

    ``rational_map`` composed with the diagonal scaling diag(radicand_i^(1/4))
    reproduces the printed map; ``conjugated_target_rho`` is the exact pullback
    of ``target_rho`` under that scaling, so the certificate
    ``conjugated_target_rho o rational_map = c * source_rho`` is an exact
    statement equivalent to the printed one.
    """

    rational_map: HoloPolyMap
    target_rho: HermitianPolynomial
    conjugated_target_rho: HermitianPolynomial
    source_rho: HermitianPolynomial
    radicands: tuple


def make_normalizer_rational(alpha) -> RationalizedEquivalence:
    """Exact form of the normalizing equivalence for certificates."""
    alpha = as_rational(alpha)
    z1, z2, z3, z4 = (_var(SPACE4, i) for i in range(4))
    c4 = z4 * 4 - z1 * z2 * 2 - z3**2 * 2 - z1**2 * z3 - z1**4 * (alpha / 2)
    source = make_gamma(alpha).rho
    if alpha == Fraction(1, 12):
        core = z1 + z2 + z1 * z3 + z1**3 * Fraction(1, 12)
        anti = z1 - z2 - z1 * z3 - z1**3 * Fraction(1, 12)
        nmap = HoloPolyMap(SPACE4, SPACE4, [core, z3 + z1**2 * Fraction(1, 4), anti, c4])
        target = d0_surface().rho
        radicands = (Fraction(1, 4), Fraction(4), Fraction(1, 4), Fraction(1))
    else:
        s4 = normalizer_strength(alpha)
        nmap = HoloPolyMap(
            SPACE4, SPACE4, [z1, z2 + z1 * z3 + z1**3 * alpha, z3 + z1**2 * Fraction(1, 4), c4]
        )
        target = model_surface("+" if s4 > 0 else "-").rho
        radicands = (abs(s4), 1 / abs(s4), Fraction(4), Fraction(1))
    conj = pullback_diagonal_quartic(target, radicands)
    if conj is None:
        raise DomainError("diagonal conjugation unexpectedly inexact")
    return RationalizedEquivalence(nmap, target, conj, source, radicands)


# ---------------------------------------------------------------------------
# quadric models over H_{p,n}
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadricFamily:
    p: int
    n: int

    def __post_init__(self):
        if not (1 <= self.p <= self.n):
            raise DomainError("need 1 <= p <= n")

    @property
    def within_standard_convention(self) -> bool:
        """The usual normalization keeps at least as many plus as minus signs."""
        return self.n <= 2 * self.p

    @property
    def eps(self) -> tuple[int, ...]:
        return tuple(1 if j < self.p else -1 for j in range(self.n))


def quadric_space(n: int) -> VariableSpace:
    return VariableSpace(n + 1)


def quadric_hermitian_poly(p: int, n: int, exact: bool = True) -> HermitianPolynomial:
    """H_{p,n}(z, zb) = sum_{j<=p} |z_j|^2 - sum_{j>p} |z_j|^2 inside C^{n+1}."""
    fam = QuadricFamily(p, n)
    space = quadric_space(n)
    total = HermitianPolynomial.zero(space, exact)
    for j, e in enumerate(fam.eps):
        total = total + _var(space, j, exact) * _var(space, n + 1 + j, exact) * e
    return total


def quadric_surface(p: int, n: int) -> Hypersurface:
    space = quadric_space(n)
    return Hypersurface(_re(space, n) - quadric_hermitian_poly(p, n))


def make_quadric_domain(p: int, n: int, side: str) -> SidedDomain:
    return SidedDomain(quadric_surface(p, n), +1 if side == ">" else -1)


def d0_surface() -> Hypersurface:
    """The signature-(2,1) quadric model in C^4 (same object as quadric p=2, n=3)."""
    return quadric_surface(2, 3)


def d0_domain(side: str) -> SidedDomain:
    return make_quadric_domain(2, 3, side)


def quadric_transitive_map(p: int, n: int, a, b, c) -> HoloPolyMap:
    """z |-> a z + b, last |-> 2 a H(z, conj b) + a^2 last + H(b, conj b) + i c."""
    fam = QuadricFamily(p, n)
    space = quadric_space(n)
    exact_in = isinstance(a, (int, Fraction)) and isinstance(c, (int, Fraction)) and all(
        isinstance(x, GaussianRational) for x in b
    )
    if exact_in:
        a = as_rational(a)
        if a == 0:
            raise DomainError("scale a must be nonzero")
        comps = [
            _var(space, j) * a + HermitianPolynomial.constant(space, b[j]) for j in range(n)
        ]
        pairing = HermitianPolynomial.zero(space)
        hbb = GaussianRational(0)
        for j, e in enumerate(fam.eps):
            pairing = pairing + _var(space, j) * (b[j].conjugate() * e)
            hbb = hbb + GaussianRational(b[j].abs2()) * e
        last = (
            pairing * (2 * a)
            + _var(space, n) * a**2
            + HermitianPolynomial.constant(space, hbb + GaussianRational(0, c))
        )
        return HoloPolyMap(space, space, comps + [last])
    af = float(a)
    if af == 0:
        raise DomainError("scale a must be nonzero")
    bf = [complex(x) for x in b]
    comps = [
        _var(space, j, exact=False) * af
        + HermitianPolynomial.constant(space, bf[j], exact=False)
        for j in range(n)
    ]
    pairing = HermitianPolynomial.zero(space, exact=False)
    hbb = 0.0
    for j, e in enumerate(fam.eps):
        pairing = pairing + _var(space, j, exact=False) * (bf[j].conjugate() * e)
        hbb += e * abs(bf[j]) ** 2
    last = (
        pairing * (2 * af)
        + _var(space, n, exact=False) * af**2
        + HermitianPolynomial.constant(space, complex(hbb, float(c)), exact=False)
    )
    return HoloPolyMap(space, space, comps + [last])


def quadric_base_point(p: int, n: int, side: str):
    last = GaussianRational(1 if side == ">" else -1)
    return [GaussianRational(0)] * n + [last]


@dataclass(frozen=True)
class QuadricTransitivityResult:
    a: object
    b: tuple
    c: object
    exact: bool


def quadric_transitive_params(p: int, n: int, side: str, target) -> QuadricTransitivityResult:
    """Solve for (a, b, c) carrying the base point to a target strictly inside."""
    fam = QuadricFamily(p, n)
    vals = [
        v if isinstance(v, GaussianRational) else GaussianRational(as_rational(v))
        for v in target
    ]
    b = tuple(vals[:n])
    hbb = Fraction(0)
    for j, e in enumerate(fam.eps):
        hbb += e * b[j].abs2()
    x_last = vals[n].re
    c = vals[n].im
    defect = x_last - hbb
    if side == ">":
        if defect <= 0:
            raise DomainError("target is not strictly inside the '>' side")
        a2 = defect
    else:
        if defect >= 0:
            raise DomainError("target is not strictly inside the '<' side")
        a2 = -defect
    a = sqrt_exact(a2)
    if a is not None:
        return QuadricTransitivityResult(a, b, c, True)
    return QuadricTransitivityResult(math.sqrt(float(a2)), b, c, False)


def quadric_tube_base(p: int, n: int) -> RealPolynomial:
    """The graph function H_{p,n}(x, x) of the tube realisation's target base."""
    fam = QuadricFamily(p, n)
    space = VariableSpace(n)
    total = HermitianPolynomial.zero(space)
    for j, e in enumerate(fam.eps):
        total = total + _var(space, j) ** 2 * e
    return RealPolynomial(total)


def quadric_tube_surface(p: int, n: int) -> Hypersurface:
    """Tube over the graph x_{n+1} = H_{p,n}(x, x), oriented as Re z_{n+1} - H(x, x)."""
    space = quadric_space(n)
    fam = QuadricFamily(p, n)
    total = HermitianPolynomial.zero(space)
    for j, e in enumerate(fam.eps):
        total = total + _re(space, j) ** 2 * e
    return Hypersurface(_re(space, n) - total)


def make_tube_realisation(p: int, n: int) -> HoloPolyMap:
    """Printed map z |-> sqrt(2) z, last |-> last + H(z, z), on the floating tower."""
    fam = QuadricFamily(p, n)
    space = quadric_space(n)
    s = math.sqrt(2.0)
    comps = [_var(space, j, exact=False) * s for j in range(n)]
    hol = HermitianPolynomial.zero(space, exact=False)
    for j, e in enumerate(fam.eps):
        hol = hol + _var(space, j, exact=False) ** 2 * float(e)
    comps.append(_var(space, n, exact=False) + hol)
    return HoloPolyMap(space, space, comps)


def make_tube_realisation_rational(p: int, n: int) -> RationalizedEquivalence:
    """Exact form: the map transforms the quadric model onto the tube over H(x,x)."""
    fam = QuadricFamily(p, n)
    space = quadric_space(n)
    comps = [_var(space, j) for j in range(n)]
    hol = HermitianPolynomial.zero(space)
    for j, e in enumerate(fam.eps):
        hol = hol + _var(space, j) ** 2 * e
    comps.append(_var(space, n) + hol)
    nmap = HoloPolyMap(space, space, comps)
    target = quadric_tube_surface(p, n).rho
    radicands = tuple([Fraction(4)] * n + [Fraction(1)])
    conj = pullback_diagonal_quartic(target, radicands)
    if conj is None:
        raise DomainError("diagonal conjugation unexpectedly inexact")
    return RationalizedEquivalence(nmap, target, conj, quadric_surface(p, n).rho, radicands)


# ---------------------------------------------------------------------------
# Cayley tube
# ---------------------------------------------------------------------------


def cayley_graph() -> RealPolynomial:
    """x3 = x1 x2 + x1^3 as the graph function f(x1, x2)."""
    space = VariableSpace(2)
    x1, x2 = (_var(space, i) for i in range(2))
    return RealPolynomial(x1 * x2 + x1**3)


def cayley_tube_surface() -> Hypersurface:
    x1, x2 = (_re(SPACE3, i) for i in range(2))
    return Hypersurface(_re(SPACE3, 2) - x1 * x2 - x1**3)


def make_cayley_map() -> HoloPolyMap:
    """Printed equivalence of the Cayley tube with the (1,2) quadric model (floats)."""
    z1, z2, z3 = (_var(SPACE3, i, exact=False) for i in range(3))
    s = math.sqrt(2.0)
    core = z1 + z2 + z1**2 * 1.5
    anti = z1 - z2 - z1**2 * 1.5
    return HoloPolyMap(
        SPACE3, SPACE3, [core * (1.0 / s), anti * (1.0 / s), z3 * 4.0 - z1 * z2 * 2.0 - z1**3]
    )


def make_cayley_rational() -> RationalizedEquivalence:
    z1, z2, z3 = (_var(SPACE3, i) for i in range(3))
    core = z1 + z2 + z1**2 * Fraction(3, 2)
    anti = z1 - z2 - z1**2 * Fraction(3, 2)
    nmap = HoloPolyMap(SPACE3, SPACE3, [core, anti, z3 * 4 - z1 * z2 * 2 - z1**3])
    target = quadric_surface(1, 2).rho
    radicands = (Fraction(1, 4), Fraction(1, 4), Fraction(1))
    conj = pullback_diagonal_quartic(target, radicands)
    if conj is None:
        raise DomainError("diagonal conjugation unexpectedly inexact")
    return RationalizedEquivalence(nmap, target, conj, cayley_tube_surface().rho, radicands)


def make_cayley_objects() -> tuple[Hypersurface, HoloPolyMap]:
    return cayley_tube_surface(), make_cayley_map()


# ---------------------------------------------------------------------------
# degree-4 one-parameter family of graphs in R^7
# ---------------------------------------------------------------------------

SIGMA_SUP = 17.0 + 12.0 * math.sqrt(2.0)  # ~33.9706; the largest radicand vanishes here


def make_sigma_surface(sigma: float) -> RealPolynomial:
    """The degree-4 graph in x1..x7 with parameter sigma in [1, 17 + 12*sqrt(2)).

    Three coefficients are square roots, so the polynomial lives on the
    floating tower.  No parameter value in the interval makes all radicands
    rational squares simultaneously (2(1+sigma) and 3*sigma cannot both be
    rational squares), so there is no exact special case to expose.
    """
    s = float(sigma)
    if not (1.0 <= s < SIGMA_SUP):
        raise DomainError(f"sigma must lie in [1, {SIGMA_SUP}), got {s}")
    r1 = 2.0 * (1.0 + s)
    r2 = 3.0 * s
    r3 = (-s * s + 34.0 * s - 1.0) / (3.0 * s)
    if r1 < 0 or r2 < 0 or r3 < 0:
        raise DomainError("negative radicand; sigma outside the valid interval")
    space = VariableSpace(7)
    x = [_var(space, i, exact=False) for i in range(7)]
    f = (
        x[0] ** 2 + x[1] ** 2 + x[2] ** 2 + x[3] * x[4] + x[5] * x[6]
        + x[0] * x[3] * x[5] * (2.0 * math.sqrt(r1))
        + x[1] * x[5] ** 2 * (2.0 * math.sqrt(r2))
        + x[1] * x[3] ** 2 * ((1.0 + s) / math.sqrt(r2))
        + x[2] * x[3] ** 2 * math.sqrt(r3)
        + (x[3] ** 2 + x[5] ** 2) * (x[3] ** 2 + x[5] ** 2 * s)
    )
    return RealPolynomial(f)


def sigma_quadratic_core() -> RealPolynomial:
    """The sigma-independent quadratic part x1^2+x2^2+x3^2+x4 x5+x6 x7."""
    space = VariableSpace(7)
    x = [_var(space, i) for i in range(7)]
    return RealPolynomial(x[0] ** 2 + x[1] ** 2 + x[2] ** 2 + x[3] * x[4] + x[5] * x[6])


# ---------------------------------------------------------------------------
# non-hyperbolicity witnesses: the stated affine complex lines
# ---------------------------------------------------------------------------


def stated_lines() -> dict:
    """The affine complex lines each catalog domain is known to contain.

    Maps a domain identifier to (base point, direction, expected witness
    grade).  The quartic-model domains contain lines on which the defining
    function is literally constant; the quadric domains contain lines on
    which it is a sign-definite polynomial in |t|^2.  Quadric '>' sides only
    carry a line when p < n; with p = n that side is a ball in disguise and
    has no line, so it does not appear here.
    """
    g0, g1 = GaussianRational(0), GaussianRational(1)
    lines = {}
    for name, sign in (("D_plus", "+"), ("D_minus", "-")):
        lines[f"{name}(side=>)"] = ((g0, g0, g0, g1), (g0, g1, g0, g0), "constant")
        lines[f"{name}(side=<)"] = ((g0, g0, g0, -g1), (g0, g1, g0, g0), "constant")
    for p, n in ((1, 1), (1, 2), (2, 3), (5, 7)):
        zeros = [g0] * (n + 1)
        below = list(zeros)
        below[n] = -g1
        e1 = [g0] * (n + 1)
        e1[0] = g1
        lines[f"quadric(p={p},n={n},side=<)"] = (tuple(below), tuple(e1), "definite")
        if p < n:
            above = list(zeros)
            above[n] = g1
            en = [g0] * (n + 1)
            en[n - 1] = g1
            lines[f"quadric(p={p},n={n},side=>)"] = (tuple(above), tuple(en), "definite")
    return lines


# ---------------------------------------------------------------------------
# negative controls
# ---------------------------------------------------------------------------


def control_bad_constraint(sign: str = "+") -> HoloPolyMap:
    """A would-be symmetry whose d is off by one: the constraint fails, and so
    must the certificate."""
    good = PParams(
        sign,
        Fraction(2),
        UnimodularPhase(GaussianRational(1)),
        UnimodularPhase(GaussianRational(1)),
        Fraction(0),
        GaussianRational(0),
        GaussianRational(0),
        GaussianRational(0),
        GaussianRational(-1),
        GaussianRational(4),
    ).validate()
    bad = PParams(
        sign, good.q, good.phi_phase, good.psi_phase, good.u,
        good.rho, good.sigma, good.tau, good.b, good.d + GaussianRational(1),
    )
    return make_p_element(bad, check=False)


def control_wrong_phase(sign: str = "+") -> HoloPolyMap:
    """A map built with the second phase misread as the first in one coefficient.

    With distinct phases and a nonzero z3-translation the invariance identity
    fails, confirming the correct reading of that coefficient.
    """
    params = PParams(
        sign,
        Fraction(1),
        phase_from_parameter(Fraction(1, 2)),
        phase_from_parameter(Fraction(1, 3)),
        Fraction(0),
        GaussianRational(0),
        GaussianRational(0),
        GaussianRational(1),
        GaussianRational(0),
        GaussianRational(0),
    ).validate()
    return make_p_element(params, misread_phase=True)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegistryEntry:
    ident: str
    kind: str
    description: str
    obj: object


def _fmt_rat(x: Fraction) -> str:
    return str(x)


def resolve(ident: str) -> RegistryEntry:
    """Resolve a stable string identifier to a catalog object.

    Parametrized forms: ``gamma(alpha=1/12)``, ``omega(alpha=1,side=>)``,
    ``quadric(p=2,n=3,side=>)``, ``quadric_surface(p=1,n=2)``,
    ``tube_realisation(p=1,n=1)``, ``normalizer(alpha=7/12)``,
    ``sigma(sigma=1)``, ``isotropy(sign=+)``.  Plain forms: ``M_plus``,
    ``M_minus``, ``D_plus(side=>)``, ``D0(side=<)``, ``cayley``,
    ``cayley_map``, ``P_plus``, ``P_minus``, ``control:bad_constraint``,
    ``control:wrong_phase``.
    """
    name, args = _parse_ident(ident)
    if name == "gamma":
        alpha = as_rational(args["alpha"])
        return RegistryEntry(
            ident, "hypersurface",
            f"tube over the graph x4 = x1 x2 + x3^2 + x1^2 x3 + ({_fmt_rat(alpha)}) x1^4",
            make_gamma(alpha),
        )
    if name == "omega":
        alpha = as_rational(args["alpha"])
        side = args["side"]
        return RegistryEntry(
            ident, "domain",
            f"tube domain on the '{side}' side of gamma(alpha={_fmt_rat(alpha)})",
            make_omega(alpha, side),
        )
    if name in ("M_plus", "M_minus"):
        sign = "+" if name == "M_plus" else "-"
        return RegistryEntry(
            ident, "hypersurface",
            f"quartic model Re z4 = z1 zb2 + z2 zb1 + |z3|^2 {'+' if sign == '+' else '-'} |z1|^4",
            model_surface(sign),
        )
    if name in ("D_plus", "D_minus"):
        sign = "+" if name == "D_plus" else "-"
        side = args["side"]
        return RegistryEntry(
            ident, "domain", f"'{side}' side of the {name[2:]} quartic model",
            model_domain(sign, side),
        )
    if name == "D0":
        side = args["side"]
        return RegistryEntry(
            ident, "domain", f"'{side}' side of the signature-(2,1) quadric in C^4",
            d0_domain(side),
        )
    if name == "quadric":
        p, n, side = int(args["p"]), int(args["n"]), args["side"]
        return RegistryEntry(
            ident, "domain", f"'{side}' side of the quadric over H_{{{p},{n}}}",
            make_quadric_domain(p, n, side),
        )
    if name == "quadric_surface":
        p, n = int(args["p"]), int(args["n"])
        return RegistryEntry(
            ident, "hypersurface", f"quadric Re z_{n + 1} = H_{{{p},{n}}}(z, zb)",
            quadric_surface(p, n),
        )
    if name == "tube_realisation":
        p, n = int(args["p"]), int(args["n"])
        return RegistryEntry(
            ident, "map", f"tube realisation of the H_{{{p},{n}}} quadric sides",
            make_tube_realisation(p, n),
        )
    if name == "normalizer":
        alpha = as_rational(args["alpha"])
        return RegistryEntry(
            ident, "map", f"normalizing equivalence for the gamma(alpha={_fmt_rat(alpha)}) tubes",
            make_normalizer(alpha),
        )
    if name == "cayley":
        return RegistryEntry(
            ident, "hypersurface", "tube over the Cayley graph x3 = x1 x2 + x1^3",
            cayley_tube_surface(),
        )
    if name == "cayley_map":
        return RegistryEntry(
            ident, "map", "equivalence of the Cayley tube with the H_{1,2} quadric",
            make_cayley_map(),
        )
    if name == "sigma":
        s = float(Fraction(args["sigma"])) if "/" in args["sigma"] else float(args["sigma"])
        return RegistryEntry(
            ident, "graph", f"degree-4 graph family in R^7 at parameter {s}",
            make_sigma_surface(s),
        )
    if name in ("P_plus", "P_minus"):
        sign = "+" if name == "P_plus" else "-"
        return RegistryEntry(
            ident, "group",
            "13-parameter symmetry group of the quartic model (identity element shown)",
            make_p_element(identity_p_params(sign)),
        )
    if name == "isotropy":
        sign = args["sign"]
        return RegistryEntry(
            ident, "matrix_family",
            "pairing-form-preserving isotropy matrices of the quartic model",
            make_isotropy_matrix(identity_p_params(sign)),
        )
    if name == "control:bad_constraint":
        return RegistryEntry(
            ident, "map", "negative control: symmetry shape with the d-constraint broken",
            control_bad_constraint(args.get("sign", "+")),
        )
    if name == "control:wrong_phase":
        return RegistryEntry(
            ident, "map", "negative control: second phase misread in one coefficient",
            control_wrong_phase(args.get("sign", "+")),
        )
    raise KeyError(f"unknown registry identifier {ident!r}")


def _parse_ident(ident: str) -> tuple[str, dict]:
    ident = ident.strip().replace("σ", "sigma")
    if "(" not in ident:
        return ident, {}
    if not ident.endswith(")"):
        raise KeyError(f"malformed identifier {ident!r}")
    name, body = ident[:-1].split("(", 1)
    args = {}
    if body.strip():
        for piece in body.split(","):
            if "=" not in piece:
                raise KeyError(f"malformed identifier {ident!r}")
            k, v = piece.split("=", 1)
            args[k.strip()] = v.strip()
    return name.strip(), args


def known_identifiers() -> list[str]:
    """Representative identifiers, one per catalog family (parameters vary freely)."""
    return [
        "gamma(alpha=0)", "gamma(alpha=1/12)", "gamma(alpha=1)", "gamma(alpha=-2)",
        "omega(alpha=1,side=>)",
        "M_plus", "M_minus",
        "D_plus(side=>)", "D_plus(side=<)", "D_minus(side=>)", "D_minus(side=<)",
        "D0(side=>)", "D0(side=<)",
        "quadric(p=1,n=1,side=<)", "quadric(p=1,n=2,side=>)",
        "quadric(p=2,n=3,side=>)", "quadric(p=5,n=7,side=>)",
        "quadric_surface(p=3,n=3)",
        "tube_realisation(p=1,n=1)", "tube_realisation(p=1,n=2)", "tube_realisation(p=2,n=3)",
        "normalizer(alpha=7/12)", "normalizer(alpha=-1/4)", "normalizer(alpha=1/12)",
        "cayley", "cayley_map",
        "sigma(sigma=1)", "sigma(sigma=2)", "sigma(sigma=17)", "sigma(sigma=33.9)",
        "P_plus", "P_minus",
        "isotropy(sign=+)",
        "control:bad_constraint", "control:wrong_phase",
    ]
