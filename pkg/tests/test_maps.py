"""Affine lifts, composition, pullbacks, and invariance certificates."""

import random
from fractions import Fraction

import pytest

from tubecert.catalog import (
    make_gamma,
    make_generator,
    model_surface,
    random_p_params,
    make_p_element,
)
from tubecert.errors import SpaceError
from tubecert.maps import (
    AffineMapR,
    HoloPolyMap,
    compose,
    equivalence_certificate,
    invariance_certificate,
    lift_affine,
    pullback,
    pullback_diagonal_quartic,
)
from tubecert.poly import HermitianPolynomial, VariableSpace
from tubecert.scalars import GaussianRational

SP4 = VariableSpace(4)


def rand_affine(rng, n=4):
    while True:
        m = [[Fraction(rng.randint(-2, 2), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        t = [Fraction(rng.randint(-2, 2)) for _ in range(n)]
        f = AffineMapR(m, t)
        if f.determinant != 0:
            return f


def test_affine_apply_compose_inverse():
    rng = random.Random(1)
    for _ in range(50):
        f, g = rand_affine(rng), rand_affine(rng)
        x = [Fraction(rng.randint(-3, 3)) for _ in range(4)]
        assert f.compose(g).apply(x) == f.apply(g.apply(x))
        finv = f.inverse()
        assert finv.apply(f.apply(x)) == x
    ident = AffineMapR.identity(4)
    assert ident.determinant == 1


def test_lift_identity_and_examples():
    ident = AffineMapR.identity(4)
    assert lift_affine(ident) == HoloPolyMap.identity(SP4)
    # weighted scaling at q=2 lifts to (2 z1, 8 z2, 4 z3, 16 z4)
    phi2 = lift_affine(make_generator("phi", 0, 2))
    z = [HermitianPolynomial.variable(SP4, i) for i in range(4)]
    assert list(phi2.components) == [z[0] * 2, z[1] * 8, z[2] * 4, z[3] * 16]
    # shift generator at s=1: z2 -> z2 + 1, z4 -> z1 + z4
    mu1 = lift_affine(make_generator("mu", 0, 1))
    assert mu1.components[1] == z[1] + HermitianPolynomial.constant(SP4, 1)
    assert mu1.components[3] == z[0] + z[3]


def test_lift_is_a_homomorphism():
    rng = random.Random(2)
    for _ in range(30):
        f, g = rand_affine(rng), rand_affine(rng)
        assert lift_affine(f.compose(g)) == compose(lift_affine(f), lift_affine(g))


def test_lift_commutes_with_real_parts():
    rng = random.Random(3)
    for _ in range(30):
        f = rand_affine(rng)
        x = [Fraction(rng.randint(-3, 3)) for _ in range(4)]
        lifted = lift_affine(f)
        image = lifted.apply([GaussianRational(v) for v in x])
        assert [w.re for w in image] == f.apply(x)
        assert all(w.im == 0 for w in image)


def test_compose_identity_and_spaces():
    rng = random.Random(4)
    f = lift_affine(rand_affine(rng))
    assert compose(f, HoloPolyMap.identity(SP4)) == f
    assert compose(HoloPolyMap.identity(SP4), f) == f
    sp3 = VariableSpace(3)
    with pytest.raises(SpaceError):
        compose(f, HoloPolyMap.identity(sp3))


def test_pullback_identity_and_realness():
    rng = random.Random(5)
    rho = make_gamma(Fraction(1, 3)).rho
    assert pullback(rho, HoloPolyMap.identity(SP4)) == rho
    for _ in range(100):
        f = lift_affine(rand_affine(rng))
        assert pullback(rho, f).is_real_valued()


def test_weighted_scaling_pullback_factor():
    rho = model_surface("+").rho
    rng = random.Random(6)
    for _ in range(20):
        q = Fraction(rng.randint(1, 8), rng.randint(1, 4))
        scale = AffineMapR(
            [
                [q, 0, 0, 0],
                [0, q**3, 0, 0],
                [0, 0, q**2, 0],
                [0, 0, 0, q**4],
            ],
            [0, 0, 0, 0],
        )
        cert = invariance_certificate(rho, lift_affine(scale))
        assert cert.exact and cert.factor == GaussianRational(q**4)


def test_certificate_functoriality():
    rng = random.Random(7)
    rho = model_surface("+").rho
    for _ in range(50):
        a = make_p_element(random_p_params(rng, "+"))
        b = make_p_element(random_p_params(rng, "+"))
        ca = invariance_certificate(rho, a)
        cb = invariance_certificate(rho, b)
        cab = invariance_certificate(rho, compose(a, b))
        assert ca.exact and cb.exact and cab.exact
        assert cab.factor == ca.factor * cb.factor


def test_certificate_missing_lead_monomial():
    rho = model_surface("+").rho
    collapse = HoloPolyMap(
        SP4, SP4, [HermitianPolynomial.zero(SP4) for _ in range(4)]
    )
    cert = invariance_certificate(rho, collapse)
    assert not cert.exact
    assert cert.residual.is_zero()  # pullback of rho under the zero map is 0
    assert cert.factor == GaussianRational(0)


def test_identity_certificate():
    rho = model_surface("-").rho
    cert = invariance_certificate(rho, HoloPolyMap.identity(SP4))
    assert cert.exact and cert.factor == GaussianRational(1)
    assert cert.factor_is_positive_real


def test_diagonal_quartic_pullback():
    # rho with monomials whose accumulated radicands are fourth powers
    z1, zb1 = HermitianPolynomial.variable(SP4, 0), HermitianPolynomial.variable(SP4, 4)
    z4, zb4 = HermitianPolynomial.variable(SP4, 3), HermitianPolynomial.variable(SP4, 7)
    rho = (z4 + zb4) * Fraction(1, 2) - z1 * zb1
    # diag(2^(1/4) per z1, 1): |z1|^2 picks up sqrt(2): not a rational fourth power
    assert pullback_diagonal_quartic(rho, [2, 1, 1, 1]) is None
    # diag(4^(1/4)) = sqrt(2): |z1|^2 picks up 4^(1/2) = 2
    scaled = pullback_diagonal_quartic(rho, [4, 1, 1, 1])
    assert scaled == (z4 + zb4) * Fraction(1, 2) - z1 * zb1 * 2
    # scaling with radicand 1 everywhere is the identity
    assert pullback_diagonal_quartic(rho, [1, 1, 1, 1]) == rho


def test_linear_part_and_determinant():
    rng = random.Random(8)
    f = rand_affine(rng)
    lifted = lift_affine(f)
    det = lifted.linear_determinant()
    assert det == GaussianRational(f.determinant)


def test_affine_literal_round_trip():
    from tubecert.maps import format_affine, parse_affine

    rng = random.Random(9)
    for _ in range(30):
        f = rand_affine(rng)
        assert parse_affine(format_affine(f)) == f
    with pytest.raises(ValueError):
        parse_affine("row = 1 0\nrow = 0 1\n")  # no translation


def test_holo_map_literal_round_trip():
    from tubecert.maps import format_holo_map, parse_holo_map
    from tubecert.catalog import make_normalizer_rational, make_p_element, random_p_params

    rng = random.Random(10)
    maps = [
        make_normalizer_rational(Fraction(7, 12)).rational_map,
        make_p_element(random_p_params(rng, "+")),
        HoloPolyMap.identity(SP4),
    ]
    for f in maps:
        assert parse_holo_map(format_holo_map(f)) == f


def test_equivalence_certificate_between_distinct_surfaces():
    # doubling map carries {Re z4 = |z1|^2} data onto itself with factor 4 vs 2
    sp = VariableSpace(2)
    z1 = HermitianPolynomial.variable(sp, 0)
    z2 = HermitianPolynomial.variable(sp, 1)
    zb1 = HermitianPolynomial.variable(sp, 2)
    zb2 = HermitianPolynomial.variable(sp, 3)
    rho_a = (z2 + zb2) * Fraction(1, 2) - z1 * zb1
    rho_b = (z2 + zb2) * Fraction(1, 2) - z1 * zb1 * 4
    doubling = HoloPolyMap(sp, sp, [z1 * 2, z2])
    cert = equivalence_certificate(rho_a, doubling, rho_b)
    assert cert.exact and cert.factor == GaussianRational(1)
