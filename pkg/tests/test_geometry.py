"""Membership, Levi forms, tube Hessian shortcut, and line witnesses."""

import random
from fractions import Fraction

import numpy as np
import pytest

from tubecert.catalog import (
    cayley_graph,
    gamma_graph,
    make_gamma,
    make_omega,
    make_p_element,
    make_quadric_domain,
    model_domain,
    model_surface,
    quadric_surface,
    random_p_params,
    stated_lines,
    make_sigma_surface,
    sigma_quadratic_core,
    resolve,
)
from tubecert.errors import NotAHypersurfacePoint
from tubecert.geometry import (
    Hypersurface,
    SidedDomain,
    contains_complex_line,
    levi_form,
    lifted_tube,
    sample_boundary_points,
    side_of,
    solve_graph_re_last,
    tube_hessian_signature,
)
from tubecert.maps import invariance_certificate
from tubecert.poly import HermitianPolynomial, RealPolynomial, VariableSpace
from tubecert.scalars import GaussianRational


def test_side_of_examples():
    d_plus_above = model_domain("+", ">")
    assert side_of(d_plus_above, [0, 0, 0, 1]) == "inside"
    assert side_of(d_plus_above, [0, 0, 0, 0]) == "on_boundary"
    d_plus_below = model_domain("+", "<")
    assert side_of(d_plus_below, [0, 0, 0, -1]) == "inside"
    assert side_of(d_plus_above, [0, 0, 0, -1]) == "outside"
    # float path and boundary band
    assert side_of(d_plus_above, [0j, 0j, 0j, 1e-15 + 0j]) == "on_boundary"
    assert side_of(d_plus_above, [0j, 0j, 0j, 0.5 + 3j]) == "inside"


def test_side_of_base_point_in_every_gamma_domain():
    for alpha in (0, Fraction(1, 12), 1, -2):
        omega = make_omega(alpha, ">")
        assert side_of(omega, [0, 0, 0, 1]) == "inside"
        assert side_of(make_omega(alpha, "<"), [0, 0, 0, -1]) == "inside"


def test_levi_signature_eigenvalue_oracle_at_origin():
    """The restricted Hessian at the origin is the pairing block; check against numpy."""
    oracle = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]], dtype=complex)
    eigs = np.linalg.eigvalsh(oracle)
    assert (np.sum(eigs > 0), np.sum(eigs < 0)) == (2, 1)
    data = levi_form(model_surface("+"), [0, 0, 0, 0])
    assert data.signature == (2, 1, 0)
    assert data.nondegenerate


def test_levi_sphere_quadric():
    data = levi_form(quadric_surface(3, 3), [0, 0, 0, 0])
    assert data.signature == (3, 0, 0)


def test_levi_minus_model_away_from_origin():
    surface = model_surface("-")
    re_z4 = solve_graph_re_last(
        surface.rho, [GaussianRational(1), GaussianRational(0), GaussianRational(0)]
    )
    assert re_z4 == Fraction(-1)
    data = levi_form(surface, [1.0, 0.0, 0.0, complex(-1.0, 0.7)])
    assert data.signature == (2, 1, 0)
    assert data.min_abs_eigenvalue > 1e-9 * data.spectral_radius


def test_levi_zero_gradient_rejected():
    sp = VariableSpace(2)
    z1, zb1 = HermitianPolynomial.variable(sp, 0), HermitianPolynomial.variable(sp, 2)
    cone = Hypersurface(z1 * zb1)
    with pytest.raises(NotAHypersurfacePoint):
        levi_form(cone, [0, 0])


def test_boundary_sampling_levi_signature():
    rng = random.Random(99)
    for sign in "+-":
        surface = model_surface(sign)
        points = sample_boundary_points(surface, rng, 50)
        for pt in points:
            assert surface.rho.evaluate(pt).re == 0  # exactly on the surface
            data = levi_form(surface, [complex(v) for v in pt])
            assert data.signature == (2, 1, 0)
            assert data.min_abs_eigenvalue > 1e-9 * data.spectral_radius


def test_tube_hessian_examples():
    # one real variable: f = x1^2 at 0 has signature (1,0,0)
    sp1 = VariableSpace(1)
    f1 = RealPolynomial(HermitianPolynomial.variable(sp1, 0) ** 2)
    assert tube_hessian_signature(f1, [0.0]) == (1, 0, 0)
    # sigma-independent quadratic core has signature (5,2)
    assert tube_hessian_signature(sigma_quadratic_core(), [0.0] * 7) == (5, 2, 0)
    # full family at the origin: quartic terms vanish there
    assert tube_hessian_signature(make_sigma_surface(1.0), [0.0] * 7) == (5, 2, 0)


def test_tube_hessian_agrees_with_levi_on_lift():
    rng = random.Random(100)
    graphs = [gamma_graph(a) for a in (0, Fraction(1, 12), 1, -1)] + [cayley_graph()]
    for f in graphs:
        tube = lifted_tube(f)
        for _ in range(20):
            x = [rng.uniform(-2, 2) for _ in range(f.space.n)]
            z = [complex(v, rng.uniform(-1, 1)) for v in x]
            z.append(complex(f.evaluate_real(x), rng.uniform(-1, 1)))
            # the lift only constrains real parts; adjust to stay on the surface
            z[: f.space.n] = [complex(v, zi.imag) for v, zi in zip(x, z)]
            sig = tube_hessian_signature(f, x)
            data = levi_form(tube, z)
            assert sig == data.signature_signed


def test_side_invariance_under_certified_automorphisms():
    rng = random.Random(101)
    for sign in "+-":
        domain = model_domain(sign, ">")
        params = random_p_params(rng, sign)
        f = make_p_element(params)
        cert = invariance_certificate(domain.rho, f)
        assert cert.exact and cert.factor_is_positive_real
        for _ in range(100):
            pt = [
                GaussianRational(
                    Fraction(rng.randint(-8, 8), 4), Fraction(rng.randint(-8, 8), 4)
                )
                for _ in range(4)
            ]
            assert side_of(domain, pt) == side_of(domain, f.apply(pt))


def test_line_witness_constant_grade():
    domain = model_domain("+", ">")
    w = contains_complex_line(domain, [0, 0, 0, 1], [0, 1, 0, 0])
    assert w.certified and w.grade == "constant"
    assert str(w.restriction) == "(1)"
    below = model_domain("+", "<")
    w2 = contains_complex_line(below, [0, 0, 0, -1], [0, 1, 0, 0])
    assert w2.certified and w2.grade == "constant"


def test_line_witness_definite_grade_and_failure():
    below = make_quadric_domain(1, 1, "<")
    w = contains_complex_line(below, [0, -1], [1, 0])
    assert w.certified and w.grade == "definite"
    # the same direction on the '>' side of the ball-like quadric must fail
    above = make_quadric_domain(1, 1, ">")
    w2 = contains_complex_line(above, [0, 1], [1, 0])
    assert not w2.inside_at_all_samples
    assert w2.grade == "sampled"
    assert w2.first_failure is not None and abs(w2.first_failure) >= 1.0


def test_all_stated_lines_certify():
    for ident, (base, direction, grade) in stated_lines().items():
        domain = resolve(ident).obj
        w = contains_complex_line(domain, base, direction)
        assert w.certified, ident
        assert w.grade == grade, ident


def test_gradient_nonzero_at_catalog_sample_points():
    rng = random.Random(103)
    surfaces = [
        model_surface("+"),
        model_surface("-"),
        make_gamma(Fraction(1, 12)),
        quadric_surface(2, 3),
    ]
    for surface in surfaces:
        grad = surface.gradient_at([0.0] * surface.space.n)
        assert max(abs(g) for g in grad) > 1e-9
        for pt in sample_boundary_points(surface, rng, 10):
            grad = surface.gradient_at([complex(v) for v in pt])
            assert max(abs(g) for g in grad) > 1e-9


def test_negative_certificate_factor_means_side_swap():
    sp = VariableSpace(1)
    z1 = HermitianPolynomial.variable(sp, 0)
    zb1 = HermitianPolynomial.variable(sp, 1)
    half_plane = Hypersurface((z1 + zb1) * Fraction(1, 2))  # rho = Re z1
    from tubecert.maps import HoloPolyMap

    negate = HoloPolyMap(sp, sp, [z1 * -1])
    cert = invariance_certificate(half_plane.rho, negate)
    assert cert.exact and cert.factor == GaussianRational(-1)
    assert not cert.factor_is_positive_real
    domain = SidedDomain(half_plane, +1)
    assert side_of(domain, [GaussianRational(1)]) == "inside"
    assert side_of(domain, negate.apply([GaussianRational(1)])) == "outside"


def test_graph_solver_matches_evaluation():
    rng = random.Random(102)
    surface = make_gamma(Fraction(2, 3))
    for _ in range(20):
        zp = [
            GaussianRational(Fraction(rng.randint(-4, 4), 2), Fraction(rng.randint(-4, 4), 2))
            for _ in range(3)
        ]
        re4 = solve_graph_re_last(surface.rho, zp)
        value = surface.rho.evaluate(zp + [GaussianRational(re4, Fraction(1, 3))])
        assert value.re == 0 and value.im == 0
