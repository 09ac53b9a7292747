"""Polynomial engine: ring axioms, calculus, substitution, literals.

Derived expectations are computed by independent oracles living in this file:
a raw term-walking evaluator that treats all 2n variables as independent, and
hand-entered literals.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tubecert.errors import SpaceError
from tubecert.poly import (
    HermitianPolynomial,
    RealPolynomial,
    VariableSpace,
    format_poly,
    parse_poly,
)
from tubecert.scalars import GaussianRational

SP2 = VariableSpace(2)
SP4 = VariableSpace(4)


def var(space, i):
    return HermitianPolynomial.variable(space, i)


def const(space, c):
    return HermitianPolynomial.constant(space, c)


def rand_fraction(rng):
    return Fraction(rng.randint(-6, 6), rng.randint(1, 4))


def rand_poly(rng, space, max_terms=4, max_deg=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_deg) for _ in range(2 * space.n))
        terms[exps] = GaussianRational(rand_fraction(rng), rand_fraction(rng))
    return HermitianPolynomial(space, terms)


def oracle_eval(p, values):
    """Independent evaluator: raw term walk with explicit values for all 2n slots."""
    total = GaussianRational(0)
    for exps, coeff in p.terms.items():
        term = coeff
        for v, k in zip(values, exps):
            for _ in range(k):
                term = term * v
        total = total + term
    return total


def test_ring_axioms_on_random_triples():
    rng = random.Random(42)
    for _ in range(500):
        p, q, r = (rand_poly(rng, SP2) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p - p == HermitianPolynomial.zero(SP2)


def test_degree_additivity_and_zero_degree():
    rng = random.Random(43)
    zero = HermitianPolynomial.zero(SP2)
    assert zero.degree() == float("-inf")
    for _ in range(200):
        p, q = rand_poly(rng, SP2), rand_poly(rng, SP2)
        if p.is_zero() or q.is_zero():
            continue
        assert (p * q).degree() == p.degree() + q.degree()


def test_space_mismatch_raises():
    with pytest.raises(SpaceError):
        var(SP2, 0) + var(SP4, 0)


def test_add_examples():
    z1 = var(SP4, 0)
    assert (z1 + (-z1)).is_zero()
    pairing = var(SP4, 0) * var(SP4, 5) + var(SP4, 1) * var(SP4, 4)
    # hand-entered literal of the same thing
    lit = parse_poly("(1)*z1^1*zb2^1 + (1)*z2^1*zb1^1", SP4)
    assert pairing == lit


def test_quartic_assembly_matches_hand_literal():
    z1, z3 = var(SP4, 0), var(SP4, 2)
    zb1, zb2, zb3 = var(SP4, 4), var(SP4, 5), var(SP4, 6)
    z2 = var(SP4, 1)
    assembled = z1**2 * zb1**2 + z3 * zb3 + z1 * zb2 + z2 * zb1
    lit = parse_poly(
        "(1)*z1^2*zb1^2 + (1)*z3^1*zb3^1 + (1)*z1^1*zb2^1 + (1)*z2^1*zb1^1", SP4
    )
    assert assembled == lit


def test_mul_examples():
    p = var(SP4, 0) * var(SP4, 4)  # |z1|^2
    assert p * const(SP4, 1) == p
    square = p * p
    assert square.terms == {(2, 0, 0, 0, 2, 0, 0, 0): GaussianRational(1)}


def test_conjugate_examples_and_properties():
    rng = random.Random(44)
    z1 = var(SP4, 0)
    assert z1.conjugate() == var(SP4, 4)
    p = var(SP4, 0) * var(SP4, 5) * GaussianRational(0, 1)  # i*z1*zb2
    assert p.conjugate() == var(SP4, 1) * var(SP4, 4) * GaussianRational(0, -1)
    for _ in range(200):
        p, q = rand_poly(rng, SP2), rand_poly(rng, SP2)
        assert p.conjugate().conjugate() == p
        assert (p * q).conjugate() == p.conjugate() * q.conjugate()


def test_real_valuedness_of_defining_function():
    # Re z4 - pairing - |z1|^4 is fixed by conjugation.
    z = [var(SP4, i) for i in range(4)]
    zb = [var(SP4, 4 + i) for i in range(4)]
    rho = (z[3] + zb[3]) * Fraction(1, 2) - z[0] * zb[1] - z[1] * zb[0] - z[2] * zb[2] \
        - z[0] ** 2 * zb[0] ** 2
    assert rho.is_real_valued()
    assert rho.conjugate() == rho
    assert not (rho + var(SP4, 0)).is_real_valued()


def test_conjugate_evaluate_compatibility():
    rng = random.Random(45)
    for _ in range(100):
        p = rand_poly(rng, SP2)
        point = [
            GaussianRational(rand_fraction(rng), rand_fraction(rng)) for _ in range(2)
        ]
        assert p.conjugate().evaluate(point) == p.evaluate(point).conjugate()


def test_substitution_examples_and_associativity():
    rng = random.Random(46)
    z1 = var(SP2, 0)
    ident = [var(SP2, i) for i in range(4)]
    assert z1.substitute(ident) == z1
    images = list(ident)
    images[0] = z1 * Fraction(3, 2)
    assert (z1**2).substitute(images) == z1**2 * Fraction(9, 4)
    for _ in range(40):
        p = rand_poly(rng, SP2, max_terms=3, max_deg=2)
        f = [rand_poly(rng, SP2, max_terms=2, max_deg=1) for _ in range(4)]
        g = [rand_poly(rng, SP2, max_terms=2, max_deg=1) for _ in range(4)]
        fg = [comp.substitute(g) for comp in f]
        assert p.substitute(f).substitute(g) == p.substitute(fg)


def test_partial_examples_against_difference_oracle():
    z1 = var(SP2, 0)
    zb1 = var(SP2, 2)
    assert (z1**2).partial(0) == z1 * 2
    quartic = z1**2 * zb1**2
    assert quartic.partial(2) == z1**2 * zb1 * 2
    mixed = quartic.partial(0).partial(2)
    assert mixed == z1 * zb1 * 4
    # numeric oracle: independent central differences in the zb1 slot
    rng = random.Random(47)
    for _ in range(20):
        p = rand_poly(rng, SP2, max_terms=3, max_deg=2)
        values = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(4)]
        h = 1e-6
        up = list(values)
        dn = list(values)
        up[2] += h
        dn[2] -= h
        numeric = (complex(oracle_eval_c(p, up)) - complex(oracle_eval_c(p, dn))) / (2 * h)
        symbolic = complex(oracle_eval_c(p.partial(2), values))
        assert abs(numeric - symbolic) < 1e-5


def oracle_eval_c(p, values):
    total = 0j
    for exps, coeff in p.terms.items():
        term = complex(coeff)
        for v, k in zip(values, exps):
            term *= v**k
        total += term
    return total


def test_partials_commute():
    rng = random.Random(48)
    for _ in range(100):
        p = rand_poly(rng, SP2)
        assert p.partial(0).partial(3) == p.partial(3).partial(0)


def test_bigraded_components():
    z1, z2 = var(SP4, 0), var(SP4, 1)
    zb1, zb2 = var(SP4, 4), var(SP4, 5)
    p = z1 * zb2 + z1**2 * zb1**2
    assert p.bigraded_component(1, 1) == z1 * zb2
    assert p.bigraded_component(2, 2) == z1**2 * zb1**2
    assert p.bigraded_component(0, 0).is_zero()
    assert (p + const(SP4, 7)).bigraded_component(0, 0) == const(SP4, 7)
    rng = random.Random(49)
    for _ in range(200):
        q = rand_poly(rng, SP2)
        total = HermitianPolynomial.zero(SP2)
        for k, l in q.bigraded_support():
            total = total + q.bigraded_component(k, l)
        assert total == q


def test_evaluate_examples():
    p = var(SP2, 0) * var(SP2, 2)  # |z1|^2
    assert p.evaluate([GaussianRational(3, 4), GaussianRational(0)]) == GaussianRational(25)
    # defining function of the plus model at (0,0,0,1)
    z = [var(SP4, i) for i in range(4)]
    zb = [var(SP4, 4 + i) for i in range(4)]
    rho = (z[3] + zb[3]) * Fraction(1, 2) - z[0] * zb[1] - z[1] * zb[0] \
        - z[2] * zb[2] - z[0] ** 2 * zb[0] ** 2
    val = rho.evaluate([GaussianRational(0)] * 3 + [GaussianRational(1)])
    assert val == GaussianRational(1)
    rng = random.Random(50)
    for _ in range(50):
        q = rand_poly(rng, SP2)
        assert q.evaluate([GaussianRational(0)] * 2) == q.coefficient((0, 0, 0, 0))


def test_real_polynomial_evaluation_and_hessian():
    sp = VariableSpace(2)
    x1, x2 = var(sp, 0), var(sp, 1)
    f = RealPolynomial(x1 * x2 + x1**3)
    assert f.evaluate_real([Fraction(2), Fraction(3)]) == Fraction(14)
    H = f.hessian_at([0.5, -1.0])
    assert H[0][0] == pytest.approx(3.0)
    assert H[0][1] == pytest.approx(1.0)
    assert H[1][1] == pytest.approx(0.0)


def test_float_tower_separation():
    p = var(SP2, 0)
    q = p.to_float()
    with pytest.raises(TypeError):
        _ = p + q
    assert (q * 2.0).evaluate_complex([1 + 1j, 0]) == pytest.approx(2 + 2j)


@given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=6))
@settings(max_examples=60, deadline=None)
def test_power_matches_repeated_multiplication(a, b):
    p = var(SP2, 0) + const(SP2, 1)
    direct = const(SP2, 1)
    for _ in range(a):
        direct = direct * p
    assert p**a == direct
    assert p ** (a + b) == p**a * p**b


def test_literal_round_trip_random():
    rng = random.Random(51)
    for _ in range(200):
        p = rand_poly(rng, SP2)
        assert parse_poly(format_poly(p), SP2) == p
    for _ in range(100):
        p = rand_poly(rng, SP4)
        assert parse_poly(format_poly(p), SP4) == p


def test_literal_format_shape():
    p = var(SP2, 0) ** 2 * var(SP2, 2) * GaussianRational(Fraction(3, 5), Fraction(4, 5))
    assert format_poly(p) == "(3/5+4/5i)*z1^2*zb1^1"
    assert format_poly(HermitianPolynomial.zero(SP2)) == "(0)"
