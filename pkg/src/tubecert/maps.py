"""Affine maps of R^n, holomorphic polynomial maps of C^n, and invariance certificates.

The central proof object is :class:`InvarianceCertificate`: the exact
statement ``rho o F = c * rho`` for a defining function rho and a map F,
with the factor c computed (not guessed) and the full residual polynomial
kept.  A certificate with ``exact=True`` has an identically zero residual;
a positive factor means F preserves each side of the hypersurface, a
negative one means it swaps them.

Maps whose printed form carries irrational diagonal scalings (square and
fourth roots) are handled two ways: exactly, after conjugating away the
diagonal part (see :func:`pullback_diagonal_quartic`), and numerically on
the floating tower.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactla
from .errors import DomainError, SpaceError
from .poly import HermitianPolynomial, VariableSpace
from .scalars import GaussianRational, as_rational, fourth_root_exact


class AffineMapR:
    """x |-> matrix @ x + translation with exact rational entries."""

    __slots__ = ("matrix", "translation", "determinant")

    def __init__(self, matrix, translation):
        mat = tuple(tuple(as_rational(x) for x in row) for row in matrix)
        tr = tuple(as_rational(x) for x in translation)
        n = len(tr)
        if len(mat) != n or any(len(row) != n for row in mat):
            raise SpaceError("affine map needs an n x n matrix and an n-translation")
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "translation", tr)
        object.__setattr__(
            self, "determinant", exactla.determinant([list(r) for r in mat])
        )

    def __setattr__(self, name, value):
        raise AttributeError("AffineMapR is immutable")

    @property
    def n(self) -> int:
        return len(self.translation)

    @staticmethod
    def identity(n: int) -> "AffineMapR":
        return AffineMapR(
            [[Fraction(i == j) for j in range(n)] for i in range(n)],
            [Fraction(0)] * n,
        )

    def apply(self, xs) -> list[Fraction]:
        xs = [as_rational(x) for x in xs]
        return [
            sum((row[j] * xs[j] for j in range(self.n)), Fraction(0)) + t
            for row, t in zip(self.matrix, self.translation)
        ]

    def compose(self, other: "AffineMapR") -> "AffineMapR":
        """self after other: (self o other)(x) = self(other(x))."""
        if self.n != other.n:
            raise SpaceError("affine composition dimension mismatch")
        mat = [
            [
                sum(
                    (self.matrix[i][k] * other.matrix[k][j] for k in range(self.n)),
                    Fraction(0),
                )
                for j in range(self.n)
            ]
            for i in range(self.n)
        ]
        tr = self.apply(other.translation)
        return AffineMapR(mat, tr)

    def inverse(self) -> "AffineMapR":
        inv = exactla.invert([list(r) for r in self.matrix])
        tr = [
            -sum((inv[i][j] * self.translation[j] for j in range(self.n)), Fraction(0))
            for i in range(self.n)
        ]
        return AffineMapR(inv, tr)

    def __eq__(self, other):
        if not isinstance(other, AffineMapR):
            return NotImplemented
        return self.matrix == other.matrix and self.translation == other.translation

    def __hash__(self):
        return hash((self.matrix, self.translation))

    def __repr__(self):
        return f"AffineMapR(matrix={self.matrix}, translation={self.translation})"


class HoloPolyMap:
    """A polynomial map C^m -> C^k whose components are holomorphic (no conjugates)."""

    __slots__ = ("space_in", "space_out", "components")

    def __init__(self, space_in: VariableSpace, space_out: VariableSpace, components):
        components = tuple(components)
        if len(components) != space_out.n:
            raise SpaceError(
                f"map into {space_out.n} variables needs {space_out.n} components"
            )
        for comp in components:
            if comp.space != space_in:
                raise SpaceError("component lives in the wrong source space")
            if not comp.is_holomorphic():
                raise SpaceError("map components must be holomorphic (no zb variables)")
        object.__setattr__(self, "space_in", space_in)
        object.__setattr__(self, "space_out", space_out)
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("HoloPolyMap is immutable")

    @property
    def exact(self) -> bool:
        return self.components[0].exact

    @staticmethod
    def identity(space: VariableSpace, exact: bool = True) -> "HoloPolyMap":
        return HoloPolyMap(
            space,
            space,
            [HermitianPolynomial.variable(space, i, exact) for i in range(space.n)],
        )

    def degree(self):
        return max(c.degree() for c in self.components)

    def apply(self, point) -> list:
        """Evaluate all components at a point (exact values on the exact tower)."""
        if self.exact:
            return [c.evaluate(point) for c in self.components]
        return [c.evaluate_complex(point) for c in self.components]

    def apply_complex(self, point) -> list[complex]:
        return [c.evaluate_complex(point) for c in self.components]

    def linear_part(self):
        """Matrix of degree-1 coefficients (rows: components, cols: variables)."""
        n_in = self.space_in.n
        rows = []
        for comp in self.components:
            row = []
            for j in range(n_in):
                exps = [0] * (2 * n_in)
                exps[j] = 1
                row.append(comp.coefficient(tuple(exps)))
            rows.append(row)
        return rows

    def linear_determinant(self):
        return exactla.determinant(self.linear_part()) if self.exact else None

    def to_float(self) -> "HoloPolyMap":
        return HoloPolyMap(
            self.space_in, self.space_out, [c.to_float() for c in self.components]
        )

    def __eq__(self, other):
        if not isinstance(other, HoloPolyMap):
            return NotImplemented
        return (
            self.space_in == other.space_in
            and self.space_out == other.space_out
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.space_in, self.space_out, self.components))

    def __repr__(self):
        comps = "; ".join(str(c) for c in self.components)
        return f"HoloPolyMap({comps})"


def lift_affine(f: AffineMapR) -> HoloPolyMap:
    """Lift an affine map of R^n to the affine map of C^n with the same coefficients."""
    space = VariableSpace(f.n)
    comps = []
    for row, t in zip(f.matrix, f.translation):
        p = HermitianPolynomial.constant(space, t)
        for j, a in enumerate(row):
            if a:
                p = p + HermitianPolynomial.variable(space, j) * a
        comps.append(p)
    return HoloPolyMap(space, space, comps)


def compose(f: HoloPolyMap, g: HoloPolyMap) -> HoloPolyMap:
    """Exact polynomial composition f o g (f after g)."""
    if g.space_out != f.space_in:
        raise SpaceError("composition spaces do not match")
    if f.exact != g.exact:
        raise TypeError("cannot compose exact with float maps; convert explicitly")
    images = list(g.components) + [c.conjugate() for c in g.components]
    comps = [c.substitute(images) for c in f.components]
    return HoloPolyMap(g.space_in, f.space_out, comps)


def pullback(rho: HermitianPolynomial, f: HoloPolyMap) -> HermitianPolynomial:
    """Substitute z_i -> f_i(z) and zb_i -> conjugate(f_i); real stays real."""
    if rho.space != f.space_out:
        raise SpaceError("pullback: rho is not defined on the map's target space")
    if rho.exact != f.exact:
        raise TypeError("cannot pull an exact rho back along a float map; convert explicitly")
    images = list(f.components) + [c.conjugate() for c in f.components]
    return rho.substitute(images)


@dataclass(frozen=True)
class InvarianceCertificate:
    """The checked statement ``pullback(rho, map) = factor * rho``.

    ``exact`` is True only when the residual polynomial is identically zero.
    On the floating tower the residual never vanishes bitwise; use
    ``max_abs_residual`` against the caller's tolerance instead.
    """

    map: HoloPolyMap
    rho: HermitianPolynomial
    factor: object  # GaussianRational on the exact tower, complex on the float tower
    exact: bool
    residual: HermitianPolynomial

    @property
    def max_abs_residual(self) -> float:
        return self.residual.max_abs_coefficient()

    @property
    def factor_is_positive_real(self) -> bool:
        if isinstance(self.factor, GaussianRational):
            return self.factor.is_real() and self.factor.re > 0
        return abs(self.factor.imag) <= 1e-12 * max(1.0, abs(self.factor)) and self.factor.real > 0

    def within(self, tol: float) -> bool:
        """Floating-path acceptance: residual coefficients all below tol."""
        return self.max_abs_residual <= tol


def equivalence_certificate(
    rho_target: HermitianPolynomial, f: HoloPolyMap, rho_source: HermitianPolynomial
) -> InvarianceCertificate:
    """Check ``rho_target o f = c * rho_source`` and return the certificate.

    The factor is read off at the lexicographically first monomial of
    rho_source (canonical term order makes this deterministic); if that
    monomial is absent from the pullback the certificate is inexact with the
    full pullback as residual.  The certificate's ``rho`` field records
    rho_source, the defining function being matched.
    """
    if rho_source.is_zero():
        raise DomainError("equivalence certificate needs a nonzero defining function")
    p = pullback(rho_target, f)
    lead = rho_source.first_monomial()
    num = p.coefficient(lead)
    den = rho_source.coefficient(lead)
    if (num.is_zero() if rho_source.exact else num == 0):
        factor = GaussianRational(0) if rho_source.exact else 0j
        return InvarianceCertificate(f, rho_source, factor, False, p)
    factor = num / den
    residual = p - rho_source * factor
    exact = rho_source.exact and residual.is_zero()
    return InvarianceCertificate(f, rho_source, factor, exact, residual)


def invariance_certificate(rho: HermitianPolynomial, f: HoloPolyMap) -> InvarianceCertificate:
    """Certificate for ``rho o f = c * rho`` (self-equivalence of one surface)."""
    return equivalence_certificate(rho, f, rho)


def format_affine(f: AffineMapR) -> str:
    """Literal block form: one ``row = ...`` line per matrix row, then the translation."""
    lines = []
    for row in f.matrix:
        lines.append("row = " + " ".join(str(x) for x in row))
    lines.append("translation = " + " ".join(str(x) for x in f.translation))
    return "\n".join(lines)


def parse_affine(text: str) -> AffineMapR:
    """Inverse of :func:`format_affine`; exact round-trip."""
    rows = []
    translation = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        entries = [Fraction(tok) for tok in value.split()]
        if key.strip() == "row":
            rows.append(entries)
        elif key.strip() == "translation":
            translation = entries
        else:
            raise ValueError(f"unknown affine literal line {raw!r}")
    if translation is None:
        raise ValueError("affine literal lacks a translation line")
    return AffineMapR(rows, translation)


def format_holo_map(f: HoloPolyMap) -> str:
    """Named components as polynomial literals, one per line."""
    from .poly import format_poly

    lines = [f"vars = {f.space_in.n} -> {f.space_out.n}"]
    for i, comp in enumerate(f.components, start=1):
        lines.append(f"z{i} = {format_poly(comp)}")
    return "\n".join(lines)


def parse_holo_map(text: str) -> HoloPolyMap:
    """Inverse of :func:`format_holo_map` on the exact tower."""
    from .poly import parse_poly

    space_in = space_out = None
    comps: dict[int, object] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        key = key.strip()
        if key == "vars":
            n_in, _, n_out = value.partition("->")
            space_in = VariableSpace(int(n_in))
            space_out = VariableSpace(int(n_out))
        elif key.startswith("z"):
            if space_in is None:
                raise ValueError("map literal must declare vars first")
            comps[int(key[1:])] = parse_poly(value.strip(), space_in)
        else:
            raise ValueError(f"unknown map literal line {raw!r}")
    if space_in is None or set(comps) != set(range(1, space_out.n + 1)):
        raise ValueError("map literal is incomplete")
    return HoloPolyMap(space_in, space_out, [comps[i] for i in sorted(comps)])


def pullback_diagonal_quartic(
    rho: HermitianPolynomial, radicands: list
) -> HermitianPolynomial | None:
    """Pull rho back along diag(r_1^(1/4), ..., r_n^(1/4)) with rational r_i > 0.

    Each monomial z^a zb^b picks up the factor prod r_i^((a_i+b_i)/4); the
    result is exact iff every such accumulated radicand is a perfect fourth
    power of a rational.  Returns None when any monomial fails, letting the
    caller fall back to floats.  This is how square-root and fourth-root
    diagonal scalings are conjugated away without algebraic-number arithmetic.
    """
    if not rho.exact:
        raise TypeError("diagonal quartic pullback is an exact-tower operation")
    rads = [as_rational(r) for r in radicands]
    if len(rads) != rho.space.n:
        raise SpaceError("need one radicand per holomorphic variable")
    if any(r <= 0 for r in rads):
        raise DomainError("diagonal quartic scales must be positive")
    n = rho.space.n
    out = {}
    for e, c in rho.terms.items():
        acc = Fraction(1)
        for i in range(n):
            k = e[i] + e[n + i]
            if k:
                acc *= rads[i] ** k
        root = fourth_root_exact(acc)
        if root is None:
            return None
        out[e] = c * root
    return HermitianPolynomial(rho.space, out)


def float_pullback_diagonal(rho: HermitianPolynomial, scales: list[float]) -> HermitianPolynomial:
    """Floating counterpart of a positive diagonal scaling pullback."""
    p = rho.to_float()
    n = p.space.n
    out = {}
    for e, c in p.terms.items():
        acc = 1.0
        for i in range(n):
            k = e[i] + e[n + i]
            if k:
                acc *= float(scales[i]) ** k
        out[e] = c * acc
    return HermitianPolynomial(p.space, out, exact=False)
