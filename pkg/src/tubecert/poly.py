"""Sparse polynomials in holomorphic variables z_1..z_n and their formal conjugates.

A polynomial lives in a :class:`VariableSpace` with 2n variables: indices
0..n-1 are z_1..z_n and indices n..2n-1 are the formal conjugates zb_1..zb_n.
Terms are stored sparsely as ``{exponent tuple: coefficient}``; the
representation is canonical (no zero coefficients, merged monomials), so two
polynomials are identical iff their term maps are equal.

Coefficients come in two towers that never mix silently:

* exact  -- :class:`~tubecert.scalars.GaussianRational` (the default);
* float  -- Python ``complex``, entered only via :meth:`HermitianPolynomial.to_float`
  or by constructing explicitly with ``exact=False``.

Real-valued polynomials (defining functions) are those fixed by conjugation;
``Re z_k`` is represented as (z_k + zb_k)/2 so every defining function is an
ordinary polynomial here.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, SpaceError
from .scalars import GaussianRational, as_rational, format_gaussian, parse_gaussian

NEG_INF = float("-inf")


@dataclass(frozen=True)
class VariableSpace:
    """n holomorphic variables plus their formal conjugates (2n in total)."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("a variable space needs at least one variable")

    @property
    def names(self) -> list[str]:
        return [f"z{i + 1}" for i in range(self.n)] + [
            f"zb{i + 1}" for i in range(self.n)
        ]

    def conj_index(self, i: int) -> int:
        """Index of the formal conjugate of variable i."""
        return i + self.n if i < self.n else i - self.n

    def name_to_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise SpaceError(f"unknown variable {name!r} in space of {self.n}") from None


def _swap_exponents(exps: tuple[int, ...], n: int) -> tuple[int, ...]:
    return exps[n:] + exps[:n]


def _coerce_exact(c):
    if isinstance(c, GaussianRational):
        return c
    if isinstance(c, (int, Fraction)):
        return GaussianRational(c)
    raise TypeError(f"exact polynomial coefficient must be rational, got {type(c).__name__}")


def _coerce_float(c):
    if isinstance(c, complex):
        return c
    if isinstance(c, (int, float, Fraction)):
        return complex(c)
    if isinstance(c, GaussianRational):
        raise TypeError("exact coefficient in float polynomial; convert explicitly")
    raise TypeError(f"float polynomial coefficient must be numeric, got {type(c).__name__}")


class HermitianPolynomial:
    """Sparse polynomial over GaussianRational (or complex) in z and zb variables."""

    __slots__ = ("space", "terms", "exact")

    def __init__(self, space: VariableSpace, terms=None, exact: bool = True):
        coerce = _coerce_exact if exact else _coerce_float
        canon = {}
        if terms:
            width = 2 * space.n
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != width or any(e < 0 for e in exps):
                    raise SpaceError(f"bad exponent tuple {exps} for space of {space.n}")
                c = coerce(coeff)
                if exps in canon:
                    c = canon[exps] + c
                if (c.is_zero() if exact else c == 0):
                    canon.pop(exps, None)
                else:
                    canon[exps] = c
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "terms", canon)
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, name, value):
        raise AttributeError("HermitianPolynomial is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(space: VariableSpace, exact: bool = True) -> "HermitianPolynomial":
        return HermitianPolynomial(space, {}, exact)

    @staticmethod
    def constant(space: VariableSpace, c, exact: bool = True) -> "HermitianPolynomial":
        return HermitianPolynomial(space, {(0,) * (2 * space.n): c}, exact)

    @staticmethod
    def variable(space: VariableSpace, index: int, exact: bool = True) -> "HermitianPolynomial":
        if not 0 <= index < 2 * space.n:
            raise SpaceError(f"variable index {index} out of range for space of {space.n}")
        exps = [0] * (2 * space.n)
        exps[index] = 1
        return HermitianPolynomial(space, {tuple(exps): 1}, exact)

    @staticmethod
    def re_variable(space: VariableSpace, index: int) -> "HermitianPolynomial":
        """Re z_{index+1} as the exact polynomial (z + zb)/2."""
        z = HermitianPolynomial.variable(space, index)
        zb = HermitianPolynomial.variable(space, space.conj_index(index))
        return (z + zb) * Fraction(1, 2)

    # -- ring operations --------------------------------------------------

    def _check_compat(self, other: "HermitianPolynomial"):
        if self.space != other.space:
            raise SpaceError(f"space mismatch: {self.space} vs {other.space}")
        if self.exact != other.exact:
            raise TypeError(
                "cannot mix exact and float polynomials; convert explicitly with to_float()"
            )

    def __add__(self, other):
        if not isinstance(other, HermitianPolynomial):
            other = HermitianPolynomial.constant(self.space, other, self.exact)
        self._check_compat(other)
        merged = dict(self.terms)
        for exps, c in other.terms.items():
            s = merged.get(exps)
            s = c if s is None else s + c
            if (s.is_zero() if self.exact else s == 0):
                merged.pop(exps, None)
            else:
                merged[exps] = s
        return self._raw(self.space, merged, self.exact)

    __radd__ = __add__

    def __neg__(self):
        return self._raw(self.space, {e: -c for e, c in self.terms.items()}, self.exact)

    def __sub__(self, other):
        if not isinstance(other, HermitianPolynomial):
            other = HermitianPolynomial.constant(self.space, other, self.exact)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, HermitianPolynomial):
            coeff = _coerce_exact(other) if self.exact else _coerce_float(other)
            if coeff.is_zero() if self.exact else coeff == 0:
                return HermitianPolynomial.zero(self.space, self.exact)
            return self._raw(
                self.space, {e: c * coeff for e, c in self.terms.items()}, self.exact
            )
        self._check_compat(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(exps)
                s = c if s is None else s + c
                if (s.is_zero() if self.exact else s == 0):
                    out.pop(exps, None)
                else:
                    out[exps] = s
        return self._raw(self.space, out, self.exact)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise DomainError("polynomial powers must be nonnegative integers")
        result = HermitianPolynomial.constant(self.space, 1, self.exact)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    @classmethod
    def _raw(cls, space, terms, exact):
        """Internal: build from an already-canonical term map (no re-coercion)."""
        p = object.__new__(cls)
        object.__setattr__(p, "space", space)
        object.__setattr__(p, "terms", terms)
        object.__setattr__(p, "exact", exact)
        return p

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Total degree; the zero polynomial reports -inf."""
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def z_degree(self) -> int:
        n = self.space.n
        return 0 if not self.terms else max(sum(e[:n]) for e in self.terms)

    def zb_degree(self) -> int:
        n = self.space.n
        return 0 if not self.terms else max(sum(e[n:]) for e in self.terms)

    def is_holomorphic(self) -> bool:
        """True when no conjugate variable occurs."""
        n = self.space.n
        return all(sum(e[n:]) == 0 for e in self.terms)

    def first_monomial(self):
        """Lexicographically smallest exponent tuple (canonical term order)."""
        if not self.terms:
            return None
        return min(self.terms)

    def coefficient(self, exps):
        exps = tuple(exps)
        c = self.terms.get(exps)
        if c is not None:
            return c
        return GaussianRational(0) if self.exact else 0j

    def conjugate(self) -> "HermitianPolynomial":
        """Swap each z_i with zb_i and conjugate all coefficients (an involution)."""
        n = self.space.n
        return self._raw(
            self.space,
            {_swap_exponents(e, n): c.conjugate() for e, c in self.terms.items()},
            self.exact,
        )

    def is_real_valued(self, tol: float = 0.0) -> bool:
        """True iff the polynomial is fixed by conjugation.

        Exact polynomials are compared with zero remainder; float polynomials
        compare coefficient-wise within ``tol``.
        """
        n = self.space.n
        for e, c in self.terms.items():
            partner = self.terms.get(_swap_exponents(e, n))
            if self.exact:
                if partner is None or partner != c.conjugate():
                    return False
            else:
                ref = 0j if partner is None else partner
                if abs(ref - c.conjugate()) > tol:
                    return False
        return True

    def to_float(self) -> "HermitianPolynomial":
        """Explicit, lossy, one-way conversion to the floating tower."""
        if not self.exact:
            return self
        return self._raw(
            self.space, {e: complex(c) for e, c in self.terms.items()}, False
        )

    def max_abs_coefficient(self) -> float:
        if not self.terms:
            return 0.0
        if self.exact:
            return max(abs(complex(c)) for c in self.terms.values())
        return max(abs(c) for c in self.terms.values())

    # -- calculus and decomposition ------------------------------------------

    def partial(self, var: int) -> "HermitianPolynomial":
        """Formal partial derivative, treating all 2n variables as independent."""
        if not 0 <= var < 2 * self.space.n:
            raise SpaceError(f"variable index {var} out of range")
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k == 0:
                continue
            d = list(e)
            d[var] = k - 1
            out[tuple(d)] = c * k
        return self._raw(self.space, out, self.exact)

    def bigraded_component(self, k: int, l: int) -> "HermitianPolynomial":
        """Sum of terms with z-degree exactly k and zb-degree exactly l."""
        if k < 0 or l < 0:
            raise DomainError("bidegrees must be nonnegative")
        n = self.space.n
        out = {
            e: c
            for e, c in self.terms.items()
            if sum(e[:n]) == k and sum(e[n:]) == l
        }
        return self._raw(self.space, out, self.exact)

    def bigraded_support(self) -> set[tuple[int, int]]:
        n = self.space.n
        return {(sum(e[:n]), sum(e[n:])) for e in self.terms}

    def substitute(self, images: list["HermitianPolynomial"]) -> "HermitianPolynomial":
        """Exact composition: replace variable i by images[i] for all 2n variables."""
        if len(images) != 2 * self.space.n:
            raise SpaceError(
                f"substitution needs {2 * self.space.n} images, got {len(images)}"
            )
        target = images[0].space
        for img in images:
            if img.space != target:
                raise SpaceError("substitution images live in different spaces")
            if img.exact != self.exact:
                raise TypeError("substitution images must match the polynomial's tower")
        result = HermitianPolynomial.zero(target, self.exact)
        powers: dict[tuple[int, int], HermitianPolynomial] = {}

        def power(i, k):
            key = (i, k)
            if key not in powers:
                powers[key] = images[i] ** k
            return powers[key]

        for e, c in self.terms.items():
            term = HermitianPolynomial.constant(target, c, self.exact)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def evaluate(self, point):
        """Evaluate at exact values for the n holomorphic variables.

        Conjugate variables receive conjugated values automatically.  Exact in,
        exact out.
        """
        if not self.exact:
            raise TypeError("use evaluate_complex() on the floating tower")
        vals = [v if isinstance(v, GaussianRational) else GaussianRational(as_rational(v))
                for v in point]
        if len(vals) != self.space.n:
            raise SpaceError(f"need {self.space.n} values, got {len(vals)}")
        vals = vals + [v.conjugate() for v in vals]
        total = GaussianRational(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term = term * v**k
            total = total + term
        return total

    def evaluate_complex(self, point) -> complex:
        """Evaluate on the floating path at complex values (explicit conversion)."""
        vals = [complex(v) for v in point]
        if len(vals) != self.space.n:
            raise SpaceError(f"need {self.space.n} values, got {len(vals)}")
        vals = vals + [v.conjugate() for v in vals]
        total = 0j
        for e, c in self.terms.items():
            term = complex(c) if self.exact else c
            for v, k in zip(vals, e):
                if k:
                    term *= v**k
            total += term
        return total

    # -- comparison and printing ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, HermitianPolynomial):
            return NotImplemented
        return (
            self.space == other.space
            and self.exact == other.exact
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.space, self.exact, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    def __repr__(self):
        return f"HermitianPolynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def format_poly(p: HermitianPolynomial) -> str:
    """Canonical plain-text literal, e.g. ``(3/5+4/5i)*z1^2*zb1^1``.

    Terms appear in lexicographic exponent order; the printer and
    :func:`parse_poly` round-trip exactly on the exact tower.
    """
    if not p.terms:
        return "(0)"
    names = p.space.names
    parts = []
    for exps in sorted(p.terms):
        c = p.terms[exps]
        coeff = format_gaussian(c) if p.exact else repr(c)
        factors = [f"({coeff})"]
        for i, k in enumerate(exps):
            if k:
                factors.append(f"{names[i]}^{k}")
        parts.append("*".join(factors))
    return " + ".join(parts)


_TERM_FACTOR = _re.compile(r"^(zb?\d+)\^(\d+)$")


def parse_poly(text: str, space: VariableSpace) -> HermitianPolynomial:
    """Parse the exact literal format produced by :func:`format_poly`."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial literal")
    terms: dict = {}
    for chunk in s.split(" + "):
        chunk = chunk.strip()
        if not chunk:
            continue
        factors = chunk.split("*")
        head = factors[0].strip()
        if not (head.startswith("(") and head.endswith(")")):
            raise ValueError(f"term {chunk!r} must start with a parenthesized coefficient")
        coeff = parse_gaussian(head[1:-1])
        exps = [0] * (2 * space.n)
        for f in factors[1:]:
            m = _TERM_FACTOR.match(f.strip())
            if not m:
                raise ValueError(f"bad variable factor {f!r}")
            exps[space.name_to_index(m.group(1))] += int(m.group(2))
        key = tuple(exps)
        prev = terms.get(key)
        terms[key] = coeff if prev is None else prev + coeff
    return HermitianPolynomial(space, terms)


class RealPolynomial:
    """A polynomial in the real coordinates x_1..x_n (graph functions of tube bases).

    Internally a HermitianPolynomial using only the holomorphic variable slots,
    with real coefficients, read as a function on R^n.  Supplies the real
    calculus the tube shortcuts need (gradients, Hessians) and the lift that
    turns a graph x_{n+1} = f(x) into a tube hypersurface in C^{n+1}.
    """

    __slots__ = ("poly",)

    def __init__(self, poly: HermitianPolynomial):
        n = poly.space.n
        for e, c in poly.terms.items():
            if any(e[n:]):
                raise SpaceError("real polynomial must not use conjugate variables")
            if poly.exact and not c.is_real():
                raise DomainError("real polynomial has a non-real coefficient")
            if not poly.exact and abs(c.imag) > 0:
                raise DomainError("real polynomial has a non-real coefficient")
        object.__setattr__(self, "poly", poly)

    def __setattr__(self, name, value):
        raise AttributeError("RealPolynomial is immutable")

    @property
    def space(self) -> VariableSpace:
        return self.poly.space

    @property
    def exact(self) -> bool:
        return self.poly.exact

    def __add__(self, other):
        o = other.poly if isinstance(other, RealPolynomial) else other
        return RealPolynomial(self.poly + o)

    def __sub__(self, other):
        o = other.poly if isinstance(other, RealPolynomial) else other
        return RealPolynomial(self.poly - o)

    def __mul__(self, other):
        o = other.poly if isinstance(other, RealPolynomial) else other
        return RealPolynomial(self.poly * o)

    def __eq__(self, other):
        if not isinstance(other, RealPolynomial):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(("real", self.poly))

    def evaluate_real(self, xs):
        """Evaluate at a real point; exact when the polynomial and point are."""
        if self.exact and all(isinstance(x, (int, Fraction)) for x in xs):
            v = self.poly.evaluate([GaussianRational(as_rational(x)) for x in xs])
            return v.re
        return self.poly.evaluate_complex([complex(float(x), 0.0) for x in xs]).real

    def partial(self, i: int) -> "RealPolynomial":
        return RealPolynomial(self.poly.partial(i))

    def gradient_at(self, xs) -> list:
        return [self.partial(i).evaluate_real(xs) for i in range(self.space.n)]

    def hessian_at(self, xs) -> list[list[float]]:
        """Real symmetric Hessian matrix, as floats."""
        n = self.space.n
        rows = []
        for i in range(n):
            di = self.poly.partial(i)
            row = []
            for j in range(n):
                val = RealPolynomial._eval_real(di.partial(j), xs)
                row.append(val)
            rows.append(row)
        return rows

    @staticmethod
    def _eval_real(p: HermitianPolynomial, xs) -> float:
        return p.evaluate_complex([complex(float(x), 0.0) for x in xs]).real

    def __str__(self):
        # Print with x-names for readability.
        return format_poly(self.poly).replace("z", "x").replace("xb", "xb")

    def __repr__(self):
        return f"RealPolynomial({format_poly(self.poly)!r})"
