"""Exact 3x3 matrix Lie algebra computations: sl(3,C), u(2,1), su(2,1).

Everything here is exact: brackets, trace-form pairings, orthogonal
complements, centralizer dimensions, and real-linear kernels are computed by
rational Gaussian elimination (complex subspaces over Q(i), real subspaces by
doubling each complex entry into two rational coordinates).

The dimension bookkeeping this enables: the trace form on sl(3,C) is
non-degenerate (Gram rank 8); among a representative set of Jordan shapes,
only the rank-one nilpotent E_12 has a centralizer meeting its trace-form
complement in dimension >= 4; that complement is not a subalgebra; the two
codimension-2 matrix patterns are 6-dimensional subalgebras; and the
stabilizers up to scale of vectors of positive, negative, and null length in
su(2,1) have real dimensions 4, 4, 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactla
from .errors import DomainError
from .scalars import GaussianRational

Mat3 = tuple  # 3x3 nested tuples of GaussianRational


def mat(rows) -> Mat3:
    out = []
    for row in rows:
        out.append(
            tuple(x if isinstance(x, GaussianRational) else GaussianRational(x) for x in row)
        )
    if len(out) != 3 or any(len(r) != 3 for r in out):
        raise DomainError("need a 3x3 matrix")
    return tuple(out)


ZERO3 = mat([[0, 0, 0], [0, 0, 0], [0, 0, 0]])
IDENTITY3 = mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def E(i: int, j: int) -> Mat3:
    """Elementary matrix with a single 1 in row i, column j (0-indexed)."""
    return mat([[1 if (r, c) == (i, j) else 0 for c in range(3)] for r in range(3)])


def madd(X: Mat3, Y: Mat3) -> Mat3:
    return tuple(tuple(a + b for a, b in zip(rx, ry)) for rx, ry in zip(X, Y))


def msub(X: Mat3, Y: Mat3) -> Mat3:
    return tuple(tuple(a - b for a, b in zip(rx, ry)) for rx, ry in zip(X, Y))


def mscale(X: Mat3, c) -> Mat3:
    c = c if isinstance(c, GaussianRational) else GaussianRational(c)
    return tuple(tuple(a * c for a in row) for row in X)


def mmul(X: Mat3, Y: Mat3) -> Mat3:
    return tuple(
        tuple(
            sum((X[i][k] * Y[k][j] for k in range(3)), GaussianRational(0))
            for j in range(3)
        )
        for i in range(3)
    )


def mtrans(X: Mat3) -> Mat3:
    return tuple(tuple(X[j][i] for j in range(3)) for i in range(3))


def mconj(X: Mat3) -> Mat3:
    return tuple(tuple(a.conjugate() for a in row) for row in X)


def mtrace(X: Mat3) -> GaussianRational:
    return X[0][0] + X[1][1] + X[2][2]


def is_zero_matrix(X: Mat3) -> bool:
    return all(a.is_zero() for row in X for a in row)


def apply_vec(X: Mat3, v) -> tuple:
    return tuple(
        sum((X[i][j] * v[j] for j in range(3)), GaussianRational(0)) for i in range(3)
    )


def bracket(X: Mat3, Y: Mat3) -> Mat3:
    """[X, Y] = XY - YX, exactly."""
    return msub(mmul(X, Y), mmul(Y, X))


def killing(X: Mat3, Y: Mat3) -> GaussianRational:
    """The invariant trace form trace(XY); non-degenerate on sl(3,C)."""
    return mtrace(mmul(X, Y))


def flatten(X: Mat3) -> list[GaussianRational]:
    return [X[i][j] for i in range(3) for j in range(3)]


def realify(vec) -> list[Fraction]:
    out = []
    for x in vec:
        out.append(x.re)
        out.append(x.im)
    return out


def sl3_basis() -> list[Mat3]:
    """Standard basis: six off-diagonal units plus E11-E22 and E22-E33."""
    basis = [E(i, j) for i in range(3) for j in range(3) if i != j]
    basis.append(msub(E(0, 0), E(1, 1)))
    basis.append(msub(E(1, 1), E(2, 2)))
    return basis


@dataclass(frozen=True)
class LieSubspace:
    """A subspace of 3x3 matrices with its ambient and scalar field.

    ``field`` is 'C' for complex subspaces of sl(3,C) and 'R' for real
    subspaces (of u(2,1)-type algebras).  The basis is checked for exact
    linear independence on construction.
    """

    basis: tuple
    ambient: str  # 'sl3C', 'su21', 'u21', or a descriptive tag
    field: str  # 'C' or 'R'

    def __post_init__(self):
        if self.field not in ("C", "R"):
            raise DomainError("field must be 'C' or 'R'")
        if self.basis and self.rank_of(self.basis) != len(self.basis):
            raise DomainError("basis is not linearly independent")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def rank_of(self, mats) -> int:
        if self.field == "C":
            rows = [flatten(m) for m in mats]
        else:
            rows = [realify(flatten(m)) for m in mats]
        return exactla.rank(rows)

    def contains(self, X: Mat3) -> bool:
        if not self.basis:
            return is_zero_matrix(X)
        return self.rank_of(list(self.basis) + [X]) == len(self.basis)


def span_complex(mats, ambient="sl3C") -> LieSubspace:
    rows = [flatten(m) for m in mats]
    reduced, pivots = exactla.rref(rows)
    basis = []
    for r in range(len(pivots)):
        entries = reduced[r]
        basis.append(mat([[entries[3 * i + j] for j in range(3)] for i in range(3)]))
    return LieSubspace(tuple(basis), ambient, "C")


def perp(S: LieSubspace) -> LieSubspace:
    """Trace-form orthogonal complement inside sl(3,C).

    The form is non-degenerate on sl(3,C), so dim(S) + dim(perp(S)) = 8.
    """
    if S.field != "C":
        raise DomainError("perp is a complex-ambient operation")
    basis8 = sl3_basis()
    rows = []
    for b in S.basis:
        rows.append([killing(e, b) for e in basis8])
    coords = exactla.nullspace(rows, ncols=8, one=GaussianRational(1))
    out = []
    for c in coords:
        X = ZERO3
        for coeff, e in zip(c, basis8):
            X = madd(X, mscale(e, coeff))
        out.append(X)
    return LieSubspace(tuple(out), "sl3C", "C")


def sl3_gram_rank() -> int:
    """Rank of the trace-form Gram matrix on the standard sl(3,C) basis (8 iff non-degenerate)."""
    basis8 = sl3_basis()
    rows = [[killing(x, y) for y in basis8] for x in basis8]
    return exactla.rank(rows)


def ad_kernel_dim(P: Mat3, S: LieSubspace) -> int:
    """Dimension of {X in S : [P, X] = 0}, over S's own scalar field."""
    if not S.basis:
        return 0
    images = [bracket(P, b) for b in S.basis]
    if S.field == "C":
        rows = []
        for pos in range(9):
            rows.append([flatten(img)[pos] for img in images])
        return len(exactla.nullspace(rows, one=GaussianRational(1)))
    rows = []
    for pos in range(18):
        rows.append([Fraction(realify(flatten(img))[pos]) for img in images])
    return len(exactla.nullspace(rows, one=Fraction(1)))


@dataclass(frozen=True)
class SubalgebraReport:
    closed: bool
    witness: tuple | None  # failing basis pair, when not closed


def is_subalgebra(S: LieSubspace) -> SubalgebraReport:
    """Check [b_i, b_j] in span(S) exactly for all basis pairs."""
    for i, x in enumerate(S.basis):
        for y in S.basis[i + 1:]:
            if not S.contains(bracket(x, y)):
                return SubalgebraReport(False, (x, y))
    return SubalgebraReport(True, None)


def candidate_subalgebra(which: int) -> LieSubspace:
    """The two codimension-2 subalgebra patterns inside sl(3,C).

    Pattern 1 (zeros below the first column) stabilizes the line through the
    first basis vector; pattern 2 (zeros at (2,1) and (2,3)) stabilizes a
    line in the dual representation.  Both are 6-dimensional.
    """
    h1 = msub(E(0, 0), E(1, 1))
    h2 = msub(E(1, 1), E(2, 2))
    if which == 1:
        basis = [E(0, 1), E(0, 2), E(1, 2), E(2, 1), h1, h2]
    elif which == 2:
        basis = [E(0, 1), E(0, 2), E(2, 0), E(2, 1), h1, h2]
    else:
        raise DomainError("which must be 1 or 2")
    return LieSubspace(tuple(basis), "sl3C", "C")


def jordan_test_set() -> list[tuple[str, Mat3, bool]]:
    """Representative Jordan shapes with the expected outcome of the kernel test.

    The flag says whether [P, .] restricted to the trace-form complement of P
    has kernel of dimension at least 4; only the rank-one nilpotent passes.
    """
    diag = lambda a, b, c: mat([[a, 0, 0], [0, b, 0], [0, 0, c]])
    return [
        ("nilpotent_rank1", E(0, 1), True),
        ("nilpotent_rank2", madd(E(0, 1), E(1, 2)), False),
        ("diagonal_distinct", diag(1, 2, -3), False),
        ("diagonal_distinct_alt", diag(1, -1, 0), False),
        ("diagonal_repeated", diag(1, 1, -2), False),
        ("jordan_block_plus_eigenvalue", madd(E(0, 1), diag(1, 1, -2)), False),
    ]


# ---------------------------------------------------------------------------
# u(2,1) and su(2,1) with respect to a rational Hermitian form
# ---------------------------------------------------------------------------

FORM_DIAG = mat([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
FORM_PAIRING = mat([[0, 1, 0], [1, 0, 0], [0, 0, 1]])


def _u_algebra_rows(H: Mat3) -> list[list[Fraction]]:
    """Real-linear equations X^t H + H conj(X) = 0 in the 18 real coordinates of X."""
    rows = []
    for i in range(3):
        for j in range(3):
            # entry (i,j): sum_k X_ki H_kj + H_ik conj(X)_kj = 0
            re_row = [Fraction(0)] * 18
            im_row = [Fraction(0)] * 18
            for k in range(3):
                # X_ki * H_kj : X_ki = x + iy at slots (2*(3k+i), 2*(3k+i)+1)
                h = H[k][j]
                base = 2 * (3 * k + i)
                re_row[base] += h.re
                re_row[base + 1] -= h.im
                im_row[base] += h.im
                im_row[base + 1] += h.re
                # H_ik * conj(X)_kj : conj(X)_kj = x - iy at slots of X_kj
                h2 = H[i][k]
                base2 = 2 * (3 * k + j)
                re_row[base2] += h2.re
                re_row[base2 + 1] += h2.im
                im_row[base2] += h2.im
                im_row[base2 + 1] -= h2.re
            rows.append(re_row)
            rows.append(im_row)
    return rows


def _coords_to_matrix(coords) -> Mat3:
    entries = []
    for idx in range(9):
        entries.append(GaussianRational(coords[2 * idx], coords[2 * idx + 1]))
    return mat([[entries[3 * i + j] for j in range(3)] for i in range(3)])


def u21_basis(H: Mat3 = FORM_DIAG) -> list[Mat3]:
    """Exact real basis of u(2,1) w.r.t. H: {X : X^t H + H conj(X) = 0} (dimension 9)."""
    coords = exactla.nullspace(_u_algebra_rows(H), one=Fraction(1))
    return [_coords_to_matrix(c) for c in coords]


def su21_basis(H: Mat3 = FORM_DIAG) -> list[Mat3]:
    """Exact real basis of su(2,1) w.r.t. H: the trace-free part (dimension 8)."""
    rows = _u_algebra_rows(H)
    trace_re = [Fraction(0)] * 18
    trace_im = [Fraction(0)] * 18
    for i in range(3):
        base = 2 * (3 * i + i)
        trace_re[base] = Fraction(1)
        trace_im[base + 1] = Fraction(1)
    rows.append(trace_re)
    rows.append(trace_im)
    coords = exactla.nullspace(rows, one=Fraction(1))
    return [_coords_to_matrix(c) for c in coords]


def algebra_membership_residual(X: Mat3, H: Mat3) -> Mat3:
    """X^t H + H conj(X); the zero matrix certifies membership in u(2,1) w.r.t. H."""
    return madd(mmul(mtrans(X), H), mmul(H, mconj(X)))


def su_congruence() -> Mat3:
    """Exact S with S^t diag(1,1,-1) conj(S) = pairing form; X -> S^-1 X S converts realizations."""
    return mat(
        [
            [1, Fraction(1, 2), 0],
            [0, 0, 1],
            [1, Fraction(-1, 2), 0],
        ]
    )


def congruence_convert(X: Mat3, S: Mat3) -> Mat3:
    s_inv = exactla.invert([list(r) for r in S], one=GaussianRational(1))
    return mmul(mat(s_inv), mmul(X, S))


def cayley_group_element(A: Mat3) -> Mat3:
    """(I - A)(I + A)^{-1}: an exact group element from an algebra element A.

    If A satisfies A^t H + H conj(A) = 0 then the result U satisfies
    U^t H conj(U) = H (checked by the caller's tests); raises if I + A is
    singular, in which case the caller should redraw.
    """
    inv = exactla.invert([list(r) for r in madd(IDENTITY3, A)], one=GaussianRational(1))
    return mmul(msub(IDENTITY3, A), mat(inv))


def _pair_minors(w, v) -> list[GaussianRational]:
    return [
        w[0] * v[1] - w[1] * v[0],
        w[0] * v[2] - w[2] * v[0],
        w[1] * v[2] - w[2] * v[1],
    ]


def stabilizer_up_to_scale_dim(v, H: Mat3 = FORM_DIAG) -> int:
    """Real dimension of {X in su(2,1 w.r.t. H) : X v in C v}.

    The proportionality condition is the vanishing of the 2x2 minors of
    (Xv, v), which is real-linear in X, so the dimension is an exact kernel
    computation over the rationals.
    """
    vv = tuple(x if isinstance(x, GaussianRational) else GaussianRational(x) for x in v)
    if all(x.is_zero() for x in vv):
        raise DomainError("stabilizer of the zero vector is undefined")
    basis = su21_basis(H)
    columns = []
    for B in basis:
        minors = _pair_minors(apply_vec(B, vv), vv)
        columns.append(realify(minors))
    rows = [[Fraction(columns[j][pos]) for j in range(len(basis))] for pos in range(6)]
    return len(exactla.nullspace(rows, one=Fraction(1)))


def form_value(v, H: Mat3 = FORM_DIAG) -> Fraction:
    """<v, v> = v^t H conj(v), a real number for Hermitian H."""
    vv = tuple(x if isinstance(x, GaussianRational) else GaussianRational(x) for x in v)
    total = GaussianRational(0)
    for i in range(3):
        for j in range(3):
            total = total + vv[i] * H[i][j] * vv[j].conjugate()
    if total.im != 0:
        raise DomainError("form value came out non-real; H is not Hermitian")
    return total.re


# ---------------------------------------------------------------------------
# the 6-dimensional isotropy algebra and the common-eigenvector test
# ---------------------------------------------------------------------------


def isotropy_algebra_generators() -> list[Mat3]:
    """Tangent generators at the identity of the 6-parameter isotropy matrix family.

    Obtained by differentiating the family along its six smooth directions at
    the identity: the scale, the two phases, the imaginary part of the (2,1)
    slope, and the real and imaginary parts of d.  All six satisfy the
    pairing-form algebra condition.
    """
    i = GaussianRational(0, 1)
    return [
        mat([[-1, 0, 0], [0, 1, 0], [0, 0, 0]]),              # scale direction
        mat([[i, 0, 0], [0, i, 0], [0, 0, 0]]),               # first phase
        mat([[0, 0, 0], [0, 0, 0], [0, 0, i]]),               # second phase
        mscale(E(1, 0), i),                                   # Im b
        msub(E(1, 2), E(2, 0)),                               # Re d
        madd(mscale(E(1, 2), i), mscale(E(2, 0), i)),         # Im d
    ]


def isotropy_algebra() -> LieSubspace:
    return LieSubspace(tuple(isotropy_algebra_generators()), "u21", "R")


def line_image_test(S: LieSubspace, w) -> bool:
    """True iff every X in S maps w into the line C*w (exact minor rank test).

    For the isotropy algebra, the vectors passing this test are exactly the
    multiples of (0, 1, 0): that line is the algebra's only common
    eigenvector direction, which is what pins the group's connected pieces.
    """
    ww = tuple(x if isinstance(x, GaussianRational) else GaussianRational(x) for x in w)
    if all(x.is_zero() for x in ww):
        raise DomainError("the zero vector spans no line")
    for B in S.basis:
        minors = _pair_minors(apply_vec(B, ww), ww)
        if any(not m.is_zero() for m in minors):
            return False
    return True
