"""Skew pencils of forms, Pfaffian certificates, and the line-congruence model.

The module ships two pieces of built-in data as canonical text, re-parsed at
import time: a 6x6 antisymmetric matrix of binary quadratics ("the pencil")
and its 12x12 scalar flattening.  On top of these it provides

  * exact Pfaffians over any commutative coefficient ring,
  * a constant-rank-4 certificate for pencils (Pfaffian vanishing plus a
    gcd computation on the fifteen 4x4 sub-Pfaffians),
  * the three-term complex built from the column space of the flattening
    (composition test, rank probes, and the minors locus of the right map),
  * a coordinate model for isotropic 3-spaces of a symplectic 6-space,
    with the incidence ideal of a pencil of conic-centered projections
    and the 2x6 presentation matrix derived from it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .linalg import det, identity, inverse, mat_mul, rank, rref, transpose
from .poly import GroebnerBasis, Poly, Signature, parse_poly

PENCIL_SIG = Signature.make((("u", 1), ("v", 1)))
POINT_SIG = Signature.make(tuple(("z%d" % i, 1) for i in range(6)))

# Built-in data, kept as text in the source layout and parsed below.
BETA_TEXT = """\
0, u^2, 2*u*v, v^2, 0, 0
-u^2, 0, 0, 0, 0, 0
-2*u*v, 0, 0, 0, 0, u^2
-v^2, 0, 0, 0, 0, 2*u*v
0, 0, 0, 0, 0, v^2
0, 0, -u^2, -2*u*v, -v^2, 0
"""

FLATTENING_TEXT = """\
0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0
0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0
-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0
0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0
0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0
-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0
0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1
0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0
0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0
0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1
0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0
0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0
"""


def _parse_rows(text: str):
    return [[cell.strip() for cell in line.split(",")]
            for line in text.strip().splitlines()]


def beta_matrix() -> List[List[Poly]]:
    """The built-in 6x6 pencil, entries parsed into (u, v) quadratics."""
    return [[parse_poly(cell, PENCIL_SIG) for cell in row]
            for row in _parse_rows(BETA_TEXT)]


def flattening_matrix() -> List[List[Fraction]]:
    """The built-in 12x12 scalar matrix, row layout as in the source text."""
    return [[Fraction(cell) for cell in row]
            for row in _parse_rows(FLATTENING_TEXT)]


def _is_zero(x) -> bool:
    return not x if isinstance(x, Poly) else x == 0


def _check_skew(m) -> None:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("matrix is not square")
    for i in range(n):
        for j in range(i, n):
            if not _is_zero(m[i][j] + m[j][i]):
                raise ValueError("matrix is not antisymmetric at (%d, %d)"
                                 % (i, j))


def pfaffian(m):
    """Pfaffian of an antisymmetric matrix, by expansion along the first row.

    Works over any commutative coefficient type supporting +, -, *
    (Fraction entries or Poly entries).  Raises on odd size or on a
    matrix that is not antisymmetric.
    """
    _check_skew(m)
    if len(m) % 2 != 0:
        raise ValueError("Pfaffian requires even size, got %d" % len(m))
    return _pf(m)


def _pf(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 2:
        return m[0][1]
    acc = None
    for j in range(1, n):
        if _is_zero(m[0][j]):
            continue
        keep = [k for k in range(1, n) if k != j]
        sub = [[m[r][c] for c in keep] for r in keep]
        term = m[0][j] * _pf(sub)
        if j % 2 == 0:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return m[0][0] * 0  # typed zero
    return acc


def sub_pfaffians(m, size: int = 4):
    """Pfaffians of all principal size x size submatrices, in index order."""
    n = len(m)
    out = []
    for rows in itertools.combinations(range(n), size):
        sub = [[m[r][c] for c in rows] for r in rows]
        out.append(_pf(sub))
    return out


class SkewPencil:
    """An antisymmetric matrix of binary quadratics in (u, v)."""

    def __init__(self, matrix: Sequence[Sequence[Poly]]):
        m = [list(row) for row in matrix]
        _check_skew(m)
        for row in m:
            for entry in row:
                if entry.sig != PENCIL_SIG:
                    raise ValueError("entries must live in the (u, v) ring")
                if entry and not (entry.is_homogeneous()
                                  and entry.degree() == 2):
                    raise ValueError("entries must be quadratics or zero")
        self.matrix = m
        self.size = len(m)

    @classmethod
    def built_in(cls) -> "SkewPencil":
        return cls(beta_matrix())

    def pfaffian(self) -> Poly:
        return pfaffian(self.matrix)

    def sub_pfaffians(self, size: int = 4):
        return sub_pfaffians(self.matrix, size)

    def evaluate(self, u, v):
        vals = {"u": Fraction(u), "v": Fraction(v)}
        return [[entry.evaluate(vals) for entry in row] for row in self.matrix]

    def rank_at(self, u, v) -> int:
        return rank(self.evaluate(u, v))


# Binary-form gcd.  A nonzero homogeneous f in (u, v) factors as
# u^a * v^b * (core homogenized), with the core a univariate polynomial
# having nonzero constant and leading coefficients; gcds multiply over
# the three parts.

def _form_parts(p: Poly):
    d = p.degree()
    coeffs = {}
    for mono, c in p.terms.items():
        eu, ev = mono
        coeffs[eu] = c
    lo = min(coeffs)
    hi = max(coeffs)
    core = [coeffs.get(e, Fraction(0)) for e in range(lo, hi + 1)]
    return lo, d - hi, core


def _upoly_mod(a, b):
    a = list(a)
    while len(a) >= len(b):
        if a[-1] == 0:
            a.pop()
            continue
        q = a[-1] / b[-1]
        off = len(a) - len(b)
        for i in range(len(b)):
            a[off + i] -= q * b[i]
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _upoly_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _upoly_mod(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def binary_form_gcd(forms: Sequence[Poly]) -> Poly:
    """Monic gcd in Q[u, v] of homogeneous binary forms (zeros ignored)."""
    nonzero = [f for f in forms if f]
    if not nonzero:
        return Poly.zero(PENCIL_SIG)
    mu = mv = None
    core_gcd = None
    for f in nonzero:
        if not f.is_homogeneous():
            raise ValueError("binary_form_gcd expects homogeneous forms")
        a, b, core = _form_parts(f)
        mu = a if mu is None else min(mu, a)
        mv = b if mv is None else min(mv, b)
        core_gcd = core if core_gcd is None else _upoly_gcd(core_gcd, core)
    terms = {}
    k = len(core_gcd) - 1
    for j, c in enumerate(core_gcd):
        if c:
            terms[(mu + j, mv + (k - j))] = c
    return Poly(PENCIL_SIG, terms)


def _rational_projective_root(g: Poly) -> Optional[str]:
    """A rational point of the zero locus of a nonconstant binary form."""
    lo, ml, core = _form_parts(g)
    if lo > 0:
        return "[0:1]"
    if ml > 0:
        return "[1:0]"
    # rational root search on the dehomogenized core g(t, 1)
    from math import gcd as igcd
    denom = 1
    for c in core:
        denom = denom * c.denominator // igcd(denom, c.denominator)
    ints = [int(c * denom) for c in core]
    lead, const = ints[-1], ints[0]

    def divisors(n):
        n = abs(n)
        out = [d for d in range(1, n + 1) if n % d == 0]
        return out or [1]

    for p in divisors(const):
        for q in divisors(lead):
            for s in (1, -1):
                t = Fraction(s * p, q)
                if g.evaluate({"u": t, "v": Fraction(1)}) == 0:
                    return "[%s:1]" % t
    return None


@dataclass
class CertificateResult:
    ok: bool
    pfaffian_is_zero: bool
    gcd: Poly
    witness: Optional[str] = None

    def __str__(self):
        if self.ok:
            return "constant rank 4 certified; sub-Pfaffian gcd = %s" % self.gcd
        return "certificate failed: %s" % self.witness


def constant_rank_certificate(pencil: SkewPencil) -> CertificateResult:
    """Certify that a 6x6 pencil has rank exactly 4 at every [u:v].

    Rank < 6 everywhere is the identical vanishing of the Pfaffian; rank >= 4
    everywhere is the absence of a common projective root of the fifteen
    4x4 principal sub-Pfaffians, i.e. a constant nonzero gcd.
    """
    pf = pencil.pfaffian()
    g = binary_form_gcd(pencil.sub_pfaffians(4))
    if pf:
        for u, v in ((1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1)):
            if pf.evaluate({"u": Fraction(u), "v": Fraction(v)}) != 0:
                return CertificateResult(
                    False, False, g,
                    "Pfaffian nonzero, e.g. rank 6 at [%d:%d]" % (u, v))
        return CertificateResult(False, False, g,
                                 "Pfaffian is a nonzero form: %s" % pf)
    if not g:
        # rank <= 2 at every point; locate the deepest degeneration via
        # the gcd of the matrix entries themselves
        entry_gcd = binary_form_gcd([e for row in pencil.matrix for e in row])
        msg = "all 4x4 sub-Pfaffians vanish identically (rank <= 2 everywhere)"
        if entry_gcd and entry_gcd.degree() > 0:
            root = _rational_projective_root(entry_gcd)
            where = root if root else "a root of %s" % entry_gcd
            msg += "; entry gcd %s vanishes at %s" % (entry_gcd, where)
        elif not entry_gcd:
            msg = "zero pencil"
        return CertificateResult(False, True, g, msg)
    if g.degree() == 0:
        return CertificateResult(True, True, g, None)
    root = _rational_projective_root(g)
    where = root if root else "a root of %s" % g
    return CertificateResult(
        False, True, g,
        "sub-Pfaffians share the factor %s; rank < 4 at %s" % (g, where))


def flatten_rank() -> int:
    """Rank of the built-in 12x12 flattening (exact elimination)."""
    return rank(flattening_matrix())


def elementary_skew(i: int, j: int, scale: Poly, n: int = 6):
    """n x n matrix with scale in slot (i, j), -scale in (j, i), zeros else."""
    zero = Poly.zero(scale.sig)
    m = [[zero for _ in range(n)] for _ in range(n)]
    m[i][j] = scale
    m[j][i] = -scale
    return m


# ---------------------------------------------------------------------------
# The three-term complex attached to the flattening.
#
# The 12 coordinates interleave a 2-dimensional space L and a 6-dimensional
# space V as index 2*i + s  <->  l_s (x) v_i; with this reading the 12x12
# matrix is the block flattening of the pencil (beta as a bivector), which
# the dev checks below confirm by recomputing it from the pencil itself.


def _blocks_from_pencil(p: SkewPencil):
    origin = {"u": 0, "v": 0}
    b00 = [[e.coefficient_of("u", 2).evaluate(origin) for e in row]
           for row in p.matrix]
    b11 = [[e.coefficient_of("v", 2).evaluate(origin) for e in row]
           for row in p.matrix]
    mixed = [[e.coefficient_of("u", 1).coefficient_of("v", 1).evaluate(origin)
              for e in row] for row in p.matrix]
    b01 = [[c / 2 for c in row] for row in mixed]
    return b00, b01, b11


def interleaved_flattening(p: SkewPencil):
    """12x12 scalar matrix M[2i+s][2j+t] = (B_st)_ij for the pencil blocks."""
    b00, b01, b11 = _blocks_from_pencil(p)
    blocks = {(0, 0): b00, (0, 1): b01, (1, 0): b01, (1, 1): b11}
    m = [[Fraction(0)] * 12 for _ in range(12)]
    for i in range(6):
        for j in range(6):
            for s in range(2):
                for t in range(2):
                    m[2 * i + s][2 * j + t] = blocks[(s, t)][i][j]
    return m


@dataclass
class Quasimonad:
    """Column space of the flattening with its induced alternating form.

    The basis consists of the leftmost independent columns; since basis
    vector p is the image of the coordinate functional at pivot column
    c_p, the induced form on the image is the principal submatrix of the
    flattening on the pivot indices.
    """

    basis: List[List[Fraction]]
    pivots: List[int]
    form: List[List[Fraction]]
    right: List[List[Poly]]
    left: List[List[Poly]]

    @classmethod
    def built_in(cls) -> "Quasimonad":
        m = flattening_matrix()
        _, pivots = rref(m)
        cols = transpose(m)
        basis = [list(cols[c]) for c in pivots]
        form = [[m[p][q] for q in pivots] for p in pivots]
        z = [Poly.variable(POINT_SIG, "z%d" % i) for i in range(6)]
        right = [[sum((w[2 * i + k] * z[i] for i in range(6)),
                      Poly.zero(POINT_SIG))
                  for w in basis] for k in range(2)]
        form_inv = inverse(form)
        eps = [[Fraction(0), Fraction(1)], [Fraction(-1), Fraction(0)]]
        # left = form^-1 . right^T . eps, a 6x2 matrix of linear forms
        rt = [[right[k][j] for k in range(2)] for j in range(6)]
        rte = [[sum((row[k] * eps[k][c] for k in range(2)),
                    Poly.zero(POINT_SIG)) for c in range(2)] for row in rt]
        left = [[sum((form_inv[j][p] * rte[p][c] for p in range(6)),
                     Poly.zero(POINT_SIG)) for c in range(2)]
                for j in range(6)]
        return cls(basis, list(pivots), form, right, left)

    def form_determinant(self) -> Fraction:
        return det(self.form)

    def composition(self) -> List[List[Poly]]:
        """The 2x2 matrix of quadrics right(z) . left(z)."""
        return [[sum((self.right[k][j] * self.left[j][c] for j in range(6)),
                     Poly.zero(POINT_SIG)) for c in range(2)]
                for k in range(2)]

    def composition_is_zero(self) -> bool:
        return all(not e for row in self.composition() for e in row)

    def right_at(self, z: Sequence):
        vals = {"z%d" % i: Fraction(z[i]) for i in range(6)}
        return [[e.evaluate(vals) for e in row] for row in self.right]

    def left_at(self, z: Sequence):
        vals = {"z%d" % i: Fraction(z[i]) for i in range(6)}
        return [[e.evaluate(vals) for e in row] for row in self.left]

    def minor_ideal_generators(self) -> List[Poly]:
        """The fifteen 2x2 minors of the right map, quadrics in z0..z5."""
        out = []
        for j, jj in itertools.combinations(range(6), 2):
            out.append(self.right[0][j] * self.right[1][jj]
                       - self.right[0][jj] * self.right[1][j])
        return out


@dataclass
class QuasimonadReport:
    composition_zero: bool
    form_determinant: Fraction
    left_rank_at_e0: int
    right_generic_rank: int
    sample_seed: int
    sample_ranks: List[Tuple[Tuple[int, ...], int]]
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def quasimonad_checks(samples: int = 8, seed: int = 20260826) -> QuasimonadReport:
    q = Quasimonad.built_in()
    failures = []
    comp_zero = q.composition_is_zero()
    if not comp_zero:
        failures.append("composition is not identically zero")
    d = q.form_determinant()
    if d == 0:
        failures.append("induced form on the column space is degenerate")
    e0 = (1, 0, 0, 0, 0, 0)
    r_e0 = rank(q.left_at(e0))
    if r_e0 != 2:
        failures.append("left map rank %d at e0, expected 2" % r_e0)
    rng = random.Random(seed)
    sample_ranks = []
    generic_right = 0
    for _ in range(samples):
        z = tuple(rng.randint(-9, 9) for _ in range(6))
        if all(c == 0 for c in z):
            z = (1,) + z[1:]
        rl = rank(q.left_at(z))
        sample_ranks.append((z, rl))
        if rl != 2:
            failures.append("left map rank %d at %s" % (rl, (z,)))
        generic_right = max(generic_right, rank(q.right_at(z)))
    if generic_right != 2:
        failures.append("right map generic rank %d, expected 2" % generic_right)
    return QuasimonadReport(comp_zero, d, r_e0, generic_right, seed,
                            sample_ranks, failures)


@dataclass
class MinorsLocusReport:
    status: str  # "cubic", "inconclusive", or "mismatch"
    hilbert_values: List[int]
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status in ("cubic", "inconclusive")


def minors_locus_hilbert(cap: int = 8, max_pairs: int = 60000) -> MinorsLocusReport:
    """Hilbert function of the rank <= 1 locus of the right map.

    The generators are not saturated, so only the tail of the Hilbert
    function is compared against 3t + 1 (a degree-3 curve with constant
    term 1); at least four consecutive agreeing values are required.
    """
    q = Quasimonad.built_in()
    gens = q.minor_ideal_generators()
    try:
        gb = GroebnerBasis(gens)
    except RuntimeError:
        return MinorsLocusReport("inconclusive", [],
                                 "Groebner pair budget exhausted")
    values = gb.hilbert_function(cap)
    tail = 0
    for t in range(cap, 0, -1):
        if values[t] == 3 * t + 1:
            tail += 1
        else:
            break
    if tail >= 4:
        return MinorsLocusReport("cubic", values,
                                 "tail agrees with 3t+1 from t=%d" % (cap - tail + 1))
    if tail > 0:
        return MinorsLocusReport("inconclusive", values,
                                 "tail too short under degree cap %d" % cap)
    return MinorsLocusReport("mismatch", values,
                             "Hilbert values do not reach 3t+1")


# ---------------------------------------------------------------------------
# Coordinate model: 3-spaces of a symplectic 6-space, in (a, X, Y, b)
# coordinates for the decomposition into two transverse isotropic 3-spaces.

CONGRUENCE_SIG = Signature.make(
    (("lam", 1), ("mu", 1), ("a", 1))
    + tuple(("x%d" % i, 1) for i in range(6))
    + tuple(("y%d" % i, 1) for i in range(5)))

FULL_SIG = Signature.make(
    (("a", 1), ("b", 1))
    + tuple(("x%d" % i, 1) for i in range(6))
    + tuple(("y%d" % i, 1) for i in range(6)))


def _sym3(sig: Signature, stem: str):
    v = [Poly.variable(sig, "%s%d" % (stem, i)) for i in range(6)]
    return [[v[0], v[1], v[2]], [v[1], v[5], v[3]], [v[2], v[3], v[4]]]


def _hankel3(sig: Signature, stem: str):
    v = [Poly.variable(sig, "%s%d" % (stem, i)) for i in range(5)]
    return [[v[0], v[1], v[2]], [v[1], v[2], v[3]], [v[2], v[3], v[4]]]


def _zero_like(x):
    return Poly.zero(x.sig) if isinstance(x, Poly) else Fraction(0)


def _mat3_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(3)), _zero_like(a[i][0]))
             for j in range(3)] for i in range(3)]


def adjugate3(m):
    """Adjugate of a 3x3 matrix over any commutative coefficient type."""
    def cof(i, j):
        r = [k for k in range(3) if k != i]
        c = [k for k in range(3) if k != j]
        minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
        return minor if (i + j) % 2 == 0 else -minor
    return [[cof(j, i) for j in range(3)] for i in range(3)]


def symplectic_product(u, w) -> Fraction:
    """The standard form pairing slot i with slot 3+i."""
    return sum(Fraction(u[i]) * Fraction(w[3 + i])
               - Fraction(u[3 + i]) * Fraction(w[i]) for i in range(3))


def is_isotropic(vectors: Sequence[Sequence]) -> bool:
    return all(symplectic_product(u, w) == 0
               for u, w in itertools.combinations(vectors, 2))


def plucker_abxy(vectors: Sequence[Sequence]):
    """(a, X, Y, b) coordinates of the 3-space spanned by three 6-vectors.

    a and b are the wedge coordinates on the two distinguished 3-spaces
    (slots 0..2 and 3..5); X and Y are the mixed blocks.  On the graph
    of a map S (columns of [I; S]) this returns (1, S, adj S, det S).
    """
    m = [[Fraction(vec[r]) for vec in vectors] for r in range(6)]

    def p(i, j, k):
        return det([m[i], m[j], m[k]])

    a = p(0, 1, 2)
    b = p(3, 4, 5)
    x = [[p(1, 2, 3 + i), -p(0, 2, 3 + i), p(0, 1, 3 + i)] for i in range(3)]
    comp = {0: (1, 2), 1: (0, 2), 2: (0, 1)}
    y = [[(-1) ** j * p(i, 3 + comp[j][0], 3 + comp[j][1]) for j in range(3)]
         for i in range(3)]
    return a, x, y, b


def gw_residuals(a, x, y, b):
    """Residuals of the decomposable + isotropic equations at (a, X, Y, b).

    Zero iff the point lies on the isotropic Grassmannian: the quadratic
    equations adj X = aY, adj Y = bX, YX = ab I, and the linear symmetry
    of X and Y.
    """
    a = Fraction(a)
    b = Fraction(b)
    out = []
    ax = adjugate3(x)
    ay = adjugate3(y)
    yx = _mat3_mul(y, x)
    for i in range(3):
        for j in range(3):
            out.append(ax[i][j] - a * y[i][j])
            out.append(ay[i][j] - b * x[i][j])
            out.append(yx[i][j] - (a * b if i == j else Fraction(0)))
    for i in range(3):
        for j in range(i + 1, 3):
            out.append(x[i][j] - x[j][i])
            out.append(y[i][j] - y[j][i])
    return out


def graph_plane(s):
    """Columns of [I; S] for a 3x3 matrix S, as three 6-vectors."""
    return [[Fraction(1 if r == j else 0) for r in range(3)]
            + [Fraction(s[i][j]) for i in range(3)] for j in range(3)]


class CoordinateModel:
    """Equations and incidence ideal for the congruence coordinates.

    The symmetric matrices are encoded with six variables each (x5 and y5
    sit in the middle slot); the tangent hyperplane identifies y5 with y2,
    turning Y into a Hankel matrix in the incidence signature.
    """

    def __init__(self):
        self.sig = CONGRUENCE_SIG
        self.full_sig = FULL_SIG

    def gw_equations(self) -> List[Poly]:
        """The 27 quadratic equations in the full (a, b, x, y) signature."""
        sig = self.full_sig
        a = Poly.variable(sig, "a")
        b = Poly.variable(sig, "b")
        x = _sym3(sig, "x")
        y = _sym3(sig, "y")
        ax = adjugate3(x)
        ay = adjugate3(y)
        yx = _mat3_mul(y, x)
        zero = Poly.zero(sig)
        eqs = []
        for i in range(3):
            for j in range(3):
                eqs.append(ax[i][j] - a * y[i][j])
                eqs.append(ay[i][j] - b * x[i][j])
                eqs.append(yx[i][j] - (a * b if i == j else zero))
        return eqs

    def incidence_generators(self) -> List[Poly]:
        """Bidegree (*, 1) equations of the incidence of the conic pencil."""
        sig = self.sig
        lam = Poly.variable(sig, "lam")
        mu = Poly.variable(sig, "mu")
        a = Poly.variable(sig, "a")
        x = _sym3(sig, "x")
        y = _hankel3(sig, "y")
        conic = [lam * lam, lam * mu, mu * mu]
        gens = [a]
        for i in range(3):
            gens.append(sum((x[i][j] * conic[j] for j in range(3)),
                            Poly.zero(sig)))
        rows = [[-mu, lam, Poly.zero(sig)], [Poly.zero(sig), -mu, lam]]
        for k in range(2):
            for j in range(3):
                gens.append(sum((rows[k][i] * y[i][j] for i in range(3)),
                                Poly.zero(sig)))
        return gens

    def six_sections(self) -> List[Poly]:
        sig = self.sig
        lam = Poly.variable(sig, "lam")
        mu = Poly.variable(sig, "mu")
        a = Poly.variable(sig, "a")
        y = [Poly.variable(sig, "y%d" % i) for i in range(5)]
        return [-a * lam, -a * mu,
                lam * y[1] - mu * y[0], lam * y[2] - mu * y[1],
                lam * y[3] - mu * y[2], lam * y[4] - mu * y[3]]

    def presentation_matrix(self, a, yvals):
        """The 2x6 matrix with rows (a,0,y0..y3) and (0,a,-y1..-y4)."""
        a = Fraction(a)
        y = [Fraction(c) for c in yvals]
        return [[a, 0, y[0], y[1], y[2], y[3]],
                [0, a, -y[1], -y[2], -y[3], -y[4]]]


def _y_coordinates(y):
    """Read (y0..y4) off a symmetric matrix lying on the y5 = y2 hyperplane."""
    if y[1][1] != y[0][2]:
        raise ValueError("point is off the y5 = y2 hyperplane")
    return [y[0][0], y[0][1], y[0][2], y[1][2], y[2][2]]


def rank_two_point():
    """(a, X, Y, b) for an isotropic graph plane with nonzero a."""
    s = [[1, 0, 0], [0, 0, 1], [0, 1, 0]]
    return plucker_abxy(graph_plane(s))


def rank_one_point():
    """(a, X, Y, b) for the plane spanned by the conic point at [1:0]
    and the two distinguished directions orthogonal to it."""
    e = identity(6)
    return plucker_abxy([e[0], e[4], e[5]])


@dataclass
class CongruenceReport:
    memberships: List[Tuple[str, bool]]
    rank_off_section: int
    rank_on_section: int
    point_residuals_ok: bool
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def congruence_model_check() -> CongruenceReport:
    model = CoordinateModel()
    failures = []
    gb = GroebnerBasis(model.incidence_generators())
    memberships = []
    for s in model.six_sections():
        inside = gb.contains(s)
        memberships.append((str(s), inside))
        if not inside:
            failures.append("section %s is not in the incidence ideal" % s)

    residuals_ok = True
    a2, x2, y2, b2 = rank_two_point()
    a1, x1, y1, b1 = rank_one_point()
    for label, pt in (("off-section", (a2, x2, y2, b2)),
                      ("on-section", (a1, x1, y1, b1))):
        if any(r != 0 for r in gw_residuals(*pt)):
            residuals_ok = False
            failures.append("%s point violates the model equations" % label)

    m_off = CoordinateModel().presentation_matrix(a2, _y_coordinates(y2))
    m_on = CoordinateModel().presentation_matrix(a1, _y_coordinates(y1))
    rank_off = rank(m_off)
    rank_on = rank(m_on)
    if a2 == 0 or rank_off != 2:
        failures.append("expected rank 2 at the a != 0 point, got %d" % rank_off)
    if a1 != 0 or rank_on != 1:
        failures.append("expected rank 1 at the a = 0 point, got %d" % rank_on)
    return CongruenceReport(memberships, rank_off, rank_on, residuals_ok,
                            failures)
