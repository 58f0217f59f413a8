"""Presented Chow rings with exact integration.

A ring is a graded quotient Q[vars]/I with a dimension and an integration
rule.  Four kinds exist:

  direct    integration normalized by a pair (tau, n): the unique standard
            monomial in top degree calibrated so that integral(tau) = n;
  section   classes of an ambient ring, integrated against a fixed divisor
            class (used for hyperplane-section models whose own top graded
            piece is not visible in the ambient presentation);
  bundle    Proj of a rank-r bundle over a base, in the rank-one-quotient
            convention: zeta^r - c1 zeta^(r-1) + ... + (-1)^r c_r = 0,
            pushforward of zeta^k is the coefficient rule (zeta^(r-1) -> 1),
            relative canonical -r zeta + pi* c1;
  blowup    blow-up of a threefold along a smooth curve, integration given
            by the standard exceptional-divisor intersection rules.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from chowcalc.poly import (
    GroebnerBasis,
    Poly,
    Signature,
    monomials_of_degree,
    parse_poly,
)


class ChowClass:
    """An element of a ChowRing, stored in normal form."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: "ChowRing", rep: Poly):
        self.ring = ring
        self.rep = ring.gb.normal_form(rep) if ring.gb is not None else rep

    def _coerce(self, other):
        if isinstance(other, ChowClass):
            if other.ring is not self.ring:
                raise ValueError("classes live on different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return ChowClass(self.ring, Poly.constant(self.ring.sig, other))
        if isinstance(other, Poly):
            return ChowClass(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ChowClass(self.ring, self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.ring, -self.rep)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ChowClass(self.ring, self.rep - other.rep)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ChowClass(self.ring, self.rep * other.rep)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = self.ring.one()
        base = self
        if n < 0:
            raise ValueError("negative power of a Chow class")
        for _ in range(n):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = self._coerce(other)
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.ring is other.ring and self.rep == other.rep

    def __hash__(self):
        return hash((id(self.ring), self.rep))

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def degree(self) -> int:
        return self.rep.degree()

    def is_homogeneous(self) -> bool:
        return self.rep.is_homogeneous()

    def integrate(self) -> Fraction:
        return self.ring.integrate(self)

    def __str__(self):
        return str(self.rep)

    def __repr__(self):
        return "ChowClass(%s | %s)" % (self.ring.label, self.rep)


class ChowRing:
    def __init__(self, label, sig, relations, dim, kind, *,
                 tau=None, n=None, ambient=None, divisor=None,
                 base=None, zeta=None, rank=None, chern=None,
                 curve=None, genus=None, tangent_chern=None,
                 gb=None):
        self.label = label
        self.sig = sig
        self.relations = list(relations)
        self.dim = dim
        self.kind = kind
        self.tau = tau
        self.n = Fraction(n) if n is not None else None
        self.ambient = ambient
        self.divisor = divisor
        self.base = base
        self.zeta = zeta
        self.rank = rank
        self.chern = chern          # list of base Polys c_1..c_r
        self.curve = curve          # base Poly, codim 2
        self.genus = genus
        self.tangent_chern = tangent_chern  # list of Polys c_1..c_dim or None
        if gb is not None:
            self.gb = gb
        elif self.relations:
            self.gb = GroebnerBasis(self.relations)
        else:
            self.gb = None
        self._nf_tau_cache = None

    # element constructors -------------------------------------------------

    def parse(self, text: str) -> ChowClass:
        return ChowClass(self, parse_poly(text, self.sig))

    def var(self, name: str) -> ChowClass:
        return ChowClass(self, Poly.variable(self.sig, name))

    def const(self, c) -> ChowClass:
        return ChowClass(self, Poly.constant(self.sig, c))

    def zero(self) -> ChowClass:
        return ChowClass(self, Poly.zero(self.sig))

    def one(self) -> ChowClass:
        return self.const(1)

    def cls(self, poly: Poly) -> ChowClass:
        return ChowClass(self, poly)

    # structure ------------------------------------------------------------

    def normal_form(self, p: Poly) -> Poly:
        return self.gb.normal_form(p) if self.gb is not None else p

    def hilbert_function(self, max_degree=None):
        if max_degree is None:
            max_degree = self.dim
        if self.gb is None:
            return [len(monomials_of_degree(self.sig, d))
                    for d in range(max_degree + 1)]
        return self.gb.hilbert_function(max_degree)

    def tangent_class(self, i: int) -> ChowClass:
        if self.tangent_chern is None:
            raise ValueError("ring %s has no tangent data" % self.label)
        if i == 0:
            return self.one()
        if i <= len(self.tangent_chern):
            return ChowClass(self, self.tangent_chern[i - 1])
        return self.zero()

    # integration ----------------------------------------------------------

    def integrate(self, x: ChowClass) -> Fraction:
        if not isinstance(x, ChowClass) or x.ring is not self:
            raise ValueError("can only integrate classes of this ring")
        if not x.is_homogeneous():
            raise ValueError("cannot integrate an inhomogeneous class")
        if x.is_zero():
            return Fraction(0)
        if x.degree() != self.dim:
            return Fraction(0)
        if self.kind == "direct":
            return self._integrate_direct(x.rep)
        if self.kind == "section":
            lifted = ChowClass(self.ambient, x.rep * self.divisor)
            return self.ambient.integrate(lifted)
        if self.kind == "bundle":
            gamma = self._zeta_coefficient(x.rep, self.rank - 1)
            return self.base.integrate(ChowClass(self.base, gamma))
        if self.kind == "blowup":
            return self._integrate_blowup(x.rep)
        raise AssertionError("unknown ring kind %r" % self.kind)

    def _integrate_direct(self, nf: Poly) -> Fraction:
        if self._nf_tau_cache is None:
            t = self.gb.normal_form(self.tau) if self.gb else self.tau
            if len(t.terms) != 1:
                raise AssertionError(
                    "top graded piece of %s is not visibly one-dimensional"
                    % self.label)
            self._nf_tau_cache = t.leading_term()
        mono, coeff = self._nf_tau_cache
        extra = {m: c for m, c in nf.terms.items() if m != mono}
        if extra:
            raise AssertionError(
                "top-degree normal form of %s escaped the span of tau"
                % self.label)
        return nf.terms.get(mono, Fraction(0)) / coeff * self.n

    def _zeta_coefficient(self, nf: Poly, power: int) -> Poly:
        # zeta is the first signature variable of a bundle ring
        terms = {}
        for m, c in nf.terms.items():
            if m[0] == power:
                terms[m[1:]] = c
        return Poly(self.base.sig, terms)

    def pushforward(self, x: ChowClass) -> ChowClass:
        """pi_* to the base of a bundle ring (zeta-degree r-1 coefficient)."""
        if self.kind != "bundle":
            raise ValueError("pushforward needs a projective-bundle ring")
        if x.ring is not self:
            raise ValueError("class does not live on this ring")
        return ChowClass(self.base,
                         self._zeta_coefficient(x.rep, self.rank - 1))

    def pullback(self, x: ChowClass) -> ChowClass:
        """pi^* from the base of a bundle ring (inject base variables)."""
        if self.kind != "bundle":
            raise ValueError("pullback needs a projective-bundle ring")
        if x.ring is not self.base:
            raise ValueError("class does not live on the base")
        terms = {(0,) + m: c for m, c in x.rep.terms.items()}
        return ChowClass(self, Poly(self.sig, terms))

    def _integrate_blowup(self, nf: Poly) -> Fraction:
        base = self.base
        e_index = len(self.sig) - 1
        total = Fraction(0)
        for m, c in nf.terms.items():
            k = m[e_index]
            base_mono = m[:e_index]
            base_poly = Poly(base.sig, {base_mono: c})
            if k == 0:
                total += base.integrate(ChowClass(base, base_poly))
            elif k == 1:
                continue  # e . pi^*(surface class) pushes to zero
            elif k == 2:
                # pi^*D . e^2 = -(D.C) [pt]
                total += -base.integrate(
                    ChowClass(base, base_poly * self.curve))
            elif k == 3:
                minus_k = base.tangent_chern[0]  # -K_base = c1(T_base)
                normal_deg = base.integrate(
                    ChowClass(base, minus_k * self.curve)) \
                    + 2 * self.genus - 2
                total += c * (-normal_deg)
            else:
                raise AssertionError("blow-up monomial above top degree")
        return total

    def __repr__(self):
        return "ChowRing(%s, dim %d)" % (self.label, self.dim)


# constructors ---------------------------------------------------------------


def projective_space(n: int, var: str = "h") -> ChowRing:
    sig = Signature.make([(var, 1)])
    h = Poly.variable(sig, var)
    tangent = [Poly.constant(sig, comb(n + 1, i)) * h ** i
               for i in range(1, n + 1)]
    return ChowRing("P%d" % n if var == "h" else "P%d[%s]" % (n, var),
                    sig, [h ** (n + 1)], n, "direct",
                    tau=h ** n, n=1, tangent_chern=tangent)


def product_p1(k: int) -> ChowRing:
    sig = Signature.make([("alpha_%d" % i, 1) for i in range(1, k + 1)])
    alphas = [Poly.variable(sig, "alpha_%d" % i) for i in range(1, k + 1)]
    rels = [a * a for a in alphas]
    tau = Poly.one(sig)
    for a in alphas:
        tau = tau * a
    ct = Poly.one(sig)
    for a in alphas:
        ct = ct * (Poly.one(sig) + 2 * a)
    tangent = [ct.homogeneous_part(i) for i in range(1, k + 1)]
    return ChowRing("P1^%d" % k, sig, rels, k, "direct",
                    tau=tau, n=1, tangent_chern=tangent)


def product_ring(a: ChowRing, b: ChowRing, label=None) -> ChowRing:
    if a.kind != "direct" or b.kind != "direct":
        raise ValueError("product_ring needs two directly-normalized rings")
    clash = set(a.sig.names) & set(b.sig.names)
    if clash:
        raise ValueError("variable name clash: %s" % ", ".join(sorted(clash)))
    sig = Signature(a.sig.names + b.sig.names, a.sig.weights + b.sig.weights)
    off = len(a.sig)
    pad_b = len(b.sig)

    def lift_a(p: Poly) -> Poly:
        return Poly(sig, {m + (0,) * pad_b: c for m, c in p.terms.items()})

    def lift_b(p: Poly) -> Poly:
        return Poly(sig, {(0,) * off + m: c for m, c in p.terms.items()})

    rels = [lift_a(r) for r in a.relations] + [lift_b(r) for r in b.relations]
    # disjoint variables: the union of the two reduced bases is itself reduced
    merged = [lift_a(g) for g in a.gb.elements] + \
             [lift_b(g) for g in b.gb.elements]
    gb = GroebnerBasis(merged, precomputed=True)
    tangent = None
    if a.tangent_chern is not None and b.tangent_chern is not None:
        ca = Poly.one(sig)
        for t in a.tangent_chern:
            ca = ca + lift_a(t)
        cb = Poly.one(sig)
        for t in b.tangent_chern:
            cb = cb + lift_b(t)
        prod = ca * cb
        tangent = [prod.homogeneous_part(i) for i in range(1, a.dim + b.dim + 1)]
    return ChowRing(label or "%s x %s" % (a.label, b.label),
                    sig, rels, a.dim + b.dim, "direct",
                    tau=lift_a(a.tau) * lift_b(b.tau), n=a.n * b.n,
                    tangent_chern=tangent, gb=gb)


def projective_bundle(base: ChowRing, chern, zeta: str, label=None) -> ChowRing:
    """Proj of a rank-r bundle with Chern classes c_1..c_r over the base.

    chern is the list [c_1, ..., c_r] of base ChowClasses (or Polys); the
    tautological relation uses the rank-one-quotient sign convention
    zeta^r - c_1 zeta^(r-1) + c_2 zeta^(r-2) - ... = 0.
    """
    cherns = [c.rep if isinstance(c, ChowClass) else c for c in chern]
    r = len(cherns)
    if zeta in base.sig.names:
        raise ValueError("zeta name clashes with a base variable")
    sig = Signature((zeta,) + base.sig.names, (1,) + base.sig.weights)

    def lift(p: Poly) -> Poly:
        return Poly(sig, {(0,) + m: c for m, c in p.terms.items()})

    z = Poly.variable(sig, zeta)
    rel = z ** r
    for i, ci in enumerate(cherns, start=1):
        rel = rel + (-1) ** i * lift(ci) * z ** (r - i)
    rels = [lift(q) for q in base.relations] + [rel]
    return ChowRing(label or "Proj over %s" % base.label,
                    sig, rels, base.dim + r - 1, "bundle",
                    base=base, zeta=zeta, rank=r, chern=cherns)


def relative_canonical(pb: ChowRing) -> ChowClass:
    """omega of Proj(E) over the base: -r zeta + pi^* c_1(E)."""
    if pb.kind != "bundle":
        raise ValueError("relative_canonical needs a projective-bundle ring")
    z = Poly.variable(pb.sig, pb.zeta)
    c1 = Poly(pb.sig, {(0,) + m: c for m, c in pb.chern[0].terms.items()})
    return ChowClass(pb, -pb.rank * z + c1)


def blowup_threefold_along_curve(base: ChowRing, curve, genus: int,
                                 e: str = "e", label=None) -> ChowRing:
    """Blow-up of a threefold along a smooth curve of the given class/genus.

    Integration rules: pi^*D . e^2 = -(D.C)[pt], e^3 = -(-K.C + 2g - 2)[pt],
    e . pi^*(codim-2) = 0, and pi^* preserves base integrals.
    """
    if base.dim != 3:
        raise ValueError("base must be a threefold")
    if base.tangent_chern is None:
        raise ValueError("base needs tangent data to know its canonical class")
    curve_rep = curve.rep if isinstance(curve, ChowClass) else curve
    if base.sig.wdeg(curve_rep.leading_monomial()) != 2:
        raise ValueError("curve class must have codimension 2")
    if e in base.sig.names:
        raise ValueError("exceptional name clashes with a base variable")
    sig = Signature(base.sig.names + (e,), base.sig.weights + (1,))

    def lift(p: Poly) -> Poly:
        return Poly(sig, {m + (0,): c for m, c in p.terms.items()})

    rels = [lift(q) for q in base.relations]
    return ChowRing(label or "Bl %s" % base.label,
                    sig, rels, 3, "blowup",
                    base=base, curve=curve_rep, genus=genus)


def integrate_on_hyperplane_section(ambient: ChowRing, hyperplane: ChowClass,
                                    x: ChowClass) -> Fraction:
    """Integral over the divisor cut by `hyperplane` of the restriction of x."""
    if x.ring is not ambient or hyperplane.ring is not ambient:
        raise ValueError("classes must live on the ambient ring")
    if x.is_homogeneous() and not x.is_zero() \
            and x.degree() != ambient.dim - 1:
        return Fraction(0)
    return ambient.integrate(x * hyperplane)


# the fixed catalog ----------------------------------------------------------


@lru_cache(maxsize=None)
def catalog(name: str) -> ChowRing:
    """Named rings: Pn, P1^k, G26, Gw36, B, FB, I, Pi."""
    if name == "G26":
        sig = Signature.make([("h_2", 1), ("c_2", 2)])
        rels = [parse_poly("h_2^5 + 3*h_2*c_2^2 - 4*h_2^3*c_2", sig),
                parse_poly("-h_2^4*c_2 + 3*h_2^2*c_2^2 - c_2^3", sig)]
        return ChowRing("G26", sig, rels, 8, "direct",
                        tau=parse_poly("h_2^8", sig), n=14)
    if name == "Gw36":
        sig = Signature.make([("c_1'", 1), ("c_2'", 2), ("c_3'", 3)])
        rels = [parse_poly("c_3'^2", sig),
                parse_poly("c_2'^2 - 2*c_1'*c_3'", sig),
                parse_poly("c_1'^2 - 2*c_2'", sig)]
        return ChowRing("Gw36", sig, rels, 6, "direct",
                        tau=parse_poly("c_1'^6", sig), n=16)
    if name == "B":
        sig = Signature.make([("h_3", 1)] +
                             [("a_%d" % i, 2) for i in range(1, 5)])
        rels = [parse_poly("3*h_3^2 - 2*a_1 - 2*a_2 - 2*a_3 - 2*a_4", sig)]
        for i in range(1, 5):
            rels.append(parse_poly("8*h_3*a_%d - 3*h_3^3" % i, sig))
        for i in range(1, 5):
            for j in range(i + 1, 5):
                rels.append(parse_poly("8*a_%d*a_%d - h_3^4" % (i, j), sig))
        return ChowRing("B", sig, rels, 4, "direct",
                        tau=parse_poly("h_3^4", sig), n=16)
    if name == "FB":
        ambient = catalog("P1^4")
        divisor = parse_poly("alpha_1 + alpha_2 + alpha_3 + alpha_4",
                             ambient.sig)
        return ChowRing("FB", ambient.sig, list(ambient.relations), 3,
                        "section", ambient=ambient, divisor=divisor,
                        gb=ambient.gb)
    if name == "I":
        fb = catalog("FB")
        h2 = parse_poly("alpha_1 + alpha_2 + alpha_3 + alpha_4", fb.sig)
        # E = (K2perp/K2)^dual (h_2) restricted to F_B: c1 = 2 h_2,
        # c2 = 2 h_2^2 - 2 c_2 = (4/3) h_2^2 under h_2^2 = 3 c_2
        c1 = 2 * h2
        c2 = Fraction(4, 3) * h2 * h2
        return projective_bundle(fb, [c1, c2], "h_3'", label="I")
    if name == "Pi":
        base = projective_space(1, var="sigma")
        sigma = Poly.variable(base.sig, "sigma")
        # E = O(2) + S2L x O: rank 4, c(E) = 1 + 2 sigma
        chern = [2 * sigma, Poly.zero(base.sig), Poly.zero(base.sig),
                 Poly.zero(base.sig)]
        return projective_bundle(base, chern, "h", label="Pi")
    if name.startswith("P1^"):
        return product_p1(int(name[3:]))
    if name.startswith("P") and name[1:].isdigit():
        return projective_space(int(name[1:]))
    raise KeyError("unknown catalog ring %r" % name)


# catalog export/import ------------------------------------------------------


def ring_to_doc(ring: ChowRing) -> str:
    """Serialize a directly presented ring to a structured text document.

    Lines: `ring <label>`, `dim <d>`, `var <name> <weight>` per variable,
    `rel <poly>` per relation, `normalize <tau> <n>`, and optional
    `tangent <c_i>` lines.  Polynomials use the canonical printer, so
    serializing a reconstructed ring reproduces the document bit-exactly.
    """
    if ring.kind != "direct":
        raise ValueError("only directly presented rings are exportable "
                         "(%s has kind %r)" % (ring.label, ring.kind))
    lines = ["ring %s" % ring.label, "dim %d" % ring.dim]
    for name, w in ring.sig.pairs():
        lines.append("var %s %d" % (name, w))
    for rel in ring.relations:
        lines.append("rel %s" % rel)
    lines.append("normalize %s %s" % (ring.tau, ring.n))
    if ring.tangent_chern is not None:
        for c in ring.tangent_chern:
            lines.append("tangent %s" % c)
    return "\n".join(lines) + "\n"


def ring_from_doc(text: str) -> ChowRing:
    """Rebuild a directly presented ring from its text document."""
    label = None
    dim = None
    pairs = []
    rels = []
    tau = None
    n = None
    tangent = []
    sig = None

    def need_sig() -> Signature:
        nonlocal sig
        if sig is None:
            if not pairs:
                raise ValueError("var lines must precede polynomial lines")
            sig = Signature.make(pairs)
        return sig

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "ring":
            label = rest
        elif key == "dim":
            dim = int(rest)
        elif key == "var":
            name, w = rest.split()
            pairs.append((name, int(w)))
        elif key == "rel":
            rels.append(parse_poly(rest, need_sig()))
        elif key == "normalize":
            body, _, num = rest.rpartition(" ")
            tau = parse_poly(body, need_sig())
            n = Fraction(num)
        elif key == "tangent":
            tangent.append(parse_poly(rest, need_sig()))
        else:
            raise ValueError("line %d: unknown key %r" % (lineno, key))
    if label is None or dim is None or tau is None:
        raise ValueError("document needs ring, dim, and normalize lines")
    return ChowRing(label, need_sig(), rels, dim, "direct", tau=tau, n=n,
                    tangent_chern=tangent or None)
