"""Structure-constant representation of twisted (Hom-type) algebras,
coalgebras, bialgebras and Hopf algebras, with a machine-checked axiom
catalogue.

The twist automorphism deforms every axiom: associativity becomes
alpha(a)(bc) = (ab)alpha(c), the unit law becomes a1 = 1a = alpha(a), and
so on.  Checks quantify over basis tuples only, which suffices by
bilinearity and keeps the worst case at O(dim^4).

Identity ids ("eq-1.1", "antipode-left", ...) are stable strings; the
numbering groups the structure-level laws as the 1.x family.
"""

from __future__ import annotations

from .exactlin import (
    LinearMap,
    ZERO,
    ONE,
    add_scaled,
    basis_vec,
    invert,
    tensor_vec,
)
from .reports import CheckReport, check_all_vectors


class InvalidStructure(ValueError):
    """Constructor-time rejection: the supplied tables fail the axiom suite."""

    def __init__(self, report):
        self.report = report
        bad = ", ".join(item.identity for item in report.failures())
        super().__init__("%s fails: %s" % (report.suite, bad))


def _require(report_fn, check):
    """Run the validation suite only when checking is requested; reject the
    construction on any failing identity."""
    if check:
        report = report_fn()
        if not report.ok():
            raise InvalidStructure(report)


# ---------------------------------------------------------------------------
# data types
# ---------------------------------------------------------------------------


class HomAlgebraData:
    """Twisted unital algebra (A, m, 1, alpha) given by structure constants.

    mul.at(i, j, k) is the coefficient of e_k in e_i e_j; unit is the
    coordinate vector of 1; alpha is the invertible twist.
    """

    def __init__(self, basis, mul, unit, alpha, check=True):
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        if mul.dims != (self.dim,) * 3:
            raise InvalidStructure(_shape_report("hom-algebra", "mul dims %r" % (mul.dims,)))
        self.mul = mul
        self.unit = tuple(unit)
        self.alpha = alpha
        self.alpha_inv = invert(alpha)
        _require(lambda: check_hom_algebra(self), check)

    def mul_vv(self, a, b):
        """Product of two coordinate vectors."""
        out = [ZERO] * self.dim
        mul = self.mul
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        add_scaled(out, mul.fiber(i, j), ai * bj)
        return tuple(out)

    def label(self, k):
        return self.basis[k]


class HomCoalgebraData:
    """Twisted counital coalgebra (C, comul, counit, gamma).

    comul.at(k, i, j) is the coefficient of e_i (x) e_j in comul(e_k).
    """

    def __init__(self, basis, comul, counit, gamma, check=True):
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        if comul.dims != (self.dim,) * 3:
            raise InvalidStructure(_shape_report("hom-coalgebra", "comul dims %r" % (comul.dims,)))
        self.comul = comul
        self.counit = tuple(counit)
        self.gamma = gamma
        self.gamma_inv = invert(gamma)
        self._sparse = [comul.sparse_pairs(k) for k in range(self.dim)]
        _require(lambda: check_hom_coalgebra(self), check)

    def comul_terms(self, k):
        """Nonzero (i, j, coefficient) terms of comul(e_k)."""
        return self._sparse[k]

    def comul_vec(self, v):
        """Flattened image of a coordinate vector under comul."""
        d = self.dim
        out = [ZERO] * (d * d)
        for k, vk in enumerate(v):
            if vk:
                for i, j, c in self._sparse[k]:
                    out[i * d + j] += vk * c
        return tuple(out)

    def counit_vec(self, v):
        return sum((vk * ek for vk, ek in zip(v, self.counit)), ZERO)

    def label(self, k):
        return self.basis[k]


def _shape_report(suite, msg):
    rep = CheckReport(suite)
    rep.add("shape", msg, False)
    return rep


class HomHopfAlgebraData:
    """Twisted Hopf algebra: algebra + coalgebra on the same basis with the
    same twist, plus a bijective antipode."""

    def __init__(self, algebra, coalgebra, antipode, check=True):
        if algebra.dim != coalgebra.dim or algebra.basis != coalgebra.basis:
            raise InvalidStructure(_shape_report("hom-hopf", "algebra/coalgebra basis mismatch"))
        if algebra.alpha != coalgebra.gamma:
            raise InvalidStructure(_shape_report("hom-hopf", "twist differs between the two layers"))
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.antipode = antipode
        self.antipode_inv = invert(antipode)
        if check:
            rep = check_hom_bialgebra(self)
            rep.extend(check_antipode(self))
            _require(lambda: rep, True)

    @classmethod
    def from_tables(cls, basis, mul, unit, comul, counit, antipode, alpha, check=True):
        alg = HomAlgebraData(basis, mul, unit, alpha, check=check)
        coa = HomCoalgebraData(basis, comul, counit, alpha, check=check)
        return cls(alg, coa, antipode, check=check)

    # convenience pass-throughs used all over the higher layers
    @property
    def dim(self):
        return self.algebra.dim

    @property
    def basis(self):
        return self.algebra.basis

    @property
    def mul(self):
        return self.algebra.mul

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def alpha(self):
        return self.algebra.alpha

    @property
    def alpha_inv(self):
        return self.algebra.alpha_inv

    @property
    def comul(self):
        return self.coalgebra.comul

    @property
    def counit(self):
        return self.coalgebra.counit

    def mul_vv(self, a, b):
        return self.algebra.mul_vv(a, b)

    def comul_terms(self, k):
        return self.coalgebra.comul_terms(k)

    def sweedler2_terms(self, k):
        """Nonzero (i1, i21, i22, coefficient) terms of the right-iterated
        double coproduct of e_k."""
        out = []
        for i1, i2, c in self.coalgebra.comul_terms(k):
            for i21, i22, c2 in self.coalgebra.comul_terms(i2):
                out.append((i1, i21, i22, c * c2))
        return out

    def label(self, k):
        return self.algebra.basis[k]

    def equal_tables(self, other):
        """Structural equality of every structure constant."""
        return (
            self.basis == other.basis
            and self.mul == other.mul
            and self.unit == other.unit
            and self.comul == other.comul
            and self.counit == other.counit
            and self.alpha == other.alpha
            and self.antipode == other.antipode
        )


class HopfAutomorphism:
    """Invertible matrix intended to preserve the whole twisted Hopf
    structure; validate against a concrete algebra with check_automorphism."""

    def __init__(self, matrix):
        if not matrix.is_square:
            raise InvalidStructure(_shape_report("automorphism", "matrix not square"))
        self.matrix = matrix
        self.inverse = invert(matrix)

    def __matmul__(self, other):
        if isinstance(other, HopfAutomorphism):
            return HopfAutomorphism(self.matrix @ other.matrix)
        return self.matrix @ other

    def inv(self):
        return HopfAutomorphism(self.inverse)

    def __eq__(self, other):
        return isinstance(other, HopfAutomorphism) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return "HopfAutomorphism(%r)" % (self.matrix,)


def identity_automorphism(dim):
    return HopfAutomorphism(LinearMap.identity(dim))


# ---------------------------------------------------------------------------
# axiom checks
# ---------------------------------------------------------------------------


def check_hom_algebra(a):
    """Twisted associativity, twist multiplicativity, twisted unit laws."""
    rep = CheckReport("hom-algebra")
    d = a.dim
    lab = lambda idx: tuple(a.basis[i] for i in idx)
    e = lambda k: basis_vec(d, k)

    def assoc(idx):
        i, j, k = idx
        lhs = a.mul_vv(a.alpha.column(i), a.mul.fiber(j, k))
        rhs = a.mul_vv(a.mul.fiber(i, j), a.alpha.column(k))
        return lhs, rhs

    check_all_vectors(rep, "eq-1.1", "alpha(a)(bc) = (ab)alpha(c)", (d, d, d), lab, assoc)

    def alpha_mult(idx):
        i, j = idx
        return a.alpha.apply(a.mul.fiber(i, j)), a.mul_vv(a.alpha.column(i), a.alpha.column(j))

    check_all_vectors(rep, "alpha-mult", "alpha(ab) = alpha(a)alpha(b)", (d, d), lab, alpha_mult)

    check_all_vectors(
        rep, "eq-1.2-left", "1a = alpha(a)", (d,), lab,
        lambda idx: (a.mul_vv(a.unit, e(idx[0])), a.alpha.column(idx[0])),
    )
    check_all_vectors(
        rep, "eq-1.2-right", "a1 = alpha(a)", (d,), lab,
        lambda idx: (a.mul_vv(e(idx[0]), a.unit), a.alpha.column(idx[0])),
    )
    check_all_vectors(
        rep, "eq-1.3", "alpha(1) = 1", (1,), lambda idx: ("1",),
        lambda idx: (a.alpha.apply(a.unit), a.unit),
    )
    return rep


def check_hom_coalgebra(c):
    """Twisted coassociativity (both printed forms), comul/counit twist
    compatibility and the twisted counit law."""
    rep = CheckReport("hom-coalgebra")
    d = c.dim
    lab = lambda idx: tuple(c.basis[i] for i in idx)

    def coassoc(idx):
        (k,) = idx
        lhs = [ZERO] * (d * d * d)  # gamma^-1(c1) (x) comul(c2)
        rhs = [ZERO] * (d * d * d)  # comul(c1) (x) gamma^-1(c2)
        for i, j, w in c.comul_terms(k):
            gi = c.gamma_inv.column(i)
            for p, q, w2 in c.comul_terms(j):
                for t, gt in enumerate(gi):
                    if gt:
                        lhs[(t * d + p) * d + q] += w * w2 * gt
            gj = c.gamma_inv.column(j)
            for p, q, w2 in c.comul_terms(i):
                for t, gt in enumerate(gj):
                    if gt:
                        rhs[(p * d + q) * d + t] += w * w2 * gt
        return lhs, rhs

    check_all_vectors(
        rep, "eq-1.4", "gamma^-1(c1) (x) comul(c2) = comul(c1) (x) gamma^-1(c2)",
        (d,), lab, coassoc,
    )

    def coassoc_alt(idx):
        (k,) = idx
        lhs = [ZERO] * (d * d * d)  # c1 (x) c21 (x) gamma(c22)
        rhs = [ZERO] * (d * d * d)  # gamma(c11) (x) c12 (x) c2
        for i, j, w in c.comul_terms(k):
            for p, q, w2 in c.comul_terms(j):
                gq = c.gamma.column(q)
                for t, gt in enumerate(gq):
                    if gt:
                        lhs[(i * d + p) * d + t] += w * w2 * gt
            for p, q, w2 in c.comul_terms(i):
                gp = c.gamma.column(p)
                for t, gt in enumerate(gp):
                    if gt:
                        rhs[(t * d + q) * d + j] += w * w2 * gt
        return lhs, rhs

    check_all_vectors(
        rep, "eq-1.4-alt", "c1 (x) c21 (x) gamma(c22) = gamma(c11) (x) c12 (x) c2",
        (d,), lab, coassoc_alt,
    )

    def comul_gamma(idx):
        (k,) = idx
        lhs = c.comul_vec(c.gamma.column(k))
        rhs = [ZERO] * (d * d)
        for i, j, w in c.comul_terms(k):
            add_scaled(rhs, tensor_vec(c.gamma.column(i), c.gamma.column(j)), w)
        return lhs, rhs

    check_all_vectors(
        rep, "eq-1.5", "comul(gamma(c)) = gamma(c1) (x) gamma(c2)", (d,), lab, comul_gamma,
    )

    def counit_right(idx):
        (k,) = idx
        out = [ZERO] * d
        for i, j, w in c.comul_terms(k):
            out[i] += w * c.counit[j]
        return out, c.gamma_inv.column(k)

    def counit_left(idx):
        (k,) = idx
        out = [ZERO] * d
        for i, j, w in c.comul_terms(k):
            out[j] += w * c.counit[i]
        return out, c.gamma_inv.column(k)

    check_all_vectors(rep, "counit-right", "c1 eps(c2) = gamma^-1(c)", (d,), lab, counit_right)
    check_all_vectors(rep, "counit-left", "eps(c1) c2 = gamma^-1(c)", (d,), lab, counit_left)

    check_all_vectors(
        rep, "eq-1.6", "eps(gamma(c)) = eps(c)", (d,), lab,
        lambda idx: ((c.counit_vec(c.gamma.column(idx[0])),), (c.counit[idx[0]],)),
    )
    return rep


def check_hom_bialgebra(h):
    """comul and counit are morphisms of twisted algebras; the product on
    H (x) H is componentwise."""
    rep = CheckReport("hom-bialgebra")
    d = h.dim
    lab = lambda idx: tuple(h.basis[i] for i in idx)
    coa = h.coalgebra

    def comul_mult(idx):
        i, j = idx
        lhs = coa.comul_vec(h.mul.fiber(i, j))
        rhs = [ZERO] * (d * d)
        for i1, i2, w in coa.comul_terms(i):
            for j1, j2, w2 in coa.comul_terms(j):
                add_scaled(rhs, tensor_vec(h.mul.fiber(i1, j1), h.mul.fiber(i2, j2)), w * w2)
        return lhs, rhs

    check_all_vectors(rep, "bialg-comul-mult", "comul(hg) = comul(h)comul(g)", (d, d), lab, comul_mult)

    check_all_vectors(
        rep, "bialg-comul-unit", "comul(1) = 1 (x) 1", (1,), lambda idx: ("1",),
        lambda idx: (coa.comul_vec(h.unit), tensor_vec(h.unit, h.unit)),
    )

    def counit_mult(idx):
        i, j = idx
        return (
            (coa.counit_vec(h.mul.fiber(i, j)),),
            (h.counit[i] * h.counit[j],),
        )

    check_all_vectors(rep, "bialg-counit-mult", "eps(hg) = eps(h)eps(g)", (d, d), lab, counit_mult)

    check_all_vectors(
        rep, "bialg-counit-unit", "eps(1) = 1", (1,), lambda idx: ("1",),
        lambda idx: ((coa.counit_vec(h.unit),), (ONE,)),
    )
    return rep


def check_antipode(h):
    """Convolution-inverse axiom plus the derived anti-homomorphism
    properties and twist compatibility (both directions)."""
    rep = CheckReport("antipode")
    d = h.dim
    lab = lambda idx: tuple(h.basis[i] for i in idx)
    s = h.antipode
    coa = h.coalgebra

    def conv_eps(k):
        out = [ZERO] * d
        add_scaled(out, h.unit, h.counit[k])
        return out

    def left(idx):
        (k,) = idx
        out = [ZERO] * d
        for i, j, w in coa.comul_terms(k):
            add_scaled(out, h.mul_vv(s.column(i), basis_vec(d, j)), w)
        return out, conv_eps(k)

    def right(idx):
        (k,) = idx
        out = [ZERO] * d
        for i, j, w in coa.comul_terms(k):
            add_scaled(out, h.mul_vv(basis_vec(d, i), s.column(j)), w)
        return out, conv_eps(k)

    check_all_vectors(rep, "antipode-left", "S(h1)h2 = eps(h)1", (d,), lab, left)
    check_all_vectors(rep, "antipode-right", "h1 S(h2) = eps(h)1", (d,), lab, right)

    def anti_mult(idx):
        i, j = idx
        return s.apply(h.mul.fiber(i, j)), h.mul_vv(s.column(j), s.column(i))

    check_all_vectors(rep, "antipode-anti-mult", "S(hg) = S(g)S(h)", (d, d), lab, anti_mult)

    check_all_vectors(
        rep, "antipode-unit", "S(1) = 1", (1,), lambda idx: ("1",),
        lambda idx: (s.apply(h.unit), h.unit),
    )

    def anti_comult(idx):
        (k,) = idx
        lhs = coa.comul_vec(s.column(k))
        rhs = [ZERO] * (d * d)
        for i, j, w in coa.comul_terms(k):
            add_scaled(rhs, tensor_vec(s.column(j), s.column(i)), w)
        return lhs, rhs

    check_all_vectors(rep, "antipode-anti-comult", "comul(S(h)) = S(h2) (x) S(h1)", (d,), lab, anti_comult)

    check_all_vectors(
        rep, "antipode-counit", "eps(S(h)) = eps(h)", (d,), lab,
        lambda idx: ((coa.counit_vec(s.column(idx[0])),), (h.counit[idx[0]],)),
    )

    check_all_vectors(
        rep, "antipode-alpha", "S alpha = alpha S", (d,), lab,
        lambda idx: (s.apply(h.alpha.column(idx[0])), h.alpha.apply(s.column(idx[0]))),
    )
    check_all_vectors(
        rep, "antipode-alpha-inv", "S alpha^-1 = alpha^-1 S", (d,), lab,
        lambda idx: (s.apply(h.alpha_inv.column(idx[0])), h.alpha_inv.apply(s.column(idx[0]))),
    )
    return rep


def check_automorphism(h, phi):
    """Bijectivity plus algebra-map, coalgebra-map, twist and antipode
    compatibility for a candidate structure automorphism."""
    if isinstance(phi, HopfAutomorphism):
        phi = phi.matrix
    rep = CheckReport("automorphism")
    d = h.dim
    lab = lambda idx: tuple(h.basis[i] for i in idx)
    coa = h.coalgebra

    try:
        invert(phi)
        rep.add("aut-invertible", "phi bijective", True)
    except Exception:
        rep.add("aut-invertible", "phi bijective", False)
        return rep

    check_all_vectors(
        rep, "aut-mult", "phi(ab) = phi(a)phi(b)", (d, d), lab,
        lambda idx: (
            phi.apply(h.mul.fiber(idx[0], idx[1])),
            h.mul_vv(phi.column(idx[0]), phi.column(idx[1])),
        ),
    )
    check_all_vectors(
        rep, "aut-unit", "phi(1) = 1", (1,), lambda idx: ("1",),
        lambda idx: (phi.apply(h.unit), h.unit),
    )

    def comul_map(idx):
        (k,) = idx
        lhs = coa.comul_vec(phi.column(k))
        rhs = [ZERO] * (d * d)
        for i, j, w in coa.comul_terms(k):
            add_scaled(rhs, tensor_vec(phi.column(i), phi.column(j)), w)
        return lhs, rhs

    check_all_vectors(rep, "aut-comul", "comul(phi(c)) = phi(c1) (x) phi(c2)", (d,), lab, comul_map)

    check_all_vectors(
        rep, "aut-counit", "eps(phi(c)) = eps(c)", (d,), lab,
        lambda idx: ((coa.counit_vec(phi.column(idx[0])),), (h.counit[idx[0]],)),
    )
    check_all_vectors(
        rep, "aut-alpha", "phi alpha = alpha phi", (d,), lab,
        lambda idx: (phi.apply(h.alpha.column(idx[0])), h.alpha.apply(phi.column(idx[0]))),
    )
    check_all_vectors(
        rep, "aut-antipode", "phi S = S phi", (d,), lab,
        lambda idx: (phi.apply(h.antipode.column(idx[0])), h.antipode.apply(phi.column(idx[0]))),
    )
    return rep


def convolution(h, f, g):
    """Convolution product (f * g)(x) = f(x1) g(x2) as a LinearMap."""
    d = h.dim
    if not (f.rows == f.cols == d and g.rows == g.cols == d):
        raise InvalidStructure(_shape_report("convolution", "endomorphism shapes required"))
    cols = []
    for k in range(d):
        out = [ZERO] * d
        for i, j, w in h.comul_terms(k):
            add_scaled(out, h.mul_vv(f.column(i), g.column(j)), w)
        cols.append(out)
    return LinearMap.from_cols(cols)


def counit_unit_map(h):
    """The convolution unit x -> eps(x) 1."""
    d = h.dim
    return LinearMap(d, d, [h.unit[i] * h.counit[k] for i in range(d) for k in range(d)])
