"""Built-in four-dimensional example family on the basis (1, g, x, gx).

At twist parameter c = 1 this degenerates to the classical four-dimensional
Sweedler Hopf algebra; for general nonzero c the twist is diag(1, 1, c, c)
and all tables pick up c factors.  The module tables built here are kept as
golden data, transcribed coefficient by coefficient, deliberately separate
from the constructive builders in yd_modules / t_category so the two can be
cross-validated entry for entry.
"""

from __future__ import annotations

from fractions import Fraction

from .exactlin import LinearMap, Tensor3, ONE, ZERO
from .hom_algebra import HomHopfAlgebraData, HopfAutomorphism
from .yd_modules import HomComoduleData, HomModuleData, YDModuleData


class ZeroParameter(ValueError):
    """The family is only defined for nonzero parameters."""


def _nonzero(value, name):
    value = Fraction(value)
    if value == 0:
        raise ZeroParameter("%s must be nonzero" % name)
    return value


class H4Params:
    """Parameter triple (c, c', c''): algebra twist and the two diagonal
    automorphism eigenvalues."""

    def __init__(self, c, c_prime=1, c_double_prime=1):
        self.c = _nonzero(c, "c")
        self.c_prime = _nonzero(c_prime, "c'")
        self.c_double_prime = _nonzero(c_double_prime, "c''")

    def __repr__(self):
        return "H4Params(c=%s, c'=%s, c''=%s)" % (self.c, self.c_prime, self.c_double_prime)


BASIS = ("1", "g", "x", "gx")
_I, _G, _X, _GX = 0, 1, 2, 3


def build_h4(c, check=True):
    """The dim-4 twisted Hopf algebra on (1, g, x, gx) with twist
    diag(1, 1, c, c)."""
    c = _nonzero(c, "c")
    mul = Tensor3.from_dict(
        (4, 4, 4),
        {
            (_I, _I, _I): 1, (_I, _G, _G): 1, (_I, _X, _X): c, (_I, _GX, _GX): c,
            (_G, _I, _G): 1, (_G, _G, _I): 1, (_G, _X, _GX): c, (_G, _GX, _X): c,
            (_X, _I, _X): c, (_X, _G, _GX): -c,
            (_GX, _I, _GX): c, (_GX, _G, _X): -c,
        },
    )
    cinv = 1 / c
    comul = Tensor3.from_dict(
        (4, 4, 4),
        {
            (_I, _I, _I): 1,
            (_G, _G, _G): 1,
            (_X, _X, _I): cinv, (_X, _G, _X): cinv,
            (_GX, _GX, _G): cinv, (_GX, _I, _GX): cinv,
        },
    )
    unit = (ONE, ZERO, ZERO, ZERO)
    counit = (ONE, ONE, ZERO, ZERO)
    alpha = LinearMap.diagonal([1, 1, c, c])
    antipode = LinearMap.from_cols(
        [
            [1, 0, 0, 0],   # S(1) = 1
            [0, 1, 0, 0],   # S(g) = g
            [0, 0, 0, -1],  # S(x) = -gx
            [0, 0, 1, 0],   # S(gx) = x, forced by S(gx)(g) + 1(gx) = 0
        ]
    )
    return HomHopfAlgebraData.from_tables(BASIS, mul, unit, comul, counit, antipode, alpha, check=check)


def h4_automorphism(lam):
    """diag(1, 1, lambda, lambda); these exhaust the structure automorphisms
    of the family, and compose like nonzero scalars under multiplication."""
    lam = _nonzero(lam, "lambda")
    return HopfAutomorphism(LinearMap.diagonal([1, 1, lam, lam]))


# ---------------------------------------------------------------------------
# golden module tables
# ---------------------------------------------------------------------------

# Action coefficients for the three printed module tables over (c, k1, k2):
# each entry (h, m) -> [(target, coefficient expression)], where the
# expression is evaluated at k1 = c' (or c'') per table.  The three tables
# share rows for h in {1, g} and differ only in the x / gx rows.


def _common_rows(c):
    return {
        (_I, _I): {_I: 1}, (_I, _G): {_G: 1}, (_I, _X): {_X: c}, (_I, _GX): {_GX: c},
        (_G, _I): {_I: 1}, (_G, _G): {_G: 1}, (_G, _X): {_X: -c}, (_G, _GX): {_GX: -c},
    }


def _table_action(c, x_on_1, x_on_g, gx_on_1, gx_on_g):
    data = _common_rows(c)
    data[(_X, _I)] = {_GX: x_on_1}
    data[(_X, _G)] = {_X: x_on_g}
    data[(_GX, _I)] = {_GX: gx_on_1}
    data[(_GX, _G)] = {_X: gx_on_g}
    flat = {}
    for (h, m), targets in data.items():
        for t, v in targets.items():
            flat[(h, m, t)] = v
    return Tensor3.from_dict((4, 4, 4), flat)


def _comul_coaction(h):
    """Coaction tensor of the regular coaction (the comultiplication)."""
    d = h.dim
    return Tensor3(
        (d, d, d),
        [h.comul.at(k, i, j) for k in range(d) for i in range(d) for j in range(d)],
    )


def build_h4_yd_table(which, p, check=True, h=None):
    """Golden Yetter-Drinfeld module table H4A, H4B or H4AB.

    The coaction is the comultiplication, the carrier twist is alpha, and
    the component tag is (A, id), (id, B) or (A, B) respectively with
    A = diag(1,1,c',c') and B = diag(1,1,c'',c'').

    A widely quoted variant of these tables carries the opposite sign on
    the twist-parameter part of the x row (x.1 and x.g); that variant
    breaks the module law alpha(x).(g.m) = (x o g).mu(m) for every nonzero
    parameter, so the rows here are the axiom-consistent ones.  Use
    golden_table_errata to see the exact cells where the variants differ.
    """
    c, cp, cpp = p.c, p.c_prime, p.c_double_prime
    ident = HopfAutomorphism(LinearMap.identity(4))
    a_aut = h4_automorphism(cp)
    b_aut = h4_automorphism(cpp)
    if which == "H4A":
        action = _table_action(c, c * (cp - 1), c * (1 + cp), c * (1 - cp), -c * (1 + cp))
        pair = (a_aut, ident)
    elif which == "H4B":
        action = _table_action(c, c * (1 - cpp), c * (1 + cpp), c * (cpp - 1), -c * (1 + cpp))
        pair = (ident, b_aut)
    elif which == "H4AB":
        action = _table_action(c, c * (cp - cpp), c * (cp + cpp), c * (cpp - cp), -c * (cp + cpp))
        pair = (a_aut, b_aut)
    else:
        raise ValueError("unknown table %r; expected H4A, H4B or H4AB" % (which,))
    if h is None:
        h = build_h4(c, check=check)
    module = HomModuleData(h, 4, action, h.alpha, basis=BASIS, check=check)
    comodule = HomComoduleData(h, 4, _comul_coaction(h), h.alpha, basis=BASIS, check=check)
    return YDModuleData(module, comodule, pair, check=check, label=which)


def build_twisted_h4b(p, check=True, h=None):
    """Golden conjugated module: H4B twisted by the pair (A, id).

    The action divides the x / gx rows of H4B by c', the coaction picks up
    c' on the second comultiplication legs of x and gx, and the component
    tag stays (id, B).
    """
    c, cp, cpp = p.c, p.c_prime, p.c_double_prime
    action = _table_action(
        c,
        c * (1 - cpp) / cp,
        c * (1 + cpp) / cp,
        c * (cpp - 1) / cp,
        -c * (1 + cpp) / cp,
    )
    cinv = 1 / c
    coaction = Tensor3.from_dict(
        (4, 4, 4),
        {
            (_I, _I, _I): 1,
            (_G, _G, _G): 1,
            (_X, _X, _I): cinv, (_X, _G, _X): cinv * cp,
            (_GX, _GX, _G): cinv, (_GX, _I, _GX): cinv * cp,
        },
    )
    if h is None:
        h = build_h4(c, check=check)
    ident = HopfAutomorphism(LinearMap.identity(4))
    module = HomModuleData(h, 4, action, h.alpha, basis=BASIS, check=check)
    comodule = HomComoduleData(h, 4, coaction, h.alpha, basis=BASIS, check=check)
    return YDModuleData(module, comodule, (ident, h4_automorphism(cpp)), check=check, label="^(A,id)H4B")


def h4_braiding_matrix(p, check=True):
    """16x16 matrix of the braiding H4A (x) H4B -> (twisted H4B) (x) H4A in
    the flattened basis (1(x)1, 1(x)g, ..., gx(x)gx).

    Columns hold images of domain basis vectors; the row-per-source table
    customary for hand calculations is this matrix's transpose.  In that
    row convention all entries are 0 or +-1 except four parameter-dependent
    cells in rows 3, 4, 7, 8 (1-indexed):

        (3, 8) = c' - 1    (4, 4) = 1 - c'
        (7, 7) = 1 + c'    (8, 3) = -(1 + c')

    Because c' is nonzero, (3, 8) never reaches -1 and (4, 4) never
    reaches 1; the values depend on c' only, not on c or c''.
    """
    from .t_category import braiding

    h = build_h4(p.c, check=check)
    m = build_h4_yd_table("H4A", p, check=check, h=h)
    n = build_h4_yd_table("H4B", p, check=check, h=h)
    return braiding(m, n).matrix


def golden_table_errata(p):
    """Entry-for-entry comparison of the sign-variant x rows against the
    constructive module built from the automorphism pair.

    Returns a CheckReport with one item per table; a failing item's witness
    pinpoints the first action cell where the variant table disagrees with
    the constructed one, which is how a transcription error in source
    tables surfaces instead of being silently patched.
    """
    from .yd_modules import build_canonical_yd
    from .reports import CheckReport, Witness

    c, cp, cpp = p.c, p.c_prime, p.c_double_prime
    ident = HopfAutomorphism(LinearMap.identity(4))
    h = build_h4(c)
    variants = {
        "H4A": (
            _table_action(c, -c * (1 + cp), c * (1 - cp), c * (1 - cp), -c * (1 + cp)),
            (h4_automorphism(cp), ident),
        ),
        "H4B": (
            _table_action(c, -c * (1 + cpp), c * (-1 + cpp), c * (-1 + cpp), -c * (1 + cpp)),
            (ident, h4_automorphism(cpp)),
        ),
        "H4AB": (
            _table_action(c, -c * (cp + cpp), c * (-cp + cpp), c * (-cp + cpp), -c * (cp + cpp)),
            (h4_automorphism(cp), h4_automorphism(cpp)),
        ),
    }
    rep = CheckReport("golden-table-errata")
    for name in ("H4A", "H4B", "H4AB"):
        variant_action, (a_aut, b_aut) = variants[name]
        constructed = build_canonical_yd(h, a_aut, b_aut, check=False)
        mismatch = None
        for hk in range(4):
            for mk in range(4):
                got = variant_action.fiber(hk, mk)
                want = constructed.action.fiber(hk, mk)
                if got != want and mismatch is None:
                    mismatch = Witness(
                        (hk, mk), (BASIS[hk], BASIS[mk]), tuple(got), tuple(want)
                    )
        rep.add(
            "variant-table-%s" % name,
            "sign-variant action table equals the constructed action",
            mismatch is None,
            mismatch,
        )
    return rep
