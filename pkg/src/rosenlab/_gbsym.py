"""Symbolic backend for the cone background metric family.

The runtime path evaluates frozen numpy kernels (_gbsym_generated.py) for

    g_b = -dt^2 + dr^2 + (r + chi(q) b(theta) q)^2 dtheta^2
          + J(theta) chi(q) dq dtheta          (cross entry g_{q theta} = J chi / 2)

its Christoffel contraction (gauge source), Ricci tensor, and first/second
coordinate derivatives, in the polar chart (t, r, theta) and the Cartesian
chart (t, x1, x2).  Profile values b, b', b'', b''' and J likewise, plus
cutoff values chi .. chi'''', enter as plain array arguments, so any angular
profile / cutoff pair can be used without rebuilding.

`build_expressions()` re-derives everything with sympy; it is slow (~2 min)
and only used by tests and by tools/generate_background_kernels.py.

Argument order of every kernel:
    (t, r, th, X0, X1, X2, X3, X4, B0, B1, B2, B3, Jp0, Jp1, Jp2, Jp3)
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import _gbsym_generated as _gen

BUNDLE_NAMES = (
    "gpol", "dgpol", "gamma_pol", "hbar_pol", "ricci_pol",
    "gcart", "dgcart", "ddgcart", "hbar_cart", "dhbar_cart", "ricci_cart",
)

_SYM6 = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


def eval_bundle(name, t, r, th, chi_vals, b_vals, j_vals):
    """Evaluate one kernel bundle on broadcast arrays.

    chi_vals: (X0..X4), b_vals: (B0..B3), j_vals: (Jp0..Jp3), each already
    evaluated on (or broadcastable to) the shape of r/th.
    """
    f = getattr(_gen, name)
    return f(t, r, th, *chi_vals, *b_vals, *j_vals)


def pack_sym(vals6, shape):
    """(list of 6 broadcastables) -> (..., 3, 3) symmetric array."""
    out = np.zeros(shape + (3, 3))
    for k, (i, j) in enumerate(_SYM6):
        v = np.broadcast_to(np.asarray(vals6[k], dtype=float), shape)
        out[..., i, j] = v
        if i != j:
            out[..., j, i] = v
    return out


# ----------------------------------------------------------------------------
# sympy construction (test oracle / kernel generator)
# ----------------------------------------------------------------------------

import sympy as sp  # noqa: E402  (kept below the fast path on purpose)

_T, _R, _TH = sp.symbols("t r th", real=True)
_X = sp.symbols("X0:5")
_B = sp.symbols("B0:4")
_J = sp.symbols("Jp0:4")
ARGS = (_T, _R, _TH) + _X + _B + _J


class _chi(sp.Function):
    _k = 0

    def fdiff(self, argindex=1):
        return _CHI[self._k + 1](self.args[0])


class _bfun(sp.Function):
    _k = 0

    def fdiff(self, argindex=1):
        return _BF[self._k + 1](self.args[0])


class _jfun(sp.Function):
    _k = 0

    def fdiff(self, argindex=1):
        return _JF[self._k + 1](self.args[0])


def _mk(base, count):
    return [type(f"{base.__name__}{k}", (base,), {"_k": k}) for k in range(count)]


_CHI = _mk(_chi, 6)
_BF = _mk(_bfun, 5)
_JF = _mk(_jfun, 5)


def placeholder(expr):
    """Replace applied profile functions by the plain argument symbols."""
    q = _R - _T
    sub = {}
    for k in range(5):
        sub[_CHI[k](q)] = _X[k]
    for k in range(4):
        sub[_BF[k](_TH)] = _B[k]
        sub[_JF[k](_TH)] = _J[k]
    return expr.subs(sub)


@lru_cache(maxsize=1)
def build_expressions():
    """Derive every bundle symbolically. Slow; used for codegen and tests."""
    t, r, th = _T, _R, _TH
    q = r - t
    chi = _CHI[0](q)
    b = _BF[0](th)
    J = _JF[0](th)
    radius = r + chi * b * q
    cross = J * chi / 2

    gpol = sp.Matrix([[-1, 0, -cross], [0, 1, cross], [-cross, cross, radius ** 2]])
    co_pol = (t, r, th)

    def christoffel(g, co):
        ginv = g.inv()
        Gam = [[[sp.expand(sum(ginv[l, m] * (sp.diff(g[m, a], co[c]) + sp.diff(g[m, c], co[a])
                                             - sp.diff(g[a, c], co[m])) for m in range(3)) / 2)
                 for c in range(3)] for a in range(3)] for l in range(3)]
        return ginv, Gam

    def ricci(Gam, co):
        def R(m, nn):
            t1 = sum(sp.diff(Gam[a][m][nn], co[a]) for a in range(3))
            t2 = sum(sp.diff(Gam[a][a][nn], co[m]) for a in range(3))
            t3 = sum(Gam[a][m][nn] * Gam[l][a][l] for a in range(3) for l in range(3))
            t4 = sum(Gam[a][m][l] * Gam[l][nn][a] for a in range(3) for l in range(3))
            return t1 - t2 + t3 - t4
        return sp.Matrix(3, 3, lambda i, j: R(i, j) if i <= j else R(j, i))

    ginv_pol, Gam_pol = christoffel(gpol, co_pol)
    Hbar_pol = [sum(ginv_pol[l, c] * Gam_pol[a][l][c] for l in range(3) for c in range(3))
                for a in range(3)]
    Ric_pol = ricci(Gam_pol, co_pol)

    cth, sth = sp.cos(th), sp.sin(th)
    Lam = sp.Matrix([[1, 0, 0], [0, cth, sth], [0, -sth / r, cth / r]])
    gcart = sp.expand(Lam.T * gpol * Lam)

    def Dt(e):
        return sp.diff(e, t)

    def Dx1(e):
        return cth * sp.diff(e, r) - sth / r * sp.diff(e, th)

    def Dx2(e):
        return sth * sp.diff(e, r) + cth / r * sp.diff(e, th)

    Dcart = (Dt, Dx1, Dx2)
    sym6 = list(_SYM6)

    # the gauge contraction is chart-dependent (Christoffels are not
    # tensorial): build it from Cartesian-chart Christoffels, with the
    # inverse metric transformed tensorially
    LamInv = Lam.inv()
    ginv_cart = LamInv * ginv_pol * LamInv.T
    Gam_cart = [[[sp.expand(sum(ginv_cart[l, m] * (Dcart[c](gcart[m, a])
                                                   + Dcart[a](gcart[m, c])
                                                   - Dcart[m](gcart[a, c]))
                                for m in range(3)) / 2)
                  for c in range(3)] for a in range(3)] for l in range(3)]
    Hbar_cart = [sum(ginv_cart[l, c] * Gam_cart[a][l][c]
                     for l in range(3) for c in range(3)) for a in range(3)]
    Ric_cart = Lam.T * Ric_pol * Lam

    return {
        "gpol": [gpol[i, j] for (i, j) in sym6],
        "dgpol": [sp.diff(gpol[i, j], co_pol[c]) for c in range(3) for (i, j) in sym6],
        "gamma_pol": [Gam_pol[a][i][j] for a in range(3) for (i, j) in sym6],
        "hbar_pol": Hbar_pol,
        "ricci_pol": [Ric_pol[i, j] for (i, j) in sym6],
        "gcart": [gcart[i, j] for (i, j) in sym6],
        "dgcart": [D(gcart[i, j]) for D in Dcart for (i, j) in sym6],
        "ddgcart": [Dcart[c](Dcart[d](gcart[i, j]))
                    for c in range(3) for d in range(c, 3) for (i, j) in sym6],
        "hbar_cart": Hbar_cart,
        "dhbar_cart": [D(Hbar_cart[a]) for D in Dcart for a in range(3)],
        "ricci_cart": [Ric_cart[i, j] for (i, j) in sym6],
    }


def lambdify_bundle(name):
    exprs = build_expressions()[name]
    flat = [placeholder(sp.together(e)) for e in exprs]
    return sp.lambdify(ARGS, flat, modules="numpy", cse=True)
