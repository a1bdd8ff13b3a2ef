"""Evolution of the reduced quasilinear system and the flat model problems.

The evolved unknowns are the scalar and the Cartesian components of the
metric perturbation over the cone background,

    box_g phi = 0,
    box_g gt_{mu nu} = -2 d_mu phi d_nu phi + 2 (R_b)_{mu nu}
                       + P_{mu nu}(g)(d gt, d gt) + Pt_{mu nu}(gt, g_b),

with box_g = g^{ab} d_a d_b - H^r d_r and H = Hbar_b + F the prescribed
gauge source.  P is the exact quadratic form of the Ricci identity
(polarized so crossed background/perturbation uses share one kernel); Pt
collects the crossed terms.

Spatial discretization: the shared polar-grid stencils on a full disk, with
a near-axis angular mode filter so the time step scales with the radial
spacing; method of lines with classical RK4; Sommerfeld extraction at the
outer ring; optional Kreiss-Oliger dissipation (off by default).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .background import (
    AngleProfile, BackgroundParams, GeometryError, MetricField,
    background_bundle, gauge_correction_F, inv33,
)
from .grids import (
    CutoffPair, MINKOWSKI, PolarGrid, ScalarField2D, d_r, d_theta,
    dq_squared_tensor, frame_vectors,
)
from .weights import WeightSpec


class EvolutionBlowup(RuntimeError):
    def __init__(self, msg, snapshot=None):
        super().__init__(msg)
        self.snapshot = snapshot


# ----------------------------------------------------------------------------
# quadratic kernels
# ----------------------------------------------------------------------------

def _p_half(gi, d1, d2):
    """P with ordered derivative slots; full P = (_p_half(d1,d2)+_p_half(d2,d1))/2.

    Monomials, with implicit g^{ab} g^{lr} contraction (D[c, i, j] = d_c g_ij):
      + D1_{a l m} D2_{b r n}   + D1_{a l m} D2_{n b r}  + D1_{a l n} D2_{m b r}
      - (1/2) D1_{a l m} D2_{r b n} - (1/2) D1_{a l n} D2_{r b m}
      - (1/2) D1_{m a l} D2_{n b r}
    All contractions are batched matmuls (BLAS) over the point axis.
    """
    N = gi.shape[0]
    giT = gi  # symmetric
    # E[x, b, r, m] = g^{ab} g^{lr} D1[a, l, m]
    T = np.matmul(giT, d1.reshape(N, 3, 9)).reshape(N, 3, 3, 3)      # [b, l, m]
    E = np.matmul(T.transpose(0, 1, 3, 2).reshape(N, 9, 3), giT) \
        .reshape(N, 3, 3, 3).transpose(0, 1, 3, 2)                    # [b, r, m]
    # C[x, m, b, r] = g^{ab} g^{lr} D1[m, a, l]
    Q = np.matmul(d1.reshape(N, 9, 3), giT).reshape(N, 3, 3, 3)       # [m, a, r]
    C = np.matmul(Q.transpose(0, 1, 3, 2).reshape(N, 9, 3), giT) \
        .reshape(N, 3, 3, 3).transpose(0, 1, 3, 2)                    # [m, b, r]
    E_brm = E.reshape(N, 9, 3)
    t1 = np.matmul(E_brm.transpose(0, 2, 1), d2.reshape(N, 9, 3))     # [m, n]
    t2 = np.matmul(d2.reshape(N, 3, 9), E_brm).transpose(0, 2, 1)     # [m, n]
    E_rbm = E.transpose(0, 2, 1, 3).reshape(N, 9, 3)
    t3 = np.matmul(E_rbm.transpose(0, 2, 1), d2.reshape(N, 9, 3))     # [m, n]
    t5 = np.matmul(C.reshape(N, 3, 9), d2.reshape(N, 3, 9).transpose(0, 2, 1))
    return t1 + t2 + np.swapaxes(t2, -1, -2) - 0.5 * (t3 + np.swapaxes(t3, -1, -2)) \
        - 0.5 * t5


def quadratic_P(ginv: np.ndarray, dg1: np.ndarray, dg2: np.ndarray) -> np.ndarray:
    """The exact quadratic form of the reduced Ricci identity, polarized.

    ginv: (..., 3, 3) inverse metric; dg1, dg2: (..., 3, 3, 3) first-derivative
    tensors indexed [c, mu, nu].  quadratic_P(gi, dg, dg) reproduces
    2 R_mn + g^{ab} d_ab g_mn - H^r d_r g_mn - g_mr d_n H^r - g_nr d_m H^r.
    """
    shp = ginv.shape[:-2]
    same = dg1 is dg2
    gi = np.ascontiguousarray(ginv.reshape((-1, 3, 3)))
    a1 = np.ascontiguousarray(dg1.reshape((-1, 3, 3, 3)))
    a2 = a1 if same else np.ascontiguousarray(dg2.reshape((-1, 3, 3, 3)))
    if same:
        out = _p_half(gi, a1, a2)
    else:
        out = 0.5 * (_p_half(gi, a1, a2) + _p_half(gi, a2, a1))
    return out.reshape(shp + (3, 3))


def quadratic_P_metric(g: np.ndarray, dg1: np.ndarray, dg2: np.ndarray) -> np.ndarray:
    det = np.linalg.det(g)
    if np.any(np.abs(det) < 1e-14):
        raise GeometryError("metric not invertible in quadratic kernel")
    return quadratic_P(inv33(g), dg1, dg2)


def q_lbarlbar_kernel(h_fields, gt_fields, gb_uu_fields, reduced: bool = False):
    """The worst-component source kernel

        Q(h, gt) = dLb g_LL dLb h + dLb g_LLb dL h + dLb (g_b)_UU dLb g_LbL,

    and its reduced variant (middle term dropped).  All inputs are dicts of
    per-point arrays: h_fields = {"dL": , "dLb": }; gt_fields with keys
    "dLb_gLL", "dLb_gLLb", "dLb_gLbL"; gb_uu_fields = {"dLb_gbUU": }.
    """
    out = gt_fields["dLb_gLL"] * h_fields["dLb"] \
        + gb_uu_fields["dLb_gbUU"] * gt_fields["dLb_gLbL"]
    if not reduced:
        out = out + gt_fields["dLb_gLLb"] * h_fields["dL"]
    return out


# ----------------------------------------------------------------------------
# simulation state
# ----------------------------------------------------------------------------

@dataclass
class SimState:
    grid: PolarGrid
    params: BackgroundParams
    t: float
    phi: np.ndarray
    phi_t: np.ndarray
    gt: np.ndarray          # (n_r, n_th, 3, 3)
    gt_t: np.ndarray
    weights: WeightSpec = field(default_factory=WeightSpec)
    step: int = 0
    stream: "DiagnosticStream | None" = None

    def copy(self) -> "SimState":
        return SimState(self.grid, self.params, self.t, self.phi.copy(),
                        self.phi_t.copy(), self.gt.copy(), self.gt_t.copy(),
                        self.weights, self.step)

    def full_metric(self) -> np.ndarray:
        gb = background_bundle(self.params, self.t, self.grid, ("gcart",))["gcart"]
        return gb + self.gt

    def checkpoint_bytes(self) -> bytes:
        import io
        buf = io.BytesIO()
        np.savez(buf, version=np.array([1]), t=np.array([self.t]),
                 step=np.array([self.step]), phi=self.phi, phi_t=self.phi_t,
                 gt=self.gt, gt_t=self.gt_t,
                 b=self.params.b.samples, J=self.params.J.samples,
                 grid=np.array([self.grid.r_min, self.grid.r_max,
                                self.grid.n_r, self.grid.n_theta,
                                float(self.grid.axis_parity)]))
        return buf.getvalue()

    @classmethod
    def from_checkpoint_bytes(cls, blob: bytes) -> "SimState":
        import io
        z = np.load(io.BytesIO(blob))
        if int(z["version"][0]) != 1:
            raise ValueError("unknown checkpoint version")
        gr = z["grid"]
        grid = PolarGrid(gr[0], gr[1], int(gr[2]), int(gr[3]), bool(gr[4]))
        params = BackgroundParams(AngleProfile(z["b"]), AngleProfile(z["J"]))
        return cls(grid, params, float(z["t"][0]), z["phi"], z["phi_t"],
                   z["gt"], z["gt_t"], step=int(z["step"][0]))


# ----------------------------------------------------------------------------
# derivative helpers on the disk grid
# ----------------------------------------------------------------------------

class GridOps:
    """Cached trigonometric factors and derivative assembly for one grid."""

    def __init__(self, grid: PolarGrid):
        self.grid = grid
        r, th = grid.mesh()
        self.r = r
        self.c = np.cos(th)
        self.s = np.sin(th)

    def cart_grad(self, f):
        fr = d_r(f, self.grid)
        ft = d_theta(f, self.grid)
        gx = self.c * fr - self.s / self.r * ft
        gy = self.s * fr + self.c / self.r * ft
        return gx, gy, fr, ft

    def cart_hessian(self, f, fr=None, ft=None):
        grid = self.grid
        if fr is None:
            fr = d_r(f, grid)
        if ft is None:
            ft = d_theta(f, grid)
        frr = d_r(f, grid, 2)
        ftt = d_theta(f, grid, 2)
        frt = d_theta(fr, grid)
        r, c, s = self.r, self.c, self.s
        h11 = (c ** 2 * frr - 2 * c * s / r * frt + s ** 2 / r ** 2 * ftt
               + s ** 2 / r * fr + 2 * c * s / r ** 2 * ft)
        h22 = (s ** 2 * frr + 2 * c * s / r * frt + c ** 2 / r ** 2 * ftt
               + c ** 2 / r * fr - 2 * c * s / r ** 2 * ft)
        h12 = (c * s * frr + (c ** 2 - s ** 2) / r * frt - c * s / r ** 2 * ftt
               - c * s / r * fr - (c ** 2 - s ** 2) / r ** 2 * ft)
        return h11, h12, h22


def first_derivatives(fields_t: np.ndarray, fields: np.ndarray, ops: GridOps):
    """dg[x, c, mu, nu] for a (..,3,3) symmetric field with given d_t array."""
    grid = ops.grid
    out = np.zeros(grid.shape + (3, 3, 3))
    out[..., 0, :, :] = fields_t
    for i in range(3):
        for j in range(i, 3):
            gx, gy, _, _ = ops.cart_grad(fields[..., i, j])
            out[..., 1, i, j] = out[..., 1, j, i] = gx
            out[..., 2, i, j] = out[..., 2, j, i] = gy
    return out


# ----------------------------------------------------------------------------
# near-axis angular filter
# ----------------------------------------------------------------------------

def make_axis_filter(grid: PolarGrid, kappa: float = 1.0):
    """Per-radius angular low-pass masks enabling dt ~ h_r time steps.

    Smooth fields of Cartesian position have angular spectra decaying like
    (m!)^-1 (r k)^m at radius r, so removing modes with m > kappa r / h_r
    (floor 2) is a localized O(r^3) consistency error near the axis, while
    the retained angular wavenumbers m / r stay below 4 / h_r (RK4-stable at
    dt = 0.4 h_r).
    """
    n_modes = grid.n_theta // 2 + 1
    m = np.arange(n_modes)
    mmax = np.maximum(2.0, kappa * grid.r / grid.h_r)
    mask = (m[None, :] <= mmax[:, None]).astype(float)
    active = mask.min() < 1.0

    def apply(arr):
        if not active:
            return arr
        spec = np.fft.rfft(arr, axis=1)
        m = mask.reshape(mask.shape + (1,) * (arr.ndim - 2))
        spec *= m
        return np.fft.irfft(spec, grid.n_theta, axis=1)
    return apply


def kreiss_oliger(arr: np.ndarray, grid: PolarGrid, sigma: float):
    """5th-order KO-style dissipation (both directions, theta periodic)."""
    out = np.zeros_like(arr)
    # radial: (D+ D-)^3 with parity/one-sided neglected at edges
    w = np.array([1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0])
    interior = slice(3, -3)
    acc = np.zeros_like(arr[interior])
    for k, wk in enumerate(w):
        acc += wk * arr[k:arr.shape[0] - 6 + k]
    out[interior] += acc
    acc = np.zeros_like(arr)
    for k, wk in enumerate(w):
        acc += wk * np.roll(arr, 3 - k, axis=1)
    out += acc
    return -sigma / 64.0 * out


# ----------------------------------------------------------------------------
# the reduced system
# ----------------------------------------------------------------------------

@dataclass
class DiagnosticStream:
    records: list = field(default_factory=list)

    def emit(self, t: float, kind: str, payload: dict):
        self.records.append({"t": t, "kind": kind, **payload})

    def ndjson(self) -> str:
        return "\n".join(json.dumps(r) for r in self.records) + "\n"

    def series(self, kind: str, key: str):
        ts, vs = [], []
        for r in self.records:
            if r["kind"] == kind:
                ts.append(r["t"])
                vs.append(r[key])
        return np.array(ts), np.array(vs)


def wave_gauge_vector(g: np.ndarray, dg: np.ndarray) -> np.ndarray:
    """H^a = g^{lb} Gamma^a_{lb} from components and first derivatives."""
    gi = inv33(g)
    Gam_low = 0.5 * (np.einsum("xcmb->xmbc", dg.reshape((-1, 3, 3, 3)))
                     + np.einsum("xbmc->xmbc", dg.reshape((-1, 3, 3, 3)))
                     - np.einsum("xmbc->xmbc", dg.reshape((-1, 3, 3, 3))))
    gi_f = gi.reshape((-1, 3, 3))
    H = np.einsum("xam,xlb,xmlb->xa", gi_f, gi_f, Gam_low)
    return H.reshape(g.shape[:-2] + (3,))


class ReducedSystem:
    """RHS assembly and stepping for the reduced Einstein-scalar system."""

    def __init__(self, grid: PolarGrid, params: BackgroundParams,
                 cfl: float = 0.4, ko_sigma: float = 0.0,
                 axis_filter: bool = True):
        self.grid = grid
        self.params = params
        self.ops = GridOps(grid)
        self.cfl = cfl
        self.ko_sigma = ko_sigma
        self.filter = make_axis_filter(grid) if axis_filter else (lambda a: a)
        self._bundle_cache: dict = {}
        self._sym6 = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]

    # -- background pieces, cached per stage time ------------------------------

    def bundle(self, t: float):
        key = round(t, 12) if not self.params.is_trivial else "trivial"
        if key not in self._bundle_cache:
            if len(self._bundle_cache) > 8:
                self._bundle_cache.clear()
            names = ("gcart", "dgcart", "ddgcart", "hbar_cart", "dhbar_cart",
                     "ricci_cart")
            self._bundle_cache[key] = background_bundle(self.params, t,
                                                        self.grid, names)
        return self._bundle_cache[key]

    # -- RHS -------------------------------------------------------------------

    def rhs(self, t, phi, phi_t, gt, gt_t):
        grid, ops = self.grid, self.ops
        bun = self.bundle(t)
        gb = bun["gcart"]
        g = gb + gt
        gi = inv33(g)
        trivial = self.params.is_trivial

        # batch the seven evolved fields through the stencils at once
        sym6 = self._sym6
        U = np.concatenate([phi[..., None]]
                           + [gt[..., i, j][..., None] for (i, j) in sym6], axis=-1)
        Ut = np.concatenate([phi_t[..., None]]
                            + [gt_t[..., i, j][..., None] for (i, j) in sym6], axis=-1)
        r = ops.r[..., None]
        c = ops.c[..., None]
        s = ops.s[..., None]
        Ur = d_r(U, grid)
        Uth = d_theta(U, grid)
        Urr = d_r(U, grid, 2)
        Uthth = d_theta(U, grid, 2)
        Urth = d_theta(Ur, grid)
        Vr = d_r(Ut, grid)
        Vth = d_theta(Ut, grid)
        Ux = c * Ur - s / r * Uth
        Uy = s * Ur + c / r * Uth
        Vx = c * Vr - s / r * Vth
        Vy = s * Vr + c / r * Vth
        H11 = (c ** 2 * Urr - 2 * c * s / r * Urth + s ** 2 / r ** 2 * Uthth
               + s ** 2 / r * Ur + 2 * c * s / r ** 2 * Uth)
        H22 = (s ** 2 * Urr + 2 * c * s / r * Urth + c ** 2 / r ** 2 * Uthth
               + c ** 2 / r * Ur - 2 * c * s / r ** 2 * Uth)
        H12 = (c * s * Urr + (c ** 2 - s ** 2) / r * Urth - c * s / r ** 2 * Uthth
               - c * s / r * Ur - (c ** 2 - s ** 2) / r ** 2 * Uth)

        dphi = np.stack([phi_t, Ux[..., 0], Uy[..., 0]], axis=-1)
        dgt = np.zeros(grid.shape + (3, 3, 3))
        dgt[..., 0, :, :] = gt_t
        for k, (i, j) in enumerate(sym6):
            dgt[..., 1, i, j] = dgt[..., 1, j, i] = Ux[..., k + 1]
            dgt[..., 2, i, j] = dgt[..., 2, j, i] = Uy[..., k + 1]

        # gauge source H = Hbar + F and its first derivatives
        if trivial:
            H = np.zeros(grid.shape + (3,))
            dH = np.zeros(grid.shape + (3, 3))
            F = None
        else:
            F = gauge_correction_F(self.params, MetricField(grid, gt, "cartesian", t),
                                   t, grid)
            H = bun["hbar_cart"] + F
            dH = bun["dhbar_cart"].copy()
            # spatial derivatives of F by stencils, time by coefficient differencing
            for a in range(3):
                fx, fy, _, _ = ops.cart_grad(F[..., a])
                dH[..., 1, a] += fx
                dH[..., 2, a] += fy
            delta = 1e-5
            Fp = gauge_correction_F(self.params, MetricField(grid, gt, "cartesian", t + delta), t + delta, grid)
            Fm = gauge_correction_F(self.params, MetricField(grid, gt, "cartesian", t - delta), t - delta, grid)
            Ft_coeff = (Fp - Fm) / (2 * delta)
            Ft_state = gauge_correction_F(self.params, MetricField(grid, gt_t, "cartesian", t), t, grid)
            dH[..., 0, :] += Ft_coeff + Ft_state

        # sources for the metric components (zero perturbation: all terms
        # vanish identically, so skip their assembly)
        quiescent = trivial and not (np.any(dphi) or np.any(gt) or np.any(gt_t))
        src = np.zeros(grid.shape + (3, 3))
        if not quiescent:
            src = -2.0 * np.einsum("...m,...n->...mn", dphi, dphi)
            if not trivial:
                src = src + 2.0 * bun["ricci_cart"]
            src = src + quadratic_P(gi, dgt, dgt)
        if not trivial:
            dgb = bun["dgcart"]
            ddgb = bun["ddgcart"]
            # (g_b^{ab} - g^{ab}) dd g_b
            gbi = inv33(gb)
            src = src + np.einsum("...ab,...abmn->...mn", gbi - gi, ddgb)
            # F^r d_r g_b
            src = src + np.einsum("...r,...rmn->...mn", F, dgb)
            # P(g)(dg_b, dg_b) - P(g_b)(dg_b, dg_b) + 2 P(g)(dg_b, dgt)
            src = src + quadratic_P(gi, dgb, dgb) - quadratic_P(gbi, dgb, dgb)
            src = src + 2.0 * quadratic_P(gi, dgb, dgt)
            # g_b dF + gt dH_b (symmetrized pairs); dF = dH - dHbar
            dF = dH - bun["dhbar_cart"]
            TgbF = np.einsum("...mr,...nr->...mn", gb, dF)
            Tgt = np.einsum("...mr,...nr->...mn", gt, dH)
            src = src + TgbF + np.swapaxes(TgbF, -1, -2) \
                + Tgt + np.swapaxes(Tgt, -1, -2)

        # principal part: solve for d_tt of each unknown (vectorized over the
        # seven stacked fields)
        g00 = gi[..., 0, 0][..., None]
        spatial = (gi[..., 1, 1][..., None] * H11
                   + 2 * gi[..., 1, 2][..., None] * H12
                   + gi[..., 2, 2][..., None] * H22)
        mixed = 2.0 * (gi[..., 0, 1][..., None] * Vx + gi[..., 0, 2][..., None] * Vy)
        src_stack = np.concatenate(
            [np.zeros(grid.shape + (1,))]
            + [src[..., i, j][..., None] for (i, j) in sym6], axis=-1)
        if trivial:
            transport = 0.0
        else:
            transport = (H[..., 0][..., None] * Ut + H[..., 1][..., None] * Ux
                         + H[..., 2][..., None] * Uy)
        dt_Ut = (src_stack - mixed - spatial + transport) / g00

        # Sommerfeld extraction on the outer two rings
        dt_Ut[-2:] = (-Vr - Ut / (2.0 * r))[-2:]

        dt_phi_t = dt_Ut[..., 0]
        dt_gt_t = np.zeros_like(gt)
        for k, (i, j) in enumerate(sym6):
            dt_gt_t[..., i, j] = dt_Ut[..., k + 1]
            if i != j:
                dt_gt_t[..., j, i] = dt_Ut[..., k + 1]
        return phi_t, dt_phi_t, gt_t, dt_gt_t

    # -- stepping ---------------------------------------------------------------

    def default_dt(self) -> float:
        return self.cfl * self.grid.h_r

    def step(self, state: SimState, dt: float) -> SimState:
        t = state.t
        y = (state.phi, state.phi_t, state.gt, state.gt_t)

        def add(y0, k, fac):
            return tuple(a + fac * b for a, b in zip(y0, k))

        k1 = self.rhs(t, *y)
        k2 = self.rhs(t + dt / 2, *add(y, k1, dt / 2))
        k3 = self.rhs(t + dt / 2, *add(y, k2, dt / 2))
        k4 = self.rhs(t + dt, *add(y, k3, dt))
        new = tuple(a + dt / 6 * (b1 + 2 * b2 + 2 * b3 + b4)
                    for a, b1, b2, b3, b4 in zip(y, k1, k2, k3, k4))
        phi, phi_t, gt, gt_t = new
        phi = self.filter(phi)
        phi_t = self.filter(phi_t)
        gt = self.filter(gt)
        gt_t = self.filter(gt_t)
        if self.ko_sigma > 0.0:
            phi = phi + kreiss_oliger(phi, self.grid, self.ko_sigma)
            phi_t = phi_t + kreiss_oliger(phi_t, self.grid, self.ko_sigma)
        out = SimState(self.grid, self.params, t + dt, phi, phi_t, gt, gt_t,
                       state.weights, state.step + 1)
        return out

    def gauge_residual(self, state: SimState) -> float:
        """max |H(g) - H_b| over the interior (the wave-coordinate defect)."""
        bun = self.bundle(state.t)
        g = bun["gcart"] + state.gt
        dg = first_derivatives(state.gt_t, state.gt, self.ops) + \
            (bun["dgcart"] if not self.params.is_trivial else 0.0)
        Hnum = wave_gauge_vector(g, dg)
        if self.params.is_trivial:
            Hb = np.zeros(self.grid.shape + (3,))
        else:
            F = gauge_correction_F(self.params,
                                   MetricField(self.grid, state.gt, "cartesian", state.t),
                                   state.t, self.grid)
            Hb = bun["hbar_cart"] + F
        return float(np.max(np.abs((Hnum - Hb)[2:-4])))


def evolve_reduced(state: SimState, dt: float | None, n_steps: int,
                   system: ReducedSystem | None = None,
                   diag_every: int = 0,
                   stream: DiagnosticStream | None = None,
                   guard_every: int = 50) -> SimState:
    """Advance the reduced system n_steps, streaming diagnostics.

    Raises EvolutionBlowup (with the last good state attached) on NaN or
    signature loss.
    """
    if system is None:
        system = ReducedSystem(state.grid, state.params)
    if dt is None:
        dt = system.default_dt()
    if dt > system.default_dt() * 1.0001:
        raise GeometryError(f"time step {dt} violates the CFL bound "
                            f"{system.default_dt()}")
    if stream is None:
        stream = DiagnosticStream()
    state.stream = stream
    last_good = state.copy()
    for k in range(n_steps):
        state = system.step(state, dt)
        if guard_every and state.step % guard_every == 0:
            if not np.isfinite(state.phi).all() or not np.isfinite(state.gt).all():
                raise EvolutionBlowup(f"NaN at t={state.t}", last_good)
            last_good = state.copy()
        if diag_every and state.step % diag_every == 0:
            emit_standard_diagnostics(system, state, stream)
    state.stream = stream
    return state


def emit_standard_diagnostics(system: ReducedSystem, state: SimState,
                              stream: DiagnosticStream):
    grid = state.grid
    sup_gt = float(np.max(np.abs(state.gt)))
    sup_phi = float(np.max(np.abs(state.phi)))
    rec = {"sup_phi": sup_phi, "sup_gt": sup_gt}
    rec["gauge_residual"] = system.gauge_residual(state)
    fr = frame_vectors(grid.mesh()[1])
    comps = np.einsum("...ij,...i,...j->...", state.gt, fr["Lb"], fr["Lb"])
    rec["sup_gt_LbLb"] = float(np.max(np.abs(comps)))
    stream.emit(state.t, "core", rec)


# ----------------------------------------------------------------------------
# flat 2D wave core (toys, corrector equations)
# ----------------------------------------------------------------------------

class FlatWave2D:
    """box u = source(t) on the disk grid: -d_tt + lap; MOL RK4 with the same
    axis filter and Sommerfeld ring as the full system."""

    def __init__(self, grid: PolarGrid, cfl: float = 0.4, axis_filter: bool = True):
        self.grid = grid
        self.ops = GridOps(grid)
        self.cfl = cfl
        self.filter = make_axis_filter(grid) if axis_filter else (lambda a: a)

    def laplacian(self, u):
        grid = self.grid
        r, _ = grid.mesh()
        return (d_r(u, grid, 2) + d_r(u, grid) / r
                + d_theta(u, grid, 2) / r ** 2)

    def evolve(self, u0, v0, t_end, source=None, dt=None, store_every=0,
               on_step=None):
        grid = self.grid
        if dt is None:
            dt = self.cfl * grid.h_r
        n_steps = max(1, int(np.ceil(t_end / dt - 1e-12)))
        dt = t_end / n_steps
        r, _ = grid.mesh()
        u = u0.copy()
        v = v0.copy()

        def rhs(t, u, v):
            du = v
            dv = self.laplacian(u)
            if source is not None:
                dv = dv + source(t)
            drv = d_r(v, grid)
            dv[-2:] = (-drv - v / (2.0 * r))[-2:]
            return du, dv

        t = 0.0
        history = [(0.0, u.copy(), v.copy())] if store_every else None
        for k in range(n_steps):
            k1 = rhs(t, u, v)
            k2 = rhs(t + dt / 2, u + dt / 2 * k1[0], v + dt / 2 * k1[1])
            k3 = rhs(t + dt / 2, u + dt / 2 * k2[0], v + dt / 2 * k2[1])
            k4 = rhs(t + dt, u + dt * k3[0], v + dt * k3[1])
            u = u + dt / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0])
            v = v + dt / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])
            u = self.filter(u)
            v = self.filter(v)
            t += dt
            if on_step is not None:
                on_step(t, u, v)
            if store_every and ((k + 1) % store_every == 0 or k == n_steps - 1):
                history.append((t, u.copy(), v.copy()))
        return (u, v, history) if store_every else (u, v, None)


# ----------------------------------------------------------------------------
# model problems
# ----------------------------------------------------------------------------

@dataclass
class ToySpec:
    kind: str                    # decoupled_model | null_form | gll_system
    amplitude: float = 1e-2
    width: float = 1.0
    b: AngleProfile | None = None
    cutoffs: CutoffPair = field(default_factory=CutoffPair)

    def __post_init__(self):
        if self.kind not in ("decoupled_model", "null_form", "gll_system"):
            raise ValueError(f"unknown toy kind {self.kind!r}")


def evolve_toy(spec: ToySpec, r_max: float, n_r: int, t_end: float,
               sample_every: int = 16, n_theta: int = 8):
    """Flat-background model problems.

    decoupled_model and null_form use the radial solver (their data are
    radial); gll_system runs on the disk with the angular profile source.
    Returns (times, diagnostics dict of series).
    """
    from .rosen import (RadialField, RadialGrid, radial_d1,
                        solve_flat_radial_wave, flat_radial_box)

    if spec.kind == "decoupled_model":
        grid = RadialGrid(r_max, n_r)
        phi0 = RadialField(grid, spec.amplitude * np.exp(-(grid.r / spec.width) ** 2))
        zero = RadialField(grid, np.zeros(grid.n_r + 1))
        hist1 = solve_flat_radial_wave(phi0, zero, t_end, store_every=sample_every)
        # phi2 driven by (d_t phi1)^2, evolved alongside by re-running with source
        times = hist1.times
        interp = _HistoryInterp(hist1)
        out_t, out_norm = [], []

        def source(t, r):
            return interp.dtphi(t) ** 2

        hist2 = solve_flat_radial_wave(zero, zero, t_end, source=source,
                                       store_every=sample_every)
        for k, t in enumerate(hist2.times):
            dphi2 = radial_d1(hist2.phi[k], grid.h)
            nrm = math.sqrt(2 * math.pi * float(np.trapezoid(
                grid.r * (dphi2 ** 2 + hist2.dtphi[k] ** 2), dx=grid.h)))
            out_t.append(t)
            out_norm.append(nrm)
        return np.array(out_t), {"energy_norm_phi2": np.array(out_norm),
                                 "hist_phi2": hist2, "hist_phi1": hist1}

    if spec.kind == "null_form":
        grid = RadialGrid(r_max, n_r)
        u0 = RadialField(grid, spec.amplitude * np.exp(-(grid.r / spec.width) ** 2))
        zero = RadialField(grid, np.zeros(grid.n_r + 1))
        sup_series = []
        times = []

        # bespoke loop: source depends on the solution itself
        h = grid.h
        dt = 0.45 * h
        n_steps = int(np.ceil(t_end / dt))
        dt = t_end / n_steps
        u = u0.values.copy()
        v = np.zeros_like(u)
        r = grid.r

        def rhs(u, v):
            du = v
            dru = radial_d1(u, h)
            drv = radial_d1(v, h)
            dv = flat_radial_box(u, grid) + v * (v + dru)   # d u . dbar u
            dv[-2:] = (-drv - v / (2.0 * r))[-2:]
            return du, dv

        t = 0.0
        for k in range(n_steps):
            k1 = rhs(u, v)
            k2 = rhs(u + dt / 2 * k1[0], v + dt / 2 * k1[1])
            k3 = rhs(u + dt / 2 * k2[0], v + dt / 2 * k2[1])
            k4 = rhs(u + dt * k3[0], v + dt * k3[1])
            u = u + dt / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0])
            v = v + dt / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])
            t += dt
            if (k + 1) % sample_every == 0:
                s = t + r
                times.append(t)
                sup_series.append(float(np.max(np.abs(u) * np.sqrt(1.0 + s))))
        return np.array(times), {"sup_u_sqrt_s": np.array(sup_series)}

    # gll_system: disk evolution with the angular source profile
    grid2 = PolarGrid.disk(r_max, n_r, n_theta)
    r, th = grid2.mesh()
    phi = spec.amplitude * np.exp(-(r / spec.width) ** 2)
    phi_v = np.zeros_like(phi)
    b_vals = (spec.b.eval(grid2.theta)[None, :] if spec.b is not None
              else np.zeros((1, grid2.n_theta)))
    flat = FlatWave2D(grid2)

    phi_state = {"u": phi, "v": phi_v}

    sup_G = []
    times = []

    def co_evolve():
        u, v = phi_state["u"], phi_state["v"]
        G = np.zeros_like(u)
        Gv = np.zeros_like(u)
        dt = 0.4 * grid2.h_r
        n_steps = int(np.ceil(t_end / dt))
        dtv = t_end / n_steps
        t = 0.0
        for k in range(n_steps):
            def src(tq):
                dq_phi = 0.5 * (d_r(phi_state["u"], grid2) - phi_state["v"])
                qq = r - tq
                prof = spec.cutoffs.d2_qchi(qq)
                return 4.0 * (-2.0 * dq_phi ** 2 - 2.0 * b_vals * prof / r)

            # advance phi (free wave) and G together with shared dt
            k1 = (phi_state["v"], flat.laplacian(phi_state["u"]))
            phi_mid = phi_state["u"] + 0.5 * dtv * k1[0]
            # simple RK2 for the toy (matches the diagnostic tolerance)
            k2 = (phi_state["v"] + 0.5 * dtv * k1[1],
                  flat.laplacian(phi_mid))
            phi_state["u"] = flat.filter(phi_state["u"] + dtv * k2[0])
            phi_state["v"] = flat.filter(phi_state["v"] + dtv * k2[1])
            g1 = (Gv, flat.laplacian(G) + src(t))
            G_mid = G + 0.5 * dtv * g1[0]
            g2 = (Gv + 0.5 * dtv * g1[1], flat.laplacian(G_mid) + src(t + 0.5 * dtv))
            G = flat.filter(G + dtv * g2[0])
            Gv = flat.filter(Gv + dtv * g2[1])
            t += dtv
            if (k + 1) % sample_every == 0:
                times.append(t)
                sup_G.append(float(np.max(np.abs(G))))
        return G

    G = co_evolve()
    return np.array(times), {"sup_G": np.array(sup_G), "G": G,
                             "phi": phi_state["u"]}


class _HistoryInterp:
    """Linear-in-time interpolation of a radial history's d_t phi."""

    def __init__(self, hist):
        self.hist = hist
        self.times = np.asarray(hist.times)

    def dtphi(self, t):
        k = np.searchsorted(self.times, t) - 1
        k = min(max(k, 0), len(self.times) - 2)
        t0, t1 = self.times[k], self.times[k + 1]
        w = 0.0 if t1 == t0 else (t - t0) / (t1 - t0)
        return (1 - w) * self.hist.dtphi[k] + w * self.hist.dtphi[k + 1]


# ----------------------------------------------------------------------------
# initial data assembly for evolution runs
# ----------------------------------------------------------------------------

def gauge_compatible_time_derivatives(g: np.ndarray, dgt_spatial_full,
                                      gt_t_ij: np.ndarray, Hb: np.ndarray,
                                      ops: GridOps):
    """Solve the gauge condition H(g) = H_b for d_t gt_{00}, d_t gt_{0i}.

    dgt_spatial_full: (..,3,3,3) with the spatial rows (c = 1, 2) filled and
    the time row holding whatever is known already (the ij entries);
    gt_t_ij: (..,2,2) the known d_t of the spatial block.
    """
    grid = ops.grid
    base = dgt_spatial_full.copy()
    base[..., 0, :, :] = 0.0
    base[..., 0, 1:, 1:] = gt_t_ij

    def H_of(extra00, extra0i):
        dg = base.copy()
        dg[..., 0, 0, 0] = extra00
        dg[..., 0, 0, 1] = dg[..., 0, 1, 0] = extra0i[..., 0]
        dg[..., 0, 0, 2] = dg[..., 0, 2, 0] = extra0i[..., 1]
        return wave_gauge_vector(g, dg)

    zero = np.zeros(grid.shape)
    zero2 = np.zeros(grid.shape + (2,))
    R0 = H_of(zero, zero2) - Hb
    cols = []
    one = np.ones(grid.shape)
    e1 = np.zeros(grid.shape + (2,)); e1[..., 0] = 1.0
    e2 = np.zeros(grid.shape + (2,)); e2[..., 1] = 1.0
    cols.append(H_of(one, zero2) - Hb - R0)
    cols.append(H_of(zero, e1) - Hb - R0)
    cols.append(H_of(zero, e2) - Hb - R0)
    A = np.stack(cols, axis=-1)          # (.., 3 eq, 3 unknowns)
    sol = np.linalg.solve(A, -R0[..., None])[..., 0]
    return sol[..., 0], sol[..., 1:]


def reduced_initial_state(grid: PolarGrid, params: BackgroundParams,
                          phi0_fn, phi1_fn,
                          data=None, data_phi=None,
                          weights: WeightSpec | None = None) -> SimState:
    """SimState at t = 0.

    Without `data`: gt = 0, d_t gt_ij = 0, and d_t gt_{0 mu} from the gauge
    condition (exact equilibrium completion for scalar-pulse runs).

    With `data` (an InitialDataSet): the constraint solution is carried over
    through the chart isometry, gt_ij and d_t gt_ij from the pulled-back
    (gbar, K), the 0-row from the gauge condition.
    """
    from .initdata import InitialDataSet  # noqa: F401  (typing only)

    ops = GridOps(grid)
    r, th = grid.mesh()
    x1 = r * np.cos(th)
    x2 = r * np.sin(th)
    weights = weights or WeightSpec()
    bun = background_bundle(params, 0.0, grid, ("gcart", "dgcart", "hbar_cart"))
    gb = bun["gcart"]
    gt = np.zeros(grid.shape + (3, 3))
    gt_t_ij = np.zeros(grid.shape + (2, 2))

    if data is None:
        phi = phi0_fn(x1, x2)
        phi_t = phi1_fn(x1, x2)
    else:
        mom = data.moments
        a = mom.alpha
        one_m_a = 1.0 - a
        # inverse isometry: evolution point -> data-chart point
        from .initdata import angle_map_inverse
        _, Fsamp, _ = angle_map_inverse(mom, data.bbar, grid.n_theta)
        Fprof = AngleProfile(Fsamp - grid.theta)    # periodic part of F
        th_p = th + Fprof.eval(grid.theta)[None, :]
        th_data = th_p - mom.J_const / (one_m_a ** 2 * r)
        r_data = (one_m_a * r) ** (1.0 / one_m_a)
        # jacobian d(data)/d(evo) in polar entries
        dr_dr = (one_m_a * r) ** (a / one_m_a)
        dth_dthp = 1.0  # theta depends on theta' with unit slope
        dthp_dth = 1.0 + AngleProfile(Fsamp - grid.theta).derivative().eval(grid.theta)[None, :]
        dth_dr = mom.J_const / (one_m_a ** 2 * r ** 2)
        # pull back the data spatial metric (Cartesian at the data point ->
        # polar there -> polar here -> Cartesian here)
        gbar_d, K_d = data_metric_at(data, r_data, th_data)
        # polar components at the data point
        cD, sD = np.cos(th_data), np.sin(th_data)
        MD = np.zeros(grid.shape + (2, 2))   # d(cart_data)/d(polar_data)
        MD[..., 0, 0] = cD
        MD[..., 0, 1] = -r_data * sD
        MD[..., 1, 0] = sD
        MD[..., 1, 1] = r_data * cD
        gbar_pol = np.einsum("...ia,...jb,...ij->...ab", MD, MD, gbar_d)
        K_pol = np.einsum("...ia,...jb,...ij->...ab", MD, MD, K_d)
        # chain rule polar_data <- polar_evo
        Jmap = np.zeros(grid.shape + (2, 2))   # d(polar_data)/d(polar_evo)
        Jmap[..., 0, 0] = dr_dr
        Jmap[..., 1, 0] = dth_dr
        Jmap[..., 1, 1] = dthp_dth
        gbar_pe = np.einsum("...ai,...bj,...ab->...ij", Jmap, Jmap, gbar_pol)
        K_pe = np.einsum("...ai,...bj,...ab->...ij", Jmap, Jmap, K_pol)
        # polar_evo -> cartesian_evo
        ME = np.zeros(grid.shape + (2, 2))   # d(polar_evo)/d(cart_evo)
        c, s = np.cos(th), np.sin(th)
        ME[..., 0, 0] = c
        ME[..., 0, 1] = s
        ME[..., 1, 0] = -s / r
        ME[..., 1, 1] = c / r
        gbar_evo = np.einsum("...ai,...bj,...ab->...ij", ME, ME, gbar_pe)
        K_evo = np.einsum("...ai,...bj,...ab->...ij", ME, ME, K_pe)
        gt[..., 1:, 1:] = gbar_evo - gb[..., 1:, 1:]
        # time derivative of the spatial block from K and the g_b lapse/shift
        gbar_inv = np.linalg.inv(gbar_evo)
        beta_cov = gb[..., 0, 1:]
        beta_up = np.einsum("...ij,...j->...i", gbar_inv, beta_cov)
        N2 = np.einsum("...i,...i->...", beta_cov, beta_up) - (gb[..., 0, 0] + gt[..., 0, 0])
        N = np.sqrt(np.maximum(N2, 1e-300))
        dgbar = np.zeros(grid.shape + (2, 2, 2))
        for i in range(2):
            for j in range(2):
                gx, gy, _, _ = ops.cart_grad(gbar_evo[..., i, j])
                dgbar[..., 0, i, j] = gx
                dgbar[..., 1, i, j] = gy
        dbu = np.zeros(grid.shape + (2, 2))
        for k in range(2):
            gx, gy, _, _ = ops.cart_grad(beta_up[..., k])
            dbu[..., 0, k] = gx
            dbu[..., 1, k] = gy
        lie = (np.einsum("...k,...kij->...ij", beta_up, dgbar)
               + np.einsum("...kj,...ik->...ij", gbar_evo, dbu)
               + np.einsum("...ik,...jk->...ij", gbar_evo, dbu))
        dt_gbar = -2.0 * N[..., None, None] * K_evo + lie
        gt_t_ij = dt_gbar - bun["dgcart"][..., 0, 1:, 1:]
        phi = phi0_fn(r_data * np.cos(th_data), r_data * np.sin(th_data))
        phi_t = phi1_fn(r_data * np.cos(th_data), r_data * np.sin(th_data))

    g = gb + gt
    dgt = first_derivatives(np.zeros_like(gt), gt, ops)
    F = gauge_correction_F(params, MetricField(grid, gt, "cartesian", 0.0), 0.0, grid)
    Hb = bun["hbar_cart"] + F
    # the background part of dg enters H(g) too
    dg_total = dgt + (bun["dgcart"] if not params.is_trivial else 0.0)
    u00, u0i = gauge_compatible_time_derivatives(g, dg_total, gt_t_ij, Hb, ops)
    gt_t = np.zeros_like(gt)
    gt_t[..., 1:, 1:] = gt_t_ij
    gt_t[..., 0, 0] = u00
    gt_t[..., 0, 1] = gt_t[..., 1, 0] = u0i[..., 0]
    gt_t[..., 0, 2] = gt_t[..., 2, 0] = u0i[..., 1]
    return SimState(grid, params, 0.0, phi, phi_t, gt, gt_t, weights)


def data_metric_at(data, r_pts: np.ndarray, th_pts: np.ndarray):
    """Evaluate the constraint solution's (gbar, K) at arbitrary points
    (Cartesian components), via per-mode radial splines."""
    ev = getattr(data, "_evaluator", None)
    if ev is None:
        ev = _DataEvaluator(data)
        data._evaluator = ev
    return ev.gbar(r_pts, th_pts), ev.K(r_pts, th_pts)


class _DataEvaluator:
    def __init__(self, data):
        from scipy.interpolate import CubicSpline
        self.data = data
        grid = data.grid
        self.r_nodes = grid.r
        self._lam_modes = np.fft.rfft(data.lam, axis=1)
        self._K_modes = [[np.fft.rfft(data.K[..., i, j], axis=1)
                          for j in range(2)] for i in range(2)]
        self._spl = {}

    def _eval_field(self, key, modes, r_pts, th_pts):
        from scipy.interpolate import CubicSpline
        if key not in self._spl:
            self._spl[key] = (CubicSpline(self.r_nodes, modes.real, axis=0),
                              CubicSpline(self.r_nodes, modes.imag, axis=0))
        sr, si = self._spl[key]
        vals = sr(r_pts) + 1j * si(r_pts)      # (..., n_modes)
        n = self.data.grid.n_theta
        m = np.arange(vals.shape[-1])
        weights = np.full(vals.shape[-1], 2.0)
        weights[0] = 1.0
        if n % 2 == 0:
            weights[-1] = 1.0
        phases = np.exp(1j * th_pts[..., None] * m)
        return (vals * phases * weights).real.sum(axis=-1) / n

    def lam(self, r_pts, th_pts):
        return self._eval_field("lam", self._lam_modes, r_pts, th_pts)

    def gbar(self, r_pts, th_pts):
        e2l = np.exp(2.0 * self.lam(r_pts, th_pts))
        out = np.zeros(r_pts.shape + (2, 2))
        out[..., 0, 0] = out[..., 1, 1] = e2l
        return out

    def K(self, r_pts, th_pts):
        out = np.zeros(r_pts.shape + (2, 2))
        for i in range(2):
            for j in range(2):
                out[..., i, j] = self._eval_field(f"K{i}{j}", self._K_modes[i][j],
                                                  r_pts, th_pts)
        return out


# ----------------------------------------------------------------------------
# matched cone profile from a free-wave run
# ----------------------------------------------------------------------------

def matched_b_profile(grid: PolarGrid, phi0_fn, phi1_fn, t_match: float,
                      n_theta_out: int | None = None) -> AngleProfile:
    """b(theta) = - int (d_q phi)^2 r dr on the slice t = t_match of the
    free flat evolution of the scalar data (the outgoing-flux matching)."""
    solver = FlatWave2D(grid)
    r, th = grid.mesh()
    x1 = r * np.cos(th)
    x2 = r * np.sin(th)
    u, v, _ = solver.evolve(phi0_fn(x1, x2), phi1_fn(x1, x2), t_match)
    dq_phi = 0.5 * (d_r(u, grid) - v)
    from scipy.integrate import simpson
    prof = -simpson(dq_phi ** 2 * r, dx=grid.h_r, axis=0)
    out = AngleProfile(prof)
    if n_theta_out and n_theta_out != grid.n_theta:
        out = AngleProfile(out.eval(2 * np.pi * np.arange(n_theta_out) / n_theta_out))
    return out
