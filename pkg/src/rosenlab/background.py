"""The cone-like background metric family, its Ricci tensor and gauge source.

The family is parameterized by two angular profiles b(theta), J(theta) and the
cutoff chi(q):

    g_b = -dt^2 + dr^2 + (r + chi(q) b(theta) q)^2 dtheta^2
          + J(theta) chi(q) dq dtheta,        q = r - t,

flat for q < 1, a cone of deficit controlled by b for q > 2.  All closed
forms (metric, derivatives, Christoffel contraction H, Ricci) come from the
frozen symbolic kernels in _gbsym_generated; the finite-difference Ricci in
`ricci_numeric` is the independent cross-check path.

The gauge-source correction F is the part of the linear-in-perturbation
expansion of g^{lb} Gamma^a_{lb} - Hbar^a in which a theta-derivative falls on
the background profiles (b' or J' terms); it is extracted exactly by
evaluating the expansion twice, once with full profile derivatives and once
with b', J' frozen to zero.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field

import numpy as np

from ._gbsym import eval_bundle, pack_sym
from .grids import CutoffPair, PolarGrid, MINKOWSKI

TAU = 2.0 * np.pi


class GeometryError(ValueError):
    """Degenerate or non-Lorentzian metric where one was required."""


# ----------------------------------------------------------------------------
# angular profiles
# ----------------------------------------------------------------------------

class AngleProfile:
    """A 2pi-periodic profile stored as uniform samples plus rfft coefficients.

    Derivatives and off-grid evaluation are spectral, so b', b'', b''' used by
    the background kernels are exact for band-limited profiles.
    """

    def __init__(self, samples):
        samples = np.asarray(samples, dtype=float)
        if samples.ndim != 1 or samples.size < 4 or samples.size % 2:
            raise ValueError("profile needs an even number (>= 4) of samples")
        self.samples = samples
        self.fourier = np.fft.rfft(samples)

    @property
    def n(self) -> int:
        return self.samples.size

    @property
    def theta(self) -> np.ndarray:
        return TAU * np.arange(self.n) / self.n

    @classmethod
    def zero(cls, n: int = 32) -> "AngleProfile":
        return cls(np.zeros(n))

    @classmethod
    def constant(cls, value: float, n: int = 32) -> "AngleProfile":
        return cls(np.full(n, float(value)))

    @classmethod
    def from_function(cls, fn, n: int = 32) -> "AngleProfile":
        th = TAU * np.arange(n) / n
        return cls(fn(th))

    def derivative(self, order: int = 1) -> "AngleProfile":
        c = self.fourier * (1j * np.arange(self.fourier.size)) ** order
        if self.n % 2 == 0 and order % 2 == 1:
            c[-1] = 0.0  # drop the unmatched Nyquist mode for odd derivatives
        return AngleProfile(np.fft.irfft(c, self.n))

    def eval(self, theta, order: int = 0) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        m = np.arange(self.fourier.size)
        c = self.fourier * (1j * m) ** order
        if self.n % 2 == 0 and order % 2 == 1:
            c = c.copy()
            c[-1] = 0.0
        weights = np.full(self.fourier.size, 2.0)
        weights[0] = 1.0
        if self.n % 2 == 0:
            weights[-1] = 1.0
        phases = np.exp(1j * np.outer(theta.ravel(), m))
        vals = (phases * (weights * c)).real.sum(axis=-1) / self.n
        return vals.reshape(theta.shape)

    def mean(self) -> float:
        return float(self.fourier[0].real / self.n)

    def moment(self, kind: str) -> float:
        """Integral over the circle of profile * {1, cos, sin}."""
        if kind == "1":
            return TAU * self.mean()
        c1 = self.fourier[1] / self.n
        if kind == "cos":
            return TAU * c1.real
        if kind == "sin":
            return -TAU * c1.imag
        raise ValueError(kind)

    def project_out_low_modes(self) -> "AngleProfile":
        """Remove the 1, cos, sin components (the projection Pi)."""
        c = self.fourier.copy()
        c[0] = 0.0
        c[1] = 0.0
        return AngleProfile(np.fft.irfft(c, self.n))

    # -- serialization: text (theta, value) and binary Fourier block ---------

    def to_text(self) -> str:
        buf = io.StringIO()
        for th, v in zip(self.theta, self.samples):
            buf.write(f"{th:.17g} {v:.17g}\n")
        return buf.getvalue()

    @classmethod
    def from_text(cls, text: str) -> "AngleProfile":
        vals = [float(line.split()[1]) for line in text.strip().splitlines()]
        return cls(np.array(vals))

    def to_fourier_bytes(self) -> bytes:
        buf = io.BytesIO()
        np.save(buf, self.fourier, allow_pickle=False)
        np.save(buf, np.array([self.n]), allow_pickle=False)
        return buf.getvalue()

    @classmethod
    def from_fourier_bytes(cls, blob: bytes) -> "AngleProfile":
        buf = io.BytesIO(blob)
        fourier = np.load(buf, allow_pickle=False)
        n = int(np.load(buf, allow_pickle=False)[0])
        prof = cls(np.fft.irfft(fourier, n))
        prof.fourier = fourier  # keep the stored block verbatim (bit-exact round trip)
        return prof


@dataclass(frozen=True)
class BackgroundParams:
    """Profiles and cutoffs that pick one member of the background family."""

    b: AngleProfile
    J: AngleProfile
    cutoffs: CutoffPair = field(default_factory=CutoffPair)

    @property
    def is_trivial(self) -> bool:
        return (np.max(np.abs(self.b.samples)) == 0.0
                and np.max(np.abs(self.J.samples)) == 0.0)

    @classmethod
    def trivial(cls, n: int = 32) -> "BackgroundParams":
        return cls(AngleProfile.zero(n), AngleProfile.zero(n))


@dataclass
class MetricField:
    """Symmetric 3x3 metric samples on a polar grid, in a tagged chart."""

    grid: PolarGrid
    components: np.ndarray      # (n_r, n_theta, 3, 3)
    chart: str = "cartesian"    # or "polar"
    t: float = 0.0

    def __post_init__(self):
        if self.components.shape != self.grid.shape + (3, 3):
            raise GeometryError("metric component array has wrong shape")
        if self.chart not in ("cartesian", "polar"):
            raise GeometryError(f"unknown chart {self.chart!r}")

    def inverse(self) -> np.ndarray:
        return inv33(self.components)

    @classmethod
    def minkowski(cls, grid: PolarGrid, t: float = 0.0) -> "MetricField":
        comp = np.broadcast_to(MINKOWSKI, grid.shape + (3, 3)).copy()
        return cls(grid, comp, "cartesian", t)


def inv33(m: np.ndarray) -> np.ndarray:
    """Adjugate-based inverse of (..., 3, 3) arrays."""
    a = m[..., 0, 0]; b = m[..., 0, 1]; c = m[..., 0, 2]
    d = m[..., 1, 0]; e = m[..., 1, 1]; f = m[..., 1, 2]
    g = m[..., 2, 0]; h = m[..., 2, 1]; i = m[..., 2, 2]
    A = e * i - f * h; B = -(d * i - f * g); C = d * h - e * g
    det = a * A + b * B + c * C
    out = np.empty_like(m)
    out[..., 0, 0] = A
    out[..., 0, 1] = -(b * i - c * h)
    out[..., 0, 2] = b * f - c * e
    out[..., 1, 0] = B
    out[..., 1, 1] = a * i - c * g
    out[..., 1, 2] = -(a * f - c * d)
    out[..., 2, 0] = C
    out[..., 2, 1] = -(a * h - b * g)
    out[..., 2, 2] = a * e - b * d
    return out / det[..., None, None]


def det33(m: np.ndarray) -> np.ndarray:
    a = m[..., 0, 0]; b = m[..., 0, 1]; c = m[..., 0, 2]
    d = m[..., 1, 0]; e = m[..., 1, 1]; f = m[..., 1, 2]
    g = m[..., 2, 0]; h = m[..., 2, 1]; i = m[..., 2, 2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


# ----------------------------------------------------------------------------
# kernel plumbing
# ----------------------------------------------------------------------------

def _profile_args(params: BackgroundParams, t: float, grid: PolarGrid):
    r, th = grid.mesh()
    q = r - t
    cut = params.cutoffs
    chi_vals = [cut.chi(q, k) for k in range(5)]
    b_vals = [np.broadcast_to(params.b.derivative(k).eval(grid.theta) if k else
                              params.b.eval(grid.theta), grid.shape) for k in range(4)]
    j_vals = [np.broadcast_to(params.J.derivative(k).eval(grid.theta) if k else
                              params.J.eval(grid.theta), grid.shape) for k in range(4)]
    return r, th, q, chi_vals, b_vals, j_vals


def _frozen(vals):
    """Zero out the profile-derivative slots (keep the 0th)."""
    return [vals[0]] + [np.zeros_like(vals[0])] * (len(vals) - 1)


def angular_radius(params: BackgroundParams, t: float, grid: PolarGrid) -> np.ndarray:
    r, th = grid.mesh()
    q = r - t
    return r + params.cutoffs.chi(q) * params.b.eval(grid.theta)[None, :] * q


def assemble_gb(params: BackgroundParams, t: float, grid: PolarGrid,
                chart: str = "cartesian") -> MetricField:
    """Evaluate the background metric on the grid, checking nondegeneracy."""
    rad = angular_radius(params, t, grid)
    if np.any(rad <= 0.0):
        i, j = np.unravel_index(np.argmin(rad), rad.shape)
        raise GeometryError(
            f"angular radius nonpositive at r={grid.r[i]:.6g}, theta={grid.theta[j]:.6g}"
            f" (value {rad[i, j]:.6g})")
    if params.is_trivial:
        comp = np.broadcast_to(MINKOWSKI if chart == "cartesian"
                               else _minkowski_polar(grid), grid.shape + (3, 3)).copy()
        return MetricField(grid, comp, chart, t)
    name = "gcart" if chart == "cartesian" else "gpol"
    comp = background_bundle(params, t, grid, (name,))[name]
    return MetricField(grid, comp, chart, t)


def _minkowski_polar(grid: PolarGrid) -> np.ndarray:
    r, _ = grid.mesh()
    out = np.zeros(grid.shape + (3, 3))
    out[..., 0, 0] = -1.0
    out[..., 1, 1] = 1.0
    out[..., 2, 2] = r ** 2
    return out


def background_bundle(params: BackgroundParams, t: float, grid: PolarGrid,
                      names: tuple[str, ...]) -> dict[str, np.ndarray]:
    """Evaluate several kernel bundles at once (shared profile evaluation).

    Returned shapes: metric-like bundles (n_r, n_th, 3, 3); dgcart
    (n_r, n_th, 3, 3, 3) indexed [c, mu, nu]; ddgcart (n_r, n_th, 3, 3, 3, 3)
    indexed [c, d, mu, nu]; vector bundles (n_r, n_th, 3);
    dhbar_cart (n_r, n_th, 3, 3) indexed [c, a].
    """
    shape = grid.shape
    out = {}
    if params.is_trivial:
        for name in names:
            out[name] = _trivial_bundle(name, grid)
        return out
    r, th, q, chi_vals, b_vals, j_vals = _profile_args(params, t, grid)
    # rows with chi identically zero are exactly flat: snap them to the
    # trivial values to avoid 1-ulp trig noise (and keep the axis clean)
    flat_rows = q[:, 0] <= params.cutoffs.chi_lo
    for name in names:
        vals = eval_bundle(name, t, r, th, chi_vals, b_vals, j_vals)
        if name in ("gpol", "gcart", "ricci_pol", "ricci_cart"):
            out[name] = pack_sym(vals, shape)
        elif name in ("dgpol", "dgcart"):
            arr = np.zeros(shape + (3, 3, 3))
            for c in range(3):
                arr[..., c, :, :] = pack_sym(vals[6 * c:6 * (c + 1)], shape)
            out[name] = arr
        elif name == "ddgcart":
            arr = np.zeros(shape + (3, 3, 3, 3))
            k = 0
            for c in range(3):
                for d in range(c, 3):
                    blk = pack_sym(vals[6 * k:6 * (k + 1)], shape)
                    arr[..., c, d, :, :] = blk
                    if c != d:
                        arr[..., d, c, :, :] = blk
                    k += 1
            out[name] = arr
        elif name in ("hbar_pol", "hbar_cart"):
            arr = np.zeros(shape + (3,))
            for a in range(3):
                arr[..., a] = np.broadcast_to(np.asarray(vals[a], float), shape)
            out[name] = arr
        elif name == "dhbar_cart":
            arr = np.zeros(shape + (3, 3))
            for c in range(3):
                for a in range(3):
                    arr[..., c, a] = np.broadcast_to(np.asarray(vals[3 * c + a], float), shape)
            out[name] = arr
        elif name == "gamma_pol":
            arr = np.zeros(shape + (3, 3, 3))
            for a in range(3):
                arr[..., a, :, :] = pack_sym(vals[6 * a:6 * (a + 1)], shape)
            out[name] = arr
        else:
            raise KeyError(name)
        if np.any(flat_rows):
            out[name][flat_rows] = _trivial_bundle(name, grid)[flat_rows]
    return out


def _trivial_bundle(name: str, grid: PolarGrid) -> np.ndarray:
    shape = grid.shape
    if name in ("gcart", "gpol"):
        return (np.broadcast_to(MINKOWSKI, shape + (3, 3)).copy()
                if name == "gcart" else _minkowski_polar(grid))
    if name in ("ricci_pol", "ricci_cart"):
        return np.zeros(shape + (3, 3))
    if name in ("dgcart",):
        return np.zeros(shape + (3, 3, 3))
    if name == "ddgcart":
        return np.zeros(shape + (3, 3, 3, 3))
    if name in ("hbar_cart",):
        return np.zeros(shape + (3,))
    if name == "dhbar_cart":
        return np.zeros(shape + (3, 3))
    if name == "dgpol":
        r, _ = grid.mesh()
        arr = np.zeros(shape + (3, 3, 3))
        arr[..., 1, 2, 2] = 2.0 * r
        return arr
    if name == "gamma_pol":
        r, _ = grid.mesh()
        arr = np.zeros(shape + (3, 3, 3))
        arr[..., 1, 2, 2] = -r          # Gamma^r_{th th}
        arr[..., 2, 1, 2] = 1.0 / r     # Gamma^th_{r th}
        arr[..., 2, 2, 1] = 1.0 / r
        return arr
    if name == "hbar_pol":
        r, _ = grid.mesh()
        arr = np.zeros(shape + (3,))
        arr[..., 1] = -1.0 / r
        return arr
    raise KeyError(name)


# ----------------------------------------------------------------------------
# Ricci: closed forms and the finite-difference oracle
# ----------------------------------------------------------------------------

def ricci_gb(params: BackgroundParams, t: float, grid: PolarGrid,
             chart: str = "cartesian"):
    """Exact Ricci of the background.

    Returns (R_qq, R_qtheta, R_full) where the first two are the nontrivial
    null-decomposed scalars and R_full the component array in the requested
    chart.
    """
    angular_radius(params, t, grid)  # nondegeneracy check
    bundle = background_bundle(params, t, grid, ("ricci_pol",))
    R = bundle["ricci_pol"]
    # R_qq = R(e_q, e_q), e_q = (d_r - d_t)/2 ; R_qth = R(e_q, d_theta)
    Rqq = 0.25 * (R[..., 0, 0] - 2.0 * R[..., 0, 1] + R[..., 1, 1])
    Rqth = 0.5 * (R[..., 1, 2] - R[..., 0, 2])
    if chart == "polar":
        return Rqq, Rqth, R
    Rc = background_bundle(params, t, grid, ("ricci_cart",))["ricci_cart"]
    return Rqq, Rqth, Rc


def ricci_qq_leading(params: BackgroundParams, t: float, grid: PolarGrid) -> np.ndarray:
    """Leading closed form -b(theta) (q chi(q))'' / r of the qq component."""
    r, _ = grid.mesh()
    q = r - t
    return -params.b.eval(grid.theta)[None, :] * params.cutoffs.d2_qchi(q) / r


def christoffel_numeric(metric_slices, grid: PolarGrid, dt: float):
    """Christoffels by finite differences from 5 metric slices (polar chart).

    metric_slices: list of 5 component arrays at t0 + k*dt, k = -2..2.
    Returns (Gamma[..., a, m, n], ginv, g) at the central slice.
    """
    from .grids import d_r, d_theta
    g = metric_slices[2]
    w = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
    dg = np.zeros(grid.shape + (3, 3, 3))
    dg[..., 0, :, :] = sum(w[k] * metric_slices[k] for k in range(5) if w[k]) / dt
    for i in range(3):
        for j in range(3):
            dg[..., 1, i, j] = d_r(g[..., i, j], grid)
            dg[..., 2, i, j] = d_theta(g[..., i, j], grid)
    ginv = inv33(g)
    Gam = 0.5 * (np.einsum("...lm,...amc->...lac", ginv, dg)
                 + np.einsum("...lm,...cma->...lac", ginv, dg)
                 - np.einsum("...lm,...mac->...lac", ginv, dg))
    return Gam, ginv, g, dg


def ricci_numeric(assemble, grid: PolarGrid, t: float, dt: float) -> np.ndarray:
    """Finite-difference Ricci (polar chart) of a metric given by a callable
    assemble(t) -> components.  Independent of the symbolic path."""
    from .grids import d_r, d_theta

    def gamma_at(tk):
        slices = [assemble(tk + k * dt) for k in range(-2, 3)]
        return christoffel_numeric(slices, grid, dt)[0]

    Gam0 = gamma_at(t)
    w = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
    gam_slices = [gamma_at(t + k * dt) for k in range(-2, 3)]
    dGam = np.zeros(grid.shape + (3, 3, 3, 3))
    dGam[..., 0, :, :, :] = sum(w[k] * gam_slices[k] for k in range(5) if w[k]) / dt
    for a in range(3):
        for m in range(3):
            for n in range(3):
                dGam[..., 1, a, m, n] = d_r(Gam0[..., a, m, n], grid)
                dGam[..., 2, a, m, n] = d_theta(Gam0[..., a, m, n], grid)
    t1 = np.einsum("...aamn->...mn", dGam)
    t2 = np.einsum("...maan->...mn", dGam)
    t3 = np.einsum("...amn,...lal->...mn", Gam0, Gam0)
    t4 = np.einsum("...aml,...lna->...mn", Gam0, Gam0)
    return t1 - t2 + t3 - t4


# ----------------------------------------------------------------------------
# gauge source
# ----------------------------------------------------------------------------

def _cart_to_polar_tensor(gt_cart: np.ndarray, grid: PolarGrid) -> np.ndarray:
    """Covariant 0,2-tensor transform cartesian -> polar per grid point."""
    r, th = grid.mesh()
    c, s = np.cos(th), np.sin(th)
    # LamInv = d(cartesian)/d(polar): columns t, r, theta
    Li = np.zeros(grid.shape + (3, 3))
    Li[..., 0, 0] = 1.0
    Li[..., 1, 1] = c
    Li[..., 1, 2] = -r * s
    Li[..., 2, 1] = s
    Li[..., 2, 2] = r * c
    return np.einsum("...am,...bn,...ab->...mn", Li, Li, gt_cart)


def _polar_to_cart_vector(v_pol: np.ndarray, grid: PolarGrid) -> np.ndarray:
    """Contravariant vector transform polar -> cartesian per grid point."""
    r, th = grid.mesh()
    c, s = np.cos(th), np.sin(th)
    Li = np.zeros(grid.shape + (3, 3))
    Li[..., 0, 0] = 1.0
    Li[..., 1, 1] = c
    Li[..., 1, 2] = -r * s
    Li[..., 2, 1] = s
    Li[..., 2, 2] = r * c
    return np.einsum("...am,...m->...a", Li, v_pol)


def gauge_correction_F(params: BackgroundParams, gtilde: MetricField,
                       t: float, grid: PolarGrid) -> np.ndarray:
    """The profile-derivative crossed part F^a (Cartesian components).

    Linear in gtilde: F = W[full profile derivatives] - W[b', J' frozen],
    where W collects the linear-expansion terms whose derivative falls on the
    background metric.
    """
    if params.is_trivial:
        return np.zeros(grid.shape + (3,))
    if gtilde.chart != "cartesian":
        raise GeometryError("gtilde must be in the cartesian chart")
    gt_pol = _cart_to_polar_tensor(gtilde.components, grid)
    r, th, q, chi_vals, b_vals, j_vals = _profile_args(params, t, grid)
    shape = grid.shape
    sym6 = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))

    def w_vector(bv, jv):
        gpol = pack_sym(eval_bundle("gpol", t, r, th, chi_vals, bv, jv), shape)
        gam_vals = eval_bundle("gamma_pol", t, r, th, chi_vals, bv, jv)
        Gam = np.zeros(shape + (3, 3, 3))
        for a in range(3):
            Gam[..., a, :, :] = pack_sym(gam_vals[6 * a:6 * (a + 1)], shape)
        dg_vals = eval_bundle("dgpol", t, r, th, chi_vals, bv, jv)
        dg = np.zeros(shape + (3, 3, 3))
        for c in range(3):
            dg[..., c, :, :] = pack_sym(dg_vals[6 * c:6 * (c + 1)], shape)
        gi = inv33(gpol)
        dgi = -np.einsum("...lm,...mn,...nb->...lb", gi, gt_pol, gi)  # delta g^{lb}
        term1 = np.einsum("...lb,...alb->...a", dgi, Gam)
        # (1/2) g^{lb} dgi^{ar} (d_l g_rb + d_b g_rl - d_r g_lb)
        t_a = 0.5 * (np.einsum("...lb,...ar,...lrb->...a", gi, dgi, dg)
                     + np.einsum("...lb,...ar,...brl->...a", gi, dgi, dg)
                     - np.einsum("...lb,...ar,...rlb->...a", gi, dgi, dg))
        return term1 + t_a

    F_pol = w_vector(b_vals, j_vals) - w_vector(_frozen(b_vals), _frozen(j_vals))
    return _polar_to_cart_vector(F_pol, grid)


def gauge_source_Hb(params: BackgroundParams, gtilde: MetricField,
                    t: float, grid: PolarGrid):
    """(Hbar^a, F^a) in Cartesian components; H_b = Hbar + F."""
    bundle = background_bundle(params, t, grid, ("hbar_cart",))
    F = gauge_correction_F(params, gtilde, t, grid)
    return bundle["hbar_cart"], F


# ----------------------------------------------------------------------------
# signature check
# ----------------------------------------------------------------------------

@dataclass
class SignatureReport:
    margin: float
    worst_point: tuple[float, float]
    n_violations: int

    @property
    def ok(self) -> bool:
        return self.n_violations == 0


def check_signature(g: MetricField) -> SignatureReport:
    """Lorentzian signature test: g^{00} < 0 and positive-definite spatial block.

    margin is the minimum over points of min(-g^{00}, spatial eigenvalues);
    reports rather than raises.
    """
    comp = g.components
    with np.errstate(divide="ignore", invalid="ignore"):
        gi = inv33(comp)
    g00 = gi[..., 0, 0]
    spatial = comp[..., 1:, 1:]
    tr = spatial[..., 0, 0] + spatial[..., 1, 1]
    det = (spatial[..., 0, 0] * spatial[..., 1, 1]
           - spatial[..., 0, 1] * spatial[..., 1, 0])
    disc = np.sqrt(np.maximum((tr / 2) ** 2 - det, 0.0))
    lam_min = tr / 2 - disc
    margin_field = np.minimum(-g00, lam_min)
    margin_field[~np.isfinite(margin_field)] = -np.inf  # singular metric counts as violation
    idx = np.unravel_index(np.argmin(margin_field), margin_field.shape)
    margin = float(margin_field[idx])
    worst = (float(g.grid.r[idx[0]]), float(g.grid.theta[idx[1]]))
    return SignatureReport(margin=margin, worst_point=worst,
                           n_violations=int(np.count_nonzero(margin_field <= 0.0)))
