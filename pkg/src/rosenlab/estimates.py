"""Numerical verification of the analytic toolbox.

Contents:

* the 2+1 fundamental-solution quadratures: homogeneous Poisson-type formula
  and the inhomogeneous Duhamel kernel with its 1/sqrt singularity removed by
  a sine substitution;
* the spherical-means reduction of the kernel integral to one-dimensional
  elliptic integrals (two independent evaluation paths for the same number);
* empirical-constant batteries for the flat decay estimate, the kernel
  (Linfty-Linfty) bound, the weighted Hardy inequality, and the weighted
  Klainerman-Sobolev inequality;
* the q-integration lemma reproduced as an exponent check.

Every battery draws its test functions from a seeded family and returns a
BoundReport whose constant is reproducible bit-for-bit from (seed, params).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import ellipk

from .weights import WeightSpec, bracket_plus

TAU = 2.0 * np.pi


class AccuracyError(RuntimeError):
    pass


class RangeError(ValueError):
    pass


# ----------------------------------------------------------------------------
# quadrature helpers
# ----------------------------------------------------------------------------

def _gl(a: float, b: float, n: int):
    x, w = leggauss(n)
    return 0.5 * (b - a) * x + 0.5 * (a + b), 0.5 * (b - a) * w


def _gl_composite(a: float, b: float, n: int, pieces: int):
    xs, ws = [], []
    edges = np.linspace(a, b, pieces + 1)
    for lo, hi in zip(edges[:-1], edges[1:]):
        x, w = _gl(lo, hi, n)
        xs.append(x)
        ws.append(w)
    return np.concatenate(xs), np.concatenate(ws)


# ----------------------------------------------------------------------------
# representation formulas
# ----------------------------------------------------------------------------

def homogeneous_wave_value(phi0, grad_phi0, phi1, t, x, n_eta=64, n_omega=128,
                           support_radius=8.0):
    """Solution of the free 2+1 wave equation at (t, x), x = (x1, x2).

    Poisson-type formula over the unit disk |z| <= 1,

        u = (1/2pi) int [phi0 + t z.grad phi0 + t phi1](x + t z)
            / sqrt(1 - |z|^2) dz,

    in the variable |z| = 1 - eta^2 which removes the rim singularity and
    concentrates nodes near the light cone.  For large t the eta-range is
    split where the data support (radius support_radius around the origin)
    can intersect the rim.
    """
    if t == 0.0:
        return float(np.asarray(phi0(np.asarray(x[0]), np.asarray(x[1]))))
    R_s = support_radius + 6.0
    r_x = math.hypot(x[0], x[1])
    # eta-pieces: concentrate nodes where the data support meets the rim
    eta_split = math.sqrt(min(1.0, R_s / max(t, 1e-9)))
    if eta_split >= 1.0:
        edges = np.linspace(0.0, 1.0, 4)
    else:
        edges = np.concatenate([np.linspace(0.0, eta_split, 4), [1.0]])
    glx, glw = leggauss(n_omega)
    glx = 0.5 * (glx + 1.0)
    glw = 0.5 * glw
    theta_c = math.atan2(-x[1], -x[0])   # direction from x toward the origin
    total = 0.0
    for a1, b1 in zip(edges[:-1], edges[1:]):
        eta, weta = _gl(a1, b1, n_eta)
        zmod = 1.0 - eta ** 2
        jac = 2.0 * zmod / np.sqrt(2.0 - eta ** 2)
        # omega window where |x + t z w| can reach the data support
        tz = t * zmod
        if r_x < 1e-12:
            omstar = np.full_like(tz, np.pi)
        else:
            cstar = (R_s ** 2 - r_x ** 2 - tz ** 2) / (2.0 * r_x * tz)
            omstar = np.arccos(np.clip(-cstar, -1.0, 1.0))  # half-width about theta_c
        om = theta_c + omstar[:, None] * (2.0 * glx[None, :] - 1.0)
        wom = 2.0 * omstar[:, None] * glw[None, :]
        cx, sx = np.cos(om), np.sin(om)
        y1 = x[0] + tz[:, None] * cx
        y2 = x[1] + tz[:, None] * sx
        g1, g2 = grad_phi0(y1, y2)
        vals = phi0(y1, y2) + tz[:, None] * (cx * g1 + sx * g2) + t * phi1(y1, y2)
        total += ((vals * wom).sum(axis=1) * jac) @ weta
    return total / TAU


def representation_quadrature(F, t, x, tol=1e-8, n0=24, max_level=6):
    """Duhamel integral u(t,x) = (1/2pi) int_0^t int_{|y|<=t-s} F(s, x-y)
    / sqrt((t-s)^2 - |y|^2) dy ds, adaptive by resolution doubling.

    F(s, y1, y2) must broadcast over arrays.
    """
    if t <= 0.0:
        return 0.0

    def evaluate(n_s, n_psi, n_omega):
        s, ws = _gl_composite(0.0, t, n_s, 6)
        psi, wpsi = _gl(0.0, 0.5 * np.pi, n_psi)
        om = TAU * np.arange(n_omega) / n_omega
        wom = TAU / n_omega
        sp = np.sin(psi)
        total = 0.0
        for sk, wk in zip(s, ws):
            rho = (t - sk) * sp               # (n_psi,)
            y1 = x[0] - rho[:, None] * np.cos(om)[None, :]
            y2 = x[1] - rho[:, None] * np.sin(om)[None, :]
            vals = F(sk, y1, y2)
            inner = (vals * wom).sum(axis=1) * sp @ wpsi
            total += wk * (t - sk) * inner
        return total / TAU

    prev = evaluate(n0, 2 * n0, 4 * n0)
    for level in range(1, max_level + 1):
        n = n0 * 2 ** level
        cur = evaluate(n, 2 * n, 4 * n)
        if abs(cur - prev) < tol:
            return cur
        prev = cur
    raise AccuracyError(f"kernel quadrature did not reach tol={tol}; "
                        f"last delta {abs(cur - prev):.3e}")


# ----------------------------------------------------------------------------
# reduced kernel integrals (spherical means + elliptic integrals)
# ----------------------------------------------------------------------------

def _weight_profile(mu: float, nu: float):
    def z(s, lam):
        return (1.0 + lam + s) ** mu * (1.0 + np.abs(s - lam)) ** nu
    return z


def _s_breakpoints(t: float, r: float):
    cand = [0.5 * (t - r), t - r, 0.5 * (t + r), r]
    pts = sorted({p for p in cand if 1e-12 < p < t - 1e-12})
    return [0.0] + pts + [t]


def reduced_kernel_integral(t: float, r: float, mu: float, nu: float,
                            n_s: int = 48, n_lam: int = 48) -> float:
    """I(t, r) = I1 + I2 for the source profile 1/z(s, |y|) via the
    spherical-means reduction; independent of the 2D quadrature path.

    I1: lambda + r <= t - s, inner integral K((b-a)/(d-a))/sqrt(d-a);
    I2: the complement, K((d-a)/(b-a))/sqrt(b-a);
    a = (lambda-r)^2, b = (lambda+r)^2, d = (t-s)^2.  The log endpoint at
    d = b gets a square-root substitution; the weight kink at lambda = s and
    the region corners in s get their own subdivision points.
    """
    z = _weight_profile(mu, nu)
    glx, glw = leggauss(n_lam)
    glx = 0.5 * (glx + 1.0)
    glw = 0.5 * glw

    def inner1(s, lam):
        a = (lam - r) ** 2
        b = (lam + r) ** 2
        d = (t - s) ** 2
        return ellipk((b - a) / (d - a)) / np.sqrt(d - a)

    def inner2(s, lam):
        a = (lam - r) ** 2
        b = (lam + r) ** 2
        d = (t - s) ** 2
        with np.errstate(divide="ignore", invalid="ignore"):
            out = ellipk((d - a) / (b - a)) / np.sqrt(b - a)
        return np.nan_to_num(out, nan=0.0, posinf=0.0)

    def row_seg(s, lo, hi, inner, sqrt_end=None):
        """Vectorized  4 * int_lo^hi lam inner(s, lam) / z dlam  per s-row.

        sqrt_end = "hi": substitute lam = hi - xi^2; "lo": lam = lo + xi^2.
        """
        width = np.maximum(hi - lo, 0.0)
        if sqrt_end is None:
            lam = lo[:, None] + width[:, None] * glx[None, :]
            jac = width[:, None] * glw[None, :]
        else:
            ximax = np.sqrt(width)
            xi = ximax[:, None] * glx[None, :]
            lam = (hi[:, None] - xi ** 2) if sqrt_end == "hi" else (lo[:, None] + xi ** 2)
            jac = 2.0 * xi * ximax[:, None] * glw[None, :]
        with np.errstate(divide="ignore", invalid="ignore"):
            vals = lam * inner(s[:, None], lam) / z(s[:, None], lam)
        vals = np.nan_to_num(vals, nan=0.0, posinf=0.0)
        return 4.0 * (vals * jac).sum(axis=1) * (width > 1e-14)

    total = 0.0
    W = 32.0   # resolved width around the |s - lambda| kink
    brks = _s_breakpoints(t, r)
    for lo_s, hi_s in zip(brks[:-1], brks[1:]):
        s, ws = _gl_composite(lo_s, hi_s, n_s, 2)
        T = t - s
        # I1: [0, lam_top], kink split at lambda = s, sqrt stretch at the top
        lam_top = np.maximum(T - r, 0.0)
        brk = np.where((s > 1e-12) & (s < lam_top), s, 0.0)
        brk0 = np.maximum(brk - W, 0.0)
        contrib = row_seg(s, np.zeros_like(s), brk0, inner1)
        contrib += row_seg(s, brk0, brk, inner1)
        mid2 = np.where(lam_top - brk > 2 * W, brk + W, 0.5 * (brk + lam_top))
        contrib += row_seg(s, brk, mid2, inner1)
        contrib += row_seg(s, mid2, lam_top, inner1, sqrt_end="hi")
        # I2: [lo, hi], sqrt stretch at lo when lo = T - r, kink at lambda = s
        hi2 = T + r
        lo2 = np.maximum.reduce([T - r, r - T, np.zeros_like(s)])
        singular_lo = (T - r) > 1e-14
        mid = np.where((s > lo2 + 1e-12) & (s < hi2 - 1e-12), s, lo2)
        first_end = np.where(mid > lo2, mid, hi2)
        a2 = np.where(first_end - lo2 > 2 * W, lo2 + W, 0.5 * (lo2 + first_end))
        contrib += np.where(singular_lo,
                            row_seg(s, lo2, a2, inner2, sqrt_end="lo"),
                            row_seg(s, lo2, a2, inner2))
        contrib += row_seg(s, a2, first_end, inner2)
        b2 = np.minimum(first_end + W, hi2)
        contrib += row_seg(s, first_end, b2, inner2)
        contrib += row_seg(s, b2, hi2, inner2)
        total += float(np.sum(ws * contrib))
    return float(total)


def full_kernel_integral(t: float, r: float, mu: float, nu: float,
                         n_s: int = 64, n_psi: int = 64, n_omega: int = 48) -> float:
    """Same I(t, r) by direct 2D quadrature of the Duhamel disk integral in
    y-polar coordinates (rho = (t - s) sin psi removes the kernel root).

    The weight kink |s - lambda(rho, omega)| is tracked explicitly: the
    omega integral is split at cos(omega*) = (s^2 - rho^2 - r^2) / (2 rho r)
    and the psi integral at the radii where that crossing appears/disappears.
    """
    z = _weight_profile(mu, nu)
    glx, glw = leggauss(n_omega)
    glx = 0.5 * (glx + 1.0)
    glw = 0.5 * glw

    def omega_integrals(sk, rho):
        # 2 * int_0^pi f(omega) domega per rho, omega split at the lambda = s
        # crossing; per-row affine maps keep everything vectorized
        rho = np.asarray(rho)
        with np.errstate(divide="ignore", invalid="ignore"):
            cosw = (sk ** 2 - rho ** 2 - r ** 2) / (2.0 * rho * r)
        cosw = np.where(np.isfinite(cosw), cosw, 2.0)
        ws = np.where(np.abs(cosw) < 1.0, np.arccos(np.clip(cosw, -1.0, 1.0)), np.pi)

        def f(om):
            lam = np.sqrt(np.maximum(rho[:, None] ** 2 + r ** 2
                                     + 2.0 * rho[:, None] * r * np.cos(om), 0.0))
            return 1.0 / z(sk, lam)

        omA = ws[:, None] * glx[None, :]
        accA = (f(omA) * glw[None, :]).sum(axis=1) * ws
        omB = ws[:, None] + (np.pi - ws)[:, None] * glx[None, :]
        accB = (f(omB) * glw[None, :]).sum(axis=1) * (np.pi - ws)
        return 2.0 * (accA + accB)

    def disk_integral(sk):
        T = t - sk
        if T <= 1e-14:
            return 0.0
        # psi-splits where the omega-crossing appears: |rho - r| = s or rho + r = s
        cand = [abs(sk - r), sk + r]
        psis = sorted({math.asin(min(c / T, 1.0)) for c in cand if 0 < c < T}
                      | {0.0, 0.5 * np.pi})
        acc = 0.0
        for a1, b1 in zip(psis[:-1], psis[1:]):
            if b1 - a1 < 1e-14:
                continue
            psi, wpsi = _gl(a1, b1, n_psi)
            sp = np.sin(psi)
            inner = omega_integrals(sk, T * sp)
            acc += np.sum(wpsi * sp * inner)
        return T * acc

    total = 0.0
    for lo_s, hi_s in zip(_s_breakpoints(t, r)[:-1], _s_breakpoints(t, r)[1:]):
        s_nodes, s_w = _gl_composite(lo_s, hi_s, n_s, 2)
        for sk, wk in zip(s_nodes, s_w):
            total += wk * disk_integral(sk)
    return float(total)


# ----------------------------------------------------------------------------
# bound reports
# ----------------------------------------------------------------------------

@dataclass
class BoundReport:
    estimate_id: str
    params: dict
    constant: float
    n_samples: int
    worst_case: dict
    passed: bool
    stability_ratio: float | None = None
    notes: str = ""

    def to_json(self) -> str:
        return json.dumps({
            "estimate_id": self.estimate_id,
            "params": self.params,
            "constant": self.constant,
            "n_samples": self.n_samples,
            "worst_case": self.worst_case,
            "passed": self.passed,
            "stability_ratio": self.stability_ratio,
            "notes": self.notes,
        })

    @staticmethod
    def csv_header() -> str:
        return "estimate,parameters,constant,stability_ratio,passed"

    def csv_row(self) -> str:
        par = ";".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        st = "" if self.stability_ratio is None else f"{self.stability_ratio:.6g}"
        return f"{self.estimate_id},{par},{self.constant:.12g},{st},{int(self.passed)}"


# ----------------------------------------------------------------------------
# test-function families
# ----------------------------------------------------------------------------

@dataclass
class TestFunctionFamily:
    """Seeded generator of C^4 test data with compact numerical support."""

    __test__ = False  # not a pytest collection target

    seed: int = 0
    kind: str = "gaussian_bump"       # gaussian_bump | oscillatory | plateau | random_smooth
    amplitude: float = 1.0
    support_radius: float = 4.0

    def __post_init__(self):
        if self.kind not in ("gaussian_bump", "oscillatory", "plateau", "random_smooth"):
            raise ValueError(f"unknown family kind {self.kind!r}")

    def draw_plane_data(self, rng):
        """(phi0, grad_phi0, phi1) callables on the plane."""
        R = self.support_radius
        n_terms = 1 if self.kind == "gaussian_bump" else 3
        cs = rng.uniform(-0.3 * R, 0.3 * R, size=(n_terms, 2))
        ws = rng.uniform(0.5, 1.5, size=n_terms)
        amp = self.amplitude * rng.uniform(0.5, 1.0, size=n_terms)
        ks = rng.integers(0, 3, size=n_terms) if self.kind == "oscillatory" else np.zeros(n_terms, int)
        ph = rng.uniform(0, TAU, size=n_terms)
        amp1 = self.amplitude * rng.uniform(-1.0, 1.0, size=n_terms)

        def phi0(y1, y2):
            out = np.zeros_like(np.asarray(y1, dtype=float))
            for a, c, w, k, p in zip(amp, cs, ws, ks, ph):
                rr2 = (y1 - c[0]) ** 2 + (y2 - c[1]) ** 2
                osc = np.cos(k * np.arctan2(y2 - c[1], y1 - c[0]) + p) if k else 1.0
                out += a * np.exp(-rr2 / w ** 2) * osc
            return out

        def grad_phi0(y1, y2, eps=1e-5):
            gx = (phi0(y1 + eps, y2) - phi0(y1 - eps, y2)) / (2 * eps)
            gy = (phi0(y1, y2 + eps) - phi0(y1, y2 - eps)) / (2 * eps)
            return gx, gy

        def phi1(y1, y2):
            out = np.zeros_like(np.asarray(y1, dtype=float))
            for a, c, w in zip(amp1, cs, ws):
                rr2 = (y1 - c[0]) ** 2 + (y2 - c[1]) ** 2
                out += a * np.exp(-rr2 / w ** 2)
            return out

        return phi0, grad_phi0, phi1

    def draw_radial_profile(self, rng, center: float | None = None):
        """A 1D C^inf profile of q with compact numerical support."""
        c = rng.uniform(-0.5, 0.5) if center is None else center
        w = rng.uniform(0.6, 1.8)
        a = self.amplitude * rng.uniform(0.5, 1.0)
        if self.kind == "plateau":
            W = rng.uniform(2.0, 6.0)

            def f(q):
                q = np.asarray(q, dtype=float)
                up = _smooth_ramp((q - c) / w)
                down = _smooth_ramp((c + W - q) / w)
                return a * up * down

            def df(q, eps=1e-6):
                return (f(q + eps) - f(q - eps)) / (2 * eps)
            return f, df
        k = rng.integers(1, 4) if self.kind == "oscillatory" else 0

        def f(q):
            q = np.asarray(q, dtype=float)
            osc = np.cos(k * q) if k else 1.0
            return a * np.exp(-((q - c) / w) ** 2) * osc

        def df(q):
            q = np.asarray(q, dtype=float)
            base = np.exp(-((q - c) / w) ** 2)
            osc = np.cos(k * q) if k else 1.0
            dosc = -k * np.sin(k * q) if k else 0.0
            return a * base * (dosc - 2 * (q - c) / w ** 2 * osc)
        return f, df


def _smooth_ramp(x):
    x = np.clip(np.asarray(x, dtype=float), 0.0, 1.0)
    return x * x * x * (10.0 + x * (-15.0 + 6.0 * x))


# ----------------------------------------------------------------------------
# battery: flat decay (free wave)
# ----------------------------------------------------------------------------

def m_weight_norm(phi0, grad_phi0, phi1, mu: float, R: float = 40.0, n: int = 2001) -> float:
    """M_mu = sup (1+|y|)^mu |phi0| + (1+|y|)^{mu+1} (|phi1| + |grad phi0|)."""
    xs = np.linspace(-R, R, n)
    y1, y2 = np.meshgrid(xs, xs, indexing="ij")
    rr = np.hypot(y1, y2)
    g1, g2 = grad_phi0(y1, y2)
    val = ((1 + rr) ** mu * np.abs(phi0(y1, y2))
           + (1 + rr) ** (mu + 1) * (np.abs(phi1(y1, y2)) + np.hypot(g1, g2)))
    return float(np.max(val))


def check_flat_decay(family: TestFunctionFamily, mu: float,
                     sample_points, n_draws: int = 3) -> BoundReport:
    """Empirical constant of the flat 2+1 decay estimate.

    sample_points: iterable of (t, r) pairs; the wave is evaluated on a ring
    of angles at each point and the local sup used as the LHS.
    """
    if mu <= 0.5:
        raise RangeError("flat decay estimate needs mu > 1/2")
    rng = np.random.default_rng(family.seed)
    C = 0.0
    worst = {}
    count = 0
    for _ in range(n_draws):
        phi0, gphi0, phi1 = family.draw_plane_data(rng)
        M = m_weight_norm(phi0, gphi0, phi1, mu)
        for (t, r) in sample_points:
            q = abs(t - r)
            if mu == 1.0 and q < 1.0:
                continue  # the log convention needs 1+|q| away from 1
            sup_phi = 0.0
            for ang in np.linspace(0, TAU, 8, endpoint=False):
                x = (r * math.cos(ang), r * math.sin(ang))
                sup_phi = max(sup_phi, abs(homogeneous_wave_value(phi0, gphi0, phi1, t, x)))
            rhs = M * bracket_plus(1.0 + q, 1.0 - mu) \
                / (math.sqrt(1.0 + t + r) * math.sqrt(1.0 + q))
            ratio = sup_phi / rhs
            count += 1
            if ratio > C:
                C = ratio
                worst = {"t": t, "r": r}
    return BoundReport("flat_decay", {"mu": mu, "seed": family.seed},
                       float(C), count, worst, passed=np.isfinite(C))


def flat_decay_supnorm_series(phi0, grad_phi0, phi1, t_values,
                              band: float = 3.0, n_r: int = 9):
    """sup |phi| over a cone neighborhood r in [t-band, t+band] per time."""
    out = []
    for t in t_values:
        best = 0.0
        for r in np.linspace(max(t - band, 0.5), t + band, n_r):
            for ang in (0.0, 0.5 * np.pi, np.pi, 1.5 * np.pi):
                x = (r * math.cos(ang), r * math.sin(ang))
                best = max(best, abs(homogeneous_wave_value(phi0, grad_phi0, phi1, t, x)))
        out.append(best)
    return np.array(out)


# ----------------------------------------------------------------------------
# battery: kernel bound
# ----------------------------------------------------------------------------

def check_kernel_bound(mu: float, nu: float, sample_points,
                       window_factor: float = 2.0) -> BoundReport:
    """Empirical C(mu, nu) in the Linfty-Linfty estimate, with the source
    F = 1/z(s,|y|) (so M_{mu,nu}(F) = 1), plus window-doubling stability."""
    if mu <= 1.5 or nu <= 1.0:
        raise RangeError(f"kernel bound requires mu > 3/2, nu > 1; got {(mu, nu)}")

    def constant_for(points):
        C = 0.0
        worst = {}
        for (t, r) in points:
            q = abs(t - r)
            if mu == 2.0 and q < 1.0:
                continue
            I = reduced_kernel_integral(t, r, mu, nu)
            u = I / TAU
            rhs = bracket_plus(1.0 + q, 2.0 - mu) / math.sqrt(1.0 + q)
            ratio = abs(u) * math.sqrt(1.0 + t + r) / rhs
            if ratio > C:
                C = ratio
                worst = {"t": t, "r": r}
        return C, worst

    C1, worst = constant_for(sample_points)
    # doubling the window scales the times but keeps the cone offsets q fixed
    scaled = [(t * window_factor, t * window_factor + (r - t)) for (t, r) in sample_points]
    C2, _ = constant_for(scaled)
    stability = C2 / C1 if C1 > 0 else np.inf
    return BoundReport("kernel_bound", {"mu": mu, "nu": nu},
                       float(max(C1, C2)), 2 * len(sample_points), worst,
                       passed=bool(np.isfinite(C1) and abs(stability - 1.0) < 0.25),
                       stability_ratio=float(stability))


# ----------------------------------------------------------------------------
# battery: weighted Hardy
# ----------------------------------------------------------------------------

def check_hardy(alpha: float, beta: float, family: TestFunctionFamily,
                n_draws: int = 100, t: float = 20.0,
                translations=(1.0, 4.0, 16.0)) -> BoundReport:
    """|| v^{1/2} f / (1+|q|) ||_L2 <= C || v^{1/2} d_r f ||_L2 over seeded draws.

    Radial test functions; the 2D measure r dr dtheta reduces to 2 pi r dr.
    translations scale the support center outward for the stability sweep.
    """
    if not (alpha < 1.0 and beta > 1.0):
        raise RangeError(f"hardy weight range needs alpha < 1 < beta, got {(alpha, beta)}")
    spec = WeightSpec()
    rng = np.random.default_rng(family.seed)
    r = np.linspace(1e-3, 4.0 * t + 40.0, 16001)
    q = r - t
    v = spec.hardy_v(alpha, beta, q)
    C = 0.0
    worst = {}
    consts = {tr: 0.0 for tr in translations}
    for i in range(n_draws):
        f, df = family.draw_radial_profile(rng)
        for tr in translations:
            center = t + tr * rng.uniform(0.3, 1.0)
            fr = f(r - center)
            dfr = df(r - center)
            lhs = np.sqrt(TAU * np.trapezoid(v * fr ** 2 / (1 + np.abs(q)) ** 2 * r, r))
            rhs = np.sqrt(TAU * np.trapezoid(v * dfr ** 2 * r, r))
            if rhs == 0.0:
                continue
            ratio = lhs / rhs
            consts[tr] = max(consts[tr], ratio)
            if ratio > C:
                C = ratio
                worst = {"draw": i, "translation": tr}
    vals = [consts[tr] for tr in translations]
    stability = max(vals) / max(min(vals), 1e-300)
    return BoundReport("hardy", {"alpha": alpha, "beta": beta, "seed": family.seed},
                       float(C), n_draws * len(translations), worst,
                       passed=bool(np.isfinite(C) and stability < 4.0),
                       stability_ratio=float(stability))


# ----------------------------------------------------------------------------
# battery: weighted Klainerman-Sobolev
# ----------------------------------------------------------------------------

_KS_CACHE: dict = {}


def _ks_lambdified(kind: str):
    """Lambdified Z^I f for |I| <= 2 for a parametric family member."""
    if kind in _KS_CACHE:
        return _KS_CACHE[kind]
    import sympy as sp

    t, r, th = sp.symbols("t r th", positive=True)
    A, c, w, beta, p = sp.symbols("A c w beta p")
    k = sp.symbols("k", integer=True)
    if kind == "cone_bump":
        f = A * sp.exp(-((r - t - c) / w) ** 2) * (1 + beta * sp.cos(k * th)) \
            / (1 + t + r) ** sp.Rational(1, 2)
    elif kind == "interior_bump":
        f = A * sp.exp(-((r - c) / w) ** 2) * (1 + beta * sp.sin(k * th)) / (1 + t) ** p
    else:
        raise ValueError(kind)

    cth, sth = sp.cos(th), sp.sin(th)
    ops = {
        "d0": lambda e: sp.diff(e, t),
        "d1": lambda e: cth * sp.diff(e, r) - sth / r * sp.diff(e, th),
        "d2": lambda e: sth * sp.diff(e, r) + cth / r * sp.diff(e, th),
        "O01": lambda e: r * cth * sp.diff(e, t) + t * cth * sp.diff(e, r)
        - t * sth / r * sp.diff(e, th),
        "O02": lambda e: r * sth * sp.diff(e, t) + t * sth * sp.diff(e, r)
        + t * cth / r * sp.diff(e, th),
        "O12": lambda e: -sp.diff(e, th),
        "S": lambda e: t * sp.diff(e, t) + r * sp.diff(e, r),
    }
    args = (t, r, th, A, c, w, beta, k, p)
    exprs = {(): f}
    for name, op in ops.items():
        exprs[(name,)] = op(f)
    for n1, op1 in ops.items():
        for n2 in ops:
            exprs[(n1, n2)] = op1(exprs[(n2,)])
    lams = {key: sp.lambdify(args, sp.simplify(e) if len(key) < 1 else e, modules="numpy")
            for key, e in exprs.items()}
    _KS_CACHE[kind] = lams
    return lams


def check_klainerman_sobolev(seed: int = 0, kind: str = "cone_bump",
                             times=(10.0, 20.0, 40.0), n_draws: int = 100,
                             weight_id: str = "w0") -> BoundReport:
    """|f v^{1/2}| <= C (1+t+r)^{-1/2} (1+|q|)^{-1/2} sum_{|I|<=2} ||v^{1/2} Z^I f||."""
    spec = WeightSpec()
    lams = _ks_lambdified(kind)
    rng = np.random.default_rng(seed)
    C = 0.0
    worst = {}
    consts_per_t = {tt: 0.0 for tt in times}
    count = 0
    for i in range(n_draws):
        A = rng.uniform(0.5, 1.5)
        c = rng.uniform(-1.0, 1.0)
        w = rng.uniform(0.7, 1.6)
        beta = rng.uniform(-0.5, 0.5)
        k = int(rng.integers(0, 4))
        p = rng.uniform(0.3, 0.8)
        for tt in times:
            r_hi = tt + c + 14.0 * w if kind == "cone_bump" else max(4 * w + abs(c), 8.0)
            r = np.linspace(1e-3, r_hi, 4001)
            th = TAU * np.arange(64) / 64
            R, TH = np.meshgrid(r, th, indexing="ij")
            q = R - tt
            v = spec.w(weight_id, q)
            params = (tt, R, TH, A, c, w, beta, k, p)
            fval = lams[()](*params)
            lhs_field = np.abs(fval) * np.sqrt(v)
            idx = np.unravel_index(np.argmax(lhs_field), lhs_field.shape)
            lhs = lhs_field[idx]
            pref = 1.0 / (np.sqrt(1 + tt + R[idx]) * np.sqrt(1 + np.abs(q[idx])))
            total = 0.0
            for key, lam in lams.items():
                zval = np.asarray(lam(*params), dtype=float)
                zval = np.broadcast_to(zval, R.shape)
                total += np.sqrt(np.trapezoid(
                    np.trapezoid(v * zval ** 2 * R, th, axis=1), r))
            ratio = lhs / (pref * total)
            count += 1
            consts_per_t[tt] = max(consts_per_t[tt], ratio)
            if ratio > C:
                C = ratio
                worst = {"draw": i, "t": tt}
    vals = list(consts_per_t.values())
    stability = max(vals) / max(min(vals), 1e-300)
    return BoundReport("klainerman_sobolev", {"kind": kind, "seed": seed,
                                              "weight": weight_id},
                       float(C), count, worst,
                       passed=bool(np.isfinite(C) and stability < 4.0),
                       stability_ratio=float(stability))


# ----------------------------------------------------------------------------
# integration lemma
# ----------------------------------------------------------------------------

def check_integration_lemma(gamma: float, alpha: float, beta: float,
                            s_values=(100.0, 300.0, 1000.0, 3000.0),
                            du_bound=None) -> dict:
    """Reproduce the q-integration lemma as exponent recovery.

    Hypothesis: |d u| <= (1+s)^gamma (1+|q|)^alpha (q<0), ... ^beta (q>0),
    |u(t=0)| <= (1+r)^{gamma+beta}.  The conclusion envelope is rebuilt by
    integrating the hypothesis along the proof paths (from t=0 for q>0, from
    q=0 for q<0) and its exponents recovered by log-log fits.
    """
    if beta >= -1.0:
        raise RangeError("integration lemma needs beta < -1")
    if du_bound is not None:
        # caller-supplied |du| samples must respect the hypothesis
        qs = np.linspace(-30.0, 30.0, 601)
        for s in s_values:
            hyp = (1 + s) ** gamma * np.where(qs < 0, (1 + np.abs(qs)) ** alpha,
                                              (1 + np.abs(qs)) ** beta)
            if np.any(np.abs(du_bound(s, qs)) > hyp * (1 + 1e-9)):
                raise RangeError("supplied derivative bound violates the hypothesis")

    def envelope(s, q):
        # q > 0: integrate d_q from q to s (the t=0 end of the s-characteristic)
        if q >= 0:
            qs = np.linspace(q, s, 2001)
            base = (1 + s) ** (gamma + beta)
            db = du_bound(s, qs) if du_bound is not None else \
                (1 + s) ** gamma * (1 + qs) ** beta
            return base + np.trapezoid(np.abs(db), qs)
        # q < 0: value at q=0 plus integral inward
        at0 = envelope(s, 0.0)
        qs = np.linspace(q, 0.0, 2001)
        db = du_bound(s, qs) if du_bound is not None else \
            (1 + s) ** gamma * (1 + np.abs(qs)) ** alpha
        return at0 + np.trapezoid(np.abs(db), qs)

    report = {"gamma": gamma, "alpha": alpha, "beta": beta}
    # exterior exponent in (1+q); large s keeps the boundary offset negligible
    s = max(s_values)
    q_ext = np.array([1.0, 2.0, 4.0, 8.0])
    vals = np.array([envelope(s, q) for q in q_ext])
    ext_slope = np.polyfit(np.log(1 + q_ext), np.log(vals), 1)[0]
    report["exterior_q_exponent"] = float(ext_slope)
    report["exterior_q_target"] = beta + 1.0
    # interior branch max(1, (1+|q|)^{alpha+1}): fit deeper in q so the
    # envelope's additive boundary value does not bias the slope
    q_int = -np.array([16.0, 32.0, 64.0, 256.0])
    vals_i = np.array([envelope(s, q) for q in q_int])
    int_slope = np.polyfit(np.log(1 + np.abs(q_int)), np.log(vals_i), 1)[0]
    report["interior_q_exponent"] = float(int_slope)
    report["interior_q_target"] = max(alpha + 1.0, 0.0)
    # growth in s at fixed q
    vals_s = np.array([envelope(s, -2.0) for s in s_values])
    s_slope = np.polyfit(np.log(1 + np.asarray(s_values)), np.log(vals_s), 1)[0]
    report["s_exponent"] = float(s_slope)
    report["s_target"] = gamma
    tol = 0.08
    report["passed"] = bool(
        abs(ext_slope - (beta + 1.0)) < tol + 0.05
        and (abs(int_slope - report["interior_q_target"]) < tol + 0.05
             or (report["interior_q_target"] == 0.0 and int_slope < tol))
        and abs(s_slope - gamma) < tol)
    return report
