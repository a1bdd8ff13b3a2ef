"""Exact-structure solver for cylindrically symmetric waves.

With two commuting spacelike symmetries the field equations decouple: the
scalar obeys the flat radial wave equation

    -d_t^2 phi + d_r^2 phi + (1/r) d_r phi = 0,

and the remaining metric function a(t, r) is recovered by a radial transport
integral

    d_r a = r ((d_r phi)^2 + (d_t phi)^2),   a(t, 0) = 0.

This module is the trusted baseline for the full 2+1 evolution: it owns the
radial method-of-lines solver (RK4, 4th-order stencils, even-parity axis,
Sommerfeld outer boundary), the transport quadrature for a, the residuals of
the three reduced field equations, and the conserved energy

    E(phi) = int_0^inf r ((d_r phi)^2 + (d_t phi)^2) dr.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class ConfigurationError(ValueError):
    pass


@dataclass
class RadialGrid:
    r_max: float
    n_r: int

    @property
    def h(self) -> float:
        return self.r_max / self.n_r

    @property
    def r(self) -> np.ndarray:
        return self.h * np.arange(self.n_r + 1)   # includes r = 0


@dataclass
class RadialField:
    """Samples u(r_i) on [0, r_max] with a parity tag at the axis."""

    grid: RadialGrid
    values: np.ndarray
    parity: str = "even"

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.grid.n_r + 1,):
            raise ConfigurationError("radial field has wrong length")
        if self.parity not in ("even", "odd"):
            raise ConfigurationError(f"unknown parity {self.parity!r}")


@dataclass
class RadialHistory:
    """Snapshots (t_k, phi_k, dtphi_k) of a radial evolution."""

    grid: RadialGrid
    times: list[float] = field(default_factory=list)
    phi: list[np.ndarray] = field(default_factory=list)
    dtphi: list[np.ndarray] = field(default_factory=list)

    def append(self, t, phi, dtphi):
        self.times.append(float(t))
        self.phi.append(phi.copy())
        self.dtphi.append(dtphi.copy())

    def at_time(self, t: float) -> int:
        times = np.asarray(self.times)
        k = int(np.argmin(np.abs(times - t)))
        if abs(times[k] - t) > 1e-9 + 1e-9 * abs(t):
            raise ConfigurationError(f"time {t} not stored (nearest {times[k]})")
        return k


_C1 = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
_C2 = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0


def _pad_even(u: np.ndarray) -> np.ndarray:
    # ghost points across r=0 for an even function: u(-h) = u(h)
    return np.concatenate([u[2:0:-1], u])


def radial_d1(u: np.ndarray, h: float, parity: str = "even") -> np.ndarray:
    n = u.size
    out = np.empty_like(u)
    sign = 1.0 if parity == "even" else -1.0
    up = np.concatenate([sign * u[2:0:-1], u])
    acc = np.zeros(n - 2)
    for k, w in enumerate(_C1):
        if w:
            acc += w * up[k:n - 2 + k]
    out[:n - 2] = acc / h
    # one-sided at the outer edge
    F1 = np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / 12.0
    for i in (n - 2, n - 1):
        out[i] = -sum(w * u[i - k] for k, w in enumerate(F1)) / h
    return out


def radial_d2(u: np.ndarray, h: float, parity: str = "even") -> np.ndarray:
    n = u.size
    out = np.empty_like(u)
    sign = 1.0 if parity == "even" else -1.0
    up = np.concatenate([sign * u[2:0:-1], u])
    acc = np.zeros(n - 2)
    for k, w in enumerate(_C2):
        if w:
            acc += w * up[k:n - 2 + k]
    out[:n - 2] = acc / h ** 2
    F2 = np.array([45.0, -154.0, 214.0, -156.0, 61.0, -10.0]) / 12.0
    for i in (n - 2, n - 1):
        out[i] = sum(w * u[i - k] for k, w in enumerate(F2)) / h ** 2
    return out


def flat_radial_box(phi: np.ndarray, grid: RadialGrid) -> np.ndarray:
    """d_r^2 phi + (1/r) d_r phi with the axis limit 2 d_r^2 phi at r=0."""
    r = grid.r
    d1 = radial_d1(phi, grid.h)
    d2 = radial_d2(phi, grid.h)
    out = np.empty_like(phi)
    out[1:] = d2[1:] + d1[1:] / r[1:]
    out[0] = 2.0 * d2[0]
    return out


def solve_flat_radial_wave(phi0: RadialField, phi1: RadialField, t_end: float,
                           dt: float | None = None, source=None,
                           store_every: int = 1) -> RadialHistory:
    """RK4 method-of-lines evolution of the flat radial wave equation.

    source(t, r) -> array, optional inhomogeneity (Box phi = source).
    Outgoing Sommerfeld boundary d_t phi + d_r phi + phi/(2 r) = 0 at r_max.
    """
    grid = phi0.grid
    if phi0.parity != "even" or phi1.parity != "even":
        raise ConfigurationError("flat radial wave solver expects even-parity data")
    if dt is None:
        dt = 0.45 * grid.h
    if dt > 0.5 * grid.h + 1e-15:
        raise ConfigurationError(f"CFL violated: dt={dt} > 0.5 h={0.5 * grid.h}")
    r = grid.r
    n_steps = max(1, int(np.ceil(t_end / dt - 1e-12)))
    dt = t_end / n_steps   # land exactly on t_end (only ever shrinks dt)

    def rhs(t, phi, psi):
        dphi = psi.copy()
        dpsi = flat_radial_box(phi, grid)
        if source is not None:
            dpsi += source(t, r)
        # Sommerfeld rows
        d1psi = radial_d1(psi, grid.h)
        for i in (r.size - 2, r.size - 1):
            dpsi[i] = -d1psi[i] - psi[i] / (2.0 * r[i])
        return dphi, dpsi

    phi = phi0.values.copy()
    psi = phi1.values.copy()
    hist = RadialHistory(grid)
    hist.append(0.0, phi, psi)
    t = 0.0
    for k in range(n_steps):
        k1p, k1s = rhs(t, phi, psi)
        k2p, k2s = rhs(t + dt / 2, phi + dt / 2 * k1p, psi + dt / 2 * k1s)
        k3p, k3s = rhs(t + dt / 2, phi + dt / 2 * k2p, psi + dt / 2 * k2s)
        k4p, k4s = rhs(t + dt, phi + dt * k3p, psi + dt * k3s)
        phi = phi + dt / 6 * (k1p + 2 * k2p + 2 * k3p + k4p)
        psi = psi + dt / 6 * (k1s + 2 * k2s + 2 * k3s + k4s)
        t += dt
        if (k + 1) % store_every == 0 or k == n_steps - 1:
            hist.append(t, phi, psi)
    return hist


def energy(phi: np.ndarray, dtphi: np.ndarray, grid: RadialGrid) -> float:
    """E = int r ((d_r phi)^2 + (d_t phi)^2) dr by composite Simpson."""
    from scipy.integrate import simpson
    dr_phi = radial_d1(phi, grid.h)
    integrand = grid.r * (dr_phi ** 2 + dtphi ** 2)
    return float(simpson(integrand, dx=grid.h))


def integrate_a(hist: RadialHistory, t: float) -> RadialField:
    """a(t, R) = int_0^R r ((d_r phi)^2 + (d_t phi)^2) dr, a(t,0) = 0.

    Cumulative trapezoid of a nonnegative integrand: a is nondecreasing in R
    exactly, and a(t, r_max) converges to the conserved energy once the wave
    is fully inside the domain.
    """
    k = hist.at_time(t)
    grid = hist.grid
    phi, dtphi = hist.phi[k], hist.dtphi[k]
    dr_phi = radial_d1(phi, grid.h)
    integrand = grid.r * (dr_phi ** 2 + dtphi ** 2)
    a = np.concatenate([[0.0], np.cumsum(0.5 * (integrand[1:] + integrand[:-1]) * grid.h)])
    return RadialField(grid, a, "even")


def rosen_residual(hist: RadialHistory, t: float) -> dict[str, float]:
    """Max-norm residuals of the three reduced field equations at time t.

    tt:  d_r^2 a - d_t^2 a + (1/r) d_r a - 2 (d_t phi)^2
    rr: -d_r^2 a + d_t^2 a + (1/r) d_r a - 2 (d_r phi)^2
    tr:  (1/r) d_t a - 2 d_t phi d_r phi
    evaluated away from the axis and the outer boundary.
    """
    k = hist.at_time(t)
    if k < 2 or k > len(hist.times) - 3:
        raise ConfigurationError("need two stored slices on both sides of t")
    grid = hist.grid
    dt = hist.times[1] - hist.times[0]
    a_slices = [integrate_a(hist, hist.times[k + j]).values for j in range(-2, 3)]
    a0 = a_slices[2]
    da_dt = sum(w * a_slices[j] for j, w in enumerate(_C1) if w) / dt
    da_dtt = sum(w * a_slices[j] for j, w in enumerate(_C2) if w) / dt ** 2
    da_dr = radial_d1(a0, grid.h)
    da_drr = radial_d2(a0, grid.h)
    phi, dtphi = hist.phi[k], hist.dtphi[k]
    dr_phi = radial_d1(phi, grid.h)
    r = grid.r
    sl = slice(1, -4)
    res_tt = da_drr[sl] - da_dtt[sl] + da_dr[sl] / r[sl] - 2 * dtphi[sl] ** 2
    res_rr = -da_drr[sl] + da_dtt[sl] + da_dr[sl] / r[sl] - 2 * dr_phi[sl] ** 2
    res_tr = da_dt[sl] / r[sl] - 2 * dtphi[sl] * dr_phi[sl]
    return {"tt": float(np.max(np.abs(res_tt))),
            "rr": float(np.max(np.abs(res_rr))),
            "tr": float(np.max(np.abs(res_tr)))}


def gaussian_pulse(grid: RadialGrid, amplitude: float, width: float = 1.0,
                   center: float = 0.0) -> RadialField:
    r = grid.r
    vals = amplitude * np.exp(-((r - center) / width) ** 2)
    if center != 0.0:
        vals += amplitude * np.exp(-((r + center) / width) ** 2)  # even completion
    return RadialField(grid, vals, "even")


def export_history_ndjson(hist: RadialHistory, every: int = 1) -> str:
    """NDJSON records {t, r, phi, a} (one line per stored slice)."""
    import json
    lines = []
    for k in range(0, len(hist.times), every):
        a = integrate_a(hist, hist.times[k]).values
        lines.append(json.dumps({
            "t": hist.times[k],
            "r": [round(float(x), 12) for x in hist.grid.r],
            "phi": [float(x) for x in hist.phi[k]],
            "a": [float(x) for x in a],
        }))
    return "\n".join(lines) + "\n"


def derived_scalars_csv(hist: RadialHistory) -> str:
    """CSV of t, E(t), a(r_max, t)."""
    rows = ["t,energy,a_rmax"]
    for k, t in enumerate(hist.times):
        E = energy(hist.phi[k], hist.dtphi[k], hist.grid)
        a = integrate_a(hist, t).values[-1]
        rows.append(f"{t:.17g},{E:.17g},{a:.17g}")
    return "\n".join(rows) + "\n"
