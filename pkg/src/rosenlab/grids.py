"""Polar grids, cutoff functions, finite-difference stencils and the null frame.

Everything downstream (background metric, evolution, transport, diagnostics)
shares the conventions fixed here:

    coordinates   (t, x1, x2), polar (r, theta), null s = t + r, q = r - t
    null frame    L = d_t + d_r,  Lbar = d_t - d_r,  U = d_theta / r
    vector fields d_0, d_1, d_2, rotations/boosts Omega_ab, scaling S

Fields are sampled on a tensor grid r_i = r_min + i*h_r (i = 0..n_r-1),
theta_j = j*h_theta (j = 0..n_theta-1, periodic).  A grid with
r_min = h_r/2 covers the full disk; radial stencils then use ghost points
across r = 0 obtained from the (r, theta) -> (-r, theta + pi) identification,
which is exact for Cartesian tensor components and plain scalars.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

TAU = 2.0 * np.pi

# degree-9 smoothstep: s(0)=0, s(1)=1, s', s'', s''', s'''' vanish at both ends
_SMOOTH9 = np.array([0.0, 0.0, 0.0, 0.0, 0.0, 126.0, -420.0, 540.0, -315.0, 70.0])


class GridError(ValueError):
    """Raised for malformed grids or stencils that do not fit them."""


class PoleError(ValueError):
    """Raised when a frame operation is requested too close to r = 0."""


@dataclass(frozen=True)
class PolarGrid:
    """Uniform tensor grid in (r, theta)."""

    r_min: float
    r_max: float
    n_r: int
    n_theta: int
    axis_parity: bool = False   # True: grid abuts r=0 (r_min = h_r/2), parity ghosts

    def __post_init__(self):
        if self.n_theta < 4 or self.n_theta % 2:
            raise GridError(f"n_theta must be even and >= 4, got {self.n_theta}")
        if not (self.r_max > self.r_min >= 0.0):
            raise GridError(f"need r_max > r_min >= 0, got [{self.r_min}, {self.r_max}]")
        if self.n_r < 5:
            raise GridError(f"n_r must be >= 5, got {self.n_r}")
        if self.axis_parity and abs(self.r_min - 0.5 * self.h_r) > 1e-12 * self.h_r:
            raise GridError("axis_parity grids must have r_min = h_r/2")

    @property
    def h_r(self) -> float:
        return (self.r_max - self.r_min) / self.n_r

    @property
    def h_theta(self) -> float:
        return TAU / self.n_theta

    @property
    def r(self) -> np.ndarray:
        return self.r_min + self.h_r * np.arange(self.n_r)

    @property
    def theta(self) -> np.ndarray:
        return self.h_theta * np.arange(self.n_theta)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_r, self.n_theta)

    @property
    def r_pole_tolerance(self) -> float:
        return 0.5 * self.h_r

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.r, self.theta, indexing="ij")

    @classmethod
    def disk(cls, r_max: float, n_r: int, n_theta: int) -> "PolarGrid":
        """Full-disk grid with half-cell offset from the axis."""
        h = r_max / n_r
        return cls(r_min=0.5 * h, r_max=0.5 * h + n_r * h, n_r=n_r,
                   n_theta=n_theta, axis_parity=True)


@dataclass
class ScalarField2D:
    """Scalar samples on a PolarGrid, optionally with a stack of time slices.

    ``values`` is the slice at time ``t``.  When time derivatives are needed
    (vector fields Z, null derivatives) callers supply ``slices``: an odd-length
    list of (time, array) pairs uniformly spaced in t with the central entry
    equal to (t, values).
    """

    grid: PolarGrid
    values: np.ndarray
    t: float = 0.0
    slices: list[tuple[float, np.ndarray]] = field(default_factory=list)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != self.grid.shape:
            raise GridError(f"field shape {self.values.shape} != grid {self.grid.shape}")
        if self.slices:
            if len(self.slices) % 2 == 0:
                raise GridError("slice stack must have odd length")
            k = len(self.slices) // 2
            tc, vc = self.slices[k]
            if abs(tc - self.t) > 1e-12 or vc is not self.values:
                raise GridError("central slice must be (t, values)")

    @property
    def dt_slices(self) -> float:
        if len(self.slices) < 2:
            raise GridError("field carries no time slices for d_t stencils")
        return self.slices[1][0] - self.slices[0][0]

    def with_values(self, values: np.ndarray) -> "ScalarField2D":
        return ScalarField2D(self.grid, values, self.t)


# ----------------------------------------------------------------------------
# cutoff functions
# ----------------------------------------------------------------------------

def _poly_eval(coeffs: np.ndarray, x: np.ndarray, order: int) -> np.ndarray:
    c = coeffs.copy()
    for _ in range(order):
        c = c[1:] * np.arange(1, c.size)
    return np.polyval(c[::-1], x)


def smoothstep9(x, order: int = 0):
    """C^4 ramp on [0, 1]: identically 0 below, 1 above, degree-9 inside.

    Plateau values (and all derivatives there) are exact, never evaluated
    through the polynomial, so there is no floating drift off the band.
    """
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    if order == 0:
        out[x >= 1.0] = 1.0
    band = (x > 0.0) & (x < 1.0)
    if np.any(band):
        out[band] = _poly_eval(_SMOOTH9, x[band], order)
    return out


@dataclass(frozen=True)
class CutoffPair:
    """The two cutoffs used throughout: chi(q) and Upsilon(rho), rho = r/t.

    chi(q) = 0 for q < 1, 1 for q > 2, C^4 ramp in between.
    Upsilon(rho) = 0 for rho <= 1/2 and rho >= 2, = 1 on [3/4, 3/2], C^4 ramps.
    """

    chi_lo: float = 1.0
    chi_hi: float = 2.0

    def chi(self, q, order: int = 0):
        q = np.asarray(q, dtype=float)
        w = self.chi_hi - self.chi_lo
        val = smoothstep9((q - self.chi_lo) / w, order)
        return val / w ** order

    def upsilon(self, rho, order: int = 0):
        rho = np.asarray(rho, dtype=float)
        up = smoothstep9((rho - 0.5) / 0.25, order) / 0.25 ** order
        down = smoothstep9((2.0 - rho) / 0.5, order) / 0.5 ** order
        if order == 0:
            return np.where(rho <= 1.0, up, down)
        sgn = (-1.0) ** order
        return np.where(rho <= 1.0, up, sgn * down)

    def eval(self, which: str, derivative_order: int, point):
        """Evaluate chi or upsilon (or a derivative) at a point or array."""
        if derivative_order > 4 or derivative_order < 0:
            raise ValueError(f"derivative order {derivative_order} unsupported (max 4)")
        if which == "chi":
            return self.chi(point, derivative_order)
        if which == "upsilon":
            return self.upsilon(point, derivative_order)
        raise ValueError(f"unknown cutoff {which!r}")

    def d2_qchi(self, q):
        """d^2/dq^2 (q * chi(q)), the curvature source profile."""
        q = np.asarray(q, dtype=float)
        return 2.0 * self.chi(q, 1) + q * self.chi(q, 2)

    def d1_qchi(self, q):
        q = np.asarray(q, dtype=float)
        return self.chi(q, 0) + q * self.chi(q, 1)


def eval_cutoff(which: str, derivative_order: int, point, cutoffs: CutoffPair | None = None):
    if cutoffs is None:
        cutoffs = CutoffPair()
    return cutoffs.eval(which, derivative_order, point)


# ----------------------------------------------------------------------------
# finite differences
# ----------------------------------------------------------------------------

# 4th order centered first/second derivative weights
_C1 = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
_C2 = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0
# one-sided 4th order (first derivative) and 3rd/4th order (second derivative)
_F1 = np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / 12.0
_F2 = np.array([45.0, -154.0, 214.0, -156.0, 61.0, -10.0]) / 12.0


def _axis_pad(values: np.ndarray, n_ghost: int) -> np.ndarray:
    """Prepend ghost rows across r=0 using the (r,th)->(-r,th+pi) map."""
    n_theta = values.shape[1]
    roll = np.roll(values[:n_ghost], n_theta // 2, axis=1)
    return np.concatenate([roll[::-1], values], axis=0)


def _deriv_along_axis0(values: np.ndarray, h: float, order: int,
                       axis_parity: bool) -> np.ndarray:
    n = values.shape[0]
    if n < 7:
        raise GridError("need at least 7 radial points for 4th-order stencils")
    cw = _C1 if order == 1 else _C2
    out = np.empty_like(values)
    tail = values.shape[1:]
    if axis_parity:
        padded = _axis_pad(values, 2)
        acc = np.zeros((2,) + tail)
        for k, w in enumerate(cw):
            if w:
                acc += w * padded[k:k + 2]
        out[:2] = acc / h ** order
    else:
        # one-sided stencils at the inner edge
        ow = _F1 if order == 1 else _F2
        for i in range(2):
            acc = np.zeros(tail)
            for k, w in enumerate(ow):
                acc += w * values[i + k]
            out[i] = acc / h ** order
    # interior
    acc = np.zeros((n - 4,) + tail)
    for k, w in enumerate(cw):
        if w:
            acc += w * values[k:n - 4 + k]
    out[2:n - 2] = acc / h ** order
    # outer edge: one-sided, mirrored
    ow = _F1 if order == 1 else _F2
    sgn = -1.0 if order == 1 else 1.0
    for i in (n - 2, n - 1):
        acc = np.zeros(tail)
        for k, w in enumerate(ow):
            acc += w * values[i - k]
        out[i] = sgn * acc / h ** order
    return out


def d_r(values: np.ndarray, grid: PolarGrid, order: int = 1) -> np.ndarray:
    """Radial derivative, 4th-order interior, one-sided or parity at edges."""
    if order not in (1, 2):
        raise GridError(f"unsupported derivative order {order}")
    return _deriv_along_axis0(values, grid.h_r, order, grid.axis_parity)


def d_theta(values: np.ndarray, grid: PolarGrid, order: int = 1) -> np.ndarray:
    """Periodic angular derivative, 4th-order centered."""
    if order not in (1, 2):
        raise GridError(f"unsupported derivative order {order}")
    cw = _C1 if order == 1 else _C2
    out = np.zeros_like(values)
    for k, w in enumerate(cw):
        if w:
            out += w * np.roll(values, 2 - k, axis=1)
    return out / grid.h_theta ** order


def d_t_slices(slices: list[tuple[float, np.ndarray]], order: int = 1) -> np.ndarray:
    """Time derivative at the central slice from a uniform odd stack."""
    n = len(slices)
    if n < 3:
        raise GridError("time stencil needs at least 3 slices")
    k = n // 2
    dt = slices[1][0] - slices[0][0]
    if n >= 5:
        w = _C1 if order == 1 else _C2
        acc = sum(w[j] * slices[k - 2 + j][1] for j in range(5) if w[j])
    else:
        if order == 1:
            acc = 0.5 * (slices[2][1] - slices[0][1])
        else:
            acc = slices[2][1] - 2.0 * slices[1][1] + slices[0][1]
    return acc / dt ** order


def fd_derivative(fld: ScalarField2D, direction: str, order: int = 1) -> ScalarField2D:
    """Finite-difference derivative of a sampled field.

    direction in {"t", "r", "theta"}.  "t" consumes the slice stack.
    """
    if direction == "r":
        return fld.with_values(d_r(fld.values, fld.grid, order))
    if direction == "theta":
        return fld.with_values(d_theta(fld.values, fld.grid, order))
    if direction == "t":
        return fld.with_values(d_t_slices(fld.slices, order))
    raise GridError(f"unknown direction {direction!r}")


def cartesian_gradient(values: np.ndarray, grid: PolarGrid) -> tuple[np.ndarray, np.ndarray]:
    """(d_x1 f, d_x2 f) from polar samples."""
    r, th = grid.mesh()
    fr = d_r(values, grid)
    ft = d_theta(values, grid)
    cx, sx = np.cos(th), np.sin(th)
    return cx * fr - sx * ft / r, sx * fr + cx * ft / r


# ----------------------------------------------------------------------------
# null frame
# ----------------------------------------------------------------------------

MINKOWSKI = np.diag([-1.0, 1.0, 1.0])


def frame_vectors(theta: np.ndarray) -> dict[str, np.ndarray]:
    """Cartesian components of L, Lbar, U at angles theta (stacked last axis 3)."""
    c, s = np.cos(theta), np.sin(theta)
    one, zero = np.ones_like(c), np.zeros_like(c)
    L = np.stack([one, c, s], axis=-1)
    Lb = np.stack([one, -c, -s], axis=-1)
    U = np.stack([zero, -s, c], axis=-1)
    return {"L": L, "Lb": Lb, "U": U}


_NULL_KEYS = ("LL", "LLb", "LbLb", "LU", "LbU", "UU")


def null_components(tensor: np.ndarray, theta: np.ndarray,
                    r: np.ndarray | None = None,
                    r_pole_tolerance: float = 0.0) -> dict[str, np.ndarray]:
    """Contract a covariant symmetric 2-tensor (…,3,3) against the null frame.

    Returns the six independent components keyed LL, LLb, LbLb, LU, LbU, UU.
    """
    if r is not None and np.any(np.asarray(r) < r_pole_tolerance):
        raise PoleError("null frame undefined at r below pole tolerance")
    fr = frame_vectors(np.asarray(theta))
    pairs = {"LL": ("L", "L"), "LLb": ("L", "Lb"), "LbLb": ("Lb", "Lb"),
             "LU": ("L", "U"), "LbU": ("Lb", "U"), "UU": ("U", "U")}
    out = {}
    for key, (a, b) in pairs.items():
        out[key] = np.einsum("...ij,...i,...j->...", tensor, fr[a], fr[b])
    return out


def tensor_from_null(comps: dict[str, np.ndarray], theta: np.ndarray) -> np.ndarray:
    """Inverse of null_components (exact reconstruction)."""
    th = np.asarray(theta)
    c, s = np.cos(th), np.sin(th)
    half, zero = 0.5 * np.ones_like(c), np.zeros_like(c)
    # coordinate vectors in the (L, Lb, U) basis
    e = np.stack([
        np.stack([half, half, zero], axis=-1),            # d_t
        np.stack([0.5 * c, -0.5 * c, -s], axis=-1),        # d_1
        np.stack([0.5 * s, -0.5 * s, c], axis=-1),         # d_2
    ], axis=-2)                                            # (..., mu, frame)
    key = {(0, 0): "LL", (0, 1): "LLb", (1, 0): "LLb", (1, 1): "LbLb",
           (0, 2): "LU", (2, 0): "LU", (1, 2): "LbU", (2, 1): "LbU", (2, 2): "UU"}
    # T_{mu nu} = T(e_mu, e_nu) = sum_{A,B} e_mu^A e_nu^B T_AB
    TAB = np.zeros(th.shape + (3, 3))
    for (A, B), k in key.items():
        TAB[..., A, B] = np.asarray(comps[k])
    return np.einsum("...mA,...nB,...AB->...mn", e, e, TAB)


def dq_squared_tensor(theta: np.ndarray) -> np.ndarray:
    """Cartesian components of dq (x) dq, dq = dr - dt."""
    th = np.asarray(theta)
    k = np.stack([-np.ones_like(th), np.cos(th), np.sin(th)], axis=-1)
    return np.einsum("...i,...j->...ij", k, k)


def dqdth_sym_tensor(theta: np.ndarray, r: np.ndarray) -> np.ndarray:
    """Cartesian components of the symmetric product dq dtheta
    (coefficient convention: 'A dq dtheta' in a line element contributes
    A/2 * (dq x dtheta + dtheta x dq))."""
    th = np.asarray(theta)
    k = np.stack([-np.ones_like(th), np.cos(th), np.sin(th)], axis=-1)
    w = np.stack([np.zeros_like(th), -np.sin(th) / r, np.cos(th) / r], axis=-1)
    return 0.5 * (np.einsum("...i,...j->...ij", k, w) + np.einsum("...i,...j->...ij", w, k))


def dtheta_squared_tensor(theta: np.ndarray, r: np.ndarray) -> np.ndarray:
    th = np.asarray(theta)
    w = np.stack([np.zeros_like(th), -np.sin(th) / r, np.cos(th) / r], axis=-1)
    return np.einsum("...i,...j->...ij", w, w)


# ----------------------------------------------------------------------------
# Minkowski vector fields Z
# ----------------------------------------------------------------------------

Z_TAGS = ("d0", "d1", "d2", "O01", "O02", "O12", "S")


@dataclass(frozen=True)
class VectorFieldZ:
    """One of the seven commuting fields: translations, boosts/rotation, scaling."""

    tag: str

    def coefficients(self, t, r, theta):
        """Components (c_t, c_r, c_theta) in the polar frame (d_t, d_r, d_theta)."""
        t = np.asarray(t, dtype=float)
        r = np.asarray(r, dtype=float)
        th = np.asarray(theta, dtype=float)
        c, s = np.cos(th), np.sin(th)
        zero = np.zeros(np.broadcast(t, r, th).shape)
        one = zero + 1.0
        if self.tag == "d0":
            return one, zero, zero
        if self.tag == "d1":
            return zero, c + zero, -s / r + zero
        if self.tag == "d2":
            return zero, s + zero, c / r + zero
        if self.tag == "O01":      # t d_1 + x1 d_t
            return r * c + zero, t * c + zero, -t * s / r + zero
        if self.tag == "O02":
            return r * s + zero, t * s + zero, t * c / r + zero
        if self.tag == "O12":      # -(x1 d_2 - x2 d_1) = -d_theta
            return zero, zero, -one
        if self.tag == "S":
            return t + zero, r + zero, zero
        raise ValueError(f"unknown vector field {self.tag!r}")

    def box_commutator_coefficient(self) -> float:
        """C(Z) in [Box, Z] = C(Z) Box."""
        return 2.0 if self.tag == "S" else 0.0


def apply_Z(fld: ScalarField2D, Z: VectorFieldZ) -> ScalarField2D:
    """Apply a vector field to a sampled scalar.

    Uses the slice stack for d_t; the output keeps a (shorter) slice stack so
    applications can be composed while slices remain.
    """
    grid = fld.grid
    r, th = grid.mesh()

    def z_on_values(t, values):
        ct, cr, cth = Z.coefficients(t, r, th)
        out = cr * d_r(values, grid) + cth * d_theta(values, grid)
        return out, ct

    if Z.tag in ("d1", "d2", "O12"):
        # purely spatial: no time stencil consumed
        out, _ = z_on_values(fld.t, fld.values)
        res = fld.with_values(out)
        if fld.slices:
            new_slices = []
            for (ts, vs) in fld.slices:
                o, _ = z_on_values(ts, vs)
                new_slices.append((ts, o))
            k = len(new_slices) // 2
            res = ScalarField2D(grid, new_slices[k][1], fld.t, new_slices)
        return res

    if len(fld.slices) < 3:
        raise GridError(f"vector field {Z.tag} needs time slices")
    # d_t on every interior slice (shrinking the stack by 2 per side as needed)
    n = len(fld.slices)
    use5 = n >= 5
    margin = 2 if use5 else 1
    new_slices = []
    for i in range(margin, n - margin):
        ts, vs = fld.slices[i]
        window = fld.slices[i - margin:i + margin + 1]
        dtv = d_t_slices(window, 1)
        spatial, ct = z_on_values(ts, vs)
        new_slices.append((ts, ct * dtv + spatial))
    k = len(new_slices) // 2
    if len(new_slices) % 2 == 0:
        new_slices = new_slices[:-1] if len(new_slices) > 1 else new_slices
        k = len(new_slices) // 2
    if len(new_slices) == 1:
        return ScalarField2D(grid, new_slices[0][1], new_slices[0][0])
    return ScalarField2D(grid, new_slices[k][1], new_slices[k][0], new_slices)


def z_product(fld: ScalarField2D, tags: tuple[str, ...]) -> ScalarField2D:
    """Compose Z fields right-to-left: tags ("S","d1") gives S(d1 f)."""
    out = fld
    for tag in reversed(tags):
        out = apply_Z(out, VectorFieldZ(tag))
    return out
